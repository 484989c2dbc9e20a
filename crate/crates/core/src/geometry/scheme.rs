//! Fat point subschemes: distinct points with positive multiplicities.

use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::geometry::ProjPoint;

/// The scheme m1 p1 + ... + mn pn defined by the intersection of the
/// I(p_i)^(m_i). Points are pairwise distinct after normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointScheme {
    points: Vec<ProjPoint>,
    mults: Vec<u32>,
}

impl FatPointScheme {
    pub fn new(points: Vec<ProjPoint>, mults: Vec<u32>) -> Result<Self> {
        if points.len() != mults.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} points with {} multiplicities",
                points.len(),
                mults.len()
            )));
        }
        if mults.contains(&0) {
            return Err(Error::InvalidInput("multiplicities must be positive".into()));
        }
        if let Some(first) = points.first() {
            let field = first.field();
            if points.iter().any(|p| p.field() != field) {
                return Err(Error::MixedField);
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::InvalidInput(format!(
                        "duplicate point {} at positions {i} and {j}",
                        points[i]
                    )));
                }
            }
        }
        Ok(FatPointScheme { points, mults })
    }

    /// All multiplicities equal to `m`.
    pub fn uniform(points: Vec<ProjPoint>, m: u32) -> Result<Self> {
        let mults = vec![m; points.len()];
        Self::new(points, mults)
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn field(&self) -> Option<Field> {
        self.points.first().map(|p| p.field())
    }

    /// deg Z = sum of C(m_i + 1, 2).
    pub fn degree(&self) -> u64 {
        self.mults
            .iter()
            .map(|&m| (m as u64) * (m as u64 + 1) / 2)
            .sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mults.iter().copied().max().unwrap_or(0)
    }

    /// The same support with every multiplicity replaced by `m`.
    pub fn with_uniform_multiplicity(&self, m: u32) -> Result<Self> {
        Self::uniform(self.points.clone(), m)
    }

    /// The first infinitesimal neighborhood 2X of a reduced X (multiplicities
    /// doubled pointwise).
    pub fn doubled(&self) -> Self {
        FatPointScheme {
            points: self.points.clone(),
            mults: self.mults.iter().map(|&m| 2 * m).collect(),
        }
    }

    /// The reduced scheme on the same support.
    pub fn reduced(&self) -> Self {
        FatPointScheme {
            points: self.points.clone(),
            mults: vec![1; self.points.len()],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sums_binomials() {
        let f = Field::Prime(101);
        let points = vec![
            ProjPoint::from_i64(f, 0, 0, 1).unwrap(),
            ProjPoint::from_i64(f, 1, 0, 1).unwrap(),
            ProjPoint::from_i64(f, 0, 1, 1).unwrap(),
        ];
        let z = FatPointScheme::new(points, vec![1, 2, 3]).unwrap();
        // C(2,2) + C(3,2) + C(4,2) = 1 + 3 + 6.
        assert_eq!(z.degree(), 10);
        assert_eq!(z.doubled().degree(), 3 + 10 + 21);
    }

    #[test]
    fn duplicate_points_rejected_after_normalization() {
        let f = Field::Rationals;
        let points = vec![
            ProjPoint::from_i64(f, 1, 2, 1).unwrap(),
            ProjPoint::from_i64(f, 2, 4, 2).unwrap(),
        ];
        assert!(FatPointScheme::uniform(points, 1).is_err());
    }

    #[test]
    fn zero_multiplicity_rejected() {
        let f = Field::Rationals;
        let points = vec![ProjPoint::from_i64(f, 1, 2, 1).unwrap()];
        assert!(FatPointScheme::new(points, vec![0]).is_err());
    }
}
