//! Points of the projective plane with normalized homogeneous coordinates.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, Field};

/// A point of P^2: three coordinates, not all zero, normalized so the last
/// nonzero coordinate is 1. Equality is equality of normalized coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [ExactScalar; 3],
}

impl ProjPoint {
    pub fn new(coords: [ExactScalar; 3]) -> Result<Self> {
        let field = coords[0].field();
        if coords.iter().any(|c| c.field() != field) {
            return Err(Error::MixedField);
        }
        let last_nonzero = coords.iter().rposition(|c| !c.is_zero()).ok_or_else(|| {
            Error::InvalidInput("projective point with all coordinates zero".into())
        })?;
        let inv = coords[last_nonzero]
            .inverse()
            .expect("nonzero coordinate has an inverse");
        let normalized = [
            &coords[0] * &inv,
            &coords[1] * &inv,
            &coords[2] * &inv,
        ];
        Ok(ProjPoint { coords: normalized })
    }

    pub fn from_i64(field: Field, x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new([field.from_i64(x), field.from_i64(y), field.from_i64(z)])
    }

    pub fn coords(&self) -> &[ExactScalar; 3] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    /// True when the three points lie on one line (vanishing 3x3 determinant).
    pub fn collinear(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
        let [ax, ay, az] = a.coords();
        let [bx, by, bz] = b.coords();
        let [cx, cy, cz] = c.coords();
        let det = &(&(ax * &(&(by * cz) - &(bz * cy)))
            - &(ay * &(&(bx * cz) - &(bz * cx))))
            + &(az * &(&(bx * cy) - &(by * cx)));
        det.is_zero()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_scales_last_nonzero_to_one() {
        let f = Field::Prime(101);
        let p = ProjPoint::new([f.from_i64(2), f.from_i64(4), f.from_i64(2)]).unwrap();
        let q = ProjPoint::from_i64(f, 1, 2, 1).unwrap();
        assert_eq!(p, q);

        let at_infinity = ProjPoint::from_i64(f, 3, 6, 0).unwrap();
        assert_eq!(at_infinity.coords()[1], f.one());
    }

    #[test]
    fn zero_point_rejected() {
        let f = Field::Rationals;
        assert!(ProjPoint::from_i64(f, 0, 0, 0).is_err());
    }

    #[test]
    fn collinearity_detects_lines() {
        let f = Field::Rationals;
        let a = ProjPoint::from_i64(f, 0, 0, 1).unwrap();
        let b = ProjPoint::from_i64(f, 1, 1, 1).unwrap();
        let c = ProjPoint::from_i64(f, 2, 2, 1).unwrap();
        let d = ProjPoint::from_i64(f, 1, 2, 1).unwrap();
        assert!(ProjPoint::collinear(&a, &b, &c));
        assert!(!ProjPoint::collinear(&a, &b, &d));
    }
}
