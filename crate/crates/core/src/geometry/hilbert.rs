//! Brute-force Hilbert functions of fat point schemes by exact linear
//! algebra: dim I(Z)_t is the kernel dimension of the matrix of derivative
//! conditions, and everything else follows by differencing.

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, ExactScalar, Field};
use crate::geometry::forms::{eval_monomial_derivative, monomial_count, monomials};
use crate::geometry::{FatPointScheme, HVector};

/// Partial-derivative operators of order exactly m-1; by the Euler identity
/// (valid in characteristic 0 or q > t) their vanishing at a point forces all
/// lower-order derivatives to vanish too, so these C(m+1, 2) rows express
/// "multiplicity m at the point".
fn operators_for_multiplicity(m: u32) -> Vec<(usize, usize, usize)> {
    monomials(m as usize - 1)
}

/// The matrix whose kernel is I(Z)_t: one column per degree-t monomial in
/// graded-lex order, and for each point p_i the evaluations at p_i of the
/// order-(m_i - 1) partial derivatives of each monomial.
pub fn conditions_matrix(z: &FatPointScheme, t: usize, field_hint: Field) -> Result<ExactMatrix> {
    let field = z.field().unwrap_or(field_hint);
    if let Field::Prime(q) = field {
        if q <= t as u64 {
            return Err(Error::InvalidInput(format!(
                "prime {q} does not exceed the degree {t}; derivative conditions unreliable"
            )));
        }
    }
    let cols = monomial_count(t);
    let basis = monomials(t);
    let mut entries: Vec<ExactScalar> = Vec::new();
    for (point, &m) in z.points().iter().zip(z.mults()) {
        for op in operators_for_multiplicity(m) {
            for &mono in &basis {
                entries.push(eval_monomial_derivative(mono, op, point));
            }
        }
    }
    let rows = entries.len() / cols.max(1);
    ExactMatrix::new(rows, cols, field, entries)
}

/// dim I(Z)_t = C(t+2, 2) - rank of the conditions matrix.
///
/// Degrees below the largest multiplicity are handled directly: a nonzero
/// form of degree t vanishes to order at most t at a point, so I(Z)_t = 0
/// whenever t < max m_i (the derivative matrix only expresses this once
/// t >= m_i - 1).
pub fn ideal_dim(z: &FatPointScheme, t: usize) -> Result<usize> {
    let field = z.field().unwrap_or(Field::Rationals);
    if (t as u64) < z.max_multiplicity() as u64 {
        return Ok(0);
    }
    let matrix = conditions_matrix(z, t, field)?;
    Ok(matrix.cols() - matrix.rank())
}

/// h_Z(t) for t = 0..=tmax.
pub fn hilbert_function(z: &FatPointScheme, tmax: usize) -> Result<HVector> {
    let mut values = Vec::with_capacity(tmax + 1);
    for t in 0..=tmax {
        let dim_ideal = ideal_dim(z, t)? as u64;
        values.push(monomial_count(t) as u64 - dim_ideal);
    }
    Ok(HVector::hilbert(values))
}

/// h_Z computed until it reaches deg Z in two consecutive degrees; the
/// saturated ideals of fat points stabilize exactly at deg Z.
pub fn hilbert_function_stabilized(z: &FatPointScheme) -> Result<HVector> {
    let degree = z.degree();
    let mut values = Vec::new();
    let mut t = 0usize;
    let mut hits = 0u8;
    while hits < 2 {
        let dim_ideal = ideal_dim(z, t)? as u64;
        let h = monomial_count(t) as u64 - dim_ideal;
        values.push(h);
        if h == degree {
            hits += 1;
        } else if h > degree {
            return Err(Error::InvalidInput(format!(
                "h_Z({t}) = {h} exceeds deg Z = {degree}; scheme is not what it claims"
            )));
        }
        t += 1;
    }
    Ok(HVector::hilbert(values))
}

/// The difference function of a scheme, computed to stabilization.
pub fn difference_function(z: &FatPointScheme) -> Result<HVector> {
    hilbert_function_stabilized(z)?.to_difference()
}

/// Regularity as used here: 1 + the last degree where the difference
/// function is nonzero, which for these saturated ideals is the
/// Castelnuovo-Mumford regularity.
pub fn regularity(z: &FatPointScheme) -> Result<usize> {
    let dh = difference_function(z)?;
    Ok(dh.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ProjPoint;

    const Q: u64 = 2_147_483_647;

    fn simple_point(field: Field) -> FatPointScheme {
        FatPointScheme::uniform(vec![ProjPoint::from_i64(field, 2, 3, 1).unwrap()], 1).unwrap()
    }

    #[test]
    fn one_simple_point_degree_zero() {
        // 1x1 matrix [1], rank 1.
        let z = simple_point(Field::Rationals);
        let m = conditions_matrix(&z, 0, Field::Rationals).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert_eq!(m.rank(), 1);
        assert_eq!(ideal_dim(&z, 0).unwrap(), 0);
    }

    #[test]
    fn double_point_in_degree_one_has_no_singular_line() {
        let f = Field::Prime(Q);
        let z = FatPointScheme::uniform(vec![ProjPoint::from_i64(f, 0, 0, 1).unwrap()], 2).unwrap();
        let m = conditions_matrix(&z, 1, f).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert!(m.kernel_basis().is_empty());
        assert_eq!(ideal_dim(&z, 1).unwrap(), 0);
    }

    #[test]
    fn empty_scheme_full_ideal() {
        let z = FatPointScheme::new(vec![], vec![]).unwrap();
        assert_eq!(ideal_dim(&z, 2).unwrap(), 6);
    }

    #[test]
    fn one_simple_point_hilbert_function() {
        let z = simple_point(Field::Rationals);
        let h = hilbert_function(&z, 4).unwrap();
        assert_eq!(h.values(), &[1, 1, 1, 1, 1]);
        assert_eq!(regularity(&z).unwrap(), 1);
    }

    #[test]
    fn one_double_point_difference() {
        let f = Field::Prime(Q);
        let z = FatPointScheme::uniform(vec![ProjPoint::from_i64(f, 1, 5, 1).unwrap()], 2).unwrap();
        let dh = difference_function(&z).unwrap();
        assert_eq!(dh.values(), &[1, 2]);
    }

    #[test]
    fn triple_point_low_degrees_have_empty_ideal() {
        let f = Field::Prime(Q);
        let z = FatPointScheme::uniform(vec![ProjPoint::from_i64(f, 4, 9, 1).unwrap()], 3).unwrap();
        assert_eq!(ideal_dim(&z, 0).unwrap(), 0);
        assert_eq!(ideal_dim(&z, 1).unwrap(), 0);
        assert_eq!(ideal_dim(&z, 2).unwrap(), 0);
        // In degree 3 a triple point imposes 6 conditions on 10 monomials.
        assert_eq!(ideal_dim(&z, 3).unwrap(), 4);
        let dh = difference_function(&z).unwrap();
        assert_eq!(dh.sum(), 6);
    }

    #[test]
    fn nine_collinear_simple_points() {
        let f = Field::Prime(Q);
        let points: Vec<ProjPoint> = (0..9)
            .map(|i| ProjPoint::from_i64(f, i, 2 * i + 1, 1).unwrap())
            .collect();
        // All on the line y = 2x + z.
        let z = FatPointScheme::uniform(points, 1).unwrap();
        assert_eq!(ideal_dim(&z, 1).unwrap(), 1);
        let dh = difference_function(&z).unwrap();
        assert_eq!(dh.values(), &[1; 9]);
        assert_eq!(regularity(&z).unwrap(), 9);
        // The doubling bound reg(2X) <= 2 reg(X) is attained here: nine
        // collinear double points end in degree 17.
        let dd = difference_function(&z.doubled()).unwrap();
        assert_eq!(
            dd.values(),
            &[1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]
        );
        assert_eq!(regularity(&z.doubled()).unwrap(), 18);
    }

    #[test]
    fn small_prime_rejected_for_large_degree() {
        let f = Field::Prime(5);
        let z = FatPointScheme::uniform(vec![ProjPoint::from_i64(f, 1, 1, 1).unwrap()], 1).unwrap();
        assert!(conditions_matrix(&z, 7, f).is_err());
    }
}
