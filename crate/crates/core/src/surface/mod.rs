//! Divisor-class arithmetic on the blow-up of the plane at n points:
//! intersection form, Euler characteristic, anticanonical reduction, and
//! h^0 / h_Z evaluation for uniform-multiplicity classes.
//!
//! Classes are written (d; m1, ..., mn) for d L - m1 E1 - ... - mn En in the
//! basis L, E1, ..., En with L^2 = 1, Ei^2 = -1. The canonical class is
//! K = -3L + E1 + ... + En = (-3; -1, ..., -1).

use crate::error::{Error, Result};

/// An integer divisor class (d; m1, ..., mn); classes need not be effective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub d: i64,
    pub e: Vec<i64>,
}

impl DivisorClass {
    pub fn new(d: i64, e: Vec<i64>) -> Self {
        DivisorClass { d, e }
    }

    /// The uniform class (t; m, ..., m) on n points.
    pub fn uniform(t: i64, m: i64, n: usize) -> Self {
        DivisorClass { d: t, e: vec![m; n] }
    }

    /// The canonical class (-3; -1, ..., -1).
    pub fn canonical(n: usize) -> Self {
        DivisorClass { d: -3, e: vec![-1; n] }
    }

    pub fn n(&self) -> usize {
        self.e.len()
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "classes on {} and {} points",
                self.n(),
                other.n()
            )));
        }
        Ok(DivisorClass {
            d: self.d - other.d,
            e: self
                .e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// If the class is (t; m, ..., m), return (t, m).
    pub fn as_uniform(&self) -> Option<(i64, i64)> {
        let first = *self.e.first()?;
        if self.e.iter().all(|&m| m == first) {
            Some((self.d, first))
        } else {
            None
        }
    }
}

/// The intersection pairing: (d; m) . (d'; m') = d d' - sum m_i m_i'.
pub fn pair(a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!(
            "classes on {} and {} points",
            a.n(),
            b.n()
        )));
    }
    let dot: i64 = a.e.iter().zip(&b.e).map(|(x, y)| x * y).sum();
    Ok(a.d * b.d - dot)
}

/// C(k+2, 2) clipped at zero for negative k.
fn binom2_shift(k: i64) -> i64 {
    if k < 0 {
        0
    } else {
        (k + 1) * (k + 2) / 2
    }
}

/// C(m+1, 2) = m(m+1)/2 for m >= 0.
fn mult_degree(m: i64) -> i64 {
    m * (m + 1) / 2
}

/// Answers the torsion questions the counting formulas ask: the value of
/// s(t, n, m) in the boundary degree 3t = nm. Injected so the surface
/// formulas stay independent of any particular curve arithmetic.
pub trait TorsionOracle {
    /// s(t, n, m); only consulted for 3t >= nm.
    fn s(&self, t: usize, n: usize, m: u32) -> u64;
}

/// The standard oracle: all torsion information is carried by lambda, the
/// order of the class 3L - p1 - ... - pn restricted to the cubic (`None`
/// when no torsion was found within the search bound, i.e. effectively
/// infinite order).
#[derive(Debug, Clone, Copy)]
pub struct LambdaOracle {
    pub lambda: Option<u64>,
}

impl LambdaOracle {
    pub fn new(lambda: Option<u64>) -> Self {
        LambdaOracle { lambda }
    }

    /// No torsion: s vanishes everywhere it is defined.
    pub fn generic() -> Self {
        LambdaOracle { lambda: None }
    }

    /// The class is trivial (points cut out by a curve): lambda = 1.
    pub fn trivial_class() -> Self {
        LambdaOracle { lambda: Some(1) }
    }
}

impl TorsionOracle for LambdaOracle {
    fn s(&self, t: usize, n: usize, m: u32) -> u64 {
        if m == 0 {
            // The recursion bottoms out at the structure sheaf, whose h^0 is
            // already accounted for by the binomial term.
            return 0;
        }
        let (three_t, nm) = (3 * t as u64, n as u64 * m as u64);
        if three_t > nm {
            return 0;
        }
        debug_assert_eq!(three_t, nm, "s consulted below the boundary");
        match self.lambda {
            None => 0,
            Some(l) => {
                if n == 9 {
                    m as u64 / l
                } else if (m as u64).is_multiple_of(l) {
                    1
                } else {
                    0
                }
            }
        }
    }
}

/// The blow-up at n points of a reduced cubic, with the class of the proper
/// transform of the cubic and a torsion oracle.
pub struct BlowupModel<'a> {
    n: usize,
    cubic_class: DivisorClass,
    oracle: &'a dyn TorsionOracle,
}

impl<'a> BlowupModel<'a> {
    /// n >= 9 evenly distributed smooth points: the cubic's proper transform
    /// has class (3; 1, ..., 1).
    pub fn evenly_distributed(n: usize, oracle: &'a dyn TorsionOracle) -> Result<Self> {
        if n < 9 {
            return Err(Error::InvalidInput(format!(
                "the uniform counting formulas need n >= 9 points, got {n}"
            )));
        }
        Ok(BlowupModel {
            n,
            cubic_class: DivisorClass::uniform(3, 1, n),
            oracle,
        })
    }

    /// Variant with the first point at the singular point of an irreducible
    /// singular cubic: proper transform (3; 2, 1, ..., 1).
    pub fn singular_support(n: usize, oracle: &'a dyn TorsionOracle) -> Result<Self> {
        if n < 9 {
            return Err(Error::InvalidInput(format!(
                "the singular-support formulas need n >= 9 points, got {n}"
            )));
        }
        let mut e = vec![1i64; n];
        e[0] = 2;
        Ok(BlowupModel {
            n,
            cubic_class: DivisorClass { d: 3, e },
            oracle,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cubic_class(&self) -> &DivisorClass {
        &self.cubic_class
    }

    pub fn oracle(&self) -> &dyn TorsionOracle {
        self.oracle
    }
}

/// Euler characteristic chi(O_Y(f)) = (f.f - K.f)/2 + 1; for the uniform
/// class (t; m, ..., m) this is C(t+2, 2) - n C(m+1, 2).
pub fn chi(model: &BlowupModel, f: &DivisorClass) -> Result<i64> {
    if f.n() != model.n {
        return Err(Error::DimensionMismatch(
            "class size does not match the model".into(),
        ));
    }
    let k = DivisorClass::canonical(model.n);
    let ff = pair(f, f)?;
    let kf = pair(&k, f)?;
    debug_assert_eq!((ff - kf).rem_euclid(2), 0, "f^2 - K.f must be even");
    Ok((ff - kf) / 2 + 1)
}

/// Repeatedly subtract the cubic class C' from a uniform class while
/// f . C' < 0 (this does not change h^0); returns the nef result and the
/// number of subtractions r. For n > 9 and 3m <= t < nm/3 the count matches
/// the closed form r = ceil((mn - 3t) / (n - 9)).
pub fn anticanonical_reduce(
    model: &BlowupModel,
    f: &DivisorClass,
) -> Result<(DivisorClass, u64)> {
    if f.n() != model.n {
        return Err(Error::DimensionMismatch(
            "class size does not match the model".into(),
        ));
    }
    if model.cubic_class.as_uniform() != Some((3, 1)) {
        return Err(Error::Unsupported(
            "anticanonical reduction implemented for the evenly distributed model".into(),
        ));
    }
    let Some((t, m)) = f.as_uniform() else {
        return Err(Error::InvalidInput(
            "anticanonical reduction expects a uniform class (t; m, ..., m)".into(),
        ));
    };
    if m < 0 || t < 3 * m {
        return Err(Error::EmptySystem(format!(
            "(t; m^n) = ({t}; {m}^{}) lies in the empty regime t < 3m",
            model.n
        )));
    }
    let mut current = f.clone();
    let mut r = 0u64;
    while pair(&current, &model.cubic_class)? < 0 {
        current = current.sub(&model.cubic_class)?;
        r += 1;
    }
    Ok((current, r))
}

/// h_Z(t) for Z = m(p1 + ... + pn) on the evenly distributed model, by the
/// three-clause formula: the full ambient dimension below degree 3m, the
/// torsion-corrected multiplicity count at and beyond the nef boundary, and
/// the anticanonically reduced value in between (n > 9).
pub fn hilbert_uniform(model: &BlowupModel, t: usize, m: u32) -> Result<u64> {
    if model.cubic_class.as_uniform() != Some((3, 1)) {
        return Err(Error::Unsupported(
            "uniform counting applies to the evenly distributed model".into(),
        ));
    }
    let n = model.n as u64;
    let ti = t as i64;
    let mi = m as i64;
    if ti < 3 * mi {
        return Ok(binom2_shift(ti) as u64);
    }
    if 3 * t as u64 >= n * m as u64 {
        let s = model.oracle.s(t, model.n, m);
        return Ok(n * mult_degree(mi) as u64 - s);
    }
    // n > 9 and 3m <= t < nm/3.
    let r = (n * m as u64 - 3 * t as u64).div_ceil(n - 9);
    let ri = r as i64;
    let s = model.oracle.s(t - 3 * r as usize, model.n, m - r as u32);
    let value = binom2_shift(ti) - binom2_shift(ti - 3 * ri) + n as i64 * mult_degree(mi - ri)
        - s as i64;
    Ok(value as u64)
}

/// h^0(Y, O_Y(t L - m E1 - ... - m En)) = C(t+2,2) - h_Z(t): the dimension
/// of the degree-t piece of the ideal.
pub fn h0_uniform(model: &BlowupModel, t: usize, m: u32) -> Result<u64> {
    let hz = hilbert_uniform(model, t, m)?;
    Ok(binom2_shift(t as i64) as u64 - hz)
}

/// h_Z(t) from h^1 via chi: h_Z = sum C(m_i + 1, 2) - h^1.
pub fn h_z_from_h1(model: &BlowupModel, f: &DivisorClass, h1: u64) -> Result<u64> {
    if f.n() != model.n {
        return Err(Error::DimensionMismatch(
            "class size does not match the model".into(),
        ));
    }
    if f.e.iter().any(|&m| m < 0) {
        return Err(Error::InvalidInput(
            "fat point multiplicities must be nonnegative".into(),
        ));
    }
    let total: i64 = f.e.iter().map(|&m| mult_degree(m)).sum();
    Ok(total as u64 - h1)
}
