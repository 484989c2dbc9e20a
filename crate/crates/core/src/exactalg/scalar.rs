//! Exact field elements: arbitrary-precision rationals and prime-field
//! residues behind one enum, so schemes and matrices can be built over either
//! ground field with identical code paths.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::numtheory;
use crate::error::{Error, Result};

/// The ground field a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers (characteristic zero).
    Rationals,
    /// The prime field Z/qZ for a prime `q`.
    Prime(u64),
}

impl Field {
    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(q) => *q,
        }
    }

    /// Zero element of this field.
    pub fn zero(&self) -> ExactScalar {
        self.from_i64(0)
    }

    /// One element of this field.
    pub fn one(&self) -> ExactScalar {
        self.from_i64(1)
    }

    /// Embed a signed integer.
    pub fn from_i64(&self, v: i64) -> ExactScalar {
        match self {
            Field::Rationals => ExactScalar::Rat(BigRational::from(BigInt::from(v))),
            Field::Prime(q) => {
                let r = v.rem_euclid(*q as i64) as u64;
                ExactScalar::Mod { value: r, q: *q }
            }
        }
    }

    /// Embed an unsigned integer.
    pub fn from_u64(&self, v: u64) -> ExactScalar {
        match self {
            Field::Rationals => ExactScalar::Rat(BigRational::from(BigInt::from(v))),
            Field::Prime(q) => ExactScalar::Mod { value: v % q, q: *q },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rational"),
            Field::Prime(q) => write!(f, "{q}"),
        }
    }
}

/// An exact scalar: a reduced fraction of big integers, or a residue mod a
/// prime `q`. All arithmetic is exact; `(a + b) - b == a` always.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rat(BigRational),
    Mod { value: u64, q: u64 },
}

impl ExactScalar {
    pub fn field(&self) -> Field {
        match self {
            ExactScalar::Rat(_) => Field::Rationals,
            ExactScalar::Mod { q, .. } => Field::Prime(*q),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rat(r) => r.is_zero(),
            ExactScalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            ExactScalar::Rat(r) => r.is_one(),
            ExactScalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<ExactScalar> {
        match self {
            ExactScalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(ExactScalar::Rat(r.recip()))
                }
            }
            ExactScalar::Mod { value, q } => {
                numtheory::inv_mod(*value, *q).map(|v| ExactScalar::Mod { value: v, q: *q })
            }
        }
    }

    /// Parse `a` or `a/b` in the given field. Prime fields accept any
    /// integer numerator/denominator and reduce mod q.
    pub fn parse(text: &str, field: Field) -> Result<ExactScalar> {
        let bad = || Error::InvalidInput(format!("cannot parse scalar `{text}`"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in `{text}`")));
        }
        match field {
            Field::Rationals => Ok(ExactScalar::Rat(BigRational::new(n, d))),
            Field::Prime(q) => {
                let qb = BigInt::from(q);
                let nm = ((n % &qb) + &qb) % &qb;
                let dm = ((d % &qb) + &qb) % &qb;
                let nv: u64 = nm.try_into().expect("reduced residue fits u64");
                let dv: u64 = dm.try_into().expect("reduced residue fits u64");
                let dinv = numtheory::inv_mod(dv, q).ok_or_else(|| {
                    Error::InvalidInput(format!("denominator of `{text}` is 0 mod {q}"))
                })?;
                Ok(ExactScalar::Mod { value: numtheory::mul_mod(nv, dinv, q), q })
            }
        }
    }

    /// The residue value for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            ExactScalar::Mod { value, .. } => Some(*value),
            ExactScalar::Rat(_) => None,
        }
    }

    /// The rational value for characteristic-zero scalars.
    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rat(r) => Some(r),
            ExactScalar::Mod { .. } => None,
        }
    }

    fn check_same_field(&self, rhs: &ExactScalar) {
        debug_assert!(
            self.field() == rhs.field(),
            "mixed-field scalar arithmetic: {:?} vs {:?}",
            self.field(),
            rhs.field()
        );
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            ExactScalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $ratop:tt, $modexpr:expr) => {
        impl $trait for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                self.check_same_field(rhs);
                match (self, rhs) {
                    (ExactScalar::Rat(a), ExactScalar::Rat(b)) => ExactScalar::Rat(a $ratop b),
                    (ExactScalar::Mod { value: a, q }, ExactScalar::Mod { value: b, .. }) => {
                        let f: fn(u64, u64, u64) -> u64 = $modexpr;
                        ExactScalar::Mod { value: f(*a, *b, *q), q: *q }
                    }
                    _ => unreachable!("mixed fields rejected above"),
                }
            }
        }
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, +, numtheory::add_mod);
impl_binop!(Sub, sub, -, numtheory::sub_mod);
impl_binop!(Mul, mul, *, numtheory::mul_mod);

impl Div for &ExactScalar {
    type Output = ExactScalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        let inv = rhs.inverse().expect("division by zero scalar");
        self * &inv
    }
}

impl Div for ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: ExactScalar) -> ExactScalar {
        &self / &rhs
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rat(r) => ExactScalar::Rat(-r),
            ExactScalar::Mod { value, q } => ExactScalar::Mod {
                value: if *value == 0 { 0 } else { q - value },
                q: *q,
            },
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

/// Scale a rational 3-vector to coprime integers (projective coordinates are
/// only defined up to scale, and integer rows keep fraction-free elimination
/// fast). Prime-field vectors pass through unchanged.
pub fn clear_denominators(coords: &[ExactScalar; 3]) -> [ExactScalar; 3] {
    match coords[0].field() {
        Field::Prime(_) => coords.clone(),
        Field::Rationals => {
            let rats: Vec<&BigRational> = coords
                .iter()
                .map(|c| c.rational().expect("rational field"))
                .collect();
            let mut lcm = BigInt::one();
            for r in &rats {
                lcm = num_integer::lcm(lcm, r.denom().clone());
            }
            let ints: Vec<BigInt> = rats
                .iter()
                .map(|r| r.numer() * (&lcm / r.denom()))
                .collect();
            let mut gcd = BigInt::zero();
            for i in &ints {
                gcd = num_integer::gcd(gcd, i.clone());
            }
            if gcd.is_zero() {
                gcd = BigInt::one();
            }
            if gcd.is_negative() {
                gcd = -gcd;
            }
            let scaled: Vec<ExactScalar> = ints
                .into_iter()
                .map(|i| ExactScalar::Rat(BigRational::from(i / &gcd)))
                .collect();
            [scaled[0].clone(), scaled[1].clone(), scaled[2].clone()]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_addition_roundtrip() {
        let f = Field::Rationals;
        let a = ExactScalar::parse("22/7", f).unwrap();
        let b = ExactScalar::parse("-355/113", f).unwrap();
        assert_eq!(&(&(&a + &b) - &b), &a);

        let f = Field::Prime(101);
        let a = f.from_i64(-13);
        let b = f.from_u64(250);
        assert_eq!((&(&a + &b) - &b), a);
    }

    #[test]
    fn parse_fractions_mod_q() {
        let f = Field::Prime(7);
        let x = ExactScalar::parse("1/2", f).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(x.residue(), Some(4));
        assert!(ExactScalar::parse("1/7", f).is_err());
    }

    #[test]
    fn rational_form_reduced() {
        let x = ExactScalar::parse("6/4", Field::Rationals).unwrap();
        assert_eq!(x.to_string(), "3/2");
        let y = ExactScalar::parse("-4/-2", Field::Rationals).unwrap();
        assert_eq!(y.to_string(), "2");
    }

    #[test]
    fn clear_denominators_gives_coprime_integers() {
        let f = Field::Rationals;
        let coords = [
            ExactScalar::parse("1/2", f).unwrap(),
            ExactScalar::parse("3/4", f).unwrap(),
            ExactScalar::parse("1", f).unwrap(),
        ];
        let cleared = clear_denominators(&coords);
        let as_str: Vec<String> = cleared.iter().map(|c| c.to_string()).collect();
        assert_eq!(as_str, vec!["2", "3", "4"]);
    }
}
