//! Homogeneous forms in k[x, y, z] with the graded-lex monomial order that
//! also fixes the column order of conditions matrices.

use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, Field};
use crate::geometry::ProjPoint;

/// Monomials of degree `t` in (x, y, z), graded-lex with x > y > z:
/// (t,0,0), (t-1,1,0), (t-1,0,1), (t-2,2,0), ...
pub fn monomials(t: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(monomial_count(t));
    for i in (0..=t).rev() {
        for j in (0..=t - i).rev() {
            out.push((i, j, t - i - j));
        }
    }
    out
}

/// Number of degree-`t` monomials in three variables: C(t+2, 2).
pub fn monomial_count(t: usize) -> usize {
    (t + 1) * (t + 2) / 2
}

/// Falling factorial n (n-1) ... (n-k+1) as a field element.
fn falling_factorial(field: Field, n: usize, k: usize) -> ExactScalar {
    let mut acc = field.one();
    for step in 0..k {
        acc = &acc * &field.from_u64((n - step) as u64);
    }
    acc
}

/// Evaluate the partial derivative d^a/dx^a d^b/dy^b d^c/dz^c of the
/// monomial x^i y^j z^k at a point. Over a prime field this is reliable only
/// for q greater than the degree, so the integer factors cannot vanish.
pub fn eval_monomial_derivative(
    (i, j, k): (usize, usize, usize),
    (a, b, c): (usize, usize, usize),
    point: &ProjPoint,
) -> ExactScalar {
    let field = point.field();
    if i < a || j < b || k < c {
        return field.zero();
    }
    let mut acc = falling_factorial(field, i, a);
    acc = &acc * &falling_factorial(field, j, b);
    acc = &acc * &falling_factorial(field, k, c);
    let [x, y, z] = point.coords();
    acc = &acc * &pow(x, i - a);
    acc = &acc * &pow(y, j - b);
    acc = &acc * &pow(z, k - c);
    acc
}

fn pow(base: &ExactScalar, e: usize) -> ExactScalar {
    let mut acc = base.field().one();
    for _ in 0..e {
        acc = &acc * base;
    }
    acc
}

/// A homogeneous form of fixed degree, stored as coefficients in the
/// graded-lex monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousForm {
    degree: usize,
    field: Field,
    coeffs: Vec<ExactScalar>,
}

impl HomogeneousForm {
    pub fn new(degree: usize, field: Field, coeffs: Vec<ExactScalar>) -> Result<Self> {
        if coeffs.len() != monomial_count(degree) {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a degree-{degree} form",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::MixedField);
        }
        Ok(HomogeneousForm { degree, field, coeffs })
    }

    pub fn zero(degree: usize, field: Field) -> Self {
        HomogeneousForm {
            degree,
            field,
            coeffs: vec![field.zero(); monomial_count(degree)],
        }
    }

    /// The linear form a x + b y + c z.
    pub fn linear(field: Field, a: ExactScalar, b: ExactScalar, c: ExactScalar) -> Self {
        HomogeneousForm { degree: 1, field, coeffs: vec![a, b, c] }
    }

    /// The line through two distinct points: coefficients are the cross
    /// product of the coordinate vectors.
    pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<Self> {
        if p == q {
            return Err(Error::InvalidInput("line through coincident points".into()));
        }
        let [px, py, pz] = p.coords();
        let [qx, qy, qz] = q.coords();
        let a = &(py * qz) - &(pz * qy);
        let b = &(pz * qx) - &(px * qz);
        let c = &(px * qy) - &(py * qx);
        Ok(Self::linear(p.field(), a, b, c))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Build a form from sparse (exponents, coefficient) terms.
    pub fn from_terms(
        degree: usize,
        field: Field,
        terms: &[((usize, usize, usize), ExactScalar)],
    ) -> Result<Self> {
        let basis = monomials(degree);
        let mut form = Self::zero(degree, field);
        for (expo, coeff) in terms {
            if expo.0 + expo.1 + expo.2 != degree {
                return Err(Error::InvalidInput(format!(
                    "term {expo:?} has the wrong degree for a degree-{degree} form"
                )));
            }
            let idx = basis
                .iter()
                .position(|m| m == expo)
                .expect("exponents of the right degree are in the basis");
            form.coeffs[idx] = &form.coeffs[idx] + coeff;
        }
        Ok(form)
    }

    pub fn evaluate(&self, p: &ProjPoint) -> ExactScalar {
        let mut acc = self.field.zero();
        for (mono, coeff) in monomials(self.degree).into_iter().zip(&self.coeffs) {
            if !coeff.is_zero() {
                acc = &acc + &(coeff * &eval_monomial_derivative(mono, (0, 0, 0), p));
            }
        }
        acc
    }

    /// Gradient at a point; the zero vector exactly at singular points of the
    /// curve the form defines (in characteristic 0 or q > degree).
    pub fn gradient(&self, p: &ProjPoint) -> [ExactScalar; 3] {
        let mut grad = [self.field.zero(), self.field.zero(), self.field.zero()];
        for (mono, coeff) in monomials(self.degree).into_iter().zip(&self.coeffs) {
            if coeff.is_zero() {
                continue;
            }
            for (axis, op) in [(0usize, (1, 0, 0)), (1, (0, 1, 0)), (2, (0, 0, 1))] {
                let d = eval_monomial_derivative(mono, op, p);
                if !d.is_zero() {
                    grad[axis] = &grad[axis] + &(coeff * &d);
                }
            }
        }
        grad
    }

    pub fn vanishes_at(&self, p: &ProjPoint) -> bool {
        self.evaluate(p).is_zero()
    }

    /// True when `p` lies on the curve and the gradient there is nonzero.
    pub fn is_smooth_point(&self, p: &ProjPoint) -> bool {
        self.vanishes_at(p) && self.gradient(p).iter().any(|g| !g.is_zero())
    }

    /// Product of two forms (degrees add).
    pub fn multiply(&self, other: &HomogeneousForm) -> HomogeneousForm {
        let degree = self.degree + other.degree;
        let basis = monomials(degree);
        let index: std::collections::HashMap<(usize, usize, usize), usize> =
            basis.iter().copied().zip(0..).collect();
        let mut coeffs = vec![self.field.zero(); basis.len()];
        let self_basis = monomials(self.degree);
        let other_basis = monomials(other.degree);
        for (ma, ca) in self_basis.iter().zip(&self.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (mb, cb) in other_basis.iter().zip(&other.coeffs) {
                if cb.is_zero() {
                    continue;
                }
                let idx = index[&(ma.0 + mb.0, ma.1 + mb.1, ma.2 + mb.2)];
                coeffs[idx] = &coeffs[idx] + &(ca * cb);
            }
        }
        HomogeneousForm { degree, field: self.field, coeffs }
    }
}

/// Parse a homogeneous polynomial in x, y, z, e.g. `x^2 - 3yz` or
/// `2x + y - z`. Terms are `[coef][x[^a]][y[^b]][z[^c]]`; all terms must
/// share one total degree.
pub fn parse_form(text: &str, field: Field) -> Result<HomogeneousForm> {
    let bad = |msg: &str| Error::InvalidInput(format!("cannot parse form `{text}`: {msg}"));
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if cleaned.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms: Vec<((usize, usize, usize), ExactScalar)> = Vec::new();
    let chars: Vec<char> = cleaned.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        if i == chars.len() {
            return Err(bad("trailing sign"));
        }
        let mut num = String::new();
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            num.push(chars[i]);
            i += 1;
        }
        let mut coeff = if num.is_empty() {
            field.one()
        } else {
            ExactScalar::parse(&num, field).map_err(|e| bad(&e.to_string()))?
        };
        if sign < 0 {
            coeff = -coeff;
        }
        let mut expo = (0usize, 0usize, 0usize);
        while i < chars.len() && matches!(chars[i], 'x' | 'y' | 'z') {
            let var = chars[i];
            i += 1;
            let mut power = 1usize;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    i += 1;
                }
                power = digits.parse().map_err(|_| bad("bad exponent"))?;
            }
            match var {
                'x' => expo.0 += power,
                'y' => expo.1 += power,
                _ => expo.2 += power,
            }
        }
        if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            return Err(bad(&format!("unexpected character `{}`", chars[i])));
        }
        terms.push((expo, coeff));
    }
    let degree = terms[0].0 .0 + terms[0].0 .1 + terms[0].0 .2;
    if terms.iter().any(|(e, _)| e.0 + e.1 + e.2 != degree) {
        return Err(bad("terms of unequal degree (form must be homogeneous)"));
    }
    HomogeneousForm::from_terms(degree, field, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(field: Field, x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new([field.from_i64(x), field.from_i64(y), field.from_i64(z)]).unwrap()
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        assert_eq!(monomials(1), vec![(1, 0, 0), (0, 1, 0), (0, 0, 1)]);
        assert_eq!(
            monomials(2),
            vec![(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
        );
        assert_eq!(monomials(6).len(), monomial_count(6));
    }

    #[test]
    fn line_through_contains_both_points() {
        let f = Field::Prime(101);
        let p = pt(f, 1, 2, 1);
        let q = pt(f, 3, 5, 1);
        let line = HomogeneousForm::line_through(&p, &q).unwrap();
        assert!(line.vanishes_at(&p));
        assert!(line.vanishes_at(&q));
        assert!(!line.vanishes_at(&pt(f, 0, 0, 1)));
    }

    #[test]
    fn derivative_evaluation_matches_hand_computation() {
        let f = Field::Rationals;
        let p = pt(f, 2, 3, 1);
        // d/dx of x^2 y at (2,3,1) is 2 x y = 12.
        let v = eval_monomial_derivative((2, 1, 0), (1, 0, 0), &p);
        assert_eq!(v, f.from_i64(12));
        // d^2/dy^2 of y^3 z at (2,3,1) is 6 y z = 18.
        let v = eval_monomial_derivative((0, 3, 1), (0, 2, 0), &p);
        assert_eq!(v, f.from_i64(18));
    }

    #[test]
    fn parse_form_roundtrips_through_evaluation() {
        let f = Field::Prime(101);
        let form = parse_form("x^2 - 3yz", f).unwrap();
        assert_eq!(form.degree(), 2);
        // At (3, 3, 1): 9 - 9 = 0.
        assert!(form.vanishes_at(&pt(f, 3, 3, 1)));
        assert!(!form.vanishes_at(&pt(f, 1, 1, 1)));

        let linear = parse_form("2x + y - z", Field::Rationals).unwrap();
        assert!(linear.vanishes_at(&pt(Field::Rationals, 1, -1, 1)));

        assert!(parse_form("x^2 + y", f).is_err());
        assert!(parse_form("", f).is_err());
    }

    #[test]
    fn product_of_lines_vanishes_on_both() {
        let f = Field::Prime(1009);
        let p = pt(f, 1, 1, 1);
        let q = pt(f, 2, -1, 1);
        let r = pt(f, 5, 7, 1);
        let s = pt(f, -3, 4, 1);
        let l1 = HomogeneousForm::line_through(&p, &q).unwrap();
        let l2 = HomogeneousForm::line_through(&r, &s).unwrap();
        let conic = l1.multiply(&l2);
        assert_eq!(conic.degree(), 2);
        for point in [&p, &q, &r, &s] {
            assert!(conic.vanishes_at(point));
        }
        // The node of the product is a singular point of the conic.
        let node_candidates = [&p, &q];
        for point in node_candidates {
            assert!(conic.is_smooth_point(point) || !l2.vanishes_at(point));
        }
    }
}
