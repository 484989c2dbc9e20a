//! Plane cubics with a designated group structure on the smooth locus.
//!
//! The singular models are fixed once and unit-tested against the
//! collinearity characterization of the group law:
//! - nodal: y^2 z = x^3 + x^2 z, node (0:0:1); smooth locus parametrized by
//!   u in k* via s = (1+u)/(1-u), point ((s^2-1) : s(s^2-1) : 1), with u = 1
//!   the flex at infinity. Three smooth points are collinear iff their
//!   parameters multiply to 1.
//! - cuspidal: y^2 z = x^3, cusp (0:0:1); smooth locus parametrized by t in
//!   k via (t : 1 : t^3), t = 0 the flex at infinity. Three smooth points
//!   are collinear iff their parameters add to 0.

use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, Field};
use crate::geometry::forms::parse_form;
use crate::geometry::{HomogeneousForm, ProjPoint};

/// Which cubic carries the configuration, with the data the group law needs.
#[derive(Debug, Clone)]
pub enum CubicKind {
    /// y^2 z = x^3 + a x z^2 + b z^3 with 4a^3 + 27b^2 != 0.
    SmoothWeierstrass { a: ExactScalar, b: ExactScalar },
    /// y^2 z = x^3 + x^2 z.
    Nodal,
    /// y^2 z = x^3.
    Cuspidal,
    /// Product of the listed linear/quadratic component forms, reduced.
    Reducible(Vec<HomogeneousForm>),
}

/// A plane cubic with its defining form.
#[derive(Debug, Clone)]
pub struct CubicCurve {
    kind: CubicKind,
    field: Field,
    form: HomogeneousForm,
}

/// A point on a cubic, tagged with smoothness (gradient nonzero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    pub point: ProjPoint,
    pub smooth: bool,
}

impl CubicCurve {
    /// Smooth Weierstrass cubic y^2 z = x^3 + a x z^2 + b z^3.
    pub fn weierstrass(field: Field, a: ExactScalar, b: ExactScalar) -> Result<Self> {
        if a.field() != field || b.field() != field {
            return Err(Error::MixedField);
        }
        if let Field::Prime(q) = field {
            if q <= 3 {
                return Err(Error::Unsupported("characteristic must exceed 3".into()));
            }
        }
        // 4a^3 + 27b^2 != 0.
        let four = field.from_i64(4);
        let disc = &(&four * &(&(&a * &a) * &a)) + &(&field.from_i64(27) * &(&b * &b));
        if disc.is_zero() {
            return Err(Error::InvalidInput(
                "4a^3 + 27b^2 = 0: the Weierstrass cubic is singular".into(),
            ));
        }
        let one = field.one();
        let form = HomogeneousForm::from_terms(
            3,
            field,
            &[
                ((0, 2, 1), one),
                ((3, 0, 0), -field.one()),
                ((1, 0, 2), -&a),
                ((0, 0, 3), -&b),
            ],
        )?;
        Ok(CubicCurve {
            kind: CubicKind::SmoothWeierstrass { a, b },
            field,
            form,
        })
    }

    /// Nodal cubic y^2 z = x^3 + x^2 z with node at (0:0:1).
    pub fn nodal(field: Field) -> Result<Self> {
        if let Field::Prime(q) = field {
            if q <= 3 {
                return Err(Error::Unsupported("characteristic must exceed 3".into()));
            }
        }
        let form = HomogeneousForm::from_terms(
            3,
            field,
            &[
                ((0, 2, 1), field.one()),
                ((3, 0, 0), field.from_i64(-1)),
                ((2, 0, 1), field.from_i64(-1)),
            ],
        )?;
        Ok(CubicCurve { kind: CubicKind::Nodal, field, form })
    }

    /// Cuspidal cubic y^2 z = x^3 with cusp at (0:0:1).
    pub fn cuspidal(field: Field) -> Result<Self> {
        if let Field::Prime(q) = field {
            if q <= 3 {
                return Err(Error::Unsupported("characteristic must exceed 3".into()));
            }
        }
        let form = HomogeneousForm::from_terms(
            3,
            field,
            &[((0, 2, 1), field.one()), ((3, 0, 0), field.from_i64(-1))],
        )?;
        Ok(CubicCurve { kind: CubicKind::Cuspidal, field, form })
    }

    /// Reduced reducible cubic given by its component forms (degrees summing
    /// to 3, no repeated factor).
    pub fn reducible(components: Vec<HomogeneousForm>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("no components".into()));
        }
        let field = components[0].field();
        if components.iter().any(|c| c.field() != field) {
            return Err(Error::MixedField);
        }
        let total: usize = components.iter().map(|c| c.degree()).sum();
        if total != 3 {
            return Err(Error::InvalidInput(format!(
                "component degrees sum to {total}, expected 3"
            )));
        }
        if components.iter().any(|c| c.is_zero()) {
            return Err(Error::InvalidInput("zero component form".into()));
        }
        // Reject visibly repeated factors: proportional pairs of equal degree.
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if components[i].degree() == components[j].degree()
                    && proportional(&components[i], &components[j])
                {
                    return Err(Error::InvalidInput(
                        "repeated component: the cubic must be reduced".into(),
                    ));
                }
            }
        }
        let mut form = components[0].clone();
        for c in &components[1..] {
            form = form.multiply(c);
        }
        Ok(CubicCurve {
            kind: CubicKind::Reducible(components),
            field,
            form,
        })
    }

    /// Parse the CLI curve spec: `weierstrass a b [q]`, `nodal [q]`,
    /// `cuspidal [q]`, `reducible <form>;<form>[;<form>]` (rational field).
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix("reducible") {
            let rest = rest.trim();
            let comps: Result<Vec<HomogeneousForm>> = rest
                .split(';')
                .map(|s| parse_form(s.trim(), Field::Rationals))
                .collect();
            return Self::reducible(comps?);
        }
        let words: Vec<&str> = spec.split_whitespace().collect();
        let parse_q = |tok: Option<&&str>| -> Result<Field> {
            match tok {
                None => Ok(Field::Rationals),
                Some(t) => {
                    let q: u64 = t.parse().map_err(|_| {
                        Error::InvalidInput(format!("invalid field size `{t}`"))
                    })?;
                    if !crate::exactalg::numtheory::is_prime(q) {
                        return Err(Error::InvalidInput(format!("{q} is not prime")));
                    }
                    Ok(Field::Prime(q))
                }
            }
        };
        match words.first() {
            Some(&"weierstrass") => {
                if words.len() < 3 {
                    return Err(Error::InvalidInput(
                        "usage: weierstrass a b [q]".into(),
                    ));
                }
                let field = parse_q(words.get(3))?;
                let a = ExactScalar::parse(words[1], field)?;
                let b = ExactScalar::parse(words[2], field)?;
                Self::weierstrass(field, a, b)
            }
            Some(&"nodal") => Self::nodal(parse_q(words.get(1))?),
            Some(&"cuspidal") => Self::cuspidal(parse_q(words.get(1))?),
            other => Err(Error::InvalidInput(format!(
                "unknown curve spec `{}`",
                other.copied().unwrap_or("")
            ))),
        }
    }

    pub fn kind(&self) -> &CubicKind {
        &self.kind
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn form(&self) -> &HomogeneousForm {
        &self.form
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.form.vanishes_at(p)
    }

    pub fn is_smooth_point(&self, p: &ProjPoint) -> bool {
        self.form.is_smooth_point(p)
    }

    /// The singular point of the fixed nodal/cuspidal models.
    pub fn singular_point(&self) -> Option<ProjPoint> {
        match self.kind {
            CubicKind::Nodal | CubicKind::Cuspidal => {
                Some(ProjPoint::from_i64(self.field, 0, 0, 1).expect("valid point"))
            }
            _ => None,
        }
    }

    /// Attach a point to the curve, recording smoothness; errors off-curve.
    pub fn curve_point(&self, point: ProjPoint) -> Result<CurvePoint> {
        if point.field() != self.field {
            return Err(Error::MixedField);
        }
        if !self.contains(&point) {
            return Err(Error::PointOffCurve);
        }
        let smooth = self.is_smooth_point(&point);
        Ok(CurvePoint { point, smooth })
    }
}

fn proportional(a: &HomogeneousForm, b: &HomogeneousForm) -> bool {
    let pairs: Vec<(&ExactScalar, &ExactScalar)> =
        a.coeffs().iter().zip(b.coeffs().iter()).collect();
    let mut ratio: Option<ExactScalar> = None;
    for (ca, cb) in pairs {
        match (ca.is_zero(), cb.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => return false,
            (false, false) => {
                let r = ca / cb;
                match &ratio {
                    None => ratio = Some(r),
                    Some(prev) => {
                        if *prev != r {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
