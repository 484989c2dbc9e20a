//! Seeded generators for every point configuration in the verification
//! corpus: the twenty nine-point configurations of the classification table,
//! collinear splits, complete intersections on a cubic, and evenly
//! distributed or singular-support points on cubics.
//!
//! "General position" is realized by random coordinates plus a structural
//! audit (incidence counts and the brute-forced difference function of the
//! reduced scheme) with up to five retries.

use rand::Rng;

use crate::cubicgroup::{self, CubicCurve, GroupElement, Order};
use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, Field};
use crate::formulas::{
    ci_reduced_dh, nine_case_rows, predict_ci, predict_singular_cubic, predict_singular_support,
    predict_uniform, uniform_reduced_dh, SingularBranch, NINE_REDUCED,
};
use crate::geometry::{
    difference_function, forms::monomial_count, FatPointScheme, HomogeneousForm, ProjPoint,
};
use crate::surface::LambdaOracle;

const MAX_RETRIES: usize = 5;

/// A generated configuration: the scheme as constructed, the forms used to
/// build it, and the expected difference function of the scheme obtained by
/// scaling every multiplicity by `expected_scale`.
#[derive(Debug, Clone)]
pub struct GeneratedConfig {
    /// Canonical case identifier, e.g. `nine.7.ci`.
    pub case: String,
    /// The scheme as constructed (reduced for the nine-point and
    /// complete-intersection cases; multiplicity m for on-cubic cases).
    pub scheme: FatPointScheme,
    /// Forms supporting the construction (lines, conics, cubics).
    pub support: Vec<HomogeneousForm>,
    /// Expected difference function of `expected_scheme()`, when a formula
    /// pins it down.
    pub expected: Option<Vec<u64>>,
    /// Multiplicity scale relating `scheme` to the expectation (2 for the
    /// doubled nine-point cases, 1 otherwise).
    pub expected_scale: u32,
    /// The cubic carrying the points, for configurations built through the
    /// group law; lets callers recompute torsion data.
    pub curve: Option<CubicCurve>,
}

impl GeneratedConfig {
    /// The scheme the expectation refers to.
    pub fn expected_scheme(&self) -> FatPointScheme {
        if self.expected_scale == 1 {
            self.scheme.clone()
        } else {
            let mults: Vec<u32> = self
                .scheme
                .mults()
                .iter()
                .map(|m| m * self.expected_scale)
                .collect();
            FatPointScheme::new(self.scheme.points().to_vec(), mults)
                .expect("scaling multiplicities preserves validity")
        }
    }
}

// ---------------------------------------------------------------------------
// Random primitives.

fn rand_scalar<R: Rng + ?Sized>(field: Field, rng: &mut R) -> ExactScalar {
    match field {
        Field::Prime(q) => field.from_u64(rng.gen_range(0..q)),
        Field::Rationals => field.from_i64(rng.gen_range(-999..=999)),
    }
}

fn rand_affine_point<R: Rng + ?Sized>(field: Field, rng: &mut R) -> ProjPoint {
    loop {
        let x = rand_scalar(field, rng);
        let y = rand_scalar(field, rng);
        if let Ok(p) = ProjPoint::new([x, y, field.one()]) {
            return p;
        }
    }
}

/// A line carrying a rational parametrization: s maps to base + s * dir.
struct LineGen {
    base: ProjPoint,
    dir: ProjPoint,
    form: HomogeneousForm,
}

impl LineGen {
    fn through(a: &ProjPoint, b: &ProjPoint) -> Result<Self> {
        Ok(LineGen {
            base: a.clone(),
            dir: b.clone(),
            form: HomogeneousForm::line_through(a, b)?,
        })
    }

    fn random<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Self {
        loop {
            let a = rand_affine_point(field, rng);
            let b = rand_affine_point(field, rng);
            if a != b {
                if let Ok(line) = Self::through(&a, &b) {
                    return line;
                }
            }
        }
    }

    fn point_at(&self, s: &ExactScalar) -> ProjPoint {
        let [bx, by, bz] = self.base.coords();
        let [dx, dy, dz] = self.dir.coords();
        ProjPoint::new([bx + &(s * dx), by + &(s * dy), bz + &(s * dz)])
            .expect("combination of independent points is nonzero")
    }

    fn random_point<R: Rng + ?Sized>(&self, rng: &mut R, avoid: &[ProjPoint]) -> ProjPoint {
        loop {
            let p = self.point_at(&rand_scalar(self.form.field(), rng));
            if !avoid.contains(&p) {
                return p;
            }
        }
    }
}

/// Intersection point of two distinct lines (cross product of coefficients).
fn intersect_lines(l1: &HomogeneousForm, l2: &HomogeneousForm) -> Result<ProjPoint> {
    let a = l1.coeffs();
    let b = l2.coeffs();
    let x = &(&a[1] * &b[2]) - &(&a[2] * &b[1]);
    let y = &(&a[2] * &b[0]) - &(&a[0] * &b[2]);
    let z = &(&a[0] * &b[1]) - &(&a[1] * &b[0]);
    ProjPoint::new([x, y, z])
        .map_err(|_| Error::InvalidInput("lines are parallel or identical".into()))
}

/// The fixed smooth conic x z = y^2 with parametrization s -> (s^2 : s : 1);
/// any smooth conic is projectively equivalent to it, so Hilbert-function
/// questions lose nothing.
struct ConicGen {
    form: HomogeneousForm,
    field: Field,
}

impl ConicGen {
    fn standard(field: Field) -> Self {
        let form = HomogeneousForm::from_terms(
            2,
            field,
            &[((1, 0, 1), field.one()), ((0, 2, 0), field.from_i64(-1))],
        )
        .expect("valid conic");
        ConicGen { form, field }
    }

    fn point_at(&self, s: &ExactScalar) -> ProjPoint {
        ProjPoint::new([s * s, s.clone(), self.field.one()]).expect("nonzero")
    }

    fn random_point<R: Rng + ?Sized>(&self, rng: &mut R, avoid: &[ProjPoint]) -> ProjPoint {
        loop {
            let p = self.point_at(&rand_scalar(self.field, rng));
            if !avoid.contains(&p) {
                return p;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Audits.

fn assert_distinct(points: &[ProjPoint]) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(Error::GenerationFailure("coincident points".into()));
            }
        }
    }
    Ok(())
}

/// Brute-force the reduced difference function and compare.
fn audit_reduced_dh(points: &[ProjPoint], expected: &[u64]) -> Result<()> {
    let scheme = FatPointScheme::uniform(points.to_vec(), 1)?;
    let dh = difference_function(&scheme)?;
    if dh.values() != expected {
        return Err(Error::GenerationFailure(format!(
            "reduced difference function {} instead of expected {:?}",
            dh, expected
        )));
    }
    Ok(())
}

fn retry<T>(mut attempt: impl FnMut() -> Result<T>, what: &str) -> Result<T> {
    let mut last_err = None;
    for _ in 0..MAX_RETRIES {
        match attempt() {
            Ok(v) => return Ok(v),
            Err(e @ Error::GenerationFailure(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailure(format!(
        "{what}: retries exhausted ({})",
        last_err.map(|e| e.to_string()).unwrap_or_default()
    )))
}

// ---------------------------------------------------------------------------
// Nine-point configurations (the classification corpus).

/// The (case, variant) pairs realizing every constructible row of the
/// classification, in canonical order.
pub fn nine_variants() -> Vec<(usize, &'static str)> {
    vec![
        (1, "collinear"),
        (2, "8+1"),
        (3, "generic"),
        (3, "extra-collinear"),
        (4, "node-out"),
        (4, "node-in"),
        (5, "smooth-conic"),
        (5, "two-lines"),
        (5, "two-lines-node"),
        (6, "generic"),
        (6, "incident"),
        (7, "ci"),
        (7, "conic-quartic"),
        (7, "split531"),
        (7, "two-lines-vertex"),
        (8, "generic"),
        (8, "conic-line-1"),
        (8, "conic-line-2"),
        (8, "triangle"),
        (8, "five-lines"),
    ]
}

/// Canonical id of a (case, variant) pair.
pub fn nine_case_id(case: usize, variant: &str) -> String {
    format!("nine.{case}.{variant}")
}

/// Which row of the case's table the variant realizes (1-based).
fn nine_variant_row(case: usize, variant: &str) -> Result<usize> {
    Ok(match (case, variant) {
        (1..=4 | 6, _) => 1,
        (5, "smooth-conic" | "two-lines") => 1,
        (5, "two-lines-node") => 2,
        (7, "ci") => 1,
        (7, "conic-quartic") => 2,
        (7, "split531") => 3,
        (7, "two-lines-vertex") => 4,
        (8, "generic") => 1,
        (8, "conic-line-1") => 2,
        (8, "conic-line-2") => 3,
        (8, "triangle") => 4,
        (8, "five-lines") => 5,
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown variant `{variant}` for case {case}"
            )))
        }
    })
}

/// Generate a 9-point reduced scheme for one case of the classification;
/// its doubled version has the recorded table row as difference function.
pub fn gen_nine_case<R: Rng + ?Sized>(
    case: usize,
    variant: &str,
    field: Field,
    rng: &mut R,
) -> Result<GeneratedConfig> {
    let row_idx = nine_variant_row(case, variant)?;
    let expected_row = nine_case_rows(case)?[row_idx - 1].dh.to_vec();
    let reduced_expected = NINE_REDUCED[case - 1];
    let build = |rng: &mut R| -> Result<(Vec<ProjPoint>, Vec<HomogeneousForm>)> {
        build_nine_points(case, variant, field, rng)
    };
    let (points, support) = retry(
        || {
            let (points, support) = build(rng)?;
            assert_distinct(&points)?;
            audit_reduced_dh(&points, reduced_expected)?;
            Ok((points, support))
        },
        &nine_case_id(case, variant),
    )?;
    Ok(GeneratedConfig {
        case: nine_case_id(case, variant),
        scheme: FatPointScheme::uniform(points, 1)?,
        support,
        expected: Some(expected_row),
        expected_scale: 2,
        curve: None,
    })
}

fn build_nine_points<R: Rng + ?Sized>(
    case: usize,
    variant: &str,
    field: Field,
    rng: &mut R,
) -> Result<(Vec<ProjPoint>, Vec<HomogeneousForm>)> {
    match (case, variant) {
        (1, _) => {
            let line = LineGen::random(field, rng);
            let mut pts = Vec::new();
            for _ in 0..9 {
                pts.push(line.random_point(rng, &pts));
            }
            Ok((pts, vec![line.form]))
        }
        (2, _) => {
            let line = LineGen::random(field, rng);
            let mut pts = Vec::new();
            for _ in 0..8 {
                pts.push(line.random_point(rng, &pts));
            }
            pts.push(off_form_point(&line.form, field, rng));
            Ok((pts, vec![line.form]))
        }
        (3, v) => {
            let line = LineGen::random(field, rng);
            let mut pts = Vec::new();
            for _ in 0..7 {
                pts.push(line.random_point(rng, &pts));
            }
            let q1 = off_form_point(&line.form, field, rng);
            let q2 = match v {
                "extra-collinear" => {
                    // Q2 on the line joining Q1 to one of the seven points.
                    let aux = LineGen::through(&q1, &pts[0])?;
                    aux.random_point(rng, &[q1.clone(), pts[0].clone()])
                }
                _ => off_form_point(&line.form, field, rng),
            };
            pts.push(q1);
            pts.push(q2);
            Ok((pts, vec![line.form]))
        }
        (4, v) => {
            let l1 = LineGen::random(field, rng);
            let l2 = LineGen::random(field, rng);
            let v12 = intersect_lines(&l1.form, &l2.form)?;
            let mut pts = Vec::new();
            if v == "node-in" {
                pts.push(v12.clone());
            }
            while pts.len() < 6 {
                let p = l1.random_point(rng, &pts);
                if (p != v12 || v == "node-in")
                    && !pts.contains(&p) {
                        pts.push(p);
                    }
            }
            let mut on_l2 = Vec::new();
            while on_l2.len() < 3 {
                let p = l2.random_point(rng, &on_l2);
                if p != v12 {
                    on_l2.push(p);
                }
            }
            pts.extend(on_l2);
            Ok((pts, vec![l1.form, l2.form]))
        }
        (5, "smooth-conic") => {
            let conic = ConicGen::standard(field);
            let mut pts = Vec::new();
            for _ in 0..9 {
                pts.push(conic.random_point(rng, &pts));
            }
            Ok((pts, vec![conic.form]))
        }
        (5, v) => {
            // Two lines: 5 + 4, with or without the intersection among the 5.
            let l1 = LineGen::random(field, rng);
            let l2 = LineGen::random(field, rng);
            let v12 = intersect_lines(&l1.form, &l2.form)?;
            let mut on_l1 = Vec::new();
            if v == "two-lines-node" {
                on_l1.push(v12.clone());
            }
            while on_l1.len() < 5 {
                let p = l1.random_point(rng, &on_l1);
                if p != v12 {
                    on_l1.push(p);
                }
            }
            let mut on_l2 = Vec::new();
            while on_l2.len() < 4 {
                let p = l2.random_point(rng, &on_l2);
                if p != v12 {
                    on_l2.push(p);
                }
            }
            on_l1.extend(on_l2);
            Ok((on_l1, vec![l1.form, l2.form]))
        }
        (6, v) => {
            let line = LineGen::random(field, rng);
            let a = off_form_point(&line.form, field, rng);
            let b = off_form_point(&line.form, field, rng);
            if a == b {
                return Err(Error::GenerationFailure("coincident off-line points".into()));
            }
            let ab = HomogeneousForm::line_through(&a, &b)?;
            let mut on_line: Vec<ProjPoint> = Vec::new();
            if v == "incident" {
                on_line.push(intersect_lines(&line.form, &ab)?);
            }
            while on_line.len() < 6 {
                let p = line.random_point(rng, &on_line);
                if !ab.vanishes_at(&p) {
                    on_line.push(p);
                }
            }
            // Third off-line point, not collinear with a and b.
            let c = loop {
                let p = off_form_point(&line.form, field, rng);
                if !ab.vanishes_at(&p) {
                    break p;
                }
            };
            on_line.push(a);
            on_line.push(b);
            on_line.push(c);
            Ok((on_line, vec![line.form]))
        }
        (7, "ci") => {
            let (pts, curve) = ci_on_cubic_points(3, field, rng)?;
            Ok((pts, vec![curve.form().clone()]))
        }
        (7, "conic-quartic") => {
            // Eight points on a smooth conic are always the complete
            // intersection of the conic and a quartic; add one general point.
            let conic = ConicGen::standard(field);
            let mut pts = Vec::new();
            for _ in 0..8 {
                pts.push(conic.random_point(rng, &pts));
            }
            pts.push(off_form_point(&conic.form, field, rng));
            Ok((pts, vec![conic.form]))
        }
        (7, "split531") => {
            let l1 = LineGen::random(field, rng);
            let l2 = LineGen::random(field, rng);
            let v12 = intersect_lines(&l1.form, &l2.form)?;
            let mut pts = Vec::new();
            while pts.len() < 5 {
                let p = l1.random_point(rng, &pts);
                if p != v12 {
                    pts.push(p);
                }
            }
            let mut on_l2 = Vec::new();
            while on_l2.len() < 3 {
                let p = l2.random_point(rng, &on_l2);
                if p != v12 {
                    on_l2.push(p);
                }
            }
            pts.extend(on_l2);
            let free = loop {
                let p = rand_affine_point(field, rng);
                if !l1.form.vanishes_at(&p) && !l2.form.vanishes_at(&p) {
                    break p;
                }
            };
            pts.push(free);
            Ok((pts, vec![l1.form, l2.form]))
        }
        (7, "two-lines-vertex") => {
            // Five points on one line and four on another, the common point
            // among them, plus one general point.
            let vertex = rand_affine_point(field, rng);
            let r1 = rand_affine_point(field, rng);
            let r2 = rand_affine_point(field, rng);
            let l1 = LineGen::through(&vertex, &r1)?;
            let l2 = LineGen::through(&vertex, &r2)?;
            let mut pts = vec![vertex.clone()];
            let mut on_l1 = Vec::new();
            while on_l1.len() < 4 {
                let p = l1.random_point(rng, &on_l1);
                if p != vertex {
                    on_l1.push(p);
                }
            }
            let mut on_l2 = Vec::new();
            while on_l2.len() < 3 {
                let p = l2.random_point(rng, &on_l2);
                if p != vertex {
                    on_l2.push(p);
                }
            }
            pts.extend(on_l1);
            pts.extend(on_l2);
            let free = loop {
                let p = rand_affine_point(field, rng);
                if !l1.form.vanishes_at(&p) && !l2.form.vanishes_at(&p) {
                    break p;
                }
            };
            pts.push(free);
            Ok((pts, vec![l1.form, l2.form]))
        }
        (8, "generic") => {
            let mut pts = Vec::new();
            for _ in 0..9 {
                let p = rand_affine_point(field, rng);
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            Ok((pts, vec![]))
        }
        (8, "conic-line-1") => {
            // Seven on a conic, three on a line, one point in common.
            let conic = ConicGen::standard(field);
            let shared = conic.random_point(rng, &[]);
            let mut pts = vec![shared.clone()];
            for _ in 0..6 {
                pts.push(conic.random_point(rng, &pts));
            }
            let other = off_form_point(&conic.form, field, rng);
            let line = LineGen::through(&shared, &other)?;
            // The line meets the conic in one more rational point; keep it
            // out of the configuration.
            let mut on_line = Vec::new();
            while on_line.len() < 2 {
                let p = line.random_point(rng, &on_line);
                if !conic.form.vanishes_at(&p) && p != shared {
                    on_line.push(p);
                }
            }
            pts.extend(on_line);
            Ok((pts, vec![conic.form, line.form]))
        }
        (8, "conic-line-2") => {
            // Seven on a conic, four on a line, both intersections in the
            // configuration: choose the two shared points on the conic, take
            // the line through them.
            let conic = ConicGen::standard(field);
            let w1 = conic.random_point(rng, &[]);
            let w2 = conic.random_point(rng, std::slice::from_ref(&w1));
            let line = LineGen::through(&w1, &w2)?;
            let mut pts = vec![w1, w2];
            while pts.len() < 7 {
                let p = conic.random_point(rng, &pts);
                if !line.form.vanishes_at(&p) {
                    pts.push(p);
                }
            }
            let mut on_line = Vec::new();
            while on_line.len() < 2 {
                let p = line.random_point(rng, &on_line);
                if !conic.form.vanishes_at(&p) {
                    on_line.push(p);
                }
            }
            pts.extend(on_line);
            Ok((pts, vec![conic.form, line.form]))
        }
        (8, "triangle") => {
            // Three general lines; the three vertices plus two more points
            // on each line.
            let a = rand_affine_point(field, rng);
            let b = rand_affine_point(field, rng);
            let c = rand_affine_point(field, rng);
            if a == b || b == c || a == c || ProjPoint::collinear(&a, &b, &c) {
                return Err(Error::GenerationFailure("degenerate triangle".into()));
            }
            let lines = [
                LineGen::through(&a, &b)?,
                LineGen::through(&b, &c)?,
                LineGen::through(&a, &c)?,
            ];
            let mut pts = vec![a, b, c];
            for line in &lines {
                let mut added = 0;
                while added < 2 {
                    let p = line.random_point(rng, &pts);
                    if !pts.contains(&p) {
                        pts.push(p);
                        added += 1;
                    }
                }
            }
            Ok((pts, lines.into_iter().map(|l| l.form).collect()))
        }
        (8, "five-lines") => {
            // Nine of the ten pairwise intersection points of five general
            // lines (no three concurrent).
            let lines: Vec<LineGen> = (0..5).map(|_| LineGen::random(field, rng)).collect();
            let mut pts = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    pts.push(intersect_lines(&lines[i].form, &lines[j].form)?);
                }
            }
            assert_distinct(&pts)
                .map_err(|_| Error::GenerationFailure("three lines concurrent".into()))?;
            // Drop one intersection point (which one does not matter).
            pts.pop();
            Ok((pts, lines.into_iter().map(|l| l.form).collect()))
        }
        _ => Err(Error::InvalidInput(format!(
            "unknown variant `{variant}` for case {case}"
        ))),
    }
}

fn off_form_point<R: Rng + ?Sized>(
    form: &HomogeneousForm,
    field: Field,
    rng: &mut R,
) -> ProjPoint {
    loop {
        let p = rand_affine_point(field, rng);
        if !form.vanishes_at(&p) {
            return p;
        }
    }
}

// ---------------------------------------------------------------------------
// Collinear splits.

/// sizes[i] points on line i, general otherwise. Splits matching rows of the
/// nine-point classification record the corresponding expectation.
pub fn gen_collinear_split<R: Rng + ?Sized>(
    sizes: &[usize],
    field: Field,
    rng: &mut R,
) -> Result<GeneratedConfig> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidInput("split sizes must be positive".into()));
    }
    let n: usize = sizes.iter().sum();
    let case_id = format!(
        "split.{}",
        sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("-")
    );
    // Known nine-point rows for pure splits.
    let (expected, reduced): (Option<Vec<u64>>, Option<Vec<u64>>) = if n == 9 {
        let known = match *sizes {
            [9] => Some(1),
            [8, 1] => Some(2),
            [7, 2] => Some(3),
            [6, 3] => Some(4),
            [5, 4] => Some(5),
            _ => None,
        };
        match known {
            Some(case) => (
                Some(nine_case_rows(case)?[0].dh.to_vec()),
                Some(NINE_REDUCED[case - 1].to_vec()),
            ),
            None => (None, None),
        }
    } else {
        (None, None)
    };

    let (points, support) = retry(
        || {
            let mut lines = Vec::new();
            let mut pts: Vec<ProjPoint> = Vec::new();
            for &size in sizes {
                let line = LineGen::random(field, rng);
                let mut on_line = 0;
                let mut guard = 0;
                while on_line < size {
                    let p = line.random_point(rng, &pts);
                    // No point may sit on an earlier line: the split must be
                    // exact.
                    if lines
                        .iter()
                        .all(|l: &HomogeneousForm| !l.vanishes_at(&p))
                        && !pts.contains(&p)
                    {
                        pts.push(p);
                        on_line += 1;
                    }
                    guard += 1;
                    if guard > 256 {
                        return Err(Error::GenerationFailure("line saturated".into()));
                    }
                }
                lines.push(line.form);
            }
            assert_distinct(&pts)?;
            if let Some(reduced) = &reduced {
                audit_reduced_dh(&pts, reduced)?;
            }
            Ok((pts, lines))
        },
        &case_id,
    )?;
    Ok(GeneratedConfig {
        case: case_id,
        scheme: FatPointScheme::uniform(points, 1)?,
        support,
        expected,
        expected_scale: 2,
        curve: None,
    })
}

// ---------------------------------------------------------------------------
// Complete intersections on a cubic.

/// 3t distinct points cut out on a smooth Weierstrass cubic by a degree-t
/// curve, realized as points with group sum zero; exact transversality comes
/// from distinctness.
pub fn gen_ci_cubic<R: Rng + ?Sized>(t: usize, field: Field, rng: &mut R) -> Result<GeneratedConfig> {
    if t < 3 {
        return Err(Error::InvalidInput(format!("need t >= 3, got {t}")));
    }
    let (points, curve) = retry(
        || {
            let (pts, curve) = ci_on_cubic_points(t, field, rng)?;
            assert_distinct(&pts)?;
            audit_reduced_dh(&pts, &ci_reduced_dh(t)?)?;
            Ok((pts, curve))
        },
        &format!("ci.{t}"),
    )?;
    Ok(GeneratedConfig {
        case: format!("ci.{t}"),
        scheme: FatPointScheme::uniform(points, 1)?,
        support: vec![curve.form().clone()],
        expected: Some(predict_ci(t)?.dh.values().to_vec()),
        expected_scale: 2,
        curve: Some(curve),
    })
}

fn ci_on_cubic_points<R: Rng + ?Sized>(
    t: usize,
    field: Field,
    rng: &mut R,
) -> Result<(Vec<ProjPoint>, CubicCurve)> {
    let curve = random_weierstrass(field, rng)?;
    let id = cubicgroup::identity(&curve)?;
    let pts = cubicgroup::points_with_sum(&curve, 3 * t, &id, rng)?;
    Ok((pts.into_iter().map(|cp| cp.point).collect(), curve))
}

fn random_weierstrass<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Result<CubicCurve> {
    for _ in 0..32 {
        let a = rand_scalar(field, rng);
        let b = rand_scalar(field, rng);
        if let Ok(curve) = CubicCurve::weierstrass(field, a, b) {
            return Ok(curve);
        }
    }
    Err(Error::GenerationFailure("no smooth Weierstrass curve found".into()))
}

// ---------------------------------------------------------------------------
// Points on cubics.

/// Curve kinds accepted by [`gen_on_cubic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnCubicKind {
    Smooth,
    Nodal,
    Cuspidal,
    /// Smooth conic plus a transverse line, 2n/3 + n/3 points.
    ConicLine,
    /// Three general lines, n/3 points each.
    ThreeLines,
}

impl OnCubicKind {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "smooth" => Ok(OnCubicKind::Smooth),
            "nodal" => Ok(OnCubicKind::Nodal),
            "cuspidal" => Ok(OnCubicKind::Cuspidal),
            "conicline" => Ok(OnCubicKind::ConicLine),
            "lines3" => Ok(OnCubicKind::ThreeLines),
            other => Err(Error::InvalidInput(format!("unknown curve kind `{other}`"))),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            OnCubicKind::Smooth => "smooth",
            OnCubicKind::Nodal => "nodal",
            OnCubicKind::Cuspidal => "cuspidal",
            OnCubicKind::ConicLine => "conicline",
            OnCubicKind::ThreeLines => "lines3",
        }
    }
}

/// Group-theoretic constraint on the generated points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionTarget {
    /// No constraint; the sum is audited to have no small torsion.
    Generic,
    /// The points sum to the identity (cut out by a curve of degree n/3).
    SumIdentity,
    /// The sum has exact order k.
    SumOrder(u64),
}

impl TorsionTarget {
    pub fn parse(text: &str) -> Result<Self> {
        if text == "generic" {
            return Ok(TorsionTarget::Generic);
        }
        if let Some(k) = text.strip_prefix("sum") {
            let k: u64 = k
                .parse()
                .map_err(|_| Error::InvalidInput(format!("invalid torsion `{text}`")))?;
            return Ok(if k <= 1 {
                TorsionTarget::SumIdentity
            } else {
                TorsionTarget::SumOrder(k)
            });
        }
        Err(Error::InvalidInput(format!("invalid torsion `{text}`")))
    }

    fn name(&self) -> String {
        match self {
            TorsionTarget::Generic => "generic".into(),
            TorsionTarget::SumIdentity => "sum1".into(),
            TorsionTarget::SumOrder(k) => format!("sum{k}"),
        }
    }

    fn lambda_oracle(&self) -> LambdaOracle {
        match self {
            TorsionTarget::Generic => LambdaOracle::generic(),
            TorsionTarget::SumIdentity => LambdaOracle::trivial_class(),
            TorsionTarget::SumOrder(k) => LambdaOracle::new(Some(*k)),
        }
    }
}

/// n points with multiplicity m on a cubic of the requested kind, with the
/// requested torsion constraint; `include_singular` additionally puts the
/// singular point of the nodal/cuspidal model first among the points.
pub fn gen_on_cubic<R: Rng + ?Sized>(
    kind: OnCubicKind,
    n: usize,
    m: u32,
    torsion: TorsionTarget,
    include_singular: bool,
    field: Field,
    rng: &mut R,
) -> Result<GeneratedConfig> {
    if n < 9 {
        return Err(Error::InvalidInput(format!("need n >= 9 points, got {n}")));
    }
    if m == 0 {
        return Err(Error::InvalidInput("multiplicity must be >= 1".into()));
    }
    if include_singular && !matches!(kind, OnCubicKind::Nodal | OnCubicKind::Cuspidal) {
        return Err(Error::InvalidInput(
            "include_singular needs a nodal or cuspidal cubic".into(),
        ));
    }
    let case = format!(
        "oncubic.{}.n{n}.m{m}.{}{}",
        kind.name(),
        torsion.name(),
        if include_singular { ".singular" } else { "" }
    );
    let (points, support, curve) = retry(
        || build_on_cubic(kind, n, torsion, include_singular, field, rng),
        &case,
    )?;
    let expected = expected_on_cubic(kind, n, m, torsion, include_singular)?;
    Ok(GeneratedConfig {
        case,
        scheme: FatPointScheme::uniform(points, m)?,
        support,
        expected,
        expected_scale: 1,
        curve,
    })
}

fn expected_on_cubic(
    _kind: OnCubicKind,
    n: usize,
    m: u32,
    torsion: TorsionTarget,
    include_singular: bool,
) -> Result<Option<Vec<u64>>> {
    if !include_singular {
        let oracle = torsion.lambda_oracle();
        return Ok(Some(predict_uniform(n, m, &oracle)?.dh.values().to_vec()));
    }
    // Singular point among the points: the h^0 ranges give the Hilbert
    // function directly for m in {1, 2} with a generic smooth part; the
    // complete-intersection smooth part is the second delta = 1 branch.
    match (m, torsion) {
        (1 | 2, TorsionTarget::Generic) => {
            let h0 = predict_singular_support(n, m, 3 * n)?;
            let h: Vec<u64> = h0
                .iter()
                .enumerate()
                .map(|(t, v)| monomial_count(t) as u64 - v)
                .collect();
            let dh = crate::geometry::HVector::hilbert(h).to_difference()?;
            Ok(Some(dh.values().to_vec()))
        }
        (2, TorsionTarget::SumIdentity) if n % 3 == 1 && n / 3 > 3 => Ok(Some(
            predict_singular_cubic(n, SingularBranch::Delta1Second)?
                .dh
                .values()
                .to_vec(),
        )),
        _ => Ok(None),
    }
}

type OnCubicParts = (Vec<ProjPoint>, Vec<HomogeneousForm>, Option<CubicCurve>);

fn build_on_cubic<R: Rng + ?Sized>(
    kind: OnCubicKind,
    n: usize,
    torsion: TorsionTarget,
    include_singular: bool,
    field: Field,
    rng: &mut R,
) -> Result<OnCubicParts> {
    match kind {
        OnCubicKind::Smooth | OnCubicKind::Nodal | OnCubicKind::Cuspidal => {
            let curve = match (kind, torsion) {
                // The curve y^2 = x^3 + 1 carries rational 2-, 3- and
                // 6-torsion over any field with q > 3.
                (OnCubicKind::Smooth, TorsionTarget::SumOrder(_)) => {
                    CubicCurve::weierstrass(field, field.zero(), field.one())?
                }
                (OnCubicKind::Smooth, _) => random_weierstrass(field, rng)?,
                (OnCubicKind::Nodal, _) => CubicCurve::nodal(field)?,
                (OnCubicKind::Cuspidal, _) => CubicCurve::cuspidal(field)?,
                _ => unreachable!(),
            };
            let smooth_count = if include_singular { n - 1 } else { n };
            let smooth_points = match torsion {
                TorsionTarget::Generic => {
                    let mut elements = Vec::new();
                    let mut guard = 0;
                    while elements.len() < smooth_count {
                        let e = cubicgroup::sample_element(&curve, rng)?;
                        if !elements.contains(&e) {
                            elements.push(e);
                        }
                        guard += 1;
                        if guard > 64 * smooth_count {
                            return Err(Error::GenerationFailure("sampling stalled".into()));
                        }
                    }
                    // Small torsion in the sum would change the boundary
                    // values; resample when it occurs.
                    let mut sigma = cubicgroup::identity(&curve)?;
                    for e in &elements {
                        sigma = cubicgroup::add(&curve, &sigma, e)?;
                    }
                    if cubicgroup::order(&curve, &sigma, 6)? != Order::ExceedsBound {
                        return Err(Error::GenerationFailure(
                            "accidental small torsion in the point sum".into(),
                        ));
                    }
                    elements
                        .iter()
                        .map(|e| cubicgroup::element_to_point(&curve, e).map(|cp| cp.point))
                        .collect::<Result<Vec<_>>>()?
                }
                TorsionTarget::SumIdentity => {
                    let id = cubicgroup::identity(&curve)?;
                    cubicgroup::points_with_sum(&curve, smooth_count, &id, rng)?
                        .into_iter()
                        .map(|cp| cp.point)
                        .collect()
                }
                TorsionTarget::SumOrder(k) => {
                    let target = torsion_element(&curve, k, rng)?;
                    let got = cubicgroup::order(&curve, &target, k)?;
                    if got != Order::Finite(k) {
                        return Err(Error::GenerationFailure(format!(
                            "constructed element has order {got:?}, wanted {k}"
                        )));
                    }
                    cubicgroup::points_with_sum(&curve, smooth_count, &target, rng)?
                        .into_iter()
                        .map(|cp| cp.point)
                        .collect()
                }
            };
            let mut points = Vec::with_capacity(n);
            if include_singular {
                let singular = curve
                    .singular_point()
                    .expect("nodal/cuspidal model has a singular point");
                if smooth_points.contains(&singular) {
                    return Err(Error::GenerationFailure(
                        "singular point collided with a smooth point".into(),
                    ));
                }
                points.push(singular);
            }
            points.extend(smooth_points);
            audit_on_cubic_reduced(&points, n, torsion, include_singular)?;
            Ok((points, vec![curve.form().clone()], Some(curve)))
        }
        OnCubicKind::ConicLine => {
            if !n.is_multiple_of(3) {
                return Err(Error::InvalidInput(format!(
                    "evenly distributed points on a conic plus a line need 3 | n, got {n}"
                )));
            }
            if torsion != TorsionTarget::Generic && torsion != TorsionTarget::SumIdentity {
                return Err(Error::GenerationFailure(
                    "only generic or trivial-class torsion is constructible on reducible cubics"
                        .into(),
                ));
            }
            let conic = ConicGen::standard(field);
            let line = LineGen::random(field, rng);
            let mut forms = vec![conic.form.clone(), line.form.clone()];
            let pts = match torsion {
                TorsionTarget::SumIdentity => {
                    // Cut the configuration out by n/3 auxiliary lines, each
                    // chosen through two fresh conic points; the product of
                    // the lines is the degree-n/3 curve.
                    let mut pts: Vec<ProjPoint> = Vec::new();
                    for _ in 0..n / 3 {
                        let (a, b, aux) = loop {
                            let a = conic.random_point(rng, &pts);
                            let b = conic.random_point(rng, &[pts.clone(), vec![a.clone()]].concat());
                            if line.form.vanishes_at(&a) || line.form.vanishes_at(&b) {
                                continue;
                            }
                            let aux = LineGen::through(&a, &b)?;
                            break (a, b, aux);
                        };
                        let on_line = intersect_lines(&aux.form, &line.form)?;
                        if conic.form.vanishes_at(&on_line) || pts.contains(&on_line) {
                            return Err(Error::GenerationFailure("auxiliary line degenerate".into()));
                        }
                        pts.push(a);
                        pts.push(b);
                        pts.push(on_line);
                        forms.push(aux.form);
                    }
                    pts
                }
                _ => {
                    let mut pts: Vec<ProjPoint> = Vec::new();
                    for _ in 0..2 * n / 3 {
                        loop {
                            let p = conic.random_point(rng, &pts);
                            if !line.form.vanishes_at(&p) {
                                pts.push(p);
                                break;
                            }
                        }
                    }
                    for _ in 0..n / 3 {
                        loop {
                            let p = line.random_point(rng, &pts);
                            if !conic.form.vanishes_at(&p) {
                                pts.push(p);
                                break;
                            }
                        }
                    }
                    pts
                }
            };
            assert_distinct(&pts)?;
            audit_on_cubic_reduced(&pts, n, torsion, false)?;
            Ok((pts, forms, None))
        }
        OnCubicKind::ThreeLines => {
            if !n.is_multiple_of(3) {
                return Err(Error::InvalidInput(format!(
                    "evenly distributed points on three lines need 3 | n, got {n}"
                )));
            }
            if torsion != TorsionTarget::Generic && torsion != TorsionTarget::SumIdentity {
                return Err(Error::GenerationFailure(
                    "only generic or trivial-class torsion is constructible on reducible cubics"
                        .into(),
                ));
            }
            let lines = [
                LineGen::random(field, rng),
                LineGen::random(field, rng),
                LineGen::random(field, rng),
            ];
            let vertices = [
                intersect_lines(&lines[0].form, &lines[1].form)?,
                intersect_lines(&lines[0].form, &lines[2].form)?,
                intersect_lines(&lines[1].form, &lines[2].form)?,
            ];
            let mut forms: Vec<HomogeneousForm> =
                lines.iter().map(|l| l.form.clone()).collect();
            let pts = match torsion {
                TorsionTarget::SumIdentity => {
                    let mut pts: Vec<ProjPoint> = Vec::new();
                    for _ in 0..n / 3 {
                        let aux = LineGen::random(field, rng);
                        let hits = [
                            intersect_lines(&aux.form, &lines[0].form)?,
                            intersect_lines(&aux.form, &lines[1].form)?,
                            intersect_lines(&aux.form, &lines[2].form)?,
                        ];
                        for h in hits {
                            if vertices.contains(&h) || pts.contains(&h) {
                                return Err(Error::GenerationFailure(
                                    "auxiliary line through a vertex".into(),
                                ));
                            }
                            pts.push(h);
                        }
                        forms.push(aux.form);
                    }
                    pts
                }
                _ => {
                    let mut pts: Vec<ProjPoint> = Vec::new();
                    for line in &lines {
                        let mut added = 0;
                        while added < n / 3 {
                            let p = line.random_point(rng, &pts);
                            if !vertices.contains(&p) && !pts.contains(&p) {
                                pts.push(p);
                                added += 1;
                            }
                        }
                    }
                    pts
                }
            };
            assert_distinct(&pts)?;
            audit_on_cubic_reduced(&pts, n, torsion, false)?;
            Ok((pts, forms, None))
        }
    }
}

/// Reduced-scheme audit for on-cubic configurations: trivial-class points on
/// a multiple-of-three count are a complete intersection, everything else
/// has the generic on-cubic shape.
fn audit_on_cubic_reduced(
    points: &[ProjPoint],
    n: usize,
    torsion: TorsionTarget,
    include_singular: bool,
) -> Result<()> {
    let expect = if torsion == TorsionTarget::SumIdentity && n.is_multiple_of(3) && !include_singular {
        ci_reduced_dh(n / 3)?
    } else {
        uniform_reduced_dh(n)?
    };
    audit_reduced_dh(points, &expect)
}

/// An element of exact order k on the given curve, when the model carries
/// such torsion; errors name the missing torsion otherwise.
fn torsion_element<R: Rng + ?Sized>(
    curve: &CubicCurve,
    k: u64,
    rng: &mut R,
) -> Result<GroupElement> {
    let field = curve.field();
    match curve.kind() {
        cubicgroup::CubicKind::SmoothWeierstrass { a, b } => {
            // Only the fixed torsion curve y^2 = x^3 + 1 is used for exact-
            // torsion targets: (-1, 0) has order 2, (0, 1) has order 3.
            if !(a.is_zero() && b.is_one()) {
                return Err(Error::GenerationFailure(
                    "exact torsion targets need the curve with a = 0, b = 1".into(),
                ));
            }
            let t2 = GroupElement::Affine(field.from_i64(-1), field.zero());
            let t3 = GroupElement::Affine(field.zero(), field.one());
            match k {
                1 => cubicgroup::identity(curve),
                2 => Ok(t2),
                3 => Ok(t3),
                6 => cubicgroup::add(curve, &t2, &t3),
                _ => Err(Error::GenerationFailure(format!(
                    "no order-{k} torsion available on the model curve"
                ))),
            }
        }
        cubicgroup::CubicKind::Nodal => {
            let Field::Prime(q) = field else {
                return Err(Error::GenerationFailure(
                    "rational k* has no torsion beyond order 2".into(),
                ));
            };
            if (q - 1) % k != 0 {
                return Err(Error::GenerationFailure(format!(
                    "multiplicative group of F_{q} has no order-{k} element"
                )));
            }
            for _ in 0..64 {
                let z = rand_scalar(field, rng);
                if z.is_zero() {
                    continue;
                }
                let u = field.from_u64(crate::exactalg::numtheory::pow_mod(
                    z.residue().expect("prime field"),
                    (q - 1) / k,
                    q,
                ));
                let candidate = GroupElement::Nodal(u);
                if cubicgroup::order(curve, &candidate, k)? == Order::Finite(k) {
                    return Ok(candidate);
                }
            }
            Err(Error::GenerationFailure(format!(
                "no order-{k} element found in F_{q}*"
            )))
        }
        cubicgroup::CubicKind::Cuspidal => Err(Error::GenerationFailure(format!(
            "the additive group carries no order-{k} torsion (characteristic-sized only)"
        ))),
        cubicgroup::CubicKind::Reducible(_) => Err(Error::Unsupported(
            "no group law implemented for reducible cubics".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// Case-id dispatch for the CLI.

/// Generate any configuration by its canonical id:
/// `nine.<case>.<variant>`, `split.<a>-<b>-...`, `ci.<t>`, or
/// `oncubic.<kind>.n<n>.m<m>.<torsion>[.singular]`.
pub fn generate_by_id<R: Rng + ?Sized>(
    id: &str,
    field: Field,
    rng: &mut R,
) -> Result<GeneratedConfig> {
    let parts: Vec<&str> = id.split('.').collect();
    match parts.as_slice() {
        ["nine", case, rest @ ..] => {
            let case: usize = case
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad case in `{id}`")))?;
            let variant = if rest.is_empty() {
                default_variant(case)
            } else {
                rest.join(".")
            };
            gen_nine_case(case, &variant, field, rng)
        }
        ["split", sizes] => {
            let sizes: Vec<usize> = sizes
                .split('-')
                .map(|s| s.parse().map_err(|_| Error::InvalidInput(format!("bad sizes in `{id}`"))))
                .collect::<Result<_>>()?;
            gen_collinear_split(&sizes, field, rng)
        }
        ["ci", t] => {
            let t: usize = t
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad degree in `{id}`")))?;
            gen_ci_cubic(t, field, rng)
        }
        ["oncubic", kind, n, m, rest @ ..] => {
            let kind = OnCubicKind::parse(kind)?;
            let n: usize = n
                .strip_prefix('n')
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::InvalidInput(format!("bad n in `{id}`")))?;
            let m: u32 = m
                .strip_prefix('m')
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::InvalidInput(format!("bad m in `{id}`")))?;
            let mut torsion = TorsionTarget::Generic;
            let mut include_singular = false;
            for part in rest {
                match *part {
                    "singular" => include_singular = true,
                    other => torsion = TorsionTarget::parse(other)?,
                }
            }
            gen_on_cubic(kind, n, m, torsion, include_singular, field, rng)
        }
        _ => Err(Error::InvalidInput(format!("unknown case id `{id}`"))),
    }
}

fn default_variant(case: usize) -> String {
    nine_variants()
        .into_iter()
        .find(|(c, _)| *c == case)
        .map(|(_, v)| v.to_string())
        .unwrap_or_else(|| "collinear".to_string())
}

/// All case ids with recorded expectations, for `verify` and docs.
pub fn known_case_ids() -> Vec<String> {
    let mut ids: Vec<String> = nine_variants()
        .into_iter()
        .map(|(c, v)| nine_case_id(c, v))
        .collect();
    for t in 3..=7 {
        ids.push(format!("ci.{t}"));
    }
    ids
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: u64 = 2_147_483_647;

    #[test]
    fn collinear_case_generates_and_audits() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let cfg = gen_nine_case(1, "collinear", Field::Prime(Q), &mut rng).unwrap();
        assert_eq!(cfg.scheme.len(), 9);
        assert_eq!(cfg.expected_scale, 2);
        let line = &cfg.support[0];
        for p in cfg.scheme.points() {
            assert!(line.vanishes_at(p));
        }
    }

    #[test]
    fn split_generates_exact_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let cfg = gen_collinear_split(&[6, 3], Field::Prime(Q), &mut rng).unwrap();
        assert_eq!(cfg.scheme.len(), 9);
        let l1 = &cfg.support[0];
        let on_l1 = cfg.scheme.points().iter().filter(|p| l1.vanishes_at(p)).count();
        assert_eq!(on_l1, 6);
        assert_eq!(cfg.expected.as_deref(), Some(&[1, 2, 3, 4, 4, 4, 3, 2, 1, 1, 1, 1][..]));
    }

    #[test]
    fn ci_cubic_points_lie_on_the_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cfg = gen_ci_cubic(3, Field::Prime(Q), &mut rng).unwrap();
        assert_eq!(cfg.scheme.len(), 9);
        let cubic = &cfg.support[0];
        for p in cfg.scheme.points() {
            assert!(cubic.vanishes_at(p));
        }
    }

    #[test]
    fn on_cubic_respects_distribution() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let cfg = gen_on_cubic(
            OnCubicKind::ConicLine,
            12,
            1,
            TorsionTarget::Generic,
            false,
            Field::Prime(Q),
            &mut rng,
        )
        .unwrap();
        let conic = &cfg.support[0];
        let line = &cfg.support[1];
        let on_conic = cfg.scheme.points().iter().filter(|p| conic.vanishes_at(p)).count();
        let on_line = cfg.scheme.points().iter().filter(|p| line.vanishes_at(p)).count();
        assert_eq!((on_conic, on_line), (8, 4));
    }

    #[test]
    fn on_cubic_singular_puts_the_node_first() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cfg = gen_on_cubic(
            OnCubicKind::Nodal,
            12,
            1,
            TorsionTarget::Generic,
            true,
            Field::Prime(Q),
            &mut rng,
        )
        .unwrap();
        let node = ProjPoint::from_i64(Field::Prime(Q), 0, 0, 1).unwrap();
        assert_eq!(cfg.scheme.points()[0], node);
    }

    #[test]
    fn unrealizable_torsion_names_the_problem() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let err = gen_on_cubic(
            OnCubicKind::Cuspidal,
            9,
            1,
            TorsionTarget::SumOrder(2),
            false,
            Field::Prime(Q),
            &mut rng,
        )
        .unwrap_err();
        assert!(err.to_string().contains("torsion"));
    }

    #[test]
    fn generate_by_id_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = generate_by_id("nine.7.ci", Field::Prime(Q), &mut rng).unwrap();
        assert_eq!(cfg.case, "nine.7.ci");
        let cfg = generate_by_id("oncubic.smooth.n10.m2.generic", Field::Prime(Q), &mut rng).unwrap();
        assert_eq!(cfg.scheme.mults(), &[2; 10]);
        assert!(generate_by_id("bogus.1", Field::Prime(Q), &mut rng).is_err());
    }

    #[test]
    fn determinism_under_fixed_seed() {
        let a = {
            let mut rng = ChaCha8Rng::seed_from_u64(99);
            gen_nine_case(8, "generic", Field::Prime(Q), &mut rng).unwrap()
        };
        let b = {
            let mut rng = ChaCha8Rng::seed_from_u64(99);
            gen_nine_case(8, "generic", Field::Prime(Q), &mut rng).unwrap()
        };
        assert_eq!(a.scheme, b.scheme);
    }
}
