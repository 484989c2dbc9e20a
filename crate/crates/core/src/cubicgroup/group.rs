//! The group of the smooth locus: chord-tangent law with the flex at
//! infinity as identity on smooth Weierstrass cubics, k* on the nodal model,
//! k on the cuspidal model; point orders; constrained point sampling; and
//! the torsion quantity s(t, n, m).

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, Field};
use crate::geometry::ProjPoint;

use super::curve::{CubicCurve, CubicKind, CurvePoint};

/// An element of the smooth-locus group, in the representation natural to
/// the curve kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupElement {
    /// Identity of the Weierstrass group: the flex (0:1:0).
    Infinity,
    /// Affine Weierstrass point (x, y) with y^2 = x^3 + a x + b.
    Affine(ExactScalar, ExactScalar),
    /// Nodal parameter u in k*; u = 1 is the flex at infinity.
    Nodal(ExactScalar),
    /// Cuspidal parameter t in k; t = 0 is the flex at infinity.
    Cuspidal(ExactScalar),
}

/// Result of a bounded order computation; the order may genuinely be
/// infinite, so exceeding the bound is an answer, not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    ExceedsBound,
}

/// The identity element for the curve's group.
pub fn identity(curve: &CubicCurve) -> Result<GroupElement> {
    match curve.kind() {
        CubicKind::SmoothWeierstrass { .. } => Ok(GroupElement::Infinity),
        CubicKind::Nodal => Ok(GroupElement::Nodal(curve.field().one())),
        CubicKind::Cuspidal => Ok(GroupElement::Cuspidal(curve.field().zero())),
        CubicKind::Reducible(_) => Err(Error::Unsupported(
            "no group law implemented for reducible cubics".into(),
        )),
    }
}

fn check_on_curve(curve: &CubicCurve, p: &GroupElement) -> Result<()> {
    match (curve.kind(), p) {
        (CubicKind::SmoothWeierstrass { .. }, GroupElement::Infinity) => Ok(()),
        (CubicKind::SmoothWeierstrass { a, b }, GroupElement::Affine(x, y)) => {
            if x.field() != curve.field() || y.field() != curve.field() {
                return Err(Error::MixedField);
            }
            let lhs = y * y;
            let rhs = &(&(&(x * x) * x) + &(a * x)) + b;
            if lhs == rhs {
                Ok(())
            } else {
                Err(Error::PointOffCurve)
            }
        }
        (CubicKind::Nodal, GroupElement::Nodal(u)) => {
            if u.field() != curve.field() {
                return Err(Error::MixedField);
            }
            if u.is_zero() {
                Err(Error::InvalidInput("nodal parameter must lie in k*".into()))
            } else {
                Ok(())
            }
        }
        (CubicKind::Cuspidal, GroupElement::Cuspidal(t)) => {
            if t.field() != curve.field() {
                return Err(Error::MixedField);
            }
            Ok(())
        }
        _ => Err(Error::InvalidInput(
            "group element does not match the curve kind".into(),
        )),
    }
}

/// Group sum: chord-tangent with flex identity (smooth Weierstrass),
/// product in k* (nodal), sum in k (cuspidal).
pub fn add(curve: &CubicCurve, p: &GroupElement, q: &GroupElement) -> Result<GroupElement> {
    check_on_curve(curve, p)?;
    check_on_curve(curve, q)?;
    match (p, q) {
        (GroupElement::Infinity, _) => Ok(q.clone()),
        (_, GroupElement::Infinity) => Ok(p.clone()),
        (GroupElement::Affine(x1, y1), GroupElement::Affine(x2, y2)) => {
            let CubicKind::SmoothWeierstrass { a, .. } = curve.kind() else {
                unreachable!("validated above")
            };
            let field = curve.field();
            if x1 == x2 {
                if (y1 + y2) == field.zero() {
                    return Ok(GroupElement::Infinity);
                }
                // Tangent: s = (3 x1^2 + a) / (2 y1).
                let three_x_sq = &field.from_i64(3) * &(x1 * x1);
                let slope = &(&three_x_sq + a) / &(&field.from_i64(2) * y1);
                return Ok(chord_result(&slope, x1, y1, x2));
            }
            let slope = &(y2 - y1) / &(x2 - x1);
            Ok(chord_result(&slope, x1, y1, x2))
        }
        (GroupElement::Nodal(u1), GroupElement::Nodal(u2)) => Ok(GroupElement::Nodal(u1 * u2)),
        (GroupElement::Cuspidal(t1), GroupElement::Cuspidal(t2)) => {
            Ok(GroupElement::Cuspidal(t1 + t2))
        }
        _ => Err(Error::InvalidInput("mismatched group elements".into())),
    }
}

fn chord_result(
    slope: &ExactScalar,
    x1: &ExactScalar,
    y1: &ExactScalar,
    x2: &ExactScalar,
) -> GroupElement {
    let x3 = &(&(slope * slope) - x1) - x2;
    let y3 = &(slope * &(x1 - &x3)) - y1;
    GroupElement::Affine(x3, y3)
}

/// Group inverse.
pub fn neg(curve: &CubicCurve, p: &GroupElement) -> Result<GroupElement> {
    check_on_curve(curve, p)?;
    Ok(match p {
        GroupElement::Infinity => GroupElement::Infinity,
        GroupElement::Affine(x, y) => GroupElement::Affine(x.clone(), -y),
        GroupElement::Nodal(u) => GroupElement::Nodal(u.inverse().expect("u in k*")),
        GroupElement::Cuspidal(t) => GroupElement::Cuspidal(-t),
    })
}

/// k-fold sum of an element.
pub fn scalar_mul(curve: &CubicCurve, k: u64, p: &GroupElement) -> Result<GroupElement> {
    let mut acc = identity(curve)?;
    let mut base = p.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = add(curve, &acc, &base)?;
        }
        k >>= 1;
        if k > 0 {
            base = add(curve, &base, &base)?;
        }
    }
    Ok(acc)
}

/// Least k <= bound with k p = identity, or `ExceedsBound`: the order may be
/// genuinely infinite, so a bounded search is reported honestly.
pub fn order(curve: &CubicCurve, p: &GroupElement, bound: u64) -> Result<Order> {
    if bound == 0 {
        return Err(Error::InvalidInput("order bound must be >= 1".into()));
    }
    let id = identity(curve)?;
    let mut acc = p.clone();
    check_on_curve(curve, p)?;
    for k in 1..=bound {
        if acc == id {
            return Ok(Order::Finite(k));
        }
        acc = add(curve, &acc, p)?;
    }
    Ok(Order::ExceedsBound)
}

/// The projective point a group element represents.
pub fn element_to_point(curve: &CubicCurve, e: &GroupElement) -> Result<CurvePoint> {
    check_on_curve(curve, e)?;
    let field = curve.field();
    let point = match e {
        GroupElement::Infinity => ProjPoint::from_i64(field, 0, 1, 0)?,
        GroupElement::Affine(x, y) => {
            ProjPoint::new([x.clone(), y.clone(), field.one()])?
        }
        GroupElement::Nodal(u) => {
            if u.is_one() {
                ProjPoint::from_i64(field, 0, 1, 0)?
            } else {
                // s = (1+u)/(1-u), point ((s^2-1) : s(s^2-1) : 1).
                let s = &(&field.one() + u) / &(&field.one() - u);
                let x = &(&s * &s) - &field.one();
                let y = &s * &x;
                ProjPoint::new([x, y, field.one()])?
            }
        }
        GroupElement::Cuspidal(t) => {
            if t.is_zero() {
                ProjPoint::from_i64(field, 0, 1, 0)?
            } else {
                // (t : 1 : t^3).
                let t3 = &(t * t) * t;
                ProjPoint::new([t.clone(), field.one(), t3])?
            }
        }
    };
    curve.curve_point(point)
}

/// The group element of a smooth point of the curve.
pub fn point_to_element(curve: &CubicCurve, p: &ProjPoint) -> Result<GroupElement> {
    if !curve.contains(p) {
        return Err(Error::PointOffCurve);
    }
    if !curve.is_smooth_point(p) {
        return Err(Error::InvalidInput(
            "singular point carries no group element".into(),
        ));
    }
    let field = curve.field();
    let [x, y, z] = p.coords();
    match curve.kind() {
        CubicKind::SmoothWeierstrass { .. } => {
            if z.is_zero() {
                Ok(GroupElement::Infinity)
            } else {
                // Coordinates are normalized with z = 1.
                Ok(GroupElement::Affine(x.clone(), y.clone()))
            }
        }
        CubicKind::Nodal => {
            if z.is_zero() {
                return Ok(GroupElement::Nodal(field.one()));
            }
            // Smooth affine points have x != 0; s = y/x, u = (s-1)/(s+1).
            let s = y / x;
            let u = &(&s - &field.one()) / &(&s + &field.one());
            Ok(GroupElement::Nodal(u))
        }
        CubicKind::Cuspidal => {
            if z.is_zero() {
                return Ok(GroupElement::Cuspidal(field.zero()));
            }
            // Smooth affine points have y != 0; t = x/y.
            Ok(GroupElement::Cuspidal(x / y))
        }
        CubicKind::Reducible(_) => Err(Error::Unsupported(
            "no group law implemented for reducible cubics".into(),
        )),
    }
}

/// A random smooth-locus element. Over the rationals, Weierstrass sampling
/// is unsupported (finding rational points is a descent problem); the
/// parametrized singular models sample over any field.
pub fn sample_element<R: Rng + ?Sized>(curve: &CubicCurve, rng: &mut R) -> Result<GroupElement> {
    let field = curve.field();
    match curve.kind() {
        CubicKind::SmoothWeierstrass { a, b } => {
            let Field::Prime(q) = field else {
                return Err(Error::Unsupported(
                    "sampling Weierstrass points requires a prime field".into(),
                ));
            };
            for _ in 0..512 {
                let x = field.from_u64(rng.gen_range(0..q));
                let rhs = &(&(&(&x * &x) * &x) + &(a * &x)) + b;
                let r = rhs.residue().expect("prime field");
                if let Some(root) = crate::exactalg::numtheory::sqrt_mod(r, q) {
                    let y = if rng.gen_bool(0.5) {
                        field.from_u64(root)
                    } else {
                        -field.from_u64(root)
                    };
                    return Ok(GroupElement::Affine(x, y));
                }
            }
            Err(Error::GenerationFailure(
                "no Weierstrass point found after 512 draws".into(),
            ))
        }
        CubicKind::Nodal => Ok(GroupElement::Nodal(random_nonzero(field, rng))),
        CubicKind::Cuspidal => Ok(GroupElement::Cuspidal(random_scalar(field, rng))),
        CubicKind::Reducible(_) => Err(Error::Unsupported(
            "no group law implemented for reducible cubics".into(),
        )),
    }
}

fn random_scalar<R: Rng + ?Sized>(field: Field, rng: &mut R) -> ExactScalar {
    match field {
        Field::Prime(q) => field.from_u64(rng.gen_range(0..q)),
        // Small random integers are generic enough over the rationals.
        Field::Rationals => field.from_i64(rng.gen_range(-9999..=9999)),
    }
}

fn random_nonzero<R: Rng + ?Sized>(field: Field, rng: &mut R) -> ExactScalar {
    loop {
        let x = random_scalar(field, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// n distinct smooth points whose group sum equals `target`: the last point
/// is solved as target minus the sum of n-1 random points, retrying on
/// collisions.
pub fn points_with_sum<R: Rng + ?Sized>(
    curve: &CubicCurve,
    n: usize,
    target: &GroupElement,
    rng: &mut R,
) -> Result<Vec<CurvePoint>> {
    if n == 0 {
        return Err(Error::InvalidInput("need n >= 1 points".into()));
    }
    check_on_curve(curve, target)?;
    'attempt: for _ in 0..64 {
        let mut elements: Vec<GroupElement> = Vec::with_capacity(n);
        let mut running = identity(curve)?;
        for _ in 0..n - 1 {
            let mut tries = 0;
            loop {
                let e = sample_element(curve, rng)?;
                if !elements.contains(&e) {
                    running = add(curve, &running, &e)?;
                    elements.push(e);
                    break;
                }
                tries += 1;
                if tries > 64 {
                    continue 'attempt;
                }
            }
        }
        let last = add(curve, target, &neg(curve, &running)?)?;
        if elements.contains(&last) {
            continue 'attempt;
        }
        elements.push(last);
        return elements
            .iter()
            .map(|e| element_to_point(curve, e))
            .collect();
    }
    Err(Error::GenerationFailure(format!(
        "could not realize {n} distinct points with the requested sum"
    )))
}

/// Fold the group sum of a point list.
pub fn sum_of_points(curve: &CubicCurve, pts: &[CurvePoint]) -> Result<GroupElement> {
    let mut acc = identity(curve)?;
    for p in pts {
        let e = point_to_element(curve, &p.point)?;
        acc = add(curve, &acc, &e)?;
    }
    Ok(acc)
}

/// The order (bounded search) of the class of 3L - p1 - ... - pn, i.e. of
/// the inverse of the group sum of the points; this is the lambda of the
/// torsion bookkeeping.
pub fn lambda_of_points(curve: &CubicCurve, pts: &[CurvePoint], bound: u64) -> Result<Order> {
    let sigma = sum_of_points(curve, pts)?;
    order(curve, &sigma, bound)
}

/// The torsion correction s(t, n, m) for n >= 9 evenly distributed smooth
/// points, defined for 3t >= nm:
/// - 0 when 3t > nm;
/// - floor(m / lambda) when n = 9 and t = 3m, with lambda the order of the
///   class 3L - p1 - ... - p9;
/// - for n > 9 and 3t = nm, 1 exactly when m times the sum of the points is
///   the identity.
pub fn s_value(curve: &CubicCurve, pts: &[CurvePoint], t: usize, m: u32) -> Result<u64> {
    let n = pts.len();
    if n < 9 {
        return Err(Error::InvalidInput(format!(
            "s(t, n, m) needs n >= 9 points, got {n}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidInput("multiplicity m must be >= 1".into()));
    }
    let three_t = 3 * t as u64;
    let nm = n as u64 * m as u64;
    if three_t < nm {
        return Err(Error::OutOfDomain(format!(
            "s({t}, {n}, {m}) undefined: 3t = {three_t} < nm = {nm}"
        )));
    }
    if three_t > nm {
        return Ok(0);
    }
    let lambda = lambda_of_points(curve, pts, m as u64)?;
    Ok(s_from_lambda_at_boundary(n, m, lambda))
}

/// The boundary value of s once lambda is known.
pub fn s_from_lambda_at_boundary(n: usize, m: u32, lambda: Order) -> u64 {
    match lambda {
        Order::ExceedsBound => 0,
        Order::Finite(l) => {
            if n == 9 {
                (m as u64) / l
            } else if (m as u64).is_multiple_of(l) {
                1
            } else {
                0
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: u64 = 2_147_483_647;

    fn two_torsion_curve() -> CubicCurve {
        // y^2 = x^3 - x has full rational 2-torsion.
        let f = Field::Rationals;
        CubicCurve::weierstrass(f, f.from_i64(-1), f.from_i64(0)).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let c = two_torsion_curve();
        let f = Field::Rationals;
        let p = GroupElement::Affine(f.from_i64(0), f.from_i64(0));
        let id = identity(&c).unwrap();
        assert_eq!(add(&c, &p, &id).unwrap(), p);
    }

    #[test]
    fn origin_is_two_torsion_on_x_cubed_minus_x() {
        let c = two_torsion_curve();
        let f = Field::Rationals;
        // (0:0:1) on y^2 z = x^3 - x z^2; the tangent there is vertical,
        // so doubling lands on the flex.
        let p = GroupElement::Affine(f.from_i64(0), f.from_i64(0));
        assert_eq!(add(&c, &p, &p).unwrap(), GroupElement::Infinity);
        assert_eq!(order(&c, &p, 10).unwrap(), Order::Finite(2));
    }

    #[test]
    fn nodal_group_is_multiplicative() {
        let c = CubicCurve::nodal(Field::Rationals).unwrap();
        let f = Field::Rationals;
        let two = GroupElement::Nodal(f.from_i64(2));
        let three = GroupElement::Nodal(f.from_i64(3));
        assert_eq!(
            add(&c, &two, &three).unwrap(),
            GroupElement::Nodal(f.from_i64(6))
        );
        // -1 is the only 2-torsion element of k*.
        let minus_one = GroupElement::Nodal(f.from_i64(-1));
        assert_eq!(order(&c, &minus_one, 10).unwrap(), Order::Finite(2));
        assert_eq!(order(&c, &two, 100).unwrap(), Order::ExceedsBound);
    }

    #[test]
    fn cuspidal_group_is_torsion_free_over_q() {
        let c = CubicCurve::cuspidal(Field::Rationals).unwrap();
        let f = Field::Rationals;
        let t = GroupElement::Cuspidal(f.from_i64(7));
        assert_eq!(order(&c, &t, 100).unwrap(), Order::ExceedsBound);
        assert_eq!(
            order(&c, &GroupElement::Cuspidal(f.zero()), 5).unwrap(),
            Order::Finite(1)
        );
    }

    /// Three smooth points are collinear exactly when the group law says
    /// their sum is the identity: this pins the parametrizations of the
    /// singular models.
    #[test]
    fn collinearity_matches_group_identity_nodal_and_cuspidal() {
        use crate::geometry::HomogeneousForm;
        let mut rng = rand::SeedableRng::seed_from_u64(11u64);
        let rng: &mut rand_chacha::ChaCha8Rng = &mut rng;
        for make in [CubicCurve::nodal, CubicCurve::cuspidal] {
            let c = make(Field::Prime(Q)).unwrap();
            for _ in 0..20 {
                let e1 = sample_element(&c, rng).unwrap();
                let e2 = sample_element(&c, rng).unwrap();
                if e1 == e2 {
                    continue;
                }
                let e3 = neg(&c, &add(&c, &e1, &e2).unwrap()).unwrap();
                if e3 == e1 || e3 == e2 {
                    continue;
                }
                let p1 = element_to_point(&c, &e1).unwrap().point;
                let p2 = element_to_point(&c, &e2).unwrap().point;
                let p3 = element_to_point(&c, &e3).unwrap().point;
                // e1 + e2 + e3 = 0, so the three points must be collinear.
                let line = HomogeneousForm::line_through(&p1, &p2).unwrap();
                assert!(line.vanishes_at(&p3), "group sum zero but not collinear");
            }
        }
    }

    #[test]
    fn weierstrass_collinearity_matches_group_law() {
        use crate::geometry::HomogeneousForm;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let f = Field::Prime(Q);
        let c = CubicCurve::weierstrass(f, f.from_i64(2), f.from_i64(3)).unwrap();
        for _ in 0..20 {
            let e1 = sample_element(&c, &mut rng).unwrap();
            let e2 = sample_element(&c, &mut rng).unwrap();
            if e1 == e2 {
                continue;
            }
            let e3 = neg(&c, &add(&c, &e1, &e2).unwrap()).unwrap();
            if e3 == e1 || e3 == e2 || e3 == GroupElement::Infinity {
                continue;
            }
            let p1 = element_to_point(&c, &e1).unwrap().point;
            let p2 = element_to_point(&c, &e2).unwrap().point;
            let p3 = element_to_point(&c, &e3).unwrap().point;
            let line = HomogeneousForm::line_through(&p1, &p2).unwrap();
            assert!(line.vanishes_at(&p3));
        }
    }

    #[test]
    fn points_with_sum_postcondition() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let f = Field::Prime(Q);
        let c = CubicCurve::weierstrass(f, f.from_i64(0), f.from_i64(1)).unwrap();
        let id = identity(&c).unwrap();
        let pts = points_with_sum(&c, 9, &id, &mut rng).unwrap();
        assert_eq!(pts.len(), 9);
        assert_eq!(sum_of_points(&c, &pts).unwrap(), id);
        // Distinctness.
        for i in 0..9 {
            for j in i + 1..9 {
                assert_ne!(pts[i].point, pts[j].point);
            }
        }
        // Sum equal to a 2-torsion target.
        let t2 = GroupElement::Affine(f.from_i64(-1), f.from_i64(0));
        let pts = points_with_sum(&c, 9, &t2, &mut rng).unwrap();
        let sigma = sum_of_points(&c, &pts).unwrap();
        assert_eq!(order(&c, &sigma, 4).unwrap(), Order::Finite(2));
    }

    #[test]
    fn s_value_cases() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let f = Field::Prime(Q);
        let c = CubicCurve::weierstrass(f, f.from_i64(0), f.from_i64(1)).unwrap();
        let id = identity(&c).unwrap();
        // n = 9, sum identity: lambda = 1, s(3m, 9, m) = m.
        let pts = points_with_sum(&c, 9, &id, &mut rng).unwrap();
        assert_eq!(s_value(&c, &pts, 6, 2).unwrap(), 2);
        // Above the boundary s vanishes.
        assert_eq!(s_value(&c, &pts, 7, 2).unwrap(), 0);
        // Below the boundary s is undefined.
        assert!(matches!(
            s_value(&c, &pts, 5, 2),
            Err(Error::OutOfDomain(_))
        ));
        // n = 12 with sum of order 2: s = 1 iff m even.
        let t2 = GroupElement::Affine(f.from_i64(-1), f.from_i64(0));
        let pts = points_with_sum(&c, 12, &t2, &mut rng).unwrap();
        assert_eq!(s_value(&c, &pts, 8, 2).unwrap(), 1);
        assert_eq!(s_value(&c, &pts, 4, 1).unwrap(), 0);
    }

    #[test]
    fn group_axioms_on_random_triples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let f = Field::Prime(Q);
        let curves = vec![
            CubicCurve::weierstrass(f, f.from_i64(2), f.from_i64(3)).unwrap(),
            CubicCurve::nodal(f).unwrap(),
            CubicCurve::cuspidal(f).unwrap(),
        ];
        for c in &curves {
            for _ in 0..10 {
                let p = sample_element(c, &mut rng).unwrap();
                let q = sample_element(c, &mut rng).unwrap();
                let r = sample_element(c, &mut rng).unwrap();
                let pq_r = add(c, &add(c, &p, &q).unwrap(), &r).unwrap();
                let p_qr = add(c, &p, &add(c, &q, &r).unwrap()).unwrap();
                assert_eq!(pq_r, p_qr, "associativity");
                assert_eq!(
                    add(c, &p, &q).unwrap(),
                    add(c, &q, &p).unwrap(),
                    "commutativity"
                );
                let inv = neg(c, &p).unwrap();
                assert_eq!(add(c, &p, &inv).unwrap(), identity(c).unwrap(), "inverses");
            }
        }
    }

    #[test]
    fn element_point_roundtrip() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let f = Field::Prime(Q);
        let curves = vec![
            CubicCurve::weierstrass(f, f.from_i64(5), f.from_i64(7)).unwrap(),
            CubicCurve::nodal(f).unwrap(),
            CubicCurve::cuspidal(f).unwrap(),
        ];
        for c in &curves {
            for _ in 0..10 {
                let e = sample_element(c, &mut rng).unwrap();
                let cp = element_to_point(c, &e).unwrap();
                assert!(cp.smooth);
                assert_eq!(point_to_element(c, &cp.point).unwrap(), e);
            }
            let id = identity(c).unwrap();
            let flex = element_to_point(c, &id).unwrap();
            assert_eq!(point_to_element(c, &flex.point).unwrap(), id);
        }
    }

    #[test]
    fn off_curve_point_rejected() {
        let f = Field::Prime(Q);
        let c = CubicCurve::weierstrass(f, f.from_i64(0), f.from_i64(1)).unwrap();
        let bogus = GroupElement::Affine(f.from_i64(2), f.from_i64(2));
        assert!(matches!(
            add(&c, &bogus, &GroupElement::Infinity),
            Err(Error::PointOffCurve)
        ));
    }
}
