//! Group law on the smooth locus of plane cubics, point orders, and the
//! torsion quantity s(t, n, m) that corrects Hilbert functions in boundary
//! degrees.

mod curve;
mod group;

pub use curve::{CubicCurve, CubicKind, CurvePoint};
pub use group::{
    add, identity, lambda_of_points, neg, order, point_to_element, points_with_sum,
    s_from_lambda_at_boundary, s_value, sample_element, scalar_mul, sum_of_points,
    element_to_point, GroupElement, Order,
};
