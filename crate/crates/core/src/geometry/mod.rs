//! Exact planar geometry over arbitrary-precision rationals.
//!
//! Every predicate here is decided by the sign of an exact rational
//! expression. Floating point never participates.

mod frame_clip;
mod point_set;
mod predicates;
mod region;

pub(crate) use frame_clip::intersect_left_halfplanes;
pub use point_set::{is_general_position, Certificate, PointSet, RelativeFrame};
pub use predicates::{
    compare_directions, in_upper_half, orientation, segments_cross_properly, side_of_line,
    DirectedLine, Halfplane, Orientation, Point2, Scalar, Segment, Side,
};
pub use region::{clip_polygon_with_halfplane, ConvexPolygon, ConvexRegion};

use num_bigint::BigInt;

/// Exact integer as a [`Scalar`].
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Exact fraction `num / den` as a [`Scalar`]. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}
