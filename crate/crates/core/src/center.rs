//! The center of a planar point set: the set of points `c` such that every
//! closed halfplane containing `c` holds at least `ceil(n/3)` input points.
//!
//! The center is computed as the intersection of the closed halfplanes
//! bounded by lines through two input points whose complementary open
//! halfplane holds at most `alpha - 1` points.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{
    int, intersect_left_halfplanes, ConvexRegion, DirectedLine, Halfplane, Orientation, Point2,
    PointSet, Scalar,
};
use crate::rng::Lcg64;

/// Depth threshold `ceil(n / 3)`.
pub fn depth_threshold(n: usize) -> usize {
    n.div_ceil(3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterRegion {
    pub shape: ConvexRegion,
    pub alpha: usize,
    pub halfplanes: Vec<Halfplane>,
}

impl CenterRegion {
    pub fn dimension(&self) -> Option<u8> {
        self.shape.dimension()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Centerpoint {
    pub point: Point2,
    pub in_p: bool,
}

fn require_input(points: &PointSet) -> Result<()> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints {
            min: 3,
            found: points.len(),
        });
    }
    points.require_general_position()?;
    Ok(())
}

/// Halfplanes whose intersection is the center, ordered by `(a, b)` index
/// pair. The halfplane left of `a -> b` qualifies iff at most `alpha - 1`
/// points lie strictly to the right.
pub fn enumerate_center_halfplanes(points: &PointSet) -> Result<Vec<Halfplane>> {
    Ok(center_pairs(points)?
        .into_iter()
        .map(|(a, b)| {
            let line = DirectedLine::new(points.point(a).clone(), points.point(b).clone())
                .expect("distinct points");
            Halfplane::left_of(line)
        })
        .collect())
}

/// Index pairs `(a, b)` of the halfplanes returned by
/// [`enumerate_center_halfplanes`], in the same order.
fn center_pairs(points: &PointSet) -> Result<Vec<(usize, usize)>> {
    require_input(points)?;
    let n = points.len();
    let alpha = depth_threshold(n);
    // right[a * n + b] = points strictly right of a -> b. General position
    // makes the reverse count n - 2 minus that.
    let mut right = vec![0usize; n * n];
    for a in 0..n {
        for b in a + 1..n {
            let r = (0..n)
                .filter(|&c| c != a && c != b && points.orientation(a, b, c) == Orientation::Cw)
                .count();
            right[a * n + b] = r;
            right[b * n + a] = n - 2 - r;
        }
    }
    let out = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && right[a * n + b] < alpha)
        .collect();
    Ok(out)
}

/// Exact center of a general-position point set with `n >= 3`.
pub fn compute_center_region(points: &PointSet) -> Result<CenterRegion> {
    let pairs = center_pairs(points)?;
    let shape = intersect_left_halfplanes(points, &pairs);
    let halfplanes = pairs
        .into_iter()
        .map(|(a, b)| {
            let line = DirectedLine::new(points.point(a).clone(), points.point(b).clone())
                .expect("distinct points");
            Halfplane::left_of(line)
        })
        .collect();
    if shape.is_empty() {
        // Centerpoints always exist; an empty result is a bug.
        return Err(Error::EmptyCenter);
    }
    Ok(CenterRegion {
        shape,
        alpha: depth_threshold(points.len()),
        halfplanes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub dimension: u8,
    pub n: usize,
    /// For a single-point center: whether that point is an input point.
    pub point_in_p: Option<bool>,
    pub n_is_3k_plus_1: bool,
    /// Whether the two-or-zero dimension rule was enforced (general
    /// position and `n >= 6`).
    pub dimension_rule_checked: bool,
}

/// Dimension of the center, with the hard check that general-position sets
/// of six or more points have a 2-dimensional center or a single input
/// point as center (and then `n = 3k + 1`).
pub fn classify_dimension(region: &CenterRegion, points: &PointSet) -> Result<DimensionReport> {
    let n = points.len();
    let dimension = region.dimension().ok_or(Error::EmptyCenter)?;
    let point_in_p = match &region.shape {
        ConvexRegion::Point(p) => Some(points.index_of(p).is_some()),
        _ => None,
    };
    let report = DimensionReport {
        dimension,
        n,
        point_in_p,
        n_is_3k_plus_1: n % 3 == 1,
        dimension_rule_checked: n >= 6 && points.require_general_position().is_ok(),
    };
    if report.dimension_rule_checked {
        match dimension {
            2 => {}
            0 if point_in_p == Some(true) && report.n_is_3k_plus_1 => {}
            0 => {
                return Err(Error::DimensionViolation(format!(
                    "single-point center with point in P = {}, n = {n} (n mod 3 = {})",
                    point_in_p == Some(true),
                    n % 3
                )))
            }
            d => {
                return Err(Error::DimensionViolation(format!(
                    "center of {n} points in general position has dimension {d}"
                )))
            }
        }
    }
    Ok(report)
}

/// Give up after this many seeded retries. Pair-lines have measure zero, so
/// hitting the cap means a broken region.
pub const MAX_CENTERPOINT_ATTEMPTS: usize = 10_000;

/// Whether `c` lies on a line through two input points.
pub fn on_pair_line(c: &Point2, points: &PointSet) -> bool {
    let frame = points.relative_to(c);
    let n = points.len();
    (0..n).any(|i| (i + 1..n).any(|j| frame.orientation(i, j) == Orientation::Collinear))
}

/// A centerpoint usable for the radial construction.
///
/// A single-point center that is an input point is returned as is. For a
/// 2-dimensional center the vertex average is tried first; if it lies on a
/// line through two input points, seeded positive convex combinations of
/// the vertices are tried until one is clean.
pub fn select_centerpoint(
    region: &CenterRegion,
    points: &PointSet,
    seed: u64,
) -> Result<Centerpoint> {
    let poly = match &region.shape {
        ConvexRegion::Polygon(poly) => poly,
        ConvexRegion::Point(p) => {
            return match points.index_of(p) {
                Some(_) => Ok(Centerpoint {
                    point: p.clone(),
                    in_p: true,
                }),
                None => Err(Error::CenterpointUnavailable { dimension: 0 }),
            }
        }
        ConvexRegion::Segment(_) => return Err(Error::CenterpointUnavailable { dimension: 1 }),
        ConvexRegion::Empty => return Err(Error::EmptyCenter),
    };

    let candidate = poly.vertex_average();
    if !on_pair_line(&candidate, points) {
        return Ok(Centerpoint {
            point: candidate,
            in_p: false,
        });
    }
    let mut rng = Lcg64::new(seed);
    for _ in 0..MAX_CENTERPOINT_ATTEMPTS {
        let weights: Vec<Scalar> = poly
            .vertices()
            .iter()
            .map(|_| int(1 + rng.below(1024) as i64))
            .collect();
        let total = weights.iter().fold(Scalar::zero(), |acc, w| acc + w);
        let (sx, sy) = poly
            .vertices()
            .iter()
            .zip(&weights)
            .fold((Scalar::zero(), Scalar::zero()), |(sx, sy), (v, w)| {
                (sx + &v.x * w, sy + &v.y * w)
            });
        let candidate = Point2::new(sx / &total, sy / &total);
        if !on_pair_line(&candidate, points) {
            return Ok(Centerpoint {
                point: candidate,
                in_p: false,
            });
        }
    }
    Err(Error::CenterpointSearchExhausted(MAX_CENTERPOINT_ATTEMPTS))
}
