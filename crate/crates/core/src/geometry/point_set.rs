use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::predicates::{
    collinear_overlap, crossing_from_orientations, Orientation, Point2, Scalar, Segment,
};
use crate::error::{Error, Violation};

/// Ordered list of exact points.
///
/// Alongside the rational coordinates the set keeps an integer copy scaled
/// by the common denominator, so predicates on input points (the O(n^3)
/// enumerations) run on integers. The scaling is a positive constant and
/// does not change any orientation sign.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point2>,
    scale: BigInt,
    scaled: Vec<[BigInt; 2]>,
    small: Option<Vec<[i64; 2]>>,
}

/// Coordinates below this magnitude make every 2x2 determinant of
/// differences fit in an `i128`.
const SMALL_LIMIT: i64 = 1 << 61;

impl PointSet {
    pub fn new(points: Vec<Point2>) -> Self {
        let lcm = points.iter().fold(BigInt::one(), |acc, p| {
            acc.lcm(p.x.denom()).lcm(p.y.denom())
        });
        let scale = |v: &Scalar| v.numer() * (&lcm / v.denom());
        let scaled: Vec<[BigInt; 2]> = points.iter().map(|p| [scale(&p.x), scale(&p.y)]).collect();
        let small = scaled
            .iter()
            .map(|[x, y]| {
                let x = x.to_i64().filter(|v| v.abs() < SMALL_LIMIT)?;
                let y = y.to_i64().filter(|v| v.abs() < SMALL_LIMIT)?;
                Some([x, y])
            })
            .collect();
        Self {
            points,
            scale: lcm,
            scaled,
            small,
        }
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| Point2::from_ints(x, y))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point2 {
        &self.points[i]
    }

    /// Index of the first point equal to `q`.
    pub fn index_of(&self, q: &Point2) -> Option<usize> {
        self.points.iter().position(|p| p == q)
    }

    /// Orientation of three input points, by index.
    pub fn orientation(&self, a: usize, b: usize, c: usize) -> Orientation {
        if let Some(s) = &self.small {
            let (a, b, c) = (s[a], s[b], s[c]);
            let det = (b[0] - a[0]) as i128 * (c[1] - a[1]) as i128
                - (b[1] - a[1]) as i128 * (c[0] - a[0]) as i128;
            return Orientation::from_sign(&det);
        }
        let (a, b, c) = (&self.scaled[a], &self.scaled[b], &self.scaled[c]);
        let det = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
        Orientation::from_sign(&det)
    }

    /// Same decision as [`super::segments_cross_properly`] for the segments
    /// `a-b` and `c-d` between input points.
    pub fn segments_cross(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let o = [
            self.orientation(a, b, c),
            self.orientation(a, b, d),
            self.orientation(c, d, a),
            self.orientation(c, d, b),
        ];
        crossing_from_orientations(o).unwrap_or_else(|| {
            match (self.segment(a, b), self.segment(c, d)) {
                (Some(s), Some(t)) => collinear_overlap(&s, &t),
                _ => false,
            }
        })
    }

    pub fn segment(&self, a: usize, b: usize) -> Option<Segment> {
        Segment::new(self.points[a].clone(), self.points[b].clone())
    }

    /// Lower-left and upper-right corners of the axis-aligned bounding box.
    pub fn bounding_box(&self) -> Option<(Point2, Point2)> {
        let first = self.points.first()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for p in &self.points[1..] {
            if p.x < lo.x {
                lo.x = p.x.clone();
            }
            if p.y < lo.y {
                lo.y = p.y.clone();
            }
            if p.x > hi.x {
                hi.x = p.x.clone();
            }
            if p.y > hi.y {
                hi.y = p.y.clone();
            }
        }
        Some((lo, hi))
    }

    /// Common denominator of all coordinates.
    pub(crate) fn scale(&self) -> &BigInt {
        &self.scale
    }

    /// Coordinates of point `i` multiplied by [`Self::scale`].
    pub(crate) fn scaled(&self, i: usize) -> &[BigInt; 2] {
        &self.scaled[i]
    }

    /// The input points as integer vectors seen from `origin`.
    pub fn relative_to(&self, origin: &Point2) -> RelativeFrame {
        let qx = &origin.x * Scalar::from_integer(self.scale.clone());
        let qy = &origin.y * Scalar::from_integer(self.scale.clone());
        let w = qx.denom().lcm(qy.denom());
        let ox = qx.numer() * (&w / qx.denom());
        let oy = qy.numer() * (&w / qy.denom());
        let vectors = self
            .scaled
            .iter()
            .map(|[x, y]| (&w * x - &ox, &w * y - &oy))
            .collect();
        RelativeFrame { vectors }
    }

    /// `Err` unless the set is in general position.
    pub fn require_general_position(&self) -> Result<Certificate, Error> {
        is_general_position(self).map_err(Error::NotGeneralPosition)
    }
}

/// Vectors `s * (p_i - origin)` for one positive integer `s`, so every
/// orientation test around the origin is a sign of an integer cross product.
#[derive(Clone, Debug)]
pub struct RelativeFrame {
    vectors: Vec<(BigInt, BigInt)>,
}

impl RelativeFrame {
    pub fn vector(&self, i: usize) -> &(BigInt, BigInt) {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[(BigInt, BigInt)] {
        &self.vectors
    }

    pub fn is_origin(&self, i: usize) -> bool {
        self.vectors[i].0.is_zero() && self.vectors[i].1.is_zero()
    }

    /// Equals `orientation(origin, p_i, p_j)`.
    pub fn orientation(&self, i: usize, j: usize) -> Orientation {
        let (u, v) = (&self.vectors[i], &self.vectors[j]);
        Orientation::from_sign(&(&u.0 * &v.1 - &u.1 * &v.0))
    }
}

/// Proof token that a point set passed the general-position check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
}

/// Distinctness first, then the first collinear triple `i < j < k` in
/// lexicographic index order.
pub fn is_general_position(points: &PointSet) -> Result<Certificate, Violation> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points.scaled[i] == points.scaled[j] {
                return Err(Violation::Duplicate(i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if points.orientation(i, j, k) == Orientation::Collinear {
                    return Err(Violation::Collinear(i, j, k));
                }
            }
        }
    }
    Ok(Certificate { n })
}
