use num_traits::{Signed, Zero};

use super::predicates::{orientation, Halfplane, Orientation, Point2, Scalar, Segment};

/// Convex polygon with at least three vertices in canonical form: CCW order,
/// lexicographically smallest vertex first, no repeated or collinear
/// consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Directed edges `(v[i], v[i+1])`, wrapping around.
    pub fn edges(&self) -> impl Iterator<Item = (&Point2, &Point2)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Twice the signed area (shoelace), exact.
    pub fn doubled_area(&self) -> Scalar {
        doubled_signed_area(&self.vertices)
    }

    /// Average of the vertices; strictly interior for a canonical polygon.
    pub fn vertex_average(&self) -> Point2 {
        let n = super::int(self.vertices.len() as i64);
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((Scalar::zero(), Scalar::zero()), |(sx, sy), v| {
                (sx + &v.x, sy + &v.y)
            });
        Point2::new(sx / &n, sy / &n)
    }
}

/// A closed convex set of the plane that may have lost dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConvexRegion {
    Polygon(ConvexPolygon),
    Segment(Segment),
    Point(Point2),
    Empty,
}

impl ConvexRegion {
    /// Builds the canonical region spanned by a convex vertex cycle.
    ///
    /// The cycle may contain repeats and collinear runs, and may be given
    /// clockwise; it is normalized. A cycle whose points are all collinear
    /// becomes a segment between its extreme points.
    pub fn from_vertices(points: Vec<Point2>) -> Self {
        canonicalize(points)
    }

    /// Axis-aligned rectangle spanned by two corners.
    pub fn rectangle(lo: &Point2, hi: &Point2) -> Self {
        canonicalize(vec![
            lo.clone(),
            Point2::new(hi.x.clone(), lo.y.clone()),
            hi.clone(),
            Point2::new(lo.x.clone(), hi.y.clone()),
        ])
    }

    /// Affine dimension, or `None` for the empty set.
    pub fn dimension(&self) -> Option<u8> {
        match self {
            ConvexRegion::Polygon(_) => Some(2),
            ConvexRegion::Segment(_) => Some(1),
            ConvexRegion::Point(_) => Some(0),
            ConvexRegion::Empty => None,
        }
    }

    /// Extreme points in canonical order.
    pub fn vertices(&self) -> Vec<Point2> {
        match self {
            ConvexRegion::Polygon(p) => p.vertices.clone(),
            ConvexRegion::Segment(s) => vec![s.a().clone(), s.b().clone()],
            ConvexRegion::Point(p) => vec![p.clone()],
            ConvexRegion::Empty => Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexRegion::Empty)
    }

    /// Membership test, boundary included.
    pub fn contains(&self, q: &Point2) -> bool {
        match self {
            ConvexRegion::Polygon(poly) => poly
                .edges()
                .all(|(a, b)| orientation(a, b, q) != Orientation::Cw),
            ConvexRegion::Segment(s) => {
                orientation(s.a(), s.b(), q) == Orientation::Collinear
                    && between(&s.a().x, &q.x, &s.b().x)
                    && between(&s.a().y, &q.y, &s.b().y)
            }
            ConvexRegion::Point(p) => p == q,
            ConvexRegion::Empty => false,
        }
    }
}

fn between(a: &Scalar, q: &Scalar, b: &Scalar) -> bool {
    (a <= q && q <= b) || (b <= q && q <= a)
}

fn doubled_signed_area(v: &[Point2]) -> Scalar {
    let n = v.len();
    (0..n).fold(Scalar::zero(), |acc, i| {
        let (a, b) = (&v[i], &v[(i + 1) % n]);
        acc + (&a.x * &b.y - &b.x * &a.y)
    })
}

fn canonicalize(mut pts: Vec<Point2>) -> ConvexRegion {
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    match pts.len() {
        0 => return ConvexRegion::Empty,
        1 => return ConvexRegion::Point(pts.pop().unwrap()),
        _ => {}
    }

    let lo = pts.iter().min().unwrap().clone();
    let hi = pts.iter().max().unwrap().clone();
    if pts
        .iter()
        .all(|p| orientation(&lo, &hi, p) == Orientation::Collinear)
    {
        return ConvexRegion::Segment(Segment::new(lo, hi).expect("distinct extremes"));
    }

    if doubled_signed_area(&pts).is_negative() {
        pts.reverse();
    }
    // Drop vertices that do not make a strict left turn until none remain.
    loop {
        let n = pts.len();
        let keep: Vec<bool> = (0..n)
            .map(|i| {
                orientation(&pts[(i + n - 1) % n], &pts[i], &pts[(i + 1) % n]) == Orientation::Ccw
            })
            .collect();
        if keep.iter().all(|&k| k) {
            break;
        }
        let mut it = keep.iter();
        pts.retain(|_| *it.next().unwrap());
    }
    let first = pts
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .unwrap();
    pts.rotate_left(first);
    ConvexRegion::Polygon(ConvexPolygon { vertices: pts })
}

/// Intersection of a convex region with a closed halfplane.
///
/// One Sutherland-Hodgman pass with exact side tests; new vertices are the
/// exact intersections of region edges with the boundary line.
pub fn clip_polygon_with_halfplane(region: &ConvexRegion, h: &Halfplane) -> ConvexRegion {
    let input = match region {
        ConvexRegion::Empty => return ConvexRegion::Empty,
        ConvexRegion::Point(p) => {
            return if h.contains(p) {
                region.clone()
            } else {
                ConvexRegion::Empty
            }
        }
        ConvexRegion::Segment(s) => vec![s.a().clone(), s.b().clone()],
        ConvexRegion::Polygon(p) => p.vertices.clone(),
    };

    let values: Vec<Scalar> = input.iter().map(|v| h.evaluate(v)).collect();
    if values.iter().all(|v| !v.is_negative()) {
        return region.clone();
    }
    if values.iter().all(|v| v.is_negative()) {
        return ConvexRegion::Empty;
    }

    let n = input.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let j = (i + 1) % n;
        let (u, v) = (&input[i], &input[j]);
        let (fu, fv) = (&values[i], &values[j]);
        if !fu.is_negative() {
            out.push(u.clone());
        }
        if (fu.is_positive() && fv.is_negative()) || (fu.is_negative() && fv.is_positive()) {
            let t = fu / (fu - fv);
            out.push(Point2::new(
                &u.x + &t * (&v.x - &u.x),
                &u.y + &t * (&v.y - &u.y),
            ));
        }
    }
    canonicalize(out)
}
