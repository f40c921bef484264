//! Halfplane intersection in the integer frame of a [`PointSet`].
//!
//! Lines through input points have integer coefficients once coordinates
//! are scaled by the common denominator. The polygon is kept as a cycle of
//! such lines and every vertex is the homogeneous intersection of two
//! consecutive lines, so coordinate sizes stay bounded no matter how many
//! clips are applied. Results match [`clip_polygon_with_halfplane`] exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::point_set::PointSet;
use super::predicates::{DirectedLine, Halfplane, Point2, Scalar};
use super::region::{clip_polygon_with_halfplane, ConvexRegion};

/// `a*x + b*y + c >= 0`.
#[derive(Clone, Debug)]
struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    /// Closed left side of `p -> q`.
    fn left_of(p: &[BigInt; 2], q: &[BigInt; 2]) -> Self {
        let dx = &q[0] - &p[0];
        let dy = &q[1] - &p[1];
        let c = &dy * &p[0] - &dx * &p[1];
        Self { a: -dy, b: dx, c }
    }

    fn axis(a: i64, b: i64, c: BigInt) -> Self {
        Self {
            a: BigInt::from(a),
            b: BigInt::from(b),
            c,
        }
    }

    /// Sign of the line's equation at a homogeneous point (`w > 0`).
    fn eval(&self, v: &Hom) -> i8 {
        let s = &self.a * &v.x + &self.b * &v.y + &self.c * &v.w;
        if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            0
        }
    }

    fn meet(&self, other: &Line) -> Option<Hom> {
        let w = &self.a * &other.b - &other.a * &self.b;
        if w.is_zero() {
            return None;
        }
        let x = &self.b * &other.c - &other.b * &self.c;
        let y = &self.c * &other.a - &other.c * &self.a;
        Some(if w.is_negative() {
            Hom {
                x: -x,
                y: -y,
                w: -w,
            }
        } else {
            Hom { x, y, w }
        })
    }
}

/// Homogeneous point `(x/w, y/w)` in the scaled frame, `w > 0`.
#[derive(Clone, Debug)]
struct Hom {
    x: BigInt,
    y: BigInt,
    w: BigInt,
}

impl Hom {
    fn to_point(&self, scale: &BigInt) -> Point2 {
        let den = &self.w * scale;
        Point2::new(
            Scalar::new(self.x.clone(), den.clone()),
            Scalar::new(self.y.clone(), den),
        )
    }
}

/// Convex polygon as a CCW cycle of lines; `verts[i]` joins `lines[i]` and
/// `lines[i + 1]`.
struct FramePolygon {
    lines: Vec<Line>,
    verts: Vec<Hom>,
}

enum Clipped {
    Polygon(FramePolygon),
    /// Dimension dropped; continue with the rational clipper.
    Region(ConvexRegion),
    /// Consecutive lines turned out parallel; clip this one rationally.
    Unclipped(ConvexRegion),
}

impl FramePolygon {
    fn from_lines(lines: Vec<Line>) -> Option<Self> {
        let m = lines.len();
        let verts = (0..m)
            .map(|i| lines[i].meet(&lines[(i + 1) % m]))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { lines, verts })
    }

    fn bounding_box(points: &PointSet) -> Option<Self> {
        let n = points.len();
        let xs = (0..n).map(|i| &points.scaled(i)[0]);
        let ys = (0..n).map(|i| &points.scaled(i)[1]);
        let (xmin, xmax) = (xs.clone().min()?.clone(), xs.max()?.clone());
        let (ymin, ymax) = (ys.clone().min()?.clone(), ys.max()?.clone());
        if xmin == xmax || ymin == ymax {
            return None;
        }
        Self::from_lines(vec![
            Line::axis(0, 1, -ymin),
            Line::axis(-1, 0, xmax),
            Line::axis(0, -1, ymax),
            Line::axis(1, 0, -xmin),
        ])
    }

    fn to_region(&self, scale: &BigInt) -> ConvexRegion {
        ConvexRegion::from_vertices(self.verts.iter().map(|v| v.to_point(scale)).collect())
    }

    fn clip(self, h: Line, scale: &BigInt) -> Clipped {
        let m = self.verts.len();
        let s: Vec<i8> = self.verts.iter().map(|v| h.eval(v)).collect();
        let max = *s.iter().max().expect("nonempty polygon");
        if s.iter().all(|&x| x >= 0) {
            return Clipped::Polygon(self);
        }
        if max <= 0 {
            let touching = self
                .verts
                .iter()
                .zip(&s)
                .filter(|(_, &x)| x == 0)
                .map(|(v, _)| v.to_point(scale))
                .collect();
            return Clipped::Region(ConvexRegion::from_vertices(touching));
        }
        // Edge i runs from verts[i - 1] to verts[i] along lines[i].
        let survives = |i: usize| s[(i + m - 1) % m].max(s[i]) > 0;
        let mut lines = Vec::with_capacity(m + 1);
        match (0..m).find(|&i| survives(i) && !survives((i + m - 1) % m)) {
            Some(first) => {
                let mut i = first;
                while survives(i) {
                    lines.push(self.lines[i].clone());
                    i = (i + 1) % m;
                    if i == first {
                        break;
                    }
                }
                lines.push(h);
            }
            None => {
                // Every edge keeps a piece: a single vertex is cut off.
                let out = s.iter().position(|&x| x < 0).expect("some vertex outside");
                for k in 1..=m {
                    lines.push(self.lines[(out + k) % m].clone());
                }
                lines.push(h);
            }
        }
        match Self::from_lines(lines) {
            Some(p) => Clipped::Polygon(p),
            None => Clipped::Unclipped(self.to_region(scale)),
        }
    }
}

/// Intersection of the bounding box of `points` with the closed halfplanes
/// left of `points[a] -> points[b]` for each `(a, b)`, in order.
pub(crate) fn intersect_left_halfplanes(
    points: &PointSet,
    pairs: &[(usize, usize)],
) -> ConvexRegion {
    let scale = points.scale();
    let rational = |region: ConvexRegion, rest: &[(usize, usize)]| {
        rest.iter().fold(region, |r, &(a, b)| {
            let line = DirectedLine::new(points.point(a).clone(), points.point(b).clone())
                .expect("distinct points");
            clip_polygon_with_halfplane(&r, &Halfplane::left_of(line))
        })
    };
    let Some(mut poly) = FramePolygon::bounding_box(points) else {
        let (lo, hi) = points.bounding_box().expect("nonempty");
        return rational(ConvexRegion::rectangle(&lo, &hi), pairs);
    };
    for (k, &(a, b)) in pairs.iter().enumerate() {
        let h = Line::left_of(points.scaled(a), points.scaled(b));
        match poly.clip(h, scale) {
            Clipped::Polygon(p) => poly = p,
            Clipped::Region(r) => return rational(r, &pairs[k + 1..]),
            Clipped::Unclipped(r) => return rational(r, &pairs[k..]),
        }
    }
    poly.to_region(scale)
}
