use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Scalar = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(super::int(x), super::int(y))
    }

    /// Componentwise difference `self - other`.
    pub fn minus(&self, other: &Point2) -> (Scalar, Scalar) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    /// Lossy conversion for rendering.
    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    pub fn from_sign<T: Signed>(v: &T) -> Self {
        if v.is_positive() {
            Orientation::Ccw
        } else if v.is_negative() {
            Orientation::Cw
        } else {
            Orientation::Collinear
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Sign of the determinant of `(b - a, c - a)`.
pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    Orientation::from_sign(&det)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    On,
    Right,
}

/// A line through `anchor` oriented toward `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedLine {
    anchor: Point2,
    target: Point2,
}

impl DirectedLine {
    /// `None` when the two points coincide.
    pub fn new(anchor: Point2, target: Point2) -> Option<Self> {
        (anchor != target).then_some(Self { anchor, target })
    }

    pub fn anchor(&self) -> &Point2 {
        &self.anchor
    }

    pub fn target(&self) -> &Point2 {
        &self.target
    }

    pub fn reversed(&self) -> Self {
        Self {
            anchor: self.target.clone(),
            target: self.anchor.clone(),
        }
    }
}

pub fn side_of_line(line: &DirectedLine, q: &Point2) -> Side {
    match orientation(&line.anchor, &line.target, q) {
        Orientation::Ccw => Side::Left,
        Orientation::Collinear => Side::On,
        Orientation::Cw => Side::Right,
    }
}

/// Closed halfplane to the left of its oriented boundary.
///
/// The boundary's implicit equation `a*x + b*y + c` is cached; it is positive
/// exactly on the open left side.
#[derive(Clone, Debug)]
pub struct Halfplane {
    boundary: DirectedLine,
    coeffs: [Scalar; 3],
}

impl PartialEq for Halfplane {
    fn eq(&self, other: &Self) -> bool {
        self.boundary == other.boundary
    }
}

impl Eq for Halfplane {}

impl Halfplane {
    pub fn left_of(boundary: DirectedLine) -> Self {
        let (dx, dy) = boundary.target.minus(&boundary.anchor);
        let c = &dy * &boundary.anchor.x - &dx * &boundary.anchor.y;
        Self {
            coeffs: [-dy, dx, c],
            boundary,
        }
    }

    pub fn boundary(&self) -> &DirectedLine {
        &self.boundary
    }

    /// Signed (unnormalized) offset of `q` from the boundary; positive on the left.
    pub fn evaluate(&self, q: &Point2) -> Scalar {
        let [a, b, c] = &self.coeffs;
        a * &q.x + b * &q.y + c
    }

    pub fn side(&self, q: &Point2) -> Side {
        let v = self.evaluate(q);
        if v.is_positive() {
            Side::Left
        } else if v.is_zero() {
            Side::On
        } else {
            Side::Right
        }
    }

    pub fn contains(&self, q: &Point2) -> bool {
        self.side(q) != Side::Right
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    a: Point2,
    b: Point2,
}

impl Segment {
    /// `None` when the endpoints coincide.
    pub fn new(a: Point2, b: Point2) -> Option<Self> {
        (a != b).then_some(Self { a, b })
    }

    pub fn a(&self) -> &Point2 {
        &self.a
    }

    pub fn b(&self) -> &Point2 {
        &self.b
    }

    pub fn midpoint(&self) -> Point2 {
        let two = super::int(2);
        Point2::new(
            (&self.a.x + &self.b.x) / &two,
            (&self.a.y + &self.b.y) / &two,
        )
    }
}

/// Crossing decision from the four endpoint orientations
/// `[o(s, t.a), o(s, t.b), o(t, s.a), o(t, s.b)]`.
///
/// `None` means all four points are collinear and the caller has to decide
/// overlap.
pub(crate) fn crossing_from_orientations(o: [Orientation; 4]) -> Option<bool> {
    use Orientation::Collinear;
    if o.iter().all(|&x| x == Collinear) {
        return None;
    }
    if o.contains(&Collinear) {
        // An endpoint touches the other segment's line: at best a touching
        // contact, never an interior-interior crossing.
        return Some(false);
    }
    Some(o[0] != o[1] && o[2] != o[3])
}

/// Whether two collinear segments share more than a single point.
pub(crate) fn collinear_overlap(s: &Segment, t: &Segment) -> bool {
    // Project on x unless the common line is vertical.
    let key = |p: &Point2| {
        if s.a.x != s.b.x {
            p.x.clone()
        } else {
            p.y.clone()
        }
    };
    let (s0, s1) = minmax(key(&s.a), key(&s.b));
    let (t0, t1) = minmax(key(&t.a), key(&t.b));
    let lo = if s0 > t0 { s0 } else { t0 };
    let hi = if s1 < t1 { s1 } else { t1 };
    lo < hi
}

fn minmax(a: Scalar, b: Scalar) -> (Scalar, Scalar) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// True iff `s` and `t` meet in a single point interior to both, or overlap
/// along a collinear stretch of positive length. Shared endpoints are not
/// crossings.
pub fn segments_cross_properly(s: &Segment, t: &Segment) -> bool {
    let o = [
        orientation(&s.a, &s.b, &t.a),
        orientation(&s.a, &s.b, &t.b),
        orientation(&t.a, &t.b, &s.a),
        orientation(&t.a, &t.b, &s.b),
    ];
    crossing_from_orientations(o).unwrap_or_else(|| collinear_overlap(s, t))
}

fn upper_half<T: Signed>(x: &T, y: &T) -> bool {
    y.is_positive() || (y.is_zero() && x.is_positive())
}

/// Counter-clockwise angular order of nonzero direction vectors, starting at
/// the +x direction (angle 0 comes first). No trigonometry: the half-plane
/// of each vector decides first, then the sign of the cross product.
pub fn compare_directions<T>(u: &(T, T), v: &(T, T)) -> Ordering
where
    T: Signed,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let hu = upper_half(&u.0, &u.1);
    let hv = upper_half(&v.0, &v.1);
    if hu != hv {
        return if hu {
            Ordering::Less
        } else {
            Ordering::Greater
        };
    }
    let cross = &u.0 * &v.1 - &u.1 * &v.0;
    if cross.is_positive() {
        Ordering::Less
    } else if cross.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Whether a nonzero direction lies in the half-turn `[0, pi)`.
pub fn in_upper_half<T: Signed>(v: &(T, T)) -> bool {
    upper_half(&v.0, &v.1)
}
