//! Brute-force cross-checks for small instances.
//!
//! Only the exact predicates of [`crate::geometry`] are shared with the
//! main code path. No sweep, no sorting, no center clipping.

use num_traits::{Signed, Zero};

use crate::center::depth_threshold;
use crate::geometry::{
    int, segments_cross_properly, ConvexRegion, Orientation, Point2, PointSet, Scalar, Segment,
};
use crate::packing::{DirectedEdge, Packing};

/// Point counts of a finite family of closed halfplanes containing `q` that
/// is guaranteed to include a minimum-count one:
///
/// * for every input point `p != q`, the four halfplanes with `q` on the
///   boundary whose boundary direction is `+-(p - q)` rotated by an
///   infinitesimal angle either way (exact symbolic perturbation), plus the
///   two unperturbed closed halfplanes bounded by the line `q p`;
/// * for every pair-line of the input, each closed side containing `q`.
fn halfplane_counts(q: &Point2, points: &PointSet) -> Vec<usize> {
    let n = points.len();
    let frame = points.relative_to(q);
    let own = (0..n).filter(|&i| frame.is_origin(i)).count();
    let others: Vec<usize> = (0..n).filter(|&i| !frame.is_origin(i)).collect();
    let mut counts = Vec::new();
    if others.is_empty() {
        counts.push(own);
    }

    for &p in &others {
        let (ux, uy) = frame.vector(p);
        for dir in [(ux.clone(), uy.clone()), (-ux, -uy)] {
            for turn in [1, -1] {
                let mut count = own;
                for &r in &others {
                    let (wx, wy) = frame.vector(r);
                    let cross = &dir.0 * wy - &dir.1 * wx;
                    // Sign of cross(dir + eps * turn * perp(dir), w) for eps -> 0+.
                    let inside = if cross.is_zero() {
                        let dot = &dir.0 * wx + &dir.1 * wy;
                        if turn > 0 {
                            dot.is_negative()
                        } else {
                            dot.is_positive()
                        }
                    } else {
                        cross.is_positive()
                    };
                    count += usize::from(inside);
                }
                counts.push(count);
            }
        }
        // Unperturbed closed sides of the line through q and p.
        let (mut left, mut right) = (own, own);
        for &r in &others {
            match frame.orientation(p, r) {
                Orientation::Ccw => left += 1,
                Orientation::Cw => right += 1,
                Orientation::Collinear => {
                    left += 1;
                    right += 1;
                }
            }
        }
        counts.push(left);
        counts.push(right);
    }

    for a in 0..n {
        for b in a + 1..n {
            // orientation(p_a, p_b, q) equals the sign of v_a x v_b.
            let side = frame.orientation(a, b);
            let count_side = |keep: Orientation| {
                (0..n)
                    .filter(|&r| {
                        let o = points.orientation(a, b, r);
                        o == keep || o == Orientation::Collinear
                    })
                    .count()
            };
            if side != Orientation::Cw {
                counts.push(count_side(Orientation::Ccw));
            }
            if side != Orientation::Ccw {
                counts.push(count_side(Orientation::Cw));
            }
        }
    }
    counts
}

/// Tukey depth of `q` by exhaustive enumeration.
pub fn oracle_min_halfplane_count(q: &Point2, points: &PointSet) -> usize {
    halfplane_counts(q, points).into_iter().min().unwrap_or(0)
}

/// Whether every closed halfplane containing `q` holds at least
/// `ceil(n/3)` input points.
pub fn oracle_center_membership(q: &Point2, points: &PointSet) -> bool {
    let alpha = depth_threshold(points.len());
    halfplane_counts(q, points).into_iter().all(|c| c >= alpha)
}

/// A probe location together with the membership it must have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub point: Point2,
    pub expect_member: bool,
}

fn extent(lo: &Point2, hi: &Point2) -> Scalar {
    let w = &hi.x - &lo.x;
    let h = &hi.y - &lo.y;
    if w > h {
        w
    } else {
        h
    }
}

fn region_extent(vertices: &[Point2]) -> Scalar {
    let ps = PointSet::new(vertices.to_vec());
    match ps.bounding_box() {
        Some((lo, hi)) => extent(&lo, &hi),
        None => Scalar::zero(),
    }
}

/// Probe offset: 1/1024 of the bounding-box extent (the larger side) of the
/// region, or of the input when the region is a single point.
pub fn probe_offset(region: &ConvexRegion, points: &PointSet) -> Scalar {
    let mut e = region_extent(&region.vertices());
    if e.is_zero() {
        if let Some((lo, hi)) = points.bounding_box() {
            e = extent(&lo, &hi);
        }
    }
    if e.is_zero() {
        e = int(1);
    }
    e / int(1024)
}

/// Outward-ish offset of `base` along `(dx, dy)` scaled to unit max-norm.
fn shifted(base: &Point2, dx: &Scalar, dy: &Scalar, by: &Scalar) -> Point2 {
    let norm = if dx.abs() > dy.abs() {
        dx.abs()
    } else {
        dy.abs()
    };
    Point2::new(&base.x + by * dx / &norm, &base.y + by * dy / &norm)
}

/// Points that must be inside (vertices, interior samples) or outside
/// (just past each boundary piece) of the given center.
pub fn region_probes(region: &ConvexRegion, points: &PointSet) -> Vec<Probe> {
    let off = probe_offset(region, points);
    let inside = |point: Point2| Probe {
        point,
        expect_member: true,
    };
    let outside = |point: Point2| Probe {
        point,
        expect_member: false,
    };
    let mut probes = Vec::new();
    match region {
        ConvexRegion::Polygon(poly) => {
            let vs = poly.vertices();
            probes.extend(vs.iter().cloned().map(inside));
            probes.push(inside(poly.vertex_average()));
            // Midpoints between the average and each vertex.
            let avg = poly.vertex_average();
            let two = int(2);
            for v in vs {
                probes.push(inside(Point2::new(
                    (&v.x + &avg.x) / &two,
                    (&v.y + &avg.y) / &two,
                )));
            }
            for (a, b) in poly.edges() {
                let mid = Segment::new(a.clone(), b.clone()).expect("edge").midpoint();
                let (dx, dy) = b.minus(a);
                // Right of a CCW edge is outside.
                probes.push(outside(shifted(&mid, &dy, &(-&dx), &off)));
            }
        }
        ConvexRegion::Segment(s) => {
            probes.push(inside(s.a().clone()));
            probes.push(inside(s.b().clone()));
            let mid = s.midpoint();
            probes.push(inside(mid.clone()));
            let (dx, dy) = s.b().minus(s.a());
            probes.push(outside(shifted(&mid, &dy, &(-&dx), &off)));
            probes.push(outside(shifted(&mid, &(-&dy), &dx, &off)));
            probes.push(outside(shifted(s.b(), &dx, &dy, &off)));
            probes.push(outside(shifted(s.a(), &(-&dx), &(-&dy), &off)));
        }
        ConvexRegion::Point(p) => {
            probes.push(inside(p.clone()));
            let (one, zero) = (int(1), Scalar::zero());
            for (dx, dy) in [(&one, &zero), (&zero, &one)] {
                probes.push(outside(shifted(p, dx, dy, &off)));
                probes.push(outside(shifted(p, &-dx, &-dy, &off)));
            }
        }
        ConvexRegion::Empty => {}
    }
    probes
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementReport {
    pub probes: usize,
    pub disagreements: Vec<Probe>,
    pub empty_region: bool,
}

impl AgreementReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty() && !self.empty_region
    }
}

/// Checks a computed center against brute-force membership at vertices,
/// interior samples, and points just outside its boundary.
pub fn oracle_region_agreement(points: &PointSet, region: &ConvexRegion) -> AgreementReport {
    let probes = region_probes(region, points);
    let disagreements = probes
        .iter()
        .filter(|p| oracle_center_membership(&p.point, points) != p.expect_member)
        .cloned()
        .collect();
    AgreementReport {
        probes: probes.len(),
        disagreements,
        empty_region: region.is_empty(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecheckReport {
    /// `(tree, e, f)` for crossing edge pairs inside one tree.
    pub crossings: Vec<(usize, DirectedEdge, DirectedEdge)>,
    /// `(tree_a, tree_b, segment endpoints)` for a segment used by two trees.
    pub duplicates: Vec<(usize, usize, (usize, usize))>,
}

impl RecheckReport {
    pub fn is_clean(&self) -> bool {
        self.crossings.is_empty() && self.duplicates.is_empty()
    }
}

/// Re-derives planeness and disjointness from raw segments, ignoring all
/// tree metadata.
pub fn oracle_packing_recheck(packing: &Packing, points: &PointSet) -> RecheckReport {
    let segs: Vec<Vec<(DirectedEdge, Option<Segment>)>> = packing
        .trees
        .iter()
        .map(|t| {
            t.edges
                .iter()
                .map(|e| {
                    let s = (e.tail < points.len() && e.head < points.len())
                        .then(|| {
                            Segment::new(points.point(e.tail).clone(), points.point(e.head).clone())
                        })
                        .flatten();
                    (*e, s)
                })
                .collect()
        })
        .collect();
    let mut report = RecheckReport::default();
    for (ti, tree) in segs.iter().enumerate() {
        for (i, (e, s)) in tree.iter().enumerate() {
            for (f, t) in &tree[i + 1..] {
                if let (Some(s), Some(t)) = (s, t) {
                    if s != t && !same_segment(s, t) && segments_cross_properly(s, t) {
                        report.crossings.push((ti, *e, *f));
                    }
                }
            }
        }
    }
    for (ta, a) in segs.iter().enumerate() {
        for (tb, b) in segs.iter().enumerate().skip(ta + 1) {
            for (_, s) in a {
                let Some(s) = s else { continue };
                if b.iter()
                    .any(|(_, t)| t.as_ref().is_some_and(|t| same_segment(s, t)))
                {
                    let i = points.index_of(s.a()).unwrap_or(usize::MAX);
                    let j = points.index_of(s.b()).unwrap_or(usize::MAX);
                    report.duplicates.push((ta, tb, (i.min(j), i.max(j))));
                }
            }
        }
    }
    report
}

fn same_segment(s: &Segment, t: &Segment) -> bool {
    (s.a() == t.a() && s.b() == t.b()) || (s.a() == t.b() && s.b() == t.a())
}
