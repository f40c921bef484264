//! Packing `floor(n/3)` edge-disjoint plane spanning trees.
//!
//! Points are ordered counter-clockwise around a centerpoint `c`. With
//! `n = 3k + r`, tree `i` is grown from three tails `p_i`, `p_{i+k'}`,
//! `p_{i+2k'}` (shifted per residue), each joined to the points that follow
//! it in radial order. Every closed halfplane bounded by a line through `c`
//! and an input point holds at least `ceil(n/3) + 1` points, so the edges
//! out of a tail stay inside the convex wedge between that tail and the next
//! one; the resulting graph is plane with a single cycle, and dropping the
//! edge back into `p_i` leaves a plane spanning tree. Tail sets of
//! different trees are disjoint, which keeps the trees edge-disjoint.

use std::cmp::Ordering;
use std::fmt;

use crate::center::{classify_dimension, compute_center_region, select_centerpoint, Centerpoint};
use crate::error::{Error, Result};
use num_bigint::BigInt;

use crate::geometry::{compare_directions, PointSet};
use crate::verify::{verify_packing, VerificationSummary};

/// Input indices sorted counter-clockwise around `center`, starting from
/// the +x direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialOrder {
    pub center: Centerpoint,
    pub order: Vec<usize>,
}

impl RadialOrder {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Input index at radial position `pos`, wrapping around.
    pub fn at(&self, pos: usize) -> usize {
        self.order[pos % self.order.len()]
    }

    /// Radial position of an input index.
    pub fn position(&self, index: usize) -> Option<usize> {
        self.order.iter().position(|&i| i == index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub tail: usize,
    pub head: usize,
}

impl DirectedEdge {
    pub fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }

    /// Endpoints as an unordered pair `(min, max)`.
    pub fn undirected(&self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// `n mod 3` for the radial construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Residue {
    Zero,
    One,
    Two,
}

impl Residue {
    pub fn of(n: usize) -> Self {
        match n % 3 {
            0 => Residue::Zero,
            1 => Residue::One,
            _ => Residue::Two,
        }
    }

    fn value(self) -> usize {
        match self {
            Residue::Zero => 0,
            Residue::One => 1,
            Residue::Two => 2,
        }
    }

    /// `(offset from p_i, out-degree)` of the three tails.
    fn tails(self, k: usize) -> [(usize, usize); 3] {
        match self {
            Residue::Zero => [(0, k), (k, k), (2 * k, k)],
            Residue::One => [(0, k + 1), (k + 1, k), (2 * k + 1, k)],
            Residue::Two => [(0, k + 1), (k + 1, k + 1), (2 * k + 2, k)],
        }
    }
}

/// Which construction produced a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeKind {
    /// `n` in {3, 4, 5}: star from the first point.
    Star,
    ThreeK,
    ThreeKPlusOne,
    ThreeKPlusTwo,
    /// Single-point center `p` in P: 3k-construction on the rest plus `p -> p_i`.
    ZeroDimensional,
}

impl TreeKind {
    pub fn name(self) -> &'static str {
        match self {
            TreeKind::Star => "star",
            TreeKind::ThreeK => "3k",
            TreeKind::ThreeKPlusOne => "3k+1",
            TreeKind::ThreeKPlusTwo => "3k+2",
            TreeKind::ZeroDimensional => "0-dim",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            TreeKind::Star,
            TreeKind::ThreeK,
            TreeKind::ThreeKPlusOne,
            TreeKind::ThreeKPlusTwo,
            TreeKind::ZeroDimensional,
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }

    fn for_residue(r: Residue) -> Self {
        match r {
            Residue::Zero => TreeKind::ThreeK,
            Residue::One => TreeKind::ThreeKPlusOne,
            Residue::Two => TreeKind::ThreeKPlusTwo,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    pub edges: Vec<DirectedEdge>,
    /// 1-based start position `i` in the radial order.
    pub start: usize,
    pub kind: TreeKind,
    pub removed_edge: Option<DirectedEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub n: usize,
    pub trees: Vec<SpanningTree>,
    pub center_dimension: u8,
    /// `None` only for `n <= 5` when the center admits no clean centerpoint.
    pub centerpoint: Option<Centerpoint>,
    /// `None` for the star packings of `n <= 5`.
    pub radial_order: Option<RadialOrder>,
    /// Filled in when the packing was verified on construction.
    pub verification: Option<VerificationSummary>,
}

/// Sorts the input points (minus the center itself, if it is one of them)
/// counter-clockwise around the centerpoint.
pub fn radial_order(points: &PointSet, center: &Centerpoint) -> Result<RadialOrder> {
    let frame = points.relative_to(&center.point);
    let mut dirs: Vec<(usize, &(BigInt, BigInt))> = Vec::with_capacity(points.len());
    for (i, v) in frame.vectors().iter().enumerate() {
        if frame.is_origin(i) {
            if center.in_p {
                continue;
            }
            return Err(Error::PointAtCenter(i));
        }
        dirs.push((i, v));
    }
    dirs.sort_by(|a, b| compare_directions(a.1, b.1).then(a.0.cmp(&b.0)));
    for w in dirs.windows(2) {
        if compare_directions(w[0].1, w[1].1) == Ordering::Equal {
            return Err(Error::AngularTie(w[0].0, w[1].0));
        }
    }
    Ok(RadialOrder {
        center: center.clone(),
        order: dirs.into_iter().map(|(i, _)| i).collect(),
    })
}

/// The spanning graph `G_i`: `n` directed edges over input indices, one
/// cycle through the three tails. `i` is 1-based, `1 <= i <= k`.
pub fn build_graph(
    order: &RadialOrder,
    i: usize,
    k: usize,
    residue: Residue,
) -> Result<Vec<DirectedEdge>> {
    let n = order.len();
    if k == 0 || n != 3 * k + residue.value() {
        return Err(Error::ParameterOutOfRange(format!(
            "{n} points do not match k = {k} with residue {}",
            residue.value()
        )));
    }
    if !(1..=k).contains(&i) {
        return Err(Error::ParameterOutOfRange(format!(
            "start {i} not in 1..={k}"
        )));
    }
    let start = i - 1;
    let mut edges = Vec::with_capacity(n);
    for (offset, degree) in residue.tails(k) {
        let tail = start + offset;
        for step in 1..=degree {
            edges.push(DirectedEdge::new(order.at(tail), order.at(tail + step)));
        }
    }
    Ok(edges)
}

/// Drops the edge of `G_i` that returns to `p_i`, leaving `n - 1` edges.
pub fn extract_tree(
    edges: Vec<DirectedEdge>,
    order: &RadialOrder,
    i: usize,
    kind: TreeKind,
) -> Result<SpanningTree> {
    if i == 0 || i > order.len() {
        return Err(Error::ParameterOutOfRange(format!("start {i}")));
    }
    let start = order.at(i - 1);
    let mut edges = edges;
    let pos = edges
        .iter()
        .position(|e| e.head == start)
        .ok_or(Error::MissingCycleEdge(start))?;
    let removed = edges.remove(pos);
    Ok(SpanningTree {
        edges,
        start: i,
        kind,
        removed_edge: Some(removed),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PackOptions {
    /// Seed for the centerpoint retry stream.
    pub seed: u64,
    /// Run the full verifier and fail closed on any finding.
    pub verify: bool,
}

impl Default for PackOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            verify: true,
        }
    }
}

/// `floor(n/3)` pairwise edge-disjoint plane spanning trees on a
/// general-position point set.
pub fn pack_spanning_trees(points: &PointSet, options: &PackOptions) -> Result<Packing> {
    let n = points.len();
    let region = compute_center_region(points)?;
    let report = classify_dimension(&region, points)?;

    let mut packing = if n < 6 {
        let centerpoint = match report.dimension {
            2 => Some(select_centerpoint(&region, points, options.seed)?),
            _ => None,
        };
        let star = SpanningTree {
            edges: (1..n).map(|j| DirectedEdge::new(0, j)).collect(),
            start: 1,
            kind: TreeKind::Star,
            removed_edge: None,
        };
        Packing {
            n,
            trees: vec![star],
            center_dimension: report.dimension,
            centerpoint,
            radial_order: None,
            verification: None,
        }
    } else {
        let centerpoint = select_centerpoint(&region, points, options.seed)?;
        let order = radial_order(points, &centerpoint)?;
        let k = n / 3;
        let mut trees = Vec::with_capacity(k);
        if centerpoint.in_p {
            let hub = points
                .index_of(&centerpoint.point)
                .expect("center point is an input point");
            for i in 1..=k {
                let graph = build_graph(&order, i, k, Residue::Zero)?;
                let mut tree = extract_tree(graph, &order, i, TreeKind::ZeroDimensional)?;
                tree.edges.push(DirectedEdge::new(hub, order.at(i - 1)));
                trees.push(tree);
            }
        } else {
            let residue = Residue::of(n);
            for i in 1..=k {
                let graph = build_graph(&order, i, k, residue)?;
                trees.push(extract_tree(
                    graph,
                    &order,
                    i,
                    TreeKind::for_residue(residue),
                )?);
            }
        }
        Packing {
            n,
            trees,
            center_dimension: report.dimension,
            centerpoint: Some(centerpoint),
            radial_order: Some(order),
            verification: None,
        }
    };

    if options.verify {
        let summary = verify_packing(&packing, points);
        if !summary.is_ok() {
            return Err(Error::VerificationFailed(summary.describe_failures()));
        }
        packing.verification = Some(summary);
    }
    Ok(packing)
}
