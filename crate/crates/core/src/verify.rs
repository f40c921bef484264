//! Independent checks of everything the construction relies on.

use std::collections::HashSet;
use std::fmt;

use crate::center::depth_threshold;
use num_bigint::BigInt;

use crate::geometry::{compare_directions, in_upper_half, Orientation, Point2, PointSet, Side};
use crate::packing::{DirectedEdge, Packing, SpanningTree, TreeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub first: DirectedEdge,
    pub second: DirectedEdge,
}

/// All edge pairs of one tree, checked for proper crossings.
pub fn is_plane(tree: &SpanningTree, points: &PointSet) -> Result<(), Crossing> {
    let edges = &tree.edges;
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if e.undirected() == f.undirected() {
                // Same segment twice; a spanning-tree defect, not a crossing.
                continue;
            }
            if points.segments_cross(e.tail, e.head, f.tail, f.head) {
                return Err(Crossing {
                    first: *e,
                    second: *f,
                });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeDefect {
    EdgeCount { expected: usize, found: usize },
    IndexOutOfRange(DirectedEdge),
    SelfLoop(DirectedEdge),
    DuplicateEdge(DirectedEdge),
    Disconnected { components: usize },
}

impl fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDefect::EdgeCount { expected, found } => {
                write!(f, "{found} edges, expected {expected}")
            }
            TreeDefect::IndexOutOfRange(e) => write!(f, "edge {e} references a missing point"),
            TreeDefect::SelfLoop(e) => write!(f, "self-loop {e}"),
            TreeDefect::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            TreeDefect::Disconnected { components } => {
                write!(f, "disconnected ({components} components)")
            }
        }
    }
}

/// Exactly `n - 1` distinct edges connecting all `n` points.
pub fn is_spanning_tree(tree: &SpanningTree, points: &PointSet) -> Result<(), TreeDefect> {
    let n = points.len();
    let expected = n.saturating_sub(1);
    if tree.edges.len() != expected {
        return Err(TreeDefect::EdgeCount {
            expected,
            found: tree.edges.len(),
        });
    }
    let mut seen = HashSet::new();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for e in &tree.edges {
        if e.tail >= n || e.head >= n {
            return Err(TreeDefect::IndexOutOfRange(*e));
        }
        if e.tail == e.head {
            return Err(TreeDefect::SelfLoop(*e));
        }
        if !seen.insert(e.undirected()) {
            return Err(TreeDefect::DuplicateEdge(*e));
        }
        let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    if components > 1 {
        return Err(TreeDefect::Disconnected { components });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeConflict {
    pub first_tree: usize,
    pub second_tree: usize,
    pub edge: DirectedEdge,
}

/// First shared undirected edge over tree pairs `(i, j)`, `i < j`, reported
/// as it appears in tree `i`.
pub fn are_pairwise_edge_disjoint(trees: &[SpanningTree]) -> Result<(), EdgeConflict> {
    let sets: Vec<HashSet<(usize, usize)>> = trees
        .iter()
        .map(|t| t.edges.iter().map(DirectedEdge::undirected).collect())
        .collect();
    for (i, tree) in trees.iter().enumerate() {
        for (j, other) in sets.iter().enumerate().skip(i + 1) {
            if let Some(e) = tree.edges.iter().find(|e| other.contains(&e.undirected())) {
                return Err(EdgeConflict {
                    first_tree: i,
                    second_tree: j,
                    edge: *e,
                });
            }
        }
    }
    Ok(())
}

/// Fewest input points in a closed halfplane containing `q` (Tukey depth).
///
/// Angular sweep: the minimum is attained by a halfplane whose boundary
/// passes through `q` and misses every other point, i.e. by an open
/// half-turn window of directions starting just after a point direction or
/// its antipode. Window counts come from binary searches in the sorted
/// direction list. `q` itself counts when it is an input point.
pub fn min_halfplane_count(q: &Point2, points: &PointSet) -> usize {
    let frame = points.relative_to(q);
    let mut dirs: Vec<(BigInt, BigInt)> = Vec::with_capacity(points.len());
    let mut own = 0;
    for (i, v) in frame.vectors().iter().enumerate() {
        if frame.is_origin(i) {
            own += 1;
        } else {
            dirs.push(v.clone());
        }
    }
    if dirs.is_empty() {
        return own;
    }
    dirs.sort_by(compare_directions);
    let m = dirs.len();
    // Number of directions at or before `d` in angular order.
    let upto = |d: &(BigInt, BigInt)| {
        dirs.partition_point(|x| compare_directions(x, d) != std::cmp::Ordering::Greater)
    };
    let mut best = m;
    for d in &dirs {
        let anti = (-&d.0, -&d.1);
        for phi in [d, &anti] {
            let neg = (-&phi.0, -&phi.1);
            // Directions in the half-open window (phi, phi + pi].
            let count = if in_upper_half(phi) {
                upto(&neg) - upto(phi)
            } else {
                m - upto(phi) + upto(&neg)
            };
            best = best.min(count);
        }
    }
    best + own
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Witness {
    pub point: usize,
    pub side: Side,
    pub count: usize,
}

/// Both closed halfplanes bounded by the line through `c` and each input
/// point hold at least `ceil(n/3) + 1` input points. Boundary points count.
pub fn check_lemma1(c: &Point2, points: &PointSet) -> Result<(), Lemma1Witness> {
    let need = depth_threshold(points.len()) + 1;
    let frame = points.relative_to(c);
    let n = points.len();
    for i in 0..n {
        if frame.is_origin(i) {
            continue;
        }
        let (mut left, mut right) = (0, 0);
        for r in 0..n {
            match frame.orientation(i, r) {
                Orientation::Ccw => left += 1,
                Orientation::Cw => right += 1,
                Orientation::Collinear => {
                    left += 1;
                    right += 1;
                }
            }
        }
        for (side, count) in [(Side::Left, left), (Side::Right, right)] {
            if count < need {
                return Err(Lemma1Witness {
                    point: i,
                    side,
                    count,
                });
            }
        }
    }
    Ok(())
}

/// An edge leaving the convex wedge its tail is supposed to stay in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WedgeViolation {
    pub tree: usize,
    pub edge: DirectedEdge,
}

/// Every edge out of a tail `t` lies in the closed convex wedge at the
/// centerpoint between the rays to `t` and to the farthest head of `t`.
/// Edges out of a single-point center are exempt.
pub fn check_wedges(packing: &Packing, points: &PointSet) -> Result<(), WedgeViolation> {
    let Some(order) = &packing.radial_order else {
        return Ok(());
    };
    let frame = points.relative_to(&order.center.point);
    let n = order.len();
    let pos: Vec<Option<usize>> = (0..points.len()).map(|i| order.position(i)).collect();
    for (ti, tree) in packing.trees.iter().enumerate() {
        if tree.kind == TreeKind::Star {
            continue;
        }
        let edges: Vec<DirectedEdge> = tree
            .edges
            .iter()
            .chain(&tree.removed_edge)
            .copied()
            .collect();
        for e in &edges {
            let (Some(pt), Some(_)) = (pos[e.tail], pos[e.head]) else {
                continue;
            };
            let offset = |p: usize| (p + n - pt) % n;
            let last = edges
                .iter()
                .filter(|f| f.tail == e.tail)
                .filter_map(|f| pos[f.head])
                .max_by_key(|&p| offset(p))
                .expect("edge itself");
            let far = order.at(last);
            let inside = frame.orientation(e.tail, e.head) != Orientation::Cw
                && frame.orientation(far, e.head) != Orientation::Ccw
                && frame.orientation(e.tail, far) != Orientation::Cw;
            if !inside {
                return Err(WedgeViolation { tree: ti, edge: *e });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationFailure {
    Count { expected: usize, found: usize },
    NotPlane { tree: usize, crossing: Crossing },
    NotSpanning { tree: usize, defect: TreeDefect },
    NotDisjoint(EdgeConflict),
    NotCenterpoint { depth: usize, alpha: usize },
    Lemma1(Lemma1Witness),
    Wedge(WedgeViolation),
}

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationFailure::Count { expected, found } => {
                write!(f, "{found} trees, expected {expected}")
            }
            VerificationFailure::NotPlane { tree, crossing } => write!(
                f,
                "tree {tree}: edges {} and {} cross",
                crossing.first, crossing.second
            ),
            VerificationFailure::NotSpanning { tree, defect } => {
                write!(f, "tree {tree}: not a spanning tree: {defect}")
            }
            VerificationFailure::NotDisjoint(c) => write!(
                f,
                "trees {} and {} share edge {}",
                c.first_tree, c.second_tree, c.edge
            ),
            VerificationFailure::NotCenterpoint { depth, alpha } => {
                write!(f, "centerpoint depth {depth} below {alpha}")
            }
            VerificationFailure::Lemma1(w) => write!(
                f,
                "closed halfplane {:?} of the line through the centerpoint and point {} holds only {} points",
                w.side, w.point, w.count
            ),
            VerificationFailure::Wedge(w) => {
                write!(f, "tree {}: edge {} leaves its wedge", w.tree, w.edge)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationSummary {
    pub expected_tree_count: usize,
    pub tree_count: usize,
    /// Whether the centerpoint checks (depth, line counts, wedges) ran.
    pub centerpoint_checked: bool,
    pub failures: Vec<VerificationFailure>,
}

impl VerificationSummary {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn describe_failures(&self) -> String {
        self.failures
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Runs every check on a packing.
pub fn verify_packing(packing: &Packing, points: &PointSet) -> VerificationSummary {
    let n = points.len();
    let expected = n / 3;
    let mut failures = Vec::new();
    if packing.trees.len() != expected {
        failures.push(VerificationFailure::Count {
            expected,
            found: packing.trees.len(),
        });
    }
    for (i, tree) in packing.trees.iter().enumerate() {
        if let Err(defect) = is_spanning_tree(tree, points) {
            failures.push(VerificationFailure::NotSpanning { tree: i, defect });
            // Plane check needs valid indices.
            if matches!(defect, TreeDefect::IndexOutOfRange(_)) {
                continue;
            }
        }
        if let Err(crossing) = is_plane(tree, points) {
            failures.push(VerificationFailure::NotPlane { tree: i, crossing });
        }
    }
    if let Err(c) = are_pairwise_edge_disjoint(&packing.trees) {
        failures.push(VerificationFailure::NotDisjoint(c));
    }
    let mut centerpoint_checked = false;
    if let Some(c) = &packing.centerpoint {
        centerpoint_checked = true;
        let alpha = depth_threshold(n);
        let depth = min_halfplane_count(&c.point, points);
        if depth < alpha {
            failures.push(VerificationFailure::NotCenterpoint { depth, alpha });
        }
        if let Err(w) = check_lemma1(&c.point, points) {
            failures.push(VerificationFailure::Lemma1(w));
        }
        let index_ok = packing
            .trees
            .iter()
            .flat_map(|t| t.edges.iter().chain(&t.removed_edge))
            .all(|e| e.tail < n && e.head < n);
        if index_ok {
            if let Err(w) = check_wedges(packing, points) {
                failures.push(VerificationFailure::Wedge(w));
            }
        }
    }
    VerificationSummary {
        expected_tree_count: expected,
        tree_count: packing.trees.len(),
        centerpoint_checked,
        failures,
    }
}
