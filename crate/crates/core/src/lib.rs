//! Exact center computation and plane spanning tree packing for planar
//! point sets in general position.
//!
//! Given `n` points with no three collinear, [`pack_spanning_trees`] returns
//! `floor(n/3)` pairwise edge-disjoint spanning trees of the complete
//! geometric graph, each drawn without crossings. The trees are grown
//! radially around a centerpoint taken from the exactly computed center of
//! the set ([`compute_center_region`]). All arithmetic is exact rational.

pub mod center;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod packing;
pub mod rng;
pub mod verify;

pub use center::{
    classify_dimension, compute_center_region, depth_threshold, enumerate_center_halfplanes,
    select_centerpoint, CenterRegion, Centerpoint, DimensionReport,
};
pub use error::{Error, Result, Violation};
pub use geometry::{
    clip_polygon_with_halfplane, is_general_position, orientation, segments_cross_properly,
    side_of_line, ConvexPolygon, ConvexRegion, DirectedLine, Halfplane, Orientation, Point2,
    PointSet, RelativeFrame, Scalar, Segment, Side,
};
pub use packing::{
    build_graph, extract_tree, pack_spanning_trees, radial_order, DirectedEdge, PackOptions,
    Packing, RadialOrder, Residue, SpanningTree, TreeKind,
};
pub use rng::Lcg64;
pub use verify::{
    are_pairwise_edge_disjoint, check_lemma1, check_wedges, is_plane, is_spanning_tree,
    min_halfplane_count, verify_packing, VerificationFailure, VerificationSummary,
};
