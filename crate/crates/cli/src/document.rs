//! The packing document: JSON with a fixed field order.
//!
//! ```text
//! {
//!   "format": "planepack-packing/1",
//!   "n": <point count>,
//!   "seed": <centerpoint seed>,
//!   "center_dimension": 0 | 1 | 2,
//!   "centerpoint": null | { "x": "<p/q>", "y": "<p/q>", "in_p": <bool> },
//!   "radial_order": null | [<input index>, ...],
//!   "trees": [
//!     { "start": <1-based radial start>, "kind": "3k" | "3k+1" | "3k+2" | "0-dim" | "star",
//!       "removed_edge": null | [tail, head], "edges": [[tail, head], ...] }
//!   ],
//!   "verification": { "status": "passed" | "failed" | "skipped",
//!     "expected_tree_count": ..., "tree_count": ..., "centerpoint_checked": <bool>,
//!     "failures": ["<message>", ...] }
//! }
//! ```
//!
//! Indices are 0-based positions in the point file, comment and blank lines
//! excluded. Coordinates are exact rationals in lowest terms.

use std::str::FromStr;

use planepack_core::{
    Centerpoint, DirectedEdge, Packing, Point2, RadialOrder, Scalar, SpanningTree, TreeKind,
    VerificationSummary,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT: &str = "planepack-packing/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PackingDocument {
    pub format: String,
    pub n: usize,
    pub seed: u64,
    pub center_dimension: u8,
    pub centerpoint: Option<CenterpointRecord>,
    pub radial_order: Option<Vec<usize>>,
    pub trees: Vec<TreeRecord>,
    pub verification: VerificationRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterpointRecord {
    pub x: String,
    pub y: String,
    pub in_p: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeRecord {
    pub start: usize,
    pub kind: String,
    pub removed_edge: Option<[usize; 2]>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationRecord {
    pub status: Status,
    pub expected_tree_count: usize,
    pub tree_count: usize,
    pub centerpoint_checked: bool,
    pub failures: Vec<String>,
}

impl VerificationRecord {
    pub fn skipped(n: usize, tree_count: usize) -> Self {
        Self {
            status: Status::Skipped,
            expected_tree_count: n / 3,
            tree_count,
            centerpoint_checked: false,
            failures: Vec::new(),
        }
    }

    pub fn from_summary(summary: &VerificationSummary) -> Self {
        Self {
            status: if summary.is_ok() {
                Status::Passed
            } else {
                Status::Failed
            },
            expected_tree_count: summary.expected_tree_count,
            tree_count: summary.tree_count,
            centerpoint_checked: summary.centerpoint_checked,
            failures: summary.failures.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported document format {0:?}")]
    Format(String),
    #[error("centerpoint coordinate {0:?} is not an exact rational")]
    Coordinate(String),
    #[error("unknown tree kind {0:?}")]
    Kind(String),
    #[error("radial order given without a centerpoint")]
    OrderWithoutCenter,
}

fn edge(e: &DirectedEdge) -> [usize; 2] {
    [e.tail, e.head]
}

impl PackingDocument {
    pub fn from_packing(packing: &Packing, seed: u64) -> Self {
        let verification = match &packing.verification {
            Some(summary) => VerificationRecord::from_summary(summary),
            None => VerificationRecord::skipped(packing.n, packing.trees.len()),
        };
        Self {
            format: FORMAT.to_string(),
            n: packing.n,
            seed,
            center_dimension: packing.center_dimension,
            centerpoint: packing.centerpoint.as_ref().map(|c| CenterpointRecord {
                x: c.point.x.to_string(),
                y: c.point.y.to_string(),
                in_p: c.in_p,
            }),
            radial_order: packing.radial_order.as_ref().map(|o| o.order.clone()),
            trees: packing
                .trees
                .iter()
                .map(|t| TreeRecord {
                    start: t.start,
                    kind: t.kind.name().to_string(),
                    removed_edge: t.removed_edge.as_ref().map(edge),
                    edges: t.edges.iter().map(edge).collect(),
                })
                .collect(),
            verification,
        }
    }

    /// Rebuilds the packing the document describes. The stored verification
    /// outcome is not carried over.
    pub fn to_packing(&self) -> Result<Packing, DocumentError> {
        let coord =
            |s: &str| Scalar::from_str(s).map_err(|_| DocumentError::Coordinate(s.to_string()));
        let centerpoint = match &self.centerpoint {
            Some(c) => Some(Centerpoint {
                point: Point2::new(coord(&c.x)?, coord(&c.y)?),
                in_p: c.in_p,
            }),
            None => None,
        };
        let radial_order = match (&self.radial_order, &centerpoint) {
            (Some(order), Some(center)) => Some(RadialOrder {
                center: center.clone(),
                order: order.clone(),
            }),
            (Some(_), None) => return Err(DocumentError::OrderWithoutCenter),
            (None, _) => None,
        };
        let trees = self
            .trees
            .iter()
            .map(|t| {
                Ok(SpanningTree {
                    edges: t
                        .edges
                        .iter()
                        .map(|&[a, b]| DirectedEdge::new(a, b))
                        .collect(),
                    start: t.start,
                    kind: TreeKind::from_name(&t.kind)
                        .ok_or_else(|| DocumentError::Kind(t.kind.clone()))?,
                    removed_edge: t.removed_edge.map(|[a, b]| DirectedEdge::new(a, b)),
                })
            })
            .collect::<Result<_, DocumentError>>()?;
        Ok(Packing {
            n: self.n,
            trees,
            center_dimension: self.center_dimension,
            centerpoint,
            radial_order,
            verification: None,
        })
    }

    pub fn emit(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text)?;
        if doc.format != FORMAT {
            return Err(DocumentError::Format(doc.format));
        }
        Ok(doc)
    }
}
