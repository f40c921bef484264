use std::fmt;

use thiserror::Error;

/// A reason a point set fails the general-position requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    /// Two input points coincide.
    Duplicate(usize, usize),
    /// Three input points lie on one line.
    Collinear(usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Duplicate(a, b) => write!(f, "points {a} and {b} coincide"),
            Violation::Collinear(a, b, c) => write!(f, "points {a}, {b}, {c} are collinear"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need at least {min} points, got {found}")]
    TooFewPoints { min: usize, found: usize },
    #[error("input is not in general position: {0}")]
    NotGeneralPosition(Violation),
    #[error("center region came out empty")]
    EmptyCenter,
    #[error("center dimension check failed: {0}")]
    DimensionViolation(String),
    #[error("a {dimension}-dimensional center yields no usable centerpoint")]
    CenterpointUnavailable { dimension: u8 },
    #[error("no centerpoint off all pair-lines found after {0} attempts")]
    CenterpointSearchExhausted(usize),
    #[error("point {0} coincides with the radial center")]
    PointAtCenter(usize),
    #[error("points {0} and {1} lie in the same direction from the radial center")]
    AngularTie(usize, usize),
    #[error("construction parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("no construction edge returns to the start point {0}")]
    MissingCycleEdge(usize),
    #[error("packing verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
