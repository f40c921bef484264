//! Reproducible random instances.
//!
//! Points are drawn one at a time from `[0, span]^2` with [`Lcg64`] (`x`
//! then `y`, each `below(span + 1)`). A candidate that coincides with an
//! accepted point or is collinear with two of them is discarded and the
//! next draw is taken, so the output is in general position.

use planepack_core::{Lcg64, Point2};
use thiserror::Error;

/// Total draws allowed before giving up.
pub const MAX_ATTEMPTS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("span {span} is below n^2 = {min}")]
    SpanTooSmall { span: u64, min: u64 },
    #[error("span {0} does not fit in 32 bits")]
    SpanTooLarge(u64),
    #[error("no general-position sample after {0} draws")]
    Exhausted(usize),
}

/// Default span for `n` points: `max(n^2, 10^6)`.
pub fn default_span(n: usize) -> u64 {
    (n as u64).saturating_mul(n as u64).max(1_000_000)
}

pub fn generate(n: usize, seed: u64, span: u64) -> Result<Vec<(i64, i64)>, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooFewPoints(n));
    }
    let min = (n as u64).saturating_mul(n as u64);
    if span < min {
        return Err(GenerateError::SpanTooSmall { span, min });
    }
    if span >= u64::from(u32::MAX) {
        return Err(GenerateError::SpanTooLarge(span));
    }
    let bound = span as u32 + 1;
    let mut rng = Lcg64::new(seed);
    let mut points: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut attempts = 0;
    while points.len() < n {
        if attempts == MAX_ATTEMPTS {
            return Err(GenerateError::Exhausted(attempts));
        }
        attempts += 1;
        let p = (i64::from(rng.below(bound)), i64::from(rng.below(bound)));
        if compatible(&points, p) {
            points.push(p);
        }
    }
    Ok(points)
}

fn cross(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let (ux, uy) = (i128::from(b.0 - a.0), i128::from(b.1 - a.1));
    let (vx, vy) = (i128::from(c.0 - a.0), i128::from(c.1 - a.1));
    ux * vy - uy * vx
}

fn compatible(points: &[(i64, i64)], p: (i64, i64)) -> bool {
    if points.contains(&p) {
        return false;
    }
    points
        .iter()
        .enumerate()
        .all(|(i, &a)| points[i + 1..].iter().all(|&b| cross(a, b, p) != 0))
}

pub fn to_points(coords: &[(i64, i64)]) -> Vec<Point2> {
    coords
        .iter()
        .map(|&(x, y)| Point2::from_ints(x, y))
        .collect()
}
