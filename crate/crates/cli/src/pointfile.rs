//! Plain-text point files.
//!
//! One point per line as `x y`. Each coordinate is an integer, a decimal
//! literal such as `-2.75`, or a fraction `p/q`; all are read exactly.
//! Blank lines and lines starting with `#` are ignored. The same point may
//! not appear twice.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use planepack_core::{Point2, PointSet, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected two coordinates, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: cannot read {text:?} as a number")]
    BadNumber { line: usize, text: String },
    #[error("line {line}: point repeats line {first}")]
    Duplicate { line: usize, first: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointFile {
    pub points: Vec<Point2>,
    /// 1-based source line of each point; empty for constructed files.
    pub lines: Vec<usize>,
}

impl PointFile {
    pub fn from_points(points: Vec<Point2>) -> Self {
        Self {
            points,
            lines: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut points = Vec::new();
        let mut lines = Vec::new();
        let mut seen: HashMap<Point2, usize> = HashMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(ParseError::FieldCount {
                    line,
                    found: fields.len(),
                });
            }
            let coord = |text: &str| {
                parse_coordinate(text).ok_or_else(|| ParseError::BadNumber {
                    line,
                    text: text.to_string(),
                })
            };
            let p = Point2::new(coord(fields[0])?, coord(fields[1])?);
            if let Some(&first) = seen.get(&p) {
                return Err(ParseError::Duplicate { line, first });
            }
            seen.insert(p.clone(), line);
            points.push(p);
            lines.push(line);
        }
        Ok(Self { points, lines })
    }

    /// Canonical text: one `x y` line per point, fractions in lowest terms.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            writeln!(out, "{} {}", p.x, p.y).expect("write to string");
        }
        out
    }

    /// Source line of point `i`, falling back to its 1-based position.
    pub fn line_of(&self, i: usize) -> usize {
        self.lines.get(i).copied().unwrap_or(i + 1)
    }

    pub fn point_set(&self) -> PointSet {
        PointSet::new(self.points.clone())
    }
}

/// Exact value of an integer, decimal, or `p/q` literal.
pub fn parse_coordinate(text: &str) -> Option<Scalar> {
    if text.contains('/') {
        let (num, den) = text.split_once('/')?;
        let num = BigInt::from_str(num).ok()?;
        let den = BigInt::from_str(den).ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Scalar::new(num, den));
    }
    let (negative, unsigned) = match text.as_bytes().first()? {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (whole, frac) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .bytes()
        .chain(frac.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let mut num = BigInt::from_str(&digits).ok()?;
    if negative {
        num = -num;
    }
    let den = (0..frac.len()).fold(BigInt::one(), |d, _| d * 10);
    Some(Scalar::new(num, den))
}
