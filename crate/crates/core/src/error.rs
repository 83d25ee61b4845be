use thiserror::Error;

use crate::segment::Segment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(i64),

    #[error("invalid segment endpoints (doubled) {ti}..{tj}: {reason}")]
    InvalidSegment { ti: i64, tj: i64, reason: &'static str },

    #[error("segment {seg} is not an N-segment for h = {h}")]
    NotNSegment { seg: Segment, h: i64 },

    #[error("segment {seg} is not proper for h = {h}")]
    NotProper { seg: Segment, h: i64 },

    #[error("{upper} does not cover {lower}")]
    NotCovering { upper: Segment, lower: Segment },

    #[error("multisegment is not a ladder: {0}")]
    NotLadder(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("cover condition fails: {0}")]
    CoverFails(String),

    #[error("path is invalid: {0}")]
    InvalidPath(String),

    #[error("{0} is not a local extremum of the path")]
    NotExtremum(usize),

    #[error("{corner} is not an upper corner of any path of {seg}")]
    NotUpperCorner { corner: Segment, seg: Segment },

    #[error("module is not thin: two path tuples share the weight {0}")]
    NotThin(String),

    #[error("enumeration cap of {cap} exceeded ({what})")]
    CapExceeded { cap: usize, what: String },

    #[error("window {a}:{b} is invalid for N = {n}")]
    InvalidWindow { a: i64, b: i64, n: i64 },

    #[error("support of {seg} lies outside the window {a}:{b}")]
    OutsideWindow { seg: Segment, a: i64, b: i64 },

    #[error("support below h/2; use the dual segment {0} instead")]
    UseDual(Segment),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
