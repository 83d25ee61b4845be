//! Rank context and the calculus of half-integer segments `[i, j]`.
//!
//! Endpoints live in ½ℤ with `j - i ∈ ℤ`, so a segment is stored through its
//! doubled endpoints `(2i, 2j)`, which always share a parity. Support and
//! spectral parameter are then plain integers:
//! `supp = j - i`, `spar = i + j`, and `(2i, 2j) = (spar - supp, spar + supp)`.
//!
//! Order comparisons between endpoints follow the convention that `a < b`
//! means `b - a` is a positive *integer*; two segments whose endpoints differ
//! by a half-integer are never comparable, never overlap and never cover one
//! another.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Type `A_N` data: the rank `N` and Coxeter number `h = N + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankContext {
    n: i64,
}

impl RankContext {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Self { n })
    }

    /// Context with the given Coxeter number.
    pub fn with_h(h: i64) -> Result<Self> {
        Self::new(h - 1)
    }

    pub fn n(self) -> i64 {
        self.n
    }

    pub fn h(self) -> i64 {
        self.n + 1
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSegment", into = "RawSegment")]
pub struct Segment {
    ti: i64,
    tj: i64,
}

#[derive(Serialize, Deserialize)]
struct RawSegment {
    ti: i64,
    tj: i64,
}

impl TryFrom<RawSegment> for Segment {
    type Error = Error;

    fn try_from(raw: RawSegment) -> Result<Self> {
        Segment::new(raw.ti, raw.tj)
    }
}

impl From<Segment> for RawSegment {
    fn from(s: Segment) -> Self {
        RawSegment { ti: s.ti, tj: s.tj }
    }
}

/// Result of [`Segment::meet_join`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeetJoin {
    pub overlapping: bool,
    pub cap: Option<Segment>,
    pub cup: Option<Segment>,
}

impl Segment {
    /// Builds `[ti/2, tj/2]` from doubled endpoints.
    pub fn new(ti: i64, tj: i64) -> Result<Self> {
        if ti > tj {
            return Err(Error::InvalidSegment {
                ti,
                tj,
                reason: "left endpoint exceeds right endpoint",
            });
        }
        if (tj - ti) % 2 != 0 {
            return Err(Error::InvalidSegment {
                ti,
                tj,
                reason: "endpoints must differ by an integer",
            });
        }
        Ok(Self { ti, tj })
    }

    /// Integer segment `[i, j]`.
    ///
    /// Panics if `i > j`; meant for literals in tests and examples.
    pub fn int(i: i64, j: i64) -> Self {
        Self::new(2 * i, 2 * j).expect("integer segment literal with i > j")
    }

    pub fn from_supp_spar(supp: i64, spar: i64) -> Result<Self> {
        Self::new(spar - supp, spar + supp)
    }

    /// Doubled left endpoint `2i`.
    pub fn ti(self) -> i64 {
        self.ti
    }

    /// Doubled right endpoint `2j`.
    pub fn tj(self) -> i64 {
        self.tj
    }

    pub fn supp(self) -> i64 {
        (self.tj - self.ti) / 2
    }

    /// `i + j`, always an integer.
    pub fn spar(self) -> i64 {
        (self.ti + self.tj) / 2
    }

    pub fn spar_doubled(self) -> i64 {
        self.ti + self.tj
    }

    pub fn supp_spar(self) -> (i64, i64) {
        (self.supp(), self.spar())
    }

    pub fn is_segment(self, ctx: RankContext) -> bool {
        self.supp() <= ctx.h()
    }

    pub fn is_proper(self, ctx: RankContext) -> bool {
        let supp = self.supp();
        0 < supp && supp < ctx.h()
    }

    /// Whether both supports are in `{0, h}`, i.e. the fundamental l-weight is trivial.
    pub fn is_trivial(self, ctx: RankContext) -> bool {
        let supp = self.supp();
        supp == 0 || supp == ctx.h()
    }

    pub fn check_segment(self, ctx: RankContext) -> Result<Self> {
        if self.is_segment(ctx) {
            Ok(self)
        } else {
            Err(Error::NotNSegment { seg: self, h: ctx.h() })
        }
    }

    pub fn check_proper(self, ctx: RankContext) -> Result<Self> {
        if self.is_proper(ctx) {
            Ok(self)
        } else {
            Err(Error::NotProper { seg: self, h: ctx.h() })
        }
    }

    /// `s* = [j - h, i]`.
    pub fn right_dual(self, ctx: RankContext) -> Result<Self> {
        self.check_segment(ctx)?;
        Ok(Self {
            ti: self.tj - 2 * ctx.h(),
            tj: self.ti,
        })
    }

    /// `*s = [j, i + h]`.
    pub fn left_dual(self, ctx: RankContext) -> Result<Self> {
        self.check_segment(ctx)?;
        Ok(Self {
            ti: self.tj,
            tj: self.ti + 2 * ctx.h(),
        })
    }

    /// `[i + t, j + t]`.
    pub fn shift(self, t: i64) -> Self {
        Self {
            ti: self.ti + 2 * t,
            tj: self.tj + 2 * t,
        }
    }

    /// Endpoints differ by integers.
    pub fn aligned(self, other: Segment) -> bool {
        (self.ti - other.ti) % 2 == 0
    }

    /// Set intersection, when nonempty.
    pub fn intersection(self, other: Segment) -> Option<Segment> {
        if !self.aligned(other) {
            return None;
        }
        let ti = self.ti.max(other.ti);
        let tj = self.tj.min(other.tj);
        (ti <= tj).then_some(Segment { ti, tj })
    }

    /// Set union, when it is again an interval of `i + ℤ`.
    pub fn union(self, other: Segment) -> Option<Segment> {
        if !self.aligned(other) {
            return None;
        }
        // adjacent integer runs still merge: [0,1] ∪ [2,3] = [0,3]
        if self.ti.max(other.ti) > self.tj.min(other.tj) + 2 {
            return None;
        }
        Some(Segment {
            ti: self.ti.min(other.ti),
            tj: self.tj.max(other.tj),
        })
    }

    pub fn meet_join(self, other: Segment) -> MeetJoin {
        let cap = self.intersection(other);
        let cup = self.union(other);
        let overlapping = match (cap, cup) {
            (Some(_), Some(u)) => u != self && u != other,
            _ => false,
        };
        MeetJoin { overlapping, cap, cup }
    }

    /// `self ⊳ lower`: `i₁ < i₂ ≤ j₁ < j₂ ≤ h + i₁` with `lower = [i₁, j₁]`.
    pub fn covers(self, lower: Segment, ctx: RankContext) -> bool {
        self.aligned(lower) && lower.ti < self.ti && self.ti <= lower.tj && lower.tj < self.tj && self.tj <= 2 * ctx.h() + lower.ti
    }

    pub fn connected(self, other: Segment, ctx: RankContext) -> bool {
        self.covers(other, ctx) || other.covers(self, ctx)
    }

    /// Contains the point `x` given in doubled coordinates.
    pub fn contains_doubled(self, x: i64) -> bool {
        (x - self.ti) % 2 == 0 && self.ti <= x && x <= self.tj
    }

    pub fn is_empty_intersection(self, other: Segment) -> bool {
        self.intersection(other).is_none()
    }
}

/// Right and left corner subintervals `(s₁⌟s₂, s₁⌞s₂) = ([j₁, j₂], [i₁, i₂])` of a
/// covering pair `s₂ ⊳ s₁`.
pub fn corner_subintervals(s1: Segment, s2: Segment, ctx: RankContext) -> Result<(Segment, Segment)> {
    if !s2.covers(s1, ctx) {
        return Err(Error::NotCovering { upper: s2, lower: s1 });
    }
    Ok((Segment { ti: s1.tj, tj: s2.tj }, Segment { ti: s1.ti, tj: s2.ti }))
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by spectral parameter, then support.
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ti + self.tj, self.tj - self.ti).cmp(&(other.ti + other.tj, other.tj - other.ti))
    }
}

pub(crate) fn fmt_half(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        let sign = if doubled < 0 { "-" } else { "" };
        format!("{sign}{}.5", doubled.abs() / 2)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", fmt_half(self.ti), fmt_half(self.tj))
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Parses a half-integer, returning its double.
pub(crate) fn parse_half(text: &str, offset: usize) -> Result<i64> {
    let err = |msg: &str| Error::Parse {
        pos: offset,
        msg: format!("{msg}: {text:?}"),
    };
    let t = text.trim();
    if t.is_empty() {
        return Err(err("expected a number"));
    }
    let (neg, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, Some(f)),
        None => (body, None),
    };
    if whole.is_empty() || !whole.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("expected an integer or half-integer"));
    }
    let whole: i64 = whole.parse().map_err(|_| err("number out of range"))?;
    let half = match frac {
        None => 0,
        Some(f) if f.chars().all(|c| c == '0') && !f.is_empty() => 0,
        Some(f) if f.starts_with('5') && f[1..].chars().all(|c| c == '0') => 1,
        Some(_) => return Err(err("only .5 fractions are allowed")),
    };
    let doubled = 2 * whole + half;
    Ok(if neg { -doubled } else { doubled })
}

pub(crate) fn parse_segment_at(text: &str, offset: usize) -> Result<Segment> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (a, b) = t.split_once("..").ok_or_else(|| Error::Parse {
        pos: offset + lead,
        msg: format!("expected `<num>..<num>`, got {t:?}"),
    })?;
    let ti = parse_half(a, offset + lead)?;
    let tj = parse_half(b, offset + lead + a.len() + 2)?;
    Segment::new(ti, tj).map_err(|e| Error::Parse {
        pos: offset + lead,
        msg: e.to_string(),
    })
}

impl FromStr for Segment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_segment_at(s, 0)
    }
}

/// All N-segments (supports `0..=h`) whose spectral parameter lies in `spar_lo..=spar_hi`,
/// both alignment classes included.
pub fn segments_in_window(ctx: RankContext, spar_lo: i64, spar_hi: i64) -> Vec<Segment> {
    let mut out = Vec::new();
    for spar in spar_lo..=spar_hi {
        for supp in 0..=ctx.h() {
            out.push(Segment {
                ti: spar - supp,
                tj: spar + supp,
            });
        }
    }
    out
}

/// Proper segments of the window.
pub fn proper_segments_in_window(ctx: RankContext, spar_lo: i64, spar_hi: i64) -> Vec<Segment> {
    segments_in_window(ctx, spar_lo, spar_hi)
        .into_iter()
        .filter(|s| s.is_proper(ctx))
        .collect()
}
