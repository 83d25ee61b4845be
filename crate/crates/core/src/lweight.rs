//! The free abelian group of ℓ-weights generated by the fundamental `ω_{i,j}`,
//! simple ℓ-roots, duality and the dominance order.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiseg::Multisegment;
use crate::segment::{parse_segment_at, RankContext, Segment};

/// Sparse exponent vector, sorted by `(spar, supp)` with no zero entries.
///
/// Generators with support `0` or `h` are dropped when weights are built
/// through a [`RankContext`]; [`LWeight::normalize`] does the same for
/// weights that were parsed or deserialized without one.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LWeight(Vec<(Segment, i32)>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualSide {
    Left,
    Right,
}

impl LWeight {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `ω_s`, or the identity when `s` is trivial.
    pub fn generator(s: Segment, ctx: RankContext) -> Result<Self> {
        s.check_segment(ctx)?;
        Ok(if s.is_trivial(ctx) { Self::one() } else { Self(vec![(s, 1)]) })
    }

    /// Builds a weight from arbitrary `(segment, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (Segment, i32)>>(pairs: I, ctx: RankContext) -> Result<Self> {
        let mut map: Vec<(Segment, i32)> = Vec::new();
        for (s, e) in pairs {
            s.check_segment(ctx)?;
            if !s.is_trivial(ctx) {
                map.push((s, e));
            }
        }
        Ok(Self::collect_unsorted(map))
    }

    fn collect_unsorted(mut v: Vec<(Segment, i32)>) -> Self {
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Segment, i32)> = Vec::with_capacity(v.len());
        for (s, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == s => last.1 += e,
                _ => out.push((s, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Self(out)
    }

    /// Validates every key against `ctx` and drops trivial generators.
    pub fn normalize(&self, ctx: RankContext) -> Result<Self> {
        Self::from_pairs(self.0.iter().copied(), ctx)
    }

    pub fn terms(&self) -> &[(Segment, i32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, s: Segment) -> i32 {
        self.0.binary_search_by(|probe| probe.0.cmp(&s)).map(|k| self.0[k].1).unwrap_or(0)
    }

    pub fn mul(&self, other: &LWeight) -> LWeight {
        merge(&self.0, &other.0, 1)
    }

    pub fn div(&self, other: &LWeight) -> LWeight {
        merge(&self.0, &other.0, -1)
    }

    pub fn inv(&self) -> LWeight {
        Self(self.0.iter().map(|&(s, e)| (s, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> LWeight {
        if k == 0 {
            return Self::one();
        }
        Self(self.0.iter().map(|&(s, e)| (s, e * k)).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&(_, e)| e > 0)
    }

    pub fn min_spar(&self) -> Option<i64> {
        self.0.first().map(|(s, _)| s.spar())
    }

    pub fn max_spar(&self) -> Option<i64> {
        self.0.last().map(|(s, _)| s.spar())
    }

    /// Generator-wise `s ↦ s*` or `s ↦ *s`.
    pub fn star_dual(&self, side: DualSide, ctx: RankContext) -> Result<LWeight> {
        let mut v = Vec::with_capacity(self.0.len());
        for &(s, e) in &self.0 {
            let d = match side {
                DualSide::Left => s.left_dual(ctx)?,
                DualSide::Right => s.right_dual(ctx)?,
            };
            v.push((d, e));
        }
        Ok(Self::collect_unsorted(v))
    }
}

fn merge(a: &[(Segment, i32)], b: &[(Segment, i32)], sign: i32) -> LWeight {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].0.cmp(&b[y].0) {
            std::cmp::Ordering::Less => {
                out.push(a[x]);
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[y].0, sign * b[y].1));
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = a[x].1 + sign * b[y].1;
                if e != 0 {
                    out.push((a[x].0, e));
                }
                x += 1;
                y += 1;
            }
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend(b[y..].iter().map(|&(s, e)| (s, sign * e)));
    LWeight(out)
}

impl Mul for &LWeight {
    type Output = LWeight;

    fn mul(self, rhs: &LWeight) -> LWeight {
        LWeight::mul(self, rhs)
    }
}

impl Div for &LWeight {
    type Output = LWeight;

    fn div(self, rhs: &LWeight) -> LWeight {
        LWeight::div(self, rhs)
    }
}

impl<'a> std::iter::Product<&'a LWeight> for LWeight {
    fn product<I: Iterator<Item = &'a LWeight>>(iter: I) -> LWeight {
        iter.fold(LWeight::one(), |acc, w| acc.mul(w))
    }
}

impl std::iter::Product for LWeight {
    fn product<I: Iterator<Item = LWeight>>(iter: I) -> LWeight {
        iter.fold(LWeight::one(), |acc, w| acc.mul(&w))
    }
}

/// `ω_s`.
pub fn omega_of(s: Segment, ctx: RankContext) -> Result<LWeight> {
    LWeight::generator(s, ctx)
}

/// `ω_𝐬 = ∏ ω_{s_k}`.
pub fn omega_of_multiseg(m: &Multisegment, ctx: RankContext) -> Result<LWeight> {
    LWeight::from_pairs(m.iter().map(|&s| (s, 1)), ctx)
}

/// `α_{i,j} = ω_{i,j} ω_{i+1,j+1} (ω_{i+1,j} ω_{i,j+1})⁻¹` for proper `[i, j]`.
pub fn simple_lroot(s: Segment, ctx: RankContext) -> Result<LWeight> {
    s.check_proper(ctx)?;
    let (ti, tj) = (s.ti(), s.tj());
    let seg = |a: i64, b: i64| Segment::new(a, b).expect("stencil corners are segments");
    LWeight::from_pairs(
        [
            (seg(ti, tj), 1),
            (seg(ti + 2, tj + 2), 1),
            (seg(ti + 2, tj), -1),
            (seg(ti, tj + 2), -1),
        ],
        ctx,
    )
}

/// Coefficients of a product of simple ℓ-roots, keyed by proper segments.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LRootVector(Vec<(Segment, i32)>);

impl LRootVector {
    pub fn from_pairs<I: IntoIterator<Item = (Segment, i32)>>(pairs: I) -> Self {
        Self(LWeight::collect_unsorted(pairs.into_iter().collect()).0)
    }

    pub fn coefficients(&self) -> &[(Segment, i32)] {
        &self.0
    }

    pub fn coefficient(&self, s: Segment) -> i32 {
        self.0.binary_search_by(|probe| probe.0.cmp(&s)).map(|k| self.0[k].1).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership in `𝒬⁺`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&(_, c)| c >= 0)
    }

    /// `∏ α_s^{n(s)}`.
    pub fn to_lweight(&self, ctx: RankContext) -> Result<LWeight> {
        let mut acc = Vec::new();
        for &(s, c) in &self.0 {
            acc.extend(simple_lroot(s, ctx)?.0.into_iter().map(|(t, e)| (t, e * c)));
        }
        Ok(LWeight::collect_unsorted(acc))
    }
}

/// The unique `n` with `g = ∏ α_s^{n(s)}`, or `None` when `g` is not in the
/// root lattice (or carries a generator that is not proper in `ctx`).
///
/// Each alignment class is solved separately, row by row in the left
/// endpoint `a`. Writing `c(a, b)` for the exponent of `ω_{a,b}`,
/// `c(a, b) = n(a, b) + n(a-1, b-1) - n(a-1, b) - n(a, b-1)` on the proper
/// band, so rows `a_min .. a_max - 1` determine `n`, and the last row of
/// `c` must be reproduced with `n(a_max, ·) = 0`.
pub fn decompose_lroots(g: &LWeight, ctx: RankContext) -> Option<LRootVector> {
    let h = ctx.h();
    if g.0.iter().any(|(s, _)| !s.is_proper(ctx)) {
        return None;
    }
    let mut out = Vec::new();
    for class in 0..2 {
        let terms: HashMap<(i64, i64), i32> =
            g.0.iter()
                .filter(|(s, _)| s.ti().rem_euclid(2) == class)
                .map(|&(s, e)| ((s.ti(), s.supp()), e))
                .collect();
        if terms.is_empty() {
            continue;
        }
        let a_min = terms.keys().map(|k| k.0).min().unwrap();
        let a_max = terms.keys().map(|k| k.0).max().unwrap();
        let c = |a: i64, d: i64| terms.get(&(a, d)).copied().unwrap_or(0);
        // Row vectors indexed by support 0..=h; entries 0 and h stay zero.
        let mut prev = vec![0i32; (h + 1) as usize];
        let mut a = a_min;
        while a < a_max {
            let mut row = vec![0i32; (h + 1) as usize];
            for d in 1..h {
                let du = d as usize;
                // n(a-1, b-1) has support d, n(a-1, b) has d+1, n(a, b-1) has d-1.
                let v = c(a, d) - prev[du] + prev[du + 1] + row[du - 1];
                row[du] = v;
                if v != 0 {
                    out.push((Segment::new(a, a + 2 * d).expect("band entries are segments"), v));
                }
            }
            prev = row;
            a += 2;
        }
        for d in 1..h {
            let du = d as usize;
            if c(a_max, d) != prev[du] - prev[du + 1] {
                return None;
            }
        }
    }
    Some(LRootVector::from_pairs(out))
}

/// `a ≤ b` iff `b a⁻¹` is a non-negative combination of simple ℓ-roots.
pub fn leq(a: &LWeight, b: &LWeight, ctx: RankContext) -> bool {
    decompose_lroots(&b.div(a), ctx).is_some_and(|n| n.is_nonnegative())
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "w[{s}]^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LRootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (s, c)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*a[{s}]")?;
        }
        Ok(())
    }
}

/// Parses `w[-1..2]^1 * w[1..3]^-1`; `^1` may be omitted and `1` is the identity.
///
/// The result is not normalized; call [`LWeight::normalize`] with a context.
impl FromStr for LWeight {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.trim() == "1" {
            return Ok(Self::one());
        }
        let mut pairs = Vec::new();
        let mut pos = 0;
        for piece in text.split('*') {
            let lead = piece.len() - piece.trim_start().len();
            let t = piece.trim();
            let at = pos + lead;
            let body = t.strip_prefix("w[").ok_or_else(|| Error::Parse {
                pos: at,
                msg: format!("expected `w[..]`, got {t:?}"),
            })?;
            let close = body.find(']').ok_or_else(|| Error::Parse {
                pos: at,
                msg: "missing `]`".into(),
            })?;
            let seg = parse_segment_at(&body[..close], at + 2)?;
            let rest = body[close + 1..].trim();
            let e = if rest.is_empty() {
                1
            } else {
                let num = rest.strip_prefix('^').ok_or_else(|| Error::Parse {
                    pos: at + close + 3,
                    msg: format!("expected `^`, got {rest:?}"),
                })?;
                num.trim().parse::<i32>().map_err(|_| Error::Parse {
                    pos: at + close + 4,
                    msg: format!("bad exponent {num:?}"),
                })?
            };
            pairs.push((seg, e));
            pos += piece.len() + 1;
        }
        Ok(Self::collect_unsorted(pairs))
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    segment: Segment,
    exponent: i32,
}

impl Serialize for LWeight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|&(segment, exponent)| Term { segment, exponent }))
    }
}

impl<'de> Deserialize<'de> for LWeight {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        Ok(Self::collect_unsorted(terms.into_iter().map(|t| (t.segment, t.exponent)).collect()))
    }
}

impl Serialize for LRootVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|&(segment, exponent)| Term { segment, exponent }))
    }
}
