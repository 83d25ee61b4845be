//! Ordered tuples of segments: ladders, slicing, covering, p-covers and the
//! entrywise `∩ / ∪ / ⋄` constructions.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::segment::{corner_subintervals, parse_segment_at, RankContext, Segment};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multisegment(Vec<Segment>);

impl Multisegment {
    pub fn new(entries: Vec<Segment>) -> Self {
        Self(entries)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Segment] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<Segment> {
        self.0
    }

    /// `s(k, m) = (s_{k+1}, …, s_m)`, requiring `0 ≤ k < m ≤ ℓ`.
    pub fn slice(&self, k: usize, m: usize) -> Result<Multisegment> {
        if k >= m || m > self.len() {
            return Err(Error::IndexOutOfRange(format!("slice({k}, {m}) of length {}", self.len())));
        }
        Ok(Self(self.0[k..m].to_vec()))
    }

    /// Like [`slice`](Self::slice) but `k == m` yields the empty multisegment.
    pub fn slice_or_empty(&self, k: usize, m: usize) -> Result<Multisegment> {
        if k == m && m <= self.len() {
            return Ok(Self::empty());
        }
        self.slice(k, m)
    }

    /// `s ∨ s'`.
    pub fn concat(&self, other: &Multisegment) -> Multisegment {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn push(&mut self, s: Segment) {
        self.0.push(s);
    }

    pub fn prepend(&self, s: Segment) -> Multisegment {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(s);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    /// Strictly increasing left and right endpoints (with integer gaps).
    pub fn is_ladder(&self) -> bool {
        self.0.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            a.aligned(b) && a.ti() < b.ti() && a.tj() < b.tj()
        })
    }

    pub fn is_connected_ladder(&self, ctx: RankContext) -> bool {
        self.is_ladder() && self.0.windows(2).all(|w| w[1].covers(w[0], ctx))
    }

    pub fn check_ladder(&self) -> Result<()> {
        if self.is_ladder() {
            Ok(())
        } else {
            Err(Error::NotLadder(self.to_string()))
        }
    }

    pub fn all_segments(&self, ctx: RankContext) -> bool {
        self.0.iter().all(|s| s.is_segment(ctx))
    }

    pub fn right_dual(&self, ctx: RankContext) -> Result<Multisegment> {
        self.0.iter().map(|s| s.right_dual(ctx)).collect::<Result<Vec<_>>>().map(Self)
    }

    pub fn left_dual(&self, ctx: RankContext) -> Result<Multisegment> {
        self.0.iter().map(|s| s.left_dual(ctx)).collect::<Result<Vec<_>>>().map(Self)
    }

    pub fn supports(&self) -> Vec<i64> {
        self.0.iter().map(|s| s.supp()).collect()
    }

    pub fn spars(&self) -> Vec<i64> {
        self.0.iter().map(|s| s.spar()).collect()
    }
}

fn check_same_len(a: &Multisegment, b: &Multisegment) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// `s ⊳ s'`: entrywise covering.
pub fn mcovers(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<bool> {
    check_same_len(s, sp)?;
    Ok(s.iter().zip(sp.iter()).all(|(&a, &b)| a.covers(b, ctx)))
}

fn covers_unchecked(s: &[Segment], sp: &[Segment], ctx: RankContext) -> bool {
    s.len() == sp.len() && s.iter().zip(sp).all(|(&a, &b)| a.covers(b, ctx))
}

/// `s ⊳_p s'`: `s(0, l-k) ⊳ s'(k, l)` for every `0 ≤ k ≤ p`.
pub fn p_cover(s: &Multisegment, sp: &Multisegment, p: usize, ctx: RankContext) -> Result<bool> {
    check_same_len(s, sp)?;
    let l = s.len();
    if p >= l {
        return Err(Error::IndexOutOfRange(format!("p = {p} must be below the length {l}")));
    }
    Ok((0..=p).all(|k| shifted_cover(s, sp, k, ctx)))
}

/// The single shifted condition `s(0, l-k) ⊳ s'(k, l)`.
pub fn shifted_cover(s: &Multisegment, sp: &Multisegment, k: usize, ctx: RankContext) -> bool {
    let l = s.len();
    k < l && sp.len() == l && covers_unchecked(&s.0[..l - k], &sp.0[k..], ctx)
}

/// Entrywise `(∩, ∪)` of a covering pair of equal-length slices.
fn cap_cup(upper: &[Segment], lower: &[Segment]) -> (Multisegment, Multisegment) {
    let mut cap = Vec::with_capacity(upper.len());
    let mut cup = Vec::with_capacity(upper.len());
    for (&a, &b) in upper.iter().zip(lower) {
        cap.push(a.intersection(b).expect("covering pairs intersect"));
        cup.push(a.union(b).expect("covering pairs have an interval union"));
    }
    (Multisegment(cap), Multisegment(cup))
}

/// `(s ∩_k s', s ∪_k s')`, built from `s(0, l-k)` and `s'(k, l)`.
///
/// Fails unless `s(0, l-k) ⊳ s'(k, l)`, which is the part of `s ⊳_k s'` the
/// construction needs.
pub fn diamond_k(s: &Multisegment, sp: &Multisegment, k: usize, ctx: RankContext) -> Result<(Multisegment, Multisegment)> {
    check_same_len(s, sp)?;
    let l = s.len();
    if k >= l {
        return Err(Error::IndexOutOfRange(format!("k = {k} must be below the length {l}")));
    }
    if !shifted_cover(s, sp, k, ctx) {
        return Err(Error::CoverFails(format!("{s} does not cover {sp} at shift {k}")));
    }
    Ok(cap_cup(&s.0[..l - k], &sp.0[k..]))
}

/// `s ⋄_k s' = (s ∩_k s') ∨ (s ∪_k s')`.
pub fn diamond_k_concat(s: &Multisegment, sp: &Multisegment, k: usize, ctx: RankContext) -> Result<Multisegment> {
    let (cap, cup) = diamond_k(s, sp, k, ctx)?;
    Ok(cap.concat(&cup))
}

/// `s ⋄ s'`.
pub fn diamond(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<Multisegment> {
    diamond_k_concat(s, sp, 0, ctx)
}

/// Entrywise corner subintervals `(s' ⌟ s, s' ⌞ s)` of `s ⊳ s'`.
pub fn mcorners(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<(Multisegment, Multisegment)> {
    check_same_len(s, sp)?;
    let mut right = Vec::with_capacity(s.len());
    let mut left = Vec::with_capacity(s.len());
    for (&upper, &lower) in s.iter().zip(sp.iter()) {
        let (r, l) = corner_subintervals(lower, upper, ctx)?;
        right.push(r);
        left.push(l);
    }
    Ok((Multisegment(right), Multisegment(left)))
}

impl Index<usize> for Multisegment {
    type Output = Segment;

    fn index(&self, i: usize) -> &Segment {
        &self.0[i]
    }
}

impl From<Vec<Segment>> for Multisegment {
    fn from(v: Vec<Segment>) -> Self {
        Self(v)
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Multisegment {
    type Item = &'a Segment;
    type IntoIter = std::slice::Iter<'a, Segment>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[0..3, 1..4]`; the brackets are optional and `[]` is the empty tuple.
impl FromStr for Multisegment {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let lead = text.len() - text.trim_start().len();
        let (body, offset) = match (trimmed.strip_prefix('['), trimmed.ends_with(']')) {
            (Some(rest), true) => (&rest[..rest.len() - 1], lead + 1),
            (None, false) => (trimmed, lead),
            _ => {
                return Err(Error::Parse {
                    pos: lead,
                    msg: "unbalanced brackets".into(),
                })
            }
        };
        if body.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut out = Vec::new();
        let mut pos = offset;
        for piece in body.split(',') {
            out.push(parse_segment_at(piece, pos)?);
            pos += piece.len() + 1;
        }
        Ok(Self(out))
    }
}
