//! Mukhin–Young paths `p: [0, h] → ℤ`, their corners and weights, and
//! non-crossing tuples of paths.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::multiseg::Multisegment;
use crate::segment::{RankContext, Segment};

/// Values `p(0), …, p(h)` with unit steps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Path(Vec<i64>);

impl TryFrom<Vec<i64>> for Path {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Path::new(v)
    }
}

impl From<Path> for Vec<i64> {
    fn from(p: Path) -> Self {
        p.0
    }
}

/// Local extrema of a path and the segments `s_{p,k}` they carry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Corners {
    /// Interior local minima.
    pub eplus: Vec<usize>,
    /// Interior local maxima.
    pub eminus: Vec<usize>,
    pub cplus: Vec<Segment>,
    pub cminus: Vec<Segment>,
}

impl Path {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::InvalidPath("a path needs at least three values".into()));
        }
        if let Some(k) = values.windows(2).position(|w| (w[1] - w[0]).abs() != 1) {
            return Err(Error::InvalidPath(format!("step {k} is not ±1")));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn h(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn at(&self, k: usize) -> i64 {
        self.0[k]
    }

    /// The segment `s` with `p ∈ ℙ_s`: `p(0) = 2j`, `p(h) = h + 2i`.
    pub fn segment(&self) -> Result<Segment> {
        let h = self.h();
        Segment::new(self.0[h as usize] - h, self.0[0])
    }

    pub fn is_member(&self, s: Segment, ctx: RankContext) -> bool {
        self.h() == ctx.h() && self.0[0] == s.tj() && self.0[ctx.h() as usize] == ctx.h() + s.ti()
    }

    /// `s_{p,k} = [(p(k) - k)/2, (p(k) + k)/2]`.
    pub fn segment_at(&self, k: usize) -> Segment {
        let v = self.0[k];
        let k = k as i64;
        Segment::new(v - k, v + k).expect("path values give segments")
    }

    pub fn is_local_min(&self, k: usize) -> bool {
        k >= 1 && k + 1 < self.0.len() && self.0[k - 1] == self.0[k] + 1 && self.0[k + 1] == self.0[k] + 1
    }

    pub fn is_local_max(&self, k: usize) -> bool {
        k >= 1 && k + 1 < self.0.len() && self.0[k - 1] == self.0[k] - 1 && self.0[k + 1] == self.0[k] - 1
    }

    pub fn corners(&self) -> Corners {
        let mut c = Corners::default();
        for k in 1..self.0.len() - 1 {
            if self.is_local_min(k) {
                c.eplus.push(k);
                c.cplus.push(self.segment_at(k));
            } else if self.is_local_max(k) {
                c.eminus.push(k);
                c.cminus.push(self.segment_at(k));
            }
        }
        c
    }

    /// Indices of interior local maxima.
    pub fn local_maxima(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.0.len() - 1).filter(|&k| self.is_local_max(k))
    }

    /// `τ_k p`: raises a local minimum by 2 or lowers a local maximum by 2.
    pub fn tau_flip(&self, k: usize) -> Result<Path> {
        let mut v = self.0.clone();
        if self.is_local_min(k) {
            v[k] += 2;
        } else if self.is_local_max(k) {
            v[k] -= 2;
        } else {
            return Err(Error::NotExtremum(k));
        }
        Ok(Self(v))
    }

    /// `ω(p) = ∏_{𝒸⁺} ω · ∏_{𝒸⁻} ω⁻¹`.
    pub fn omega(&self) -> LWeight {
        let c = self.corners();
        let pairs = c.cplus.iter().map(|&s| (s, 1)).chain(c.cminus.iter().map(|&s| (s, -1)));
        let ctx = RankContext::with_h(self.h()).expect("paths have h >= 2");
        LWeight::from_pairs(pairs, ctx).expect("corner segments are proper")
    }

    /// Pointwise `self ≤ other`.
    pub fn pointwise_le(&self, other: &Path) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Pointwise `self < other`.
    pub fn pointwise_lt(&self, other: &Path) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }
}

pub fn omega_of_path(p: &Path) -> LWeight {
    p.omega()
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

/// `|ℙ_s| = binom(h, supp s)`.
pub fn path_count(s: Segment, ctx: RankContext) -> Result<u64> {
    s.check_segment(ctx)?;
    Ok(binomial(ctx.h() as u64, s.supp() as u64))
}

/// Streams `ℙ_s` in lexicographic order of the step word, down steps first.
pub struct PathIter {
    start: i64,
    /// `true` for an up step.
    word: Vec<bool>,
    done: bool,
}

impl PathIter {
    fn current(&self) -> Path {
        let mut v = Vec::with_capacity(self.word.len() + 1);
        let mut x = self.start;
        v.push(x);
        for &up in &self.word {
            x += if up { 1 } else { -1 };
            v.push(x);
        }
        Path(v)
    }

    fn advance(&mut self) {
        // Next permutation of the step word with `false < true`.
        let w = &mut self.word;
        let Some(k) = (0..w.len().saturating_sub(1)).rev().find(|&k| !w[k] && w[k + 1]) else {
            self.done = true;
            return;
        };
        let m = (k + 1..w.len()).rev().find(|&m| w[m]).expect("an up step follows");
        w.swap(k, m);
        w[k + 1..].reverse();
    }
}

impl Iterator for PathIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        let p = self.current();
        self.advance();
        Some(p)
    }
}

pub fn enumerate_paths(s: Segment, ctx: RankContext) -> Result<PathIter> {
    s.check_segment(ctx)?;
    let h = ctx.h() as usize;
    let downs = s.supp() as usize;
    let word = (0..h).map(|k| k >= downs).collect();
    Ok(PathIter {
        start: s.tj(),
        word,
        done: false,
    })
}

pub fn all_paths(s: Segment, ctx: RankContext) -> Result<Vec<Path>> {
    Ok(enumerate_paths(s, ctx)?.collect())
}

/// `(p_s, p*_s)`: the pointwise smallest and largest members of `ℙ_s`.
pub fn extremal_paths(s: Segment, ctx: RankContext) -> Result<(Path, Path)> {
    s.check_segment(ctx)?;
    let h = ctx.h();
    let (supp, spar) = (s.supp(), s.spar());
    let high = (0..=h).map(|k| spar + (k - supp).abs()).collect();
    let low = (0..=h).map(|k| spar + h - (k - (h - supp)).abs()).collect();
    Ok((Path(high), Path(low)))
}

fn segment_value(s: Segment) -> (usize, i64) {
    (s.supp() as usize, s.spar())
}

/// `∪_{p ∈ ℙ_s} 𝒸⁺_p = {[m, n] : i ≤ m < j ≤ n < h + i}`.
pub fn is_upper_corner_of(corner: Segment, s: Segment, ctx: RankContext) -> bool {
    let h2 = 2 * ctx.h();
    corner.aligned(s) && s.ti() <= corner.ti() && corner.ti() < s.tj() && s.tj() <= corner.tj() && corner.tj() < h2 + s.ti()
}

/// `∪_{p ∈ ℙ_s} 𝒸⁻_p = {[m, n] : i < m ≤ j < n ≤ h + i}`.
pub fn is_lower_corner_of(corner: Segment, s: Segment, ctx: RankContext) -> bool {
    let h2 = 2 * ctx.h();
    corner.aligned(s) && s.ti() < corner.ti() && corner.ti() <= s.tj() && s.tj() < corner.tj() && corner.tj() <= h2 + s.ti()
}

/// The unique `p ∈ ℙ_s` with `𝒸⁻_p = {s1}`, for `s1 ⊳ s`.
pub fn peak_path(s: Segment, s1: Segment, ctx: RankContext) -> Result<Path> {
    s.check_proper(ctx)?;
    if !s1.covers(s, ctx) {
        return Err(Error::NotCovering { upper: s1, lower: s });
    }
    let (base, _) = extremal_paths(s, ctx)?;
    let (km, v) = segment_value(s1);
    let values = (0..base.0.len()).map(|k| base.0[k].max(v - (k as i64 - km as i64).abs())).collect();
    let p = Path::new(values)?;
    if p.corners().cminus != [s1] || !p.is_member(s, ctx) {
        return Err(Error::Internal(format!("peak path of {s} at {s1} came out as {p}")));
    }
    Ok(p)
}

/// The unique `p ∈ ℙ_{s1}` with `𝒸⁺_p = {s2}`, for `s2` an upper corner of `s1`.
pub fn valley_path(s1: Segment, s2: Segment, ctx: RankContext) -> Result<Path> {
    s1.check_proper(ctx)?;
    if !is_upper_corner_of(s2, s1, ctx) {
        return Err(Error::NotUpperCorner { corner: s2, seg: s1 });
    }
    let (_, top) = extremal_paths(s1, ctx)?;
    let (km, v) = segment_value(s2);
    let values = (0..top.0.len()).map(|k| top.0[k].min(v + (k as i64 - km as i64).abs())).collect();
    let p = Path::new(values)?;
    if p.corners().cplus != [s2] || !p.is_member(s1, ctx) {
        return Err(Error::Internal(format!("valley path of {s1} at {s2} came out as {p}")));
    }
    Ok(p)
}

/// One path per entry of a multisegment.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathTuple(pub Vec<Path>);

impl PathTuple {
    pub fn paths(&self) -> &[Path] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn omega(&self) -> LWeight {
        self.0.iter().map(Path::omega).product()
    }
}

impl fmt::Debug for PathTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

pub fn omega_of_tuple(t: &PathTuple) -> LWeight {
    t.omega()
}

/// `p_m(k) < p_{m+1}(k)` for all `k`, adjacent pairs only.
fn noncrossing_pointwise(paths: &[Path]) -> bool {
    paths.windows(2).all(|w| w[0].pointwise_lt(&w[1]))
}

/// `lower` and `upper` do not cross, tested at the local maxima of `lower`.
pub fn stays_above_at_maxima(lower: &Path, upper: &Path) -> bool {
    lower.local_maxima().all(|k| upper.0[k] > lower.0[k])
}

fn noncrossing_by_corners(paths: &[Path]) -> bool {
    paths.windows(2).all(|w| stays_above_at_maxima(&w[0], &w[1]))
}

fn check_shape(t: &PathTuple, m: &Multisegment, ctx: RankContext) -> Result<()> {
    if t.len() != m.len() {
        return Err(Error::LengthMismatch {
            left: t.len(),
            right: m.len(),
        });
    }
    for (p, &s) in t.0.iter().zip(m.iter()) {
        if !p.is_member(s, ctx) {
            return Err(Error::InvalidPath(format!("{p} is not in the path set of {s}")));
        }
    }
    Ok(())
}

/// `𝐩 ∈ ℙ_𝐬` by the pointwise non-crossing condition.
pub fn tuple_membership(t: &PathTuple, m: &Multisegment, ctx: RankContext) -> Result<bool> {
    check_shape(t, m, ctx)?;
    Ok(noncrossing_pointwise(&t.0))
}

/// `𝐩 ∈ ℙ_𝐬` tested only at the local maxima of each path.
pub fn tuple_membership_by_corners(t: &PathTuple, m: &Multisegment, ctx: RankContext) -> Result<bool> {
    check_shape(t, m, ctx)?;
    Ok(noncrossing_by_corners(&t.0))
}

/// Backtracking enumeration of `ℙ_𝐬` over per-entry path lists.
///
/// Yields index vectors into [`entry_paths`](Self::entry_paths); the
/// [`Iterator`] impl materializes whole tuples.
pub struct TupleEnumerator {
    lists: Vec<Vec<Path>>,
    stack: Vec<usize>,
    started: bool,
}

impl TupleEnumerator {
    pub fn new(m: &Multisegment, ctx: RankContext) -> Result<Self> {
        let lists = m.iter().map(|&s| all_paths(s, ctx)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            lists,
            stack: Vec::new(),
            started: false,
        })
    }

    pub fn entry_paths(&self) -> &[Vec<Path>] {
        &self.lists
    }

    fn fits(&self, depth: usize, idx: usize) -> bool {
        depth == 0 || stays_above_at_maxima(&self.lists[depth - 1][self.stack[depth - 1]], &self.lists[depth][idx])
    }

    /// Extends the stack from `depth` with the first admissible choice at or after `from`.
    fn descend(&mut self, mut depth: usize, mut from: usize) -> bool {
        let l = self.lists.len();
        loop {
            if depth == l {
                return true;
            }
            let found = (from..self.lists[depth].len()).find(|&idx| self.fits(depth, idx));
            match found {
                Some(idx) => {
                    self.stack.truncate(depth);
                    self.stack.push(idx);
                    depth += 1;
                    from = 0;
                }
                None => {
                    if depth == 0 {
                        return false;
                    }
                    depth -= 1;
                    from = self.stack[depth] + 1;
                    self.stack.truncate(depth);
                }
            }
        }
    }

    pub fn next_indices(&mut self) -> Option<&[usize]> {
        let l = self.lists.len();
        let ok = if !self.started {
            self.started = true;
            if l == 0 {
                return Some(&[]);
            }
            self.descend(0, 0)
        } else {
            if l == 0 || self.stack.is_empty() {
                return None;
            }
            let last = self.stack.pop().expect("non-empty stack");
            self.descend(l - 1, last + 1)
        };
        if ok {
            Some(&self.stack)
        } else {
            self.stack.clear();
            None
        }
    }
}

impl Iterator for TupleEnumerator {
    type Item = PathTuple;

    fn next(&mut self) -> Option<PathTuple> {
        let idx = self.next_indices()?.to_vec();
        Some(PathTuple(idx.iter().enumerate().map(|(d, &k)| self.lists[d][k].clone()).collect()))
    }
}

pub fn enumerate_tuples(m: &Multisegment, ctx: RankContext) -> Result<TupleEnumerator> {
    TupleEnumerator::new(m, ctx)
}

/// `(p^{s_1}_{s'_1}, …, p^{s_l}_{s'_l})`, the peak paths of an entrywise covering.
pub fn peak_tuple(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<PathTuple> {
    if s.len() != sp.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: sp.len(),
        });
    }
    s.iter()
        .zip(sp.iter())
        .map(|(&a, &b)| peak_path(b, a, ctx))
        .collect::<Result<Vec<_>>>()
        .map(PathTuple)
}

/// The tuple of highest paths `(p_{s_1}, …, p_{s_l})`.
pub fn highest_tuple(m: &Multisegment, ctx: RankContext) -> Result<PathTuple> {
    m.iter()
        .map(|&s| extremal_paths(s, ctx).map(|e| e.0))
        .collect::<Result<Vec<_>>>()
        .map(PathTuple)
}

/// The tuple of lowest paths `(p*_{s_1}, …, p*_{s_l})`.
pub fn lowest_tuple(m: &Multisegment, ctx: RankContext) -> Result<PathTuple> {
    m.iter()
        .map(|&s| extremal_paths(s, ctx).map(|e| e.1))
        .collect::<Result<Vec<_>>>()
        .map(PathTuple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lweight::{omega_of, omega_of_multiseg, DualSide};
    use crate::multiseg::{diamond, mcovers};
    use crate::segment::{proper_segments_in_window, segments_in_window};
    use std::collections::HashSet;

    fn ctx(h: i64) -> RankContext {
        RankContext::with_h(h).unwrap()
    }

    fn path(v: &[i64]) -> Path {
        Path::new(v.to_vec()).unwrap()
    }

    /// Every ±1 walk of length `h` from `2j`, filtered by the endpoint.
    fn brute_paths(s: Segment, c: RankContext) -> Vec<Path> {
        let h = c.h() as usize;
        let mut out = Vec::new();
        for mask in 0u32..(1 << h) {
            let mut v = vec![s.tj()];
            for k in 0..h {
                let up = mask & (1 << (h - 1 - k)) != 0;
                v.push(v[k] + if up { 1 } else { -1 });
            }
            if v[h] == c.h() + s.ti() {
                out.push(Path(v));
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for h in 2..=7 {
            let c = ctx(h);
            for s in segments_in_window(c, -1, 2) {
                let fast = all_paths(s, c).unwrap();
                assert_eq!(fast, brute_paths(s, c), "{s} h={h}");
                assert_eq!(fast.len() as u64, path_count(s, c).unwrap());
            }
        }
        assert_eq!(all_paths(Segment::int(0, 2), ctx(5)).unwrap().len(), 10);
        assert_eq!(all_paths(Segment::int(0, 4), ctx(4)).unwrap(), vec![path(&[8, 7, 6, 5, 4])]);
        assert!(all_paths(Segment::int(0, 5), ctx(4)).is_err());
    }

    #[test]
    fn paths_respect_the_cone_bounds() {
        for h in 2..=6 {
            let c = ctx(h);
            for s in segments_in_window(c, 0, 1) {
                for p in all_paths(s, c).unwrap() {
                    for k in 0..=h {
                        let v = p.at(k as usize);
                        assert!(v >= (s.tj() - k).max(k + s.ti()) && v <= (k + s.tj()).min(2 * h + s.ti() - k));
                    }
                }
            }
        }
    }

    #[test]
    fn extremal_examples() {
        let c = ctx(4);
        let s = Segment::int(0, 2);
        let (hi, lo) = extremal_paths(s, c).unwrap();
        assert_eq!(hi, path(&[4, 3, 2, 3, 4]));
        assert_eq!(lo, path(&[4, 5, 6, 5, 4]));
        assert!(hi.corners().cminus.is_empty());
        assert!(lo.corners().cplus.is_empty());
        let star = omega_of(s, c).unwrap().star_dual(DualSide::Left, c).unwrap();
        assert_eq!(lo.omega(), star.inv());
        assert_eq!(hi.omega(), omega_of(s, c).unwrap());
    }

    #[test]
    fn extremal_paths_sandwich_everything() {
        for h in 2..=6 {
            let c = ctx(h);
            for s in segments_in_window(c, 0, 1) {
                let (hi, lo) = extremal_paths(s, c).unwrap();
                let all = all_paths(s, c).unwrap();
                assert!(all.contains(&hi) && all.contains(&lo));
                for p in &all {
                    assert!(hi.pointwise_le(p) && p.pointwise_le(&lo));
                }
                if s.is_proper(c) {
                    assert_eq!(hi.omega(), omega_of(s, c).unwrap());
                    let star = omega_of(s, c).unwrap().star_dual(DualSide::Left, c).unwrap();
                    assert_eq!(lo.omega(), star.inv());
                }
            }
        }
    }

    #[test]
    fn corner_examples() {
        let p = path(&[4, 3, 2, 3, 4]);
        let c = p.corners();
        assert_eq!(c.eplus, vec![2]);
        assert_eq!(c.cplus, vec![Segment::int(0, 2)]);
        assert!(c.cminus.is_empty());
        assert_eq!(p.tau_flip(2).unwrap(), path(&[4, 3, 4, 3, 4]));
        assert_eq!(p.tau_flip(2).unwrap().tau_flip(2).unwrap(), p);
        assert!(p.tau_flip(1).is_err());
        assert!(p.tau_flip(0).is_err());
    }

    #[test]
    fn tau_flip_moves_corners_by_a_unit_shift() {
        for h in 2..=5 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, 0, 1) {
                for p in all_paths(s, c).unwrap() {
                    let corners = p.corners();
                    for (&k, &seg) in corners.eplus.iter().zip(&corners.cplus) {
                        let q = p.tau_flip(k).unwrap();
                        assert!(q.is_member(s, c));
                        assert!(q.corners().cminus.contains(&seg.shift(1)));
                        assert_eq!(q.tau_flip(k).unwrap(), p);
                        assert_eq!(q.omega(), p.omega().div(&crate::lweight::simple_lroot(seg, c).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn omega_is_injective_on_small_path_sets() {
        for h in 2..=7 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, 0, 1) {
                let weights: HashSet<LWeight> = all_paths(s, c).unwrap().iter().map(Path::omega).collect();
                assert_eq!(weights.len() as u64, path_count(s, c).unwrap());
            }
        }
    }

    #[test]
    fn weights_have_unit_exponents() {
        for h in 2..=6 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, 0, 1) {
                for p in all_paths(s, c).unwrap() {
                    assert!(p.omega().terms().iter().all(|&(_, e)| e == 1 || e == -1));
                }
            }
        }
    }

    #[test]
    fn peak_path_example() {
        let c = ctx(7);
        let p = peak_path(Segment::int(0, 3), Segment::int(1, 4), c).unwrap();
        let expected = omega_of(Segment::int(1, 3), c)
            .unwrap()
            .mul(&omega_of(Segment::int(0, 4), c).unwrap())
            .div(&omega_of(Segment::int(1, 4), c).unwrap());
        assert_eq!(p.omega(), expected);
        assert!(peak_path(Segment::int(1, 4), Segment::int(0, 3), c).is_err());
    }

    #[test]
    fn peak_path_at_left_dual_is_lowest() {
        for h in 2..=6 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, 0, 1) {
                let d = s.left_dual(c).unwrap();
                if d.covers(s, c) {
                    assert_eq!(peak_path(s, d, c).unwrap(), extremal_paths(s, c).unwrap().1);
                }
            }
        }
    }

    #[test]
    fn valley_path_at_itself_is_highest() {
        let c = ctx(4);
        let s = Segment::int(0, 2);
        assert_eq!(valley_path(s, s, c).unwrap(), extremal_paths(s, c).unwrap().0);
        assert!(valley_path(s, Segment::int(-1, 2), c).is_err());
    }

    #[test]
    fn peak_and_valley_paths_are_unique_with_predicted_corners() {
        for h in 2..=5 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, 0, 1) {
                let paths = all_paths(s, c).unwrap();
                for t in proper_segments_in_window(c, -3 * h, 3 * h) {
                    if t.covers(s, c) {
                        let hits: Vec<_> = paths.iter().filter(|p| p.corners().cminus == [t]).collect();
                        assert_eq!(hits.len(), 1);
                        assert_eq!(*hits[0], peak_path(s, t, c).unwrap());
                        let mut want: Vec<Segment> = [t.union(s), t.intersection(s)]
                            .into_iter()
                            .flatten()
                            .filter(|x| x.is_proper(c))
                            .collect();
                        want.sort();
                        let mut got = hits[0].corners().cplus;
                        got.sort();
                        assert_eq!(got, want);
                        let pair = diamond(&Multisegment::new(vec![t]), &Multisegment::new(vec![s]), c).unwrap();
                        assert_eq!(hits[0].omega(), omega_of_multiseg(&pair, c).unwrap().div(&omega_of(t, c).unwrap()));
                    }
                    if is_upper_corner_of(t, s, c) {
                        let hits: Vec<_> = paths.iter().filter(|p| p.corners().cplus == [t]).collect();
                        assert_eq!(hits.len(), 1);
                        assert_eq!(*hits[0], valley_path(s, t, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn tuple_examples() {
        let c = ctx(7);
        let s: Multisegment = "[1..4, 2..5]".parse().unwrap();
        let sp: Multisegment = "[-1..2, 0..3]".parse().unwrap();
        let peaks = peak_tuple(&s, &sp, c).unwrap();
        assert!(tuple_membership(&peaks, &sp, c).unwrap());
        let pi0 = omega_of_multiseg(&diamond(&s, &sp, c).unwrap(), c).unwrap();
        assert_eq!(omega_of_multiseg(&s, c).unwrap().mul(&peaks.omega()), pi0);
        let hi = highest_tuple(&sp, c).unwrap();
        assert_eq!(hi.omega(), omega_of_multiseg(&sp, c).unwrap());
        assert!(tuple_membership(&hi, &s, c).is_err());
        let single: Multisegment = "[0..2]".parse().unwrap();
        assert_eq!(enumerate_tuples(&single, ctx(5)).unwrap().count(), 10);
        assert_eq!(enumerate_tuples(&Multisegment::empty(), c).unwrap().count(), 1);
    }

    fn ladders2(c: RankContext, lo: i64, hi: i64) -> Vec<Multisegment> {
        let segs = proper_segments_in_window(c, lo, hi);
        let mut out = Vec::new();
        for &a in &segs {
            for &b in &segs {
                let m = Multisegment::new(vec![a, b]);
                if m.is_ladder() {
                    out.push(m);
                }
            }
        }
        out
    }

    #[test]
    fn enumerated_tuples_match_filtered_products() {
        let c = ctx(4);
        for m in ladders2(c, 0, 6) {
            let lists: Vec<_> = m.iter().map(|&s| all_paths(s, c).unwrap()).collect();
            let mut brute = Vec::new();
            for a in &lists[0] {
                for b in &lists[1] {
                    let t = PathTuple(vec![a.clone(), b.clone()]);
                    let by_points = tuple_membership(&t, &m, c).unwrap();
                    assert_eq!(by_points, tuple_membership_by_corners(&t, &m, c).unwrap());
                    if by_points {
                        brute.push(t);
                    }
                }
            }
            let fast: Vec<_> = enumerate_tuples(&m, c).unwrap().collect();
            assert_eq!(fast, brute, "{m}");
        }
    }

    #[test]
    fn peak_tuples_of_coverings_are_members() {
        for h in 3..=6 {
            let c = ctx(h);
            let uppers = ladders2(c, 0, 6);
            let lowers = ladders2(c, -2 * h, 6);
            for s in &uppers {
                for sp in &lowers {
                    if mcovers(s, sp, c).unwrap() {
                        let t = peak_tuple(s, sp, c).unwrap();
                        assert!(tuple_membership(&t, sp, c).unwrap(), "{s} {sp}");
                    }
                }
            }
        }
    }

    #[test]
    fn no_path_has_two_connected_corners() {
        for h in 2..=6 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, 0, 1) {
                for p in all_paths(s, c).unwrap() {
                    let cs = p.corners();
                    let all: Vec<Segment> = cs.cplus.iter().chain(&cs.cminus).copied().collect();
                    for (x, &a) in all.iter().enumerate() {
                        for &b in &all[x + 1..] {
                            assert!(!a.connected(b, c), "{p}: {a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn path_json_and_validation() {
        let p = path(&[4, 3, 2, 3, 4]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[4,3,2,3,4]");
        assert_eq!(serde_json::from_str::<Path>("[4,3,2,3,4]").unwrap(), p);
        assert!(serde_json::from_str::<Path>("[4,2]").is_err());
        assert_eq!(p.segment().unwrap(), Segment::int(0, 2));
        assert_eq!(p.to_string(), "(4,3,2,3,4)");
    }
}
