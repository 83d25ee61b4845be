//! Counting covering pairs and 1-covers of ladders, the flags that classify
//! them, diagram-subalgebra windows and two explicit constructions.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::socle_weight;
use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::multiseg::{mcovers, p_cover, Multisegment};
use crate::segment::{corner_subintervals, RankContext, Segment};

/// `|C(s)| = supp(s) supp(s*)`.
pub fn cover_count_formula(s: Segment, ctx: RankContext) -> i64 {
    s.supp() * (ctx.h() - s.supp())
}

/// `|C₁(s)| = (supp(s) - 1)(supp(s*) - 1)`.
pub fn cover1_count_formula(s: Segment, ctx: RankContext) -> i64 {
    (s.supp() - 1) * (ctx.h() - s.supp() - 1)
}

/// Segments whose doubled endpoints lie in `lo..=hi` and have the parity of `lo`.
fn segments_in_box(lo: i64, hi: i64) -> impl Iterator<Item = Segment> {
    (lo..=hi)
        .step_by(2)
        .flat_map(move |ti| (ti..=hi).step_by(2).map(move |tj| Segment::new(ti, tj).expect("ordered endpoints")))
}

/// `C(s) = {s' : s ⊳ s'}` and the subset `C₁(s)` with
/// `i ≤ j' < j - 1` and `j - h ≤ i' < i - 1`.
pub fn covered_sets(s: Segment, ctx: RankContext) -> Result<(Vec<Segment>, Vec<Segment>)> {
    s.check_proper(ctx)?;
    let h2 = 2 * ctx.h();
    let c: Vec<Segment> = segments_in_box(s.tj() - h2 - 2, s.tj() + 2).filter(|&t| s.covers(t, ctx)).collect();
    let c1 = c
        .iter()
        .copied()
        .filter(|t| s.ti() <= t.tj() && t.tj() < s.tj() - 2 && s.tj() - h2 <= t.ti() && t.ti() < s.ti() - 2)
        .collect();
    Ok((c, c1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionFlags {
    /// `j₁' < i₂` and `j₂ - i₁' > h`.
    pub almostdual: bool,
    /// `s₂ ∩ s₁' = ∅` and `*s₂ ∩ *s₁' = ∅`.
    pub almostdual_disjoint: bool,
    /// Both multisegments are runs of unit shifts.
    pub kr: bool,
    /// `supp(s₁ ∩ s₁')` is the least and `supp(s₁ ∪ s₁')` the largest entrywise value.
    pub minmax: bool,
}

fn is_unit_run(m: &Multisegment) -> bool {
    m.entries().windows(2).all(|w| w[1] == w[0].shift(1))
}

pub fn condition_flags(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<ConditionFlags> {
    if s.len() != sp.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: sp.len(),
        });
    }
    if s.len() < 2 {
        return Err(Error::IndexOutOfRange(format!(
            "condition flags need length at least 2, got {}",
            s.len()
        )));
    }
    let h2 = 2 * ctx.h();
    let (s2, s1p) = (s[1], sp[0]);
    let almostdual = s1p.tj() < s2.ti() && s2.tj() - s1p.ti() > h2;
    let almostdual_disjoint = s2.is_empty_intersection(s1p) && s2.left_dual(ctx)?.is_empty_intersection(s1p.left_dual(ctx)?);
    let kr = is_unit_run(s) && is_unit_run(sp);
    let caps: Option<Vec<i64>> = s
        .iter()
        .zip(sp.iter())
        .map(|(a, b)| a.intersection(*b).map(Segment::supp))
        .collect();
    let cups: Option<Vec<i64>> = s.iter().zip(sp.iter()).map(|(a, b)| a.union(*b).map(Segment::supp)).collect();
    let minmax = match (caps, cups) {
        (Some(c), Some(u)) => c.iter().min() == Some(&c[0]) && u.iter().max() == Some(&u[0]),
        _ => false,
    };
    Ok(ConditionFlags {
        almostdual,
        almostdual_disjoint,
        kr,
        minmax,
    })
}

/// A 1-covering completion `((s₁, s₂), (s₁', s₂'))` of a seed pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Completion {
    pub s2: Segment,
    pub s2p: Segment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub s1: Segment,
    pub s1p: Segment,
    pub pairs: Vec<Completion>,
    pub flags: Vec<ConditionFlags>,
    pub count_enumerated: u64,
    pub count_formula: i64,
}

/// Closed form for `|C₁(s₁, s₁')|`:
/// `¼ (supp(s₁'⌟s₁) - 1)(supp(s₁'⌞s₁) - 1)(supp(*s₁) + supp(*s₁ ∩ *s₁'))(supp(s₁) + supp(s₁ ∩ s₁'))`.
pub fn c1_count_formula(s1: Segment, s1p: Segment, ctx: RankContext) -> Result<i64> {
    let (right, left) = corner_subintervals(s1p, s1, ctx)?;
    let (d1, d1p) = (s1.left_dual(ctx)?, s1p.left_dual(ctx)?);
    let dual_cap = d1.intersection(d1p).map_or(0, Segment::supp);
    let cap = s1.intersection(s1p).map_or(0, Segment::supp);
    let num = (right.supp() - 1) * (left.supp() - 1) * (d1.supp() + dual_cap) * (s1.supp() + cap);
    if num % 4 != 0 {
        return Err(Error::Internal(format!("count for {s1}, {s1p} is not an integer")));
    }
    Ok(num / 4)
}

fn is_one_cover(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> bool {
    s.is_ladder() && sp.is_ladder() && p_cover(s, sp, 1, ctx).unwrap_or(false)
}

/// Appends every `(s_l, s_l')` keeping both tuples ladders with `⊳₁`, by
/// testing the defining predicates on a box that must contain all solutions.
fn extensions_brute(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Vec<Completion> {
    let h2 = 2 * ctx.h();
    let last = s[s.len() - 1];
    // s_{l-1} ⊳ s_l' confines s_l', and s_l ⊳ s_l' then confines s_l.
    let lower: Vec<Segment> = segments_in_box(last.tj() - h2 - 2, last.tj() + 2).collect();
    let upper: Vec<Segment> = segments_in_box(last.tj() - h2 - 2, last.tj() + h2 + 2).collect();
    let mut out = Vec::new();
    let mut ts = s.clone();
    let mut tsp = sp.clone();
    ts.push(last);
    tsp.push(last);
    let l = ts.len();
    for &a in &upper {
        let mut ts2 = ts.clone().into_vec();
        ts2[l - 1] = a;
        let ts2 = Multisegment::new(ts2);
        if !ts2.is_ladder() {
            continue;
        }
        for &b in &lower {
            let mut tsp2 = tsp.clone().into_vec();
            tsp2[l - 1] = b;
            let tsp2 = Multisegment::new(tsp2);
            if is_one_cover(&ts2, &tsp2, ctx) {
                out.push(Completion { s2: a, s2p: b });
            }
        }
    }
    out.sort();
    out
}

/// The explicit description: `i₁' < i₂' < i₁`, `j₁' < j₂' < j₁`, then
/// `i₁ < i₂ ≤ j₂'` and `j₁ < j₂ ≤ h + i₂'`.
fn c1_pairs_by_chains(s1: Segment, s1p: Segment, ctx: RankContext) -> Vec<Completion> {
    let h2 = 2 * ctx.h();
    let mut out = Vec::new();
    let mut ti2p = s1p.ti() + 2;
    while ti2p < s1.ti() {
        let mut tj2p = s1p.tj() + 2;
        while tj2p < s1.tj() {
            let s2p = Segment::new(ti2p, tj2p).expect("ordered chain endpoints");
            let mut ti2 = s1.ti() + 2;
            while ti2 <= tj2p {
                let mut tj2 = s1.tj() + 2;
                while tj2 <= h2 + ti2p {
                    out.push(Completion {
                        s2: Segment::new(ti2, tj2).expect("ordered chain endpoints"),
                        s2p,
                    });
                    tj2 += 2;
                }
                ti2 += 2;
            }
            tj2p += 2;
        }
        ti2p += 2;
    }
    out.sort();
    out
}

/// `C₁(s₁, s₁')`, enumerated by brute force and by the explicit chains,
/// with the closed-form count alongside.
pub fn c1_pairs(s1: Segment, s1p: Segment, ctx: RankContext) -> Result<CensusRecord> {
    if !s1.covers(s1p, ctx) {
        return Err(Error::NotCovering { upper: s1, lower: s1p });
    }
    let seed = Multisegment::new(vec![s1]);
    let seedp = Multisegment::new(vec![s1p]);
    let pairs = extensions_brute(&seed, &seedp, ctx);
    let chains = c1_pairs_by_chains(s1, s1p, ctx);
    if pairs != chains {
        return Err(Error::Internal(format!(
            "enumerations of C1({s1}, {s1p}) disagree: {} by predicates, {} by chains",
            pairs.len(),
            chains.len()
        )));
    }
    let flags = pairs
        .iter()
        .map(|c| condition_flags(&Multisegment::new(vec![s1, c.s2]), &Multisegment::new(vec![s1p, c.s2p]), ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusRecord {
        s1,
        s1p,
        count_enumerated: pairs.len() as u64,
        count_formula: c1_count_formula(s1, s1p, ctx)?,
        pairs,
        flags,
    })
}

/// `C₁(𝐬, 𝐬')`: one-step extensions of a seed pair keeping ladders and `⊳₁`.
///
/// A length-1 seed needs `s₁ ⊳ s₁'` and gives `C₁(s₁, s₁')`; longer seeds
/// must already satisfy `𝐬 ⊳₁ 𝐬'`. Empty seeds are rejected.
pub fn c1_extensions(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<Vec<Completion>> {
    if s.len() != sp.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: sp.len(),
        });
    }
    match s.len() {
        0 => return Err(Error::IndexOutOfRange("the seed pair must be non-empty".into())),
        1 => {
            if !s[0].covers(sp[0], ctx) {
                return Err(Error::NotCovering { upper: s[0], lower: sp[0] });
            }
        }
        _ => {
            if !is_one_cover(s, sp, ctx) {
                return Err(Error::CoverFails(format!("{s} does not 1-cover {sp}")));
            }
        }
    }
    Ok(extensions_brute(s, sp, ctx))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct D2Record {
    pub s1: Segment,
    pub pairs: Vec<Completion>,
    pub count_enumerated: u64,
    pub count_formula: i64,
}

/// Completions of `(s₁, s₁*)` with `s₂' = s₂*` and `supp(s₂) = supp(s₁)`; requires `supp(s₁) ≥ h/2`.
pub fn d2_census(s1: Segment, ctx: RankContext) -> Result<D2Record> {
    s1.check_proper(ctx)?;
    let dual = s1.right_dual(ctx)?;
    if 2 * s1.supp() < ctx.h() {
        return Err(Error::UseDual(dual));
    }
    let rec = c1_pairs(s1, dual, ctx)?;
    let pairs: Vec<Completion> = rec
        .pairs
        .into_iter()
        .filter(|c| c.s2.supp() == s1.supp() && c.s2.right_dual(ctx).map(|d| d == c.s2p).unwrap_or(false))
        .collect();
    Ok(D2Record {
        s1,
        count_enumerated: pairs.len() as u64,
        count_formula: dual.supp() - 1,
        pairs,
    })
}

/// `C₁(s₁, s₁')` for every given proper `s₁` and every `s₁'` it covers, in parallel.
pub fn c1_sweep(ctx: RankContext, seeds: &[Segment]) -> Result<Vec<CensusRecord>> {
    let jobs: Vec<(Segment, Segment)> = seeds
        .iter()
        .filter(|s| s.is_proper(ctx))
        .map(|&s1| covered_sets(s1, ctx).map(|(c, _)| c.into_iter().map(move |t| (s1, t)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut out = jobs.par_iter().map(|&(a, b)| c1_pairs(a, b, ctx)).collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|r| (r.s1, r.s1p));
    Ok(out)
}

/// Proper segments `[0, j]` (canonical representatives up to uniform shift).
pub fn canonical_seeds(ctx: RankContext) -> Vec<Segment> {
    (1..ctx.h()).map(|j| Segment::int(0, j)).collect()
}

/// The subdiagram `[a, b] ⊆ [1, N]`, of rank `N_J = b - a + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub a: i64,
    pub b: i64,
}

impl Window {
    pub fn new(a: i64, b: i64, ctx: RankContext) -> Result<Self> {
        if !(1 <= a && a <= b && b <= ctx.n()) {
            return Err(Error::InvalidWindow { a, b, n: ctx.n() });
        }
        Ok(Self { a, b })
    }

    pub fn n(self) -> i64 {
        self.b - self.a + 1
    }

    pub fn h(self) -> i64 {
        self.b - self.a + 2
    }

    pub fn context(self) -> RankContext {
        RankContext::new(self.n()).expect("windows are non-empty")
    }

    pub fn contains_support(self, supp: i64) -> bool {
        self.a <= supp && supp <= self.b
    }
}

/// `a = min supp(𝐬 ∩ 𝐬') + 1`, `b = max supp(𝐬 ∪ 𝐬') - 1`.
pub fn derive_window(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<Window> {
    if !mcovers(s, sp, ctx)? {
        return Err(Error::CoverFails(format!("{s} does not cover {sp}")));
    }
    let caps = s
        .iter()
        .zip(sp.iter())
        .map(|(x, y)| x.intersection(*y).expect("covering pairs meet").supp());
    let cups = s
        .iter()
        .zip(sp.iter())
        .map(|(x, y)| x.union(*y).expect("covering pairs join").supp());
    let a = caps.min().unwrap_or(0) + 1;
    let b = cups.max().unwrap_or(ctx.h()) - 1;
    Window::new(a, b, ctx)
}

/// `s̃ = [i + (a-1)/2, j - (a-1)/2]`, for `a ≤ supp(s) ≤ b`.
pub fn restrict_segment(s: Segment, w: Window) -> Result<Segment> {
    if !w.contains_support(s.supp()) {
        return Err(Error::OutsideWindow { seg: s, a: w.a, b: w.b });
    }
    Ok(restrict_unchecked(s, w))
}

fn restrict_unchecked(s: Segment, w: Window) -> Segment {
    Segment::new(s.ti() + (w.a - 1), s.tj() - (w.a - 1)).expect("restriction keeps order")
}

pub fn restrict_multiseg(m: &Multisegment, w: Window) -> Result<Multisegment> {
    m.iter()
        .map(|&s| restrict_segment(s, w))
        .collect::<Result<Vec<_>>>()
        .map(Multisegment::new)
}

/// Generator-wise restriction; generators with support outside `[a, b]` become trivial.
pub fn restrict_lweight(x: &LWeight, w: Window) -> LWeight {
    let ctx = w.context();
    let pairs = x
        .terms()
        .iter()
        .filter(|(s, _)| w.contains_support(s.supp()))
        .map(|&(s, e)| (restrict_unchecked(s, w), e));
    LWeight::from_pairs(pairs, ctx).expect("restricted generators fit the window")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructMode {
    Extend,
    SocleRealize,
}

fn check_one_cover(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<()> {
    s.check_ladder()?;
    sp.check_ladder()?;
    if s.len() != sp.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: sp.len(),
        });
    }
    if s.len() < 2 || !p_cover(s, sp, 1, ctx)? {
        return Err(Error::CoverFails(format!("{s} does not 1-cover {sp}")));
    }
    Ok(())
}

/// Whether `(s, s')` can be prepended: `s₁ ⊳ s ⊳ s₁' ⊳ s'`, `s ⊳ s'`, `j' < i₁`, `j₁ - i' > h`.
pub fn is_valid_prefix(s: Segment, sprime: Segment, s1: Segment, s1p: Segment, ctx: RankContext) -> bool {
    s1.covers(s, ctx)
        && s.covers(s1p, ctx)
        && s1p.covers(sprime, ctx)
        && s.covers(sprime, ctx)
        && sprime.tj() < s1.ti()
        && s1.tj() - sprime.ti() > 2 * ctx.h()
}

/// Prepends the lexicographically smallest valid `(s, s')` (by `(i, j, i', j')`).
pub fn construct_extend(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<(Multisegment, Multisegment)> {
    check_one_cover(s, sp, ctx)?;
    let (s1, s1p) = (s[0], sp[0]);
    let h2 = 2 * ctx.h();
    let candidates: Vec<Segment> = segments_in_box(s1.tj() - h2 - 2, s1.tj() + 2)
        .filter(|&t| s1.covers(t, ctx))
        .collect();
    for &mid in &candidates {
        if !mid.covers(s1p, ctx) {
            continue;
        }
        for low in segments_in_box(mid.tj() - h2 - 2, mid.tj() + 2) {
            if is_valid_prefix(mid, low, s1, s1p, ctx) {
                let out = (s.prepend(mid), sp.prepend(low));
                if !is_one_cover(&out.0, &out.1, ctx) || !condition_flags(&out.0, &out.1, ctx)?.almostdual {
                    return Err(Error::Internal(format!("extension {} / {} fails its postconditions", out.0, out.1)));
                }
                return Ok(out);
            }
        }
    }
    Err(Error::Internal(format!("no extension found for {s} / {sp}")))
}

/// `𝐬̃ = ([a, j₁']) ∨ 𝐬(0, l-1) ∨ ([b, j_l])`, `𝐬̃' = ([i₁', a]) ∨ 𝐬'(1, l) ∨ ([i_l, b])`
/// with `a = i₁ - 1`, `b = j_l - 1`; the socle of the result has weight `π₁`.
pub fn construct_socle_realize(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<(Multisegment, Multisegment)> {
    check_one_cover(s, sp, ctx)?;
    let l = s.len();
    let (s1, s1p, sl) = (s[0], sp[0], s[l - 1]);
    let ta = s1.ti() - 2;
    let tb = sl.tj() - 2;
    let seg = |x: i64, y: i64| Segment::new(x, y);
    let mut tilde = vec![seg(ta, s1p.tj())?];
    tilde.extend_from_slice(&s.entries()[..l - 1]);
    tilde.push(seg(tb, sl.tj())?);
    let mut tilde_p = vec![seg(s1p.ti(), ta)?];
    tilde_p.extend_from_slice(&sp.entries()[1..]);
    tilde_p.push(seg(sl.ti(), tb)?);
    let (t, tp) = (Multisegment::new(tilde), Multisegment::new(tilde_p));
    let pi1 = crate::character::pi_chain(s, sp, 1, ctx)?.pis[1].clone();
    if !t.is_ladder() || !tp.is_ladder() || socle_weight(&t, &tp, ctx)? != pi1 {
        return Err(Error::Internal(format!("socle realization {t} / {tp} does not reach pi_1")));
    }
    Ok((t, tp))
}

pub fn construct_examples(
    s: &Multisegment,
    sp: &Multisegment,
    mode: ConstructMode,
    ctx: RankContext,
) -> Result<(Multisegment, Multisegment)> {
    match mode {
        ConstructMode::Extend => construct_extend(s, sp, ctx),
        ConstructMode::SocleRealize => construct_socle_realize(s, sp, ctx),
    }
}

/// Every pair of length-2 ladders with `𝐬 ⊳₁ 𝐬'` and `i₁ = 0` (or `i₁ = 1/2`).
pub fn one_covering_pairs(ctx: RankContext, first_left_doubled: i64) -> Vec<(Multisegment, Multisegment)> {
    let h2 = 2 * ctx.h();
    let mut out = Vec::new();
    for tj in (first_left_doubled + 2..first_left_doubled + h2).step_by(2) {
        let s1 = Segment::new(first_left_doubled, tj).expect("ordered");
        for s1p in segments_in_box(s1.tj() - h2 - 2, s1.tj() + 2).filter(|&t| s1.covers(t, ctx)) {
            for c in c1_pairs_by_chains(s1, s1p, ctx) {
                out.push((Multisegment::new(vec![s1, c.s2]), Multisegment::new(vec![s1p, c.s2p])));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::pi_chain;
    use crate::lweight::omega_of_multiseg;
    use crate::multiseg::diamond;
    use crate::segment::proper_segments_in_window;
    use std::collections::BTreeSet;

    fn ctx(h: i64) -> RankContext {
        RankContext::with_h(h).unwrap()
    }

    fn seg(t: &str) -> Segment {
        t.parse().unwrap()
    }

    fn ms(t: &str) -> Multisegment {
        t.parse().unwrap()
    }

    #[test]
    fn covered_set_examples() {
        let (c, c1) = covered_sets(Segment::int(0, 2), ctx(4)).unwrap();
        assert_eq!((c.len(), c1.len()), (4, 1));
        let (_, c1) = covered_sets(Segment::int(0, 3), ctx(5)).unwrap();
        assert_eq!(c1, vec![Segment::int(-2, 0), Segment::int(-2, 1)]);
        let (_, c1) = covered_sets(Segment::int(0, 1), ctx(6)).unwrap();
        assert!(c1.is_empty());
        assert!(covered_sets(Segment::int(0, 6), ctx(6)).is_err());
    }

    #[test]
    fn covered_counts_match_formulas() {
        for h in 2..=7 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, -1, 1) {
                let (all, c1) = covered_sets(s, c).unwrap();
                assert_eq!(all.len() as i64, cover_count_formula(s, c));
                assert_eq!(c1.len() as i64, cover1_count_formula(s, c));
            }
        }
    }

    #[test]
    fn c1_examples() {
        let c = ctx(5);
        let r = c1_pairs(Segment::int(0, 3), Segment::int(-2, 0), c).unwrap();
        assert_eq!((r.count_enumerated, r.count_formula), (3, 3));
        let r = c1_pairs(Segment::int(0, 3), Segment::int(-2, 1), c).unwrap();
        assert_eq!((r.count_enumerated, r.count_formula), (2, 2));
        let r = c1_pairs(Segment::int(0, 2), Segment::int(-2, 0), ctx(4)).unwrap();
        assert_eq!(
            r.pairs,
            vec![Completion {
                s2: Segment::int(1, 3),
                s2p: Segment::int(-1, 1)
            }]
        );
        assert!(r.flags[0].kr);
        assert!(c1_pairs(Segment::int(-2, 0), Segment::int(0, 3), c).is_err());
    }

    #[test]
    fn small_rank_listing() {
        let c = ctx(5);
        let s1 = Segment::int(0, 3);
        let mut got = BTreeSet::new();
        for s1p in covered_sets(s1, c).unwrap().0 {
            for p in c1_pairs(s1, s1p, c).unwrap().pairs {
                got.insert((s1p, p.s2p, p.s2));
            }
        }
        let want: BTreeSet<_> = [
            ("-2..0", "-1..1", "1..4"),
            ("-2..0", "-1..2", "1..4"),
            ("-2..0", "-1..2", "2..4"),
            ("-2..1", "-1..2", "1..4"),
            ("-2..1", "-1..2", "2..4"),
        ]
        .iter()
        .map(|&(a, b, d)| (seg(a), seg(b), seg(d)))
        .collect();
        assert_eq!(got, want);
        let d2 = d2_census(s1, c).unwrap();
        assert_eq!(
            d2.pairs,
            vec![Completion {
                s2: Segment::int(1, 4),
                s2p: Segment::int(-1, 1)
            }]
        );
    }

    #[test]
    fn c1_counts_match_formula_and_support_condition() {
        for h in 3..=6 {
            let c = ctx(h);
            for s1 in proper_segments_in_window(c, -1, 1) {
                for s1p in covered_sets(s1, c).unwrap().0 {
                    let r = c1_pairs(s1, s1p, c).unwrap();
                    assert_eq!(r.count_enumerated as i64, r.count_formula, "{s1} {s1p}");
                    let wide = s1.ti() - s1p.ti() >= 4 && s1.tj() - s1p.tj() >= 4;
                    assert_eq!(r.pairs.is_empty(), !wide);
                    if !r.pairs.is_empty() {
                        assert!(h >= 4);
                    }
                    for f in &r.flags {
                        assert_eq!(f.almostdual, f.almostdual_disjoint);
                    }
                }
            }
        }
    }

    #[test]
    fn d2_examples_and_formula() {
        assert_eq!(d2_census(Segment::int(0, 3), ctx(5)).unwrap().count_enumerated, 1);
        assert_eq!(d2_census(Segment::int(0, 2), ctx(4)).unwrap().count_enumerated, 1);
        assert!(matches!(d2_census(Segment::int(0, 1), ctx(5)), Err(Error::UseDual(_))));
        for h in 3..=7 {
            let c = ctx(h);
            for s in proper_segments_in_window(c, -1, 1) {
                if 2 * s.supp() >= h {
                    let r = d2_census(s, c).unwrap();
                    assert_eq!(r.count_enumerated as i64, r.count_formula, "{s} h={h}");
                }
            }
        }
    }

    #[test]
    fn longer_seeds_reduce_to_the_last_entries() {
        for h in 4..=5 {
            let c = ctx(h);
            for (s, sp) in one_covering_pairs(c, 0) {
                let ext = c1_extensions(&s, &sp, c).unwrap();
                let last = c1_pairs(s[1], sp[1], c).unwrap();
                assert_eq!(ext.len() as u64, last.count_enumerated, "{s} {sp}");
            }
        }
        assert!(c1_extensions(&Multisegment::empty(), &Multisegment::empty(), ctx(5)).is_err());
    }

    #[test]
    fn flag_examples() {
        let c = ctx(7);
        let f = condition_flags(&ms("[1..4, 2..5]"), &ms("[-1..2, 0..3]"), c).unwrap();
        assert!(!f.almostdual && !f.almostdual_disjoint);
        assert!(f.kr);
        let f = condition_flags(&ms("[0..2, 1..3]"), &ms("[-2..0, -1..1]"), c).unwrap();
        assert!(f.kr && f.minmax);
        assert!(condition_flags(&ms("[0..2]"), &ms("[-1..1]"), c).is_err());
    }

    #[test]
    fn window_of_pinned_pair() {
        let c = ctx(7);
        let (s, sp) = (ms("[1..4, 2..5]"), ms("[-1..2, 0..3]"));
        let w = derive_window(&s, &sp, c).unwrap();
        assert_eq!((w.a, w.b, w.h()), (2, 4, 4));
        let (rs, rsp) = (restrict_multiseg(&s, w).unwrap(), restrict_multiseg(&sp, w).unwrap());
        assert_eq!(rs[0], seg("1.5..3.5"));
        assert_eq!(rsp[0], seg("-0.5..1.5"));
        assert!(condition_flags(&rs, &rsp, w.context()).unwrap().almostdual);
        assert!(restrict_segment(Segment::int(0, 1), w).is_err());
        let id = Window::new(1, 6, c).unwrap();
        assert_eq!(restrict_segment(Segment::int(0, 3), id).unwrap(), Segment::int(0, 3));
        assert_eq!(id.h(), 7);
        assert!(Window::new(0, 3, c).is_err());
        assert!(Window::new(2, 7, c).is_err());
    }

    #[test]
    fn restriction_commutes_with_diamond() {
        for h in 3..=5 {
            let c = ctx(h);
            let segs = proper_segments_in_window(c, -2 * h, 2 * h);
            for &s in &segs {
                for &t in &segs {
                    if !s.covers(t, c) {
                        continue;
                    }
                    let (one, two) = (Multisegment::new(vec![s]), Multisegment::new(vec![t]));
                    let pieces = diamond(&one, &two, c).unwrap();
                    let whole = omega_of_multiseg(&pieces, c).unwrap();
                    for a in 1..h {
                        for b in a..h {
                            let w = Window::new(a, b, c).unwrap();
                            if !(w.contains_support(s.supp()) && w.contains_support(t.supp())) {
                                continue;
                            }
                            let (rs, rt) = (restrict_segment(s, w).unwrap(), restrict_segment(t, w).unwrap());
                            if !rs.covers(rt, w.context()) {
                                continue;
                            }
                            let small = diamond(&Multisegment::new(vec![rs]), &Multisegment::new(vec![rt]), w.context()).unwrap();
                            assert_eq!(restrict_lweight(&whole, w), omega_of_multiseg(&small, w.context()).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn socle_realize_on_pinned_pair() {
        let c = ctx(7);
        let (s, sp) = (ms("[1..4, 2..5]"), ms("[-1..2, 0..3]"));
        let (t, tp) = construct_socle_realize(&s, &sp, c).unwrap();
        assert_eq!(t, ms("[0..2, 1..4, 4..5]"));
        assert_eq!(tp, ms("[-1..0, 0..3, 2..4]"));
        assert_eq!(socle_weight(&t, &tp, c).unwrap(), pi_chain(&s, &sp, 1, c).unwrap().pis[1]);
    }

    #[test]
    fn constructions_on_all_small_pairs() {
        for h in 4..=6 {
            let c = ctx(h);
            for (s, sp) in one_covering_pairs(c, 0) {
                let (t, tp) = construct_examples(&s, &sp, ConstructMode::SocleRealize, c).unwrap();
                assert!(mcovers(&t, &tp, c).unwrap());
                let (e, ep) = construct_examples(&s, &sp, ConstructMode::Extend, c).unwrap();
                assert!(is_valid_prefix(e[0], ep[0], s[0], sp[0], c));
                assert_eq!(e.slice(1, e.len()).unwrap(), s);
            }
        }
    }

    #[test]
    fn census_record_round_trips_through_json() {
        let r = c1_pairs(Segment::int(0, 3), Segment::int(-2, 0), ctx(5)).unwrap();
        let back: CensusRecord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
