//! ℓ-weight supports of snake modules and the multiplicity computations built
//! on them: tensor products, Weyl-module supports, socle weights and the
//! `π_k` chain.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lweight::{leq, omega_of_multiseg, DualSide, LWeight};
use crate::multiseg::{diamond, diamond_k_concat, mcovers, p_cover, Multisegment};
use crate::path::{all_paths, TupleEnumerator};
use crate::segment::{RankContext, Segment};

/// Default cap on the number of path tuples a single enumeration may visit.
pub const DEFAULT_TUPLE_CAP: usize = 5_000_000;

/// Default node budget of the Weyl-support search.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub target: LWeight,
    pub count: u64,
    pub outcome: Outcome,
    /// Search nodes visited, when a search ran.
    pub nodes: u64,
    /// One factorization per counted occurrence, when retained.
    pub witnesses: Option<Vec<Vec<LWeight>>>,
}

/// `{ω(𝐩) : 𝐩 ∈ ℙ_𝐬}` in enumeration order; all weights are distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnakeSupport {
    pub ladder: Multisegment,
    pub weights: Vec<LWeight>,
    pub dimension: u64,
}

impl SnakeSupport {
    pub fn dominant(&self) -> Vec<&LWeight> {
        self.weights.iter().filter(|w| w.is_dominant()).collect()
    }

    pub fn antidominant(&self) -> Vec<&LWeight> {
        self.weights.iter().filter(|w| w.terms().iter().all(|&(_, e)| e < 0)).collect()
    }

    pub fn contains(&self, w: &LWeight) -> bool {
        self.weights.contains(w)
    }
}

/// Weights `ω(𝐩)` of every tuple in `ℙ_𝐬`, in enumeration order.
pub fn tuple_weights(m: &Multisegment, ctx: RankContext, cap: usize) -> Result<Vec<LWeight>> {
    let mut en = TupleEnumerator::new(m, ctx)?;
    let per_entry: Vec<Vec<LWeight>> = en.entry_paths().iter().map(|l| l.iter().map(|p| p.omega()).collect()).collect();
    let mut out = Vec::new();
    while let Some(idx) = en.next_indices() {
        if out.len() >= cap {
            return Err(Error::CapExceeded {
                cap,
                what: format!("path tuples of {m}"),
            });
        }
        let w = idx
            .iter()
            .enumerate()
            .fold(LWeight::one(), |acc, (d, &k)| acc.mul(&per_entry[d][k]));
        out.push(w);
    }
    Ok(out)
}

pub fn snake_support(m: &Multisegment, ctx: RankContext) -> Result<SnakeSupport> {
    snake_support_capped(m, ctx, DEFAULT_TUPLE_CAP)
}

pub fn snake_support_capped(m: &Multisegment, ctx: RankContext, cap: usize) -> Result<SnakeSupport> {
    m.check_ladder()?;
    for &s in m {
        s.check_proper(ctx)?;
    }
    let weights = tuple_weights(m, ctx, cap)?;
    let mut seen = HashSet::with_capacity(weights.len());
    for w in &weights {
        if !seen.insert(w) {
            return Err(Error::NotThin(w.to_string()));
        }
    }
    let dimension = weights.len() as u64;
    Ok(SnakeSupport {
        ladder: m.clone(),
        weights,
        dimension,
    })
}

fn support_multiset(m: &Multisegment, ctx: RankContext, cap: usize) -> Result<HashMap<LWeight, u64>> {
    let sup = snake_support_capped(m, ctx, cap)?;
    Ok(sup.weights.into_iter().map(|w| (w, 1)).collect())
}

fn product_distribution(factors: &[Multisegment], ctx: RankContext, cap: usize) -> Result<HashMap<LWeight, u64>> {
    let mut acc: HashMap<LWeight, u64> = HashMap::from([(LWeight::one(), 1)]);
    for f in factors {
        let sup = support_multiset(f, ctx, cap)?;
        if acc.len().saturating_mul(sup.len()) > cap {
            return Err(Error::CapExceeded {
                cap,
                what: format!("weight products through {f}"),
            });
        }
        let mut next: HashMap<LWeight, u64> = HashMap::with_capacity(acc.len() * sup.len());
        for (a, &ca) in &acc {
            for (b, &cb) in &sup {
                *next.entry(a.mul(b)).or_insert(0) += ca * cb;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Multiplicity of `target` in `V(ω_{𝐬_1}) ⊗ ⋯ ⊗ V(ω_{𝐬_r})`.
///
/// Each factor is checked to be thin, so the multiplicity is the number of
/// tuples of factor weights multiplying to `target`. The factors are split
/// in two halves whose weight distributions are matched by hashing.
pub fn tensor_multiplicity_many(factors: &[Multisegment], target: &LWeight, ctx: RankContext, cap: usize) -> Result<MultiplicityReport> {
    let mid = factors.len() / 2;
    let left = product_distribution(&factors[..mid], ctx, cap)?;
    let right = product_distribution(&factors[mid..], ctx, cap)?;
    let count: u64 = left.par_iter().map(|(w, &c)| right.get(&target.div(w)).map_or(0, |&d| c * d)).sum();
    Ok(MultiplicityReport {
        target: target.clone(),
        count,
        outcome: if count > 0 { Outcome::Holds } else { Outcome::Fails },
        nodes: (left.len() + right.len()) as u64,
        witnesses: None,
    })
}

pub fn tensor_multiplicity(s: &Multisegment, sp: &Multisegment, target: &LWeight, ctx: RankContext) -> Result<MultiplicityReport> {
    tensor_multiplicity_many(&[s.clone(), sp.clone()], target, ctx, DEFAULT_TUPLE_CAP)
}

/// Allowed spar range of a generator of support `k` in `ω(p)`, `p ∈ ℙ_s`.
fn envelope(s: Segment, k: i64, h: i64) -> (i64, i64) {
    ((s.tj() - k).max(k + s.ti()), (k + s.tj()).min(2 * h + s.ti() - k))
}

fn can_produce(f: Segment, g: Segment, h: i64) -> bool {
    if !f.aligned(g) {
        return false;
    }
    let (lo, hi) = envelope(f, g.supp(), h);
    (lo..=hi).contains(&g.spar())
}

struct WeylSearch<'a> {
    h: i64,
    factors: &'a [Segment],
    choices: &'a [Vec<LWeight>],
    budget: u64,
    nodes: u64,
    dead: HashSet<(usize, LWeight)>,
    chosen: Vec<usize>,
}

impl WeylSearch<'_> {
    /// Every generator of `residual` must be producible by at least
    /// `|exponent|` of the factors from `depth` on.
    fn feasible(&self, depth: usize, residual: &LWeight) -> bool {
        residual.terms().iter().all(|&(g, e)| {
            let need = e.unsigned_abs() as usize;
            self.factors[depth..]
                .iter()
                .filter(|&&f| can_produce(f, g, self.h))
                .take(need)
                .count()
                >= need
        })
    }

    fn run(&mut self, depth: usize, residual: &LWeight) -> Option<bool> {
        if depth == self.factors.len() {
            return Some(residual.is_one());
        }
        if !self.feasible(depth, residual) {
            return Some(false);
        }
        if self.dead.contains(&(depth, residual.clone())) {
            return Some(false);
        }
        for (k, w) in self.choices[depth].iter().enumerate() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.chosen.push(k);
            let found = self.run(depth + 1, &residual.div(w))?;
            if found {
                return Some(true);
            }
            self.chosen.pop();
        }
        self.dead.insert((depth, residual.clone()));
        Some(false)
    }
}

/// Decides whether `target ∈ ∏_k wt_ℓ(V(ω_{s_k}))`, the ℓ-weight support of
/// the Weyl module of the factors.
///
/// With a witness list the claimed factorization is checked entry by entry
/// against the given factor order. Otherwise factors are searched in order of
/// increasing spar with memoized dead ends; `Inconclusive` is reported when
/// `node_budget` runs out.
pub fn weyl_membership(
    target: &LWeight,
    factors: &Multisegment,
    ctx: RankContext,
    witness: Option<&[LWeight]>,
    node_budget: u64,
) -> Result<MultiplicityReport> {
    for &s in factors {
        s.check_segment(ctx)?;
    }
    let weights_of = |s: Segment| -> Result<Vec<LWeight>> {
        let mut ws: Vec<LWeight> = all_paths(s, ctx)?.iter().map(|p| p.omega()).collect();
        ws.sort();
        ws.dedup();
        Ok(ws)
    };
    let report = |found: bool, nodes: u64, witnesses: Option<Vec<Vec<LWeight>>>| MultiplicityReport {
        target: target.clone(),
        count: found as u64,
        outcome: if found { Outcome::Holds } else { Outcome::Fails },
        nodes,
        witnesses,
    };
    if let Some(ws) = witness {
        if ws.len() != factors.len() {
            return Err(Error::LengthMismatch {
                left: factors.len(),
                right: ws.len(),
            });
        }
        for (&s, w) in factors.iter().zip(ws) {
            if weights_of(s)?.binary_search(w).is_err() {
                return Ok(report(false, 0, None));
            }
        }
        let product: LWeight = ws.iter().product();
        let ok = product == *target;
        return Ok(report(ok, 0, ok.then(|| vec![ws.to_vec()])));
    }

    let mut order: Vec<Segment> = factors.iter().copied().filter(|s| !s.is_trivial(ctx)).collect();
    order.sort_by_key(|s| (s.spar(), s.supp()));
    let choices = order.iter().map(|&s| weights_of(s)).collect::<Result<Vec<_>>>()?;
    let mut search = WeylSearch {
        h: ctx.h(),
        factors: &order,
        choices: &choices,
        budget: node_budget,
        nodes: 0,
        dead: HashSet::new(),
        chosen: Vec::new(),
    };
    match search.run(0, target) {
        None => Ok(MultiplicityReport {
            target: target.clone(),
            count: 0,
            outcome: Outcome::Inconclusive,
            nodes: search.nodes,
            witnesses: None,
        }),
        Some(found) => {
            let wit = found.then(|| {
                let mut ws: Vec<(Segment, LWeight)> = search
                    .chosen
                    .iter()
                    .enumerate()
                    .map(|(d, &k)| (order[d], choices[d][k].clone()))
                    .collect();
                // Report in the caller's factor order.
                let mut out = Vec::with_capacity(factors.len());
                for &s in factors {
                    if s.is_trivial(ctx) {
                        out.push(LWeight::one());
                    } else {
                        let pos = ws.iter().position(|(f, _)| *f == s).expect("every factor was searched");
                        out.push(ws.remove(pos).1);
                    }
                }
                vec![out]
            });
            Ok(report(found, search.nodes, wit))
        }
    }
}

fn check_pair(s: &Multisegment, sp: &Multisegment) -> Result<()> {
    s.check_ladder()?;
    sp.check_ladder()?;
    if s.len() != sp.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: sp.len(),
        });
    }
    Ok(())
}

/// `ω_{𝐬⋄𝐬'}`, the highest ℓ-weight of the socle of `V(ω_𝐬) ⊗ V(ω_𝐬')`.
pub fn socle_weight(s: &Multisegment, sp: &Multisegment, ctx: RankContext) -> Result<LWeight> {
    check_pair(s, sp)?;
    if !mcovers(s, sp, ctx)? {
        return Err(Error::CoverFails(format!("{s} does not cover {sp}")));
    }
    omega_of_multiseg(&diamond(s, sp, ctx)?, ctx)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiChain {
    pub s: Multisegment,
    pub sp: Multisegment,
    pub p: usize,
    pub pis: Vec<LWeight>,
    pub varpis: Vec<LWeight>,
    /// `π_k ≤ π_p` for each `k`.
    pub below_top: Vec<bool>,
}

/// `π_k = ω_{𝐬'(0,k)} ϖ_k ω_{𝐬(l-k,l)}` with `ϖ_k = ω_{𝐬 ⋄_k 𝐬'}`, for `k ≤ p`.
pub fn pi_chain(s: &Multisegment, sp: &Multisegment, p: usize, ctx: RankContext) -> Result<PiChain> {
    check_pair(s, sp)?;
    if !p_cover(s, sp, p, ctx)? {
        return Err(Error::CoverFails(format!("{s} does not {p}-cover {sp}")));
    }
    let l = s.len();
    let mut pis = Vec::with_capacity(p + 1);
    let mut varpis = Vec::with_capacity(p + 1);
    for k in 0..=p {
        let varpi = omega_of_multiseg(&diamond_k_concat(s, sp, k, ctx)?, ctx)?;
        let left = omega_of_multiseg(&sp.slice_or_empty(0, k)?, ctx)?;
        let right = omega_of_multiseg(&s.slice_or_empty(l - k, l)?, ctx)?;
        pis.push(left.mul(&varpi).mul(&right));
        varpis.push(varpi);
    }
    let top = pis[p].clone();
    let below_top = pis.iter().map(|pi| leq(pi, &top, ctx)).collect();
    Ok(PiChain {
        s: s.clone(),
        sp: sp.clone(),
        p,
        pis,
        varpis,
        below_top,
    })
}

/// `{ω_𝐬 ω(𝐟) : 𝐟 ∈ ℙ_𝐬', dominant, ≤ π_p}`, sorted.
///
/// These are the dominant `π ≤ π_p` passing the first of the two necessary
/// conditions for `Hom(W(π), V(ω_𝐬) ⊗ V(ω_𝐬')) ≠ 0`.
pub fn hlw_candidates(s: &Multisegment, sp: &Multisegment, p: usize, ctx: RankContext, cap: usize) -> Result<Vec<LWeight>> {
    let chain = pi_chain(s, sp, p, ctx)?;
    let top = &chain.pis[p];
    let base = omega_of_multiseg(s, ctx)?;
    let weights = tuple_weights(sp, ctx, cap)?;
    let mut found: Vec<LWeight> = weights
        .par_iter()
        .filter_map(|w| {
            let x = base.mul(w);
            (x.is_dominant() && leq(&x, top, ctx)).then_some(x)
        })
        .collect();
    found.sort();
    found.dedup();
    Ok(found)
}

/// The candidates of [`hlw_candidates`] that also satisfy the dual condition
/// `*ω_𝐬' (*π)⁻¹ ∈ wt_ℓ V(ω_𝐬)`.
pub fn hlw_census(s: &Multisegment, sp: &Multisegment, p: usize, ctx: RankContext, cap: usize) -> Result<Vec<LWeight>> {
    let candidates = hlw_candidates(s, sp, p, ctx, cap)?;
    let support: HashSet<LWeight> = snake_support_capped(s, ctx, cap)?.weights.into_iter().collect();
    let dual_top = omega_of_multiseg(sp, ctx)?.star_dual(DualSide::Left, ctx)?;
    let mut out = Vec::with_capacity(candidates.len());
    for pi in candidates {
        let q = dual_top.div(&pi.star_dual(DualSide::Left, ctx)?);
        if support.contains(&q) {
            out.push(pi);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SesData {
    pub reducible: bool,
    pub kernel_weight: Option<LWeight>,
}

/// Reducibility of `V(ω_{𝐬(0,l-1)}) ⊗ V(ω_{s_l})` and the kernel weight
/// `ω_{𝐬(0,l-2) ∨ (s_l ⋄ s_{l-1})}`.
pub fn snake_ses_data(m: &Multisegment, ctx: RankContext) -> Result<SesData> {
    m.check_ladder()?;
    let l = m.len();
    if l < 2 {
        return Err(Error::IndexOutOfRange(format!("need a ladder of length at least 2, got {l}")));
    }
    let (last, prev) = (m[l - 1], m[l - 2]);
    if !last.covers(prev, ctx) {
        return Ok(SesData {
            reducible: false,
            kernel_weight: None,
        });
    }
    let tail = diamond(&Multisegment::new(vec![last]), &Multisegment::new(vec![prev]), ctx)?;
    let kernel = m.slice_or_empty(0, l - 2)?.concat(&tail);
    Ok(SesData {
        reducible: true,
        kernel_weight: Some(omega_of_multiseg(&kernel, ctx)?),
    })
}
