//! Exhaustive re-checks of the path lemmas, census formulas and pinned
//! examples over a bounded window, reported check by check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::census::{
    c1_extensions, c1_pairs, condition_flags, construct_extend, construct_socle_realize, cover1_count_formula, cover_count_formula,
    covered_sets, d2_census, derive_window, one_covering_pairs, restrict_lweight, restrict_multiseg, restrict_segment, Window,
};
use crate::character::{hlw_census, pi_chain, tensor_multiplicity, tensor_multiplicity_many, weyl_membership, Outcome};
use crate::error::{Error, Result};
use crate::lweight::{leq, omega_of_multiseg, DualSide, LWeight};
use crate::multiseg::{diamond, mcovers, Multisegment};
use crate::path::{
    all_paths, enumerate_tuples, extremal_paths, is_lower_corner_of, is_upper_corner_of, path_count, peak_path, peak_tuple,
    tuple_membership, tuple_membership_by_corners, valley_path, Path, PathTuple,
};
use crate::segment::{proper_segments_in_window, segments_in_window, RankContext, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: CheckStatus,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lemmas,
    Formulas,
    Examples,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Lemmas => "lemmas",
            Suite::Formulas => "formulas",
            Suite::Examples => "paper-examples",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "formulas" => Ok(Suite::Formulas),
            "paper-examples" | "examples" => Ok(Suite::Examples),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown suite {s:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub h: i64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(CheckStatus::Pass) == self.checks.len()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub ctx: RankContext,
    /// Width of the spar window scanned for base segments.
    pub spar_width: i64,
    /// Largest number of cases a single check may examine.
    pub cap: u64,
    pub node_budget: u64,
}

impl VerifyOptions {
    pub fn new(ctx: RankContext) -> Self {
        Self {
            ctx,
            spar_width: 4 * ctx.h(),
            cap: 50_000_000,
            node_budget: crate::character::DEFAULT_NODE_BUDGET,
        }
    }

    fn spar_range(&self) -> (i64, i64) {
        let half = self.spar_width / 2;
        (-half, self.spar_width - half)
    }
}

enum Stop {
    Done,
    Error(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Error(e)
    }
}

type Step = std::result::Result<(), Stop>;

struct Tally {
    cases: u64,
    cap: u64,
    capped: bool,
    counterexample: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> Step {
        if self.cases == self.cap {
            self.capped = true;
            return Err(Stop::Done);
        }
        self.cases += 1;
        if !ok {
            self.counterexample = Some(what());
            return Err(Stop::Done);
        }
        Ok(())
    }
}

fn run_check(id: &str, statement: &str, cap: u64, body: impl FnOnce(&mut Tally) -> Step) -> Result<Check> {
    let mut t = Tally {
        cases: 0,
        cap,
        capped: false,
        counterexample: None,
    };
    match body(&mut t) {
        Ok(()) | Err(Stop::Done) => {}
        Err(Stop::Error(e)) => return Err(e),
    }
    let status = if t.counterexample.is_some() {
        CheckStatus::Fail
    } else if t.capped {
        CheckStatus::Inconclusive
    } else {
        CheckStatus::Pass
    };
    Ok(Check {
        id: id.into(),
        statement: statement.into(),
        status,
        cases: t.cases,
        counterexample: t.counterexample,
    })
}

/// Segments aligned with `s` whose doubled endpoints lie within `pad` of those of `s`.
fn nearby(s: Segment, pad: i64) -> Vec<Segment> {
    let lo = s.ti() - pad;
    let hi = s.tj() + pad;
    let mut out = Vec::new();
    for ti in (lo..=hi).step_by(2) {
        for tj in (ti..=hi).step_by(2) {
            out.push(Segment::new(ti, tj).expect("ordered"));
        }
    }
    out
}

fn corner_union(paths: &[Path], upper: bool) -> BTreeSet<Segment> {
    paths
        .iter()
        .flat_map(|p| {
            let c = p.corners();
            if upper {
                c.cplus
            } else {
                c.cminus
            }
        })
        .collect()
}

fn proper_set(ctx: RankContext, it: impl IntoIterator<Item = Option<Segment>>) -> BTreeSet<Segment> {
    it.into_iter().flatten().filter(|s| s.is_proper(ctx)).collect()
}

fn as_set(v: &[Segment]) -> BTreeSet<Segment> {
    v.iter().copied().collect()
}

/// `|ℙ_s| = binom(h, supp(s))` and `ω` is injective on `ℙ_s`.
pub fn check_path_counts(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "path-count-and-injectivity",
        "|P_s| = binom(h, supp s) and omega is injective on P_s",
        o.cap,
        |t| {
            for s in proper_segments_in_window(ctx, lo, hi) {
                let paths = all_paths(s, ctx)?;
                let weights: BTreeSet<LWeight> = paths.iter().map(Path::omega).collect();
                let expect = path_count(s, ctx)?;
                t.check(paths.len() as u64 == expect && weights.len() == paths.len(), || {
                    format!("{s}: {} paths, {} weights, expected {expect}", paths.len(), weights.len())
                })?;
            }
            Ok(())
        },
    )
}

/// Lower corners over `ℙ_{s₂}` are exactly the segments covering `s₂`.
pub fn check_lower_corners_are_coverings(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "lower-corners-are-coverings",
        "s1 is a lower corner of some p in P_s2 iff s1 covers s2",
        o.cap,
        |t| {
            for s2 in proper_segments_in_window(ctx, lo, hi) {
                let got = corner_union(&all_paths(s2, ctx)?, false);
                let want: BTreeSet<Segment> = nearby(s2, 2 * ctx.h() + 2).into_iter().filter(|s1| s1.covers(s2, ctx)).collect();
                t.check(got == want, || format!("{s2}: corners {got:?} vs coverings {want:?}"))?;
            }
            Ok(())
        },
    )
}

/// `∪𝒸⁺ = {[m,n] : i ≤ m < j ≤ n < h+i}` and `∪𝒸⁻ = {[m,n] : i < m ≤ j < n ≤ h+i}`.
pub fn check_corner_unions(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "corner-unions",
        "upper and lower corner unions over P_s are the stated intervals",
        o.cap,
        |t| {
            for s in proper_segments_in_window(ctx, lo, hi) {
                let paths = all_paths(s, ctx)?;
                let near = nearby(s, 2 * ctx.h() + 2);
                let up_want: BTreeSet<Segment> = near.iter().copied().filter(|&c| is_upper_corner_of(c, s, ctx)).collect();
                let low_want: BTreeSet<Segment> = near.iter().copied().filter(|&c| is_lower_corner_of(c, s, ctx)).collect();
                let (up, low) = (corner_union(&paths, true), corner_union(&paths, false));
                t.check(up == up_want, || format!("{s}: upper corners {up:?} vs {up_want:?}"))?;
                t.check(low == low_want, || format!("{s}: lower corners {low:?} vs {low_want:?}"))?;
            }
            Ok(())
        },
    )
}

/// `τ_k` moves a corner `s'` of `𝒸⁺` to `shift(s', 1)` in `𝒸⁻` and stays in `ℙ_s`.
pub fn check_tau_flip(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "tau-flip-corner-shift",
        "flipping a local minimum sends its corner s' to 1+s' among the lower corners",
        o.cap,
        |t| {
            for s in proper_segments_in_window(ctx, lo, hi) {
                for p in all_paths(s, ctx)? {
                    for k in p.corners().eplus {
                        let q = p.tau_flip(k)?;
                        let moved = p.segment_at(k).shift(1);
                        let ok = q.is_member(s, ctx) && q.corners().cminus.contains(&moved) && q.tau_flip(k)? == p;
                        t.check(ok, || format!("{p} at {k}"))?;
                    }
                }
            }
            Ok(())
        },
    )
}

/// For `s₁ ⊳ s` exactly one `p ∈ ℙ_s` has `𝒸⁻_p = {s₁}`, and then `𝒸⁺_p = {s₁∪s, s₁∩s}`.
pub fn check_peak_uniqueness(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "peak-path-unique",
        "for s1 covering s a unique path of P_s has lower corners {s1}",
        o.cap,
        |t| {
            for s in proper_segments_in_window(ctx, lo, hi) {
                let paths = all_paths(s, ctx)?;
                for s1 in nearby(s, 2 * ctx.h() + 2).into_iter().filter(|s1| s1.covers(s, ctx)) {
                    let hits: Vec<&Path> = paths.iter().filter(|p| p.corners().cminus == [s1]).collect();
                    let built = peak_path(s, s1, ctx)?;
                    let want = proper_set(ctx, [s1.union(s), s1.intersection(s)]);
                    let ok = hits.len() == 1 && *hits[0] == built && as_set(&built.corners().cplus) == want;
                    t.check(ok, || format!("s = {s}, s1 = {s1}: {} matching paths", hits.len()))?;
                }
            }
            Ok(())
        },
    )
}

/// For `s₂` an upper corner of `s₁`, exactly one `p ∈ ℙ_{s₁}` has `𝒸⁺_p = {s₂}`,
/// and then `𝒸⁻_p = {s₂ ∩ *s₁, s₂ ∪ *s₁}`.
pub fn check_valley_uniqueness(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "valley-path-unique",
        "for an upper corner s2 of s1 a unique path of P_s1 has upper corners {s2}",
        o.cap,
        |t| {
            for s1 in proper_segments_in_window(ctx, lo, hi) {
                let paths = all_paths(s1, ctx)?;
                let dual = s1.left_dual(ctx)?;
                for s2 in nearby(s1, 2 * ctx.h() + 2).into_iter().filter(|&c| is_upper_corner_of(c, s1, ctx)) {
                    let hits: Vec<&Path> = paths.iter().filter(|p| p.corners().cplus == [s2]).collect();
                    let built = valley_path(s1, s2, ctx)?;
                    let want = proper_set(ctx, [s2.intersection(dual), s2.union(dual)]);
                    let ok = hits.len() == 1 && *hits[0] == built && as_set(&built.corners().cminus) == want;
                    t.check(ok, || format!("s1 = {s1}, s2 = {s2}: {} matching paths", hits.len()))?;
                }
            }
            Ok(())
        },
    )
}

/// Every lower corner `[m, n] ≠ *s` has an upper corner `[m, n']`, `m < n' < n`
/// (when `m < j`) and `[m', n]`, `n - h < m' < m` (when `n < h + i`).
pub fn check_lower_to_upper(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let h2 = 2 * ctx.h();
    let (lo, hi) = o.spar_range();
    run_check(
        "lower-to-upper-corner",
        "each lower corner other than *s has the predicted upper corners",
        o.cap,
        |t| {
            for s in proper_segments_in_window(ctx, lo, hi) {
                let dual = s.left_dual(ctx)?;
                for p in all_paths(s, ctx)? {
                    let c = p.corners();
                    for &low in c.cminus.iter().filter(|&&x| x != dual) {
                        let (m, n) = (low.ti(), low.tj());
                        let spar_rule = c.cplus.iter().any(|u| u.spar() == low.spar() - (u.supp() - low.supp()).abs());
                        let left = m >= s.tj() || c.cplus.iter().any(|u| u.ti() == m && m < u.tj() && u.tj() < n);
                        let right = n >= h2 + s.ti() || c.cplus.iter().any(|u| u.tj() == n && n - h2 < u.ti() && u.ti() < m);
                        t.check(spar_rule && left && right, || format!("{p}: lower corner {low}"))?;
                    }
                }
            }
            Ok(())
        },
    )
}

/// If `s ∉ 𝒸_p`, `p(supp s) ≤ spar s`, `p(supp s) - supp s < p(0)` and
/// `p(supp s) - (h - supp s) < p(h)`, some upper corner has smaller spar than `s`.
pub fn check_smaller_spar(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let h = ctx.h();
    let (lo, hi) = o.spar_range();
    run_check(
        "smaller-spar-upper-corner",
        "a segment on or above a path, inside its cone, has an upper corner of smaller spar",
        o.cap,
        |t| {
            for base in segments_in_window(ctx, lo, hi) {
                for p in all_paths(base, ctx)? {
                    let c = p.corners();
                    let (vmin, vmax) = (*p.values().iter().min().unwrap(), *p.values().iter().max().unwrap());
                    for supp in 0..=h {
                        let v = p.at(supp as usize);
                        for spar in (vmin - h)..=(vmax + h) {
                            let s = Segment::from_supp_spar(supp, spar)?;
                            if c.cplus.contains(&s) || c.cminus.contains(&s) {
                                continue;
                            }
                            if !(v <= spar && v - supp < p.at(0) && v - (h - supp) < p.at(h as usize)) {
                                continue;
                            }
                            t.check(c.cplus.iter().any(|u| u.spar() < spar), || format!("{p}: segment {s}"))?;
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

/// For `s ⊳ s'`: `p*_s(supp *s') ≥ spar(*s') + 2` and `p*_{s'}(supp *s) ≤ spar(*s) - 2`.
pub fn check_lowest_path_bounds(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "lowest-path-dual-bounds",
        "lowest paths of a covering pair separate the left duals by 2",
        o.cap,
        |t| {
            for s in proper_segments_in_window(ctx, lo, hi) {
                let top_s = extremal_paths(s, ctx)?.1;
                let ds = s.left_dual(ctx)?;
                for sp in covered_sets(s, ctx)?.0.into_iter().filter(|x| x.is_proper(ctx)) {
                    let top_sp = extremal_paths(sp, ctx)?.1;
                    let dsp = sp.left_dual(ctx)?;
                    let ok = top_s.at(dsp.supp() as usize) >= dsp.spar() + 2 && top_sp.at(ds.supp() as usize) <= ds.spar() - 2;
                    t.check(ok, || format!("{s} covers {sp}"))?;
                }
            }
            Ok(())
        },
    )
}

/// No two corners of the same class of one path form a ladder.
pub fn check_ladder_meets_corners_once(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "ladder-meets-corner-class-once",
        "a ladder has at most one entry in each corner class of a path",
        o.cap,
        |t| {
            for base in segments_in_window(ctx, lo, hi) {
                for p in all_paths(base, ctx)? {
                    let c = p.corners();
                    for class in [&c.cplus, &c.cminus] {
                        for (a, &x) in class.iter().enumerate() {
                            for &y in &class[a + 1..] {
                                let (u, v) = if x < y { (x, y) } else { (y, x) };
                                t.check(!Multisegment::new(vec![u, v]).is_ladder(), || format!("{p}: corners {u}, {v}"))?;
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

/// Proper segments `s₂` with `(s₁, s₂)` a ladder, connected or not.
fn ladder_successors(s1: Segment, ctx: RankContext, connected: bool) -> Vec<Segment> {
    nearby(s1, 2 * ctx.h() + 2)
        .into_iter()
        .filter(|&s2| s2.is_proper(ctx))
        .filter(|&s2| {
            let m = Multisegment::new(vec![s1, s2]);
            m.is_ladder() && (!connected || m.is_connected_ladder(ctx))
        })
        .collect()
}

/// Connected length-2 ladders whose first entry has spar in the window.
pub fn connected_pairs(ctx: RankContext, spar_lo: i64, spar_hi: i64) -> Vec<Multisegment> {
    proper_segments_in_window(ctx, spar_lo, spar_hi)
        .into_iter()
        .flat_map(|s1| {
            ladder_successors(s1, ctx, true)
                .into_iter()
                .map(move |s2| Multisegment::new(vec![s1, s2]))
        })
        .collect()
}

/// The pointwise non-crossing test agrees with the local-maximum test on all of `ℙ_{s₁} × ℙ_{s₂}`.
pub fn check_tuple_criterion(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "tuple-criterion",
        "pointwise non-crossing agrees with the test at local maxima",
        o.cap,
        |t| {
            for m in connected_pairs(ctx, lo, hi) {
                let (first, second) = (all_paths(m[0], ctx)?, all_paths(m[1], ctx)?);
                for a in &first {
                    for b in &second {
                        let tup = PathTuple(vec![a.clone(), b.clone()]);
                        let x = tuple_membership(&tup, &m, ctx)?;
                        let y = tuple_membership_by_corners(&tup, &m, ctx)?;
                        t.check(x == y, || format!("{m}: ({a}, {b})"))?;
                    }
                }
            }
            Ok(())
        },
    )
}

/// Covering pairs `𝐬 ⊳ 𝐬'` of length-2 ladders, `𝐬` connected with first spar in the window.
pub fn covering_ladder_pairs(ctx: RankContext, spar_lo: i64, spar_hi: i64) -> Result<Vec<(Multisegment, Multisegment)>> {
    let mut out = Vec::new();
    for s in connected_pairs(ctx, spar_lo, spar_hi) {
        let below0 = covered_sets(s[0], ctx)?.0;
        let below1 = covered_sets(s[1], ctx)?.0;
        for &a in &below0 {
            for &b in &below1 {
                let sp = Multisegment::new(vec![a, b]);
                if sp.is_ladder() && mcovers(&s, &sp, ctx)? {
                    out.push((s.clone(), sp));
                }
            }
        }
    }
    Ok(out)
}

/// For `𝐬 ⊳ 𝐬'` the tuple of peak paths lies in `ℙ_{𝐬'}` and its weight times `ω_𝐬` is the socle weight.
pub fn check_peak_tuples(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "peak-tuple-membership",
        "peak paths of a covering pair form a non-crossing tuple",
        o.cap,
        |t| {
            for (s, sp) in covering_ladder_pairs(ctx, lo, hi)? {
                let tup = peak_tuple(&s, &sp, ctx)?;
                let socle = omega_of_multiseg(&diamond(&s, &sp, ctx)?, ctx)?;
                let ok = tuple_membership(&tup, &sp, ctx)? && omega_of_multiseg(&s, ctx)?.mul(&tup.omega()) == socle;
                t.check(ok, || format!("{s} covers {sp}"))?;
            }
            Ok(())
        },
    )
}

/// `ω(𝐩') ≤ ω(𝐩)` in the ℓ-root order exactly when `𝐩 ≤ 𝐩'` pointwise, on `ℙ_𝐬`.
pub fn check_order_oracle(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "lroot-order-is-pointwise",
        "the l-root order on P_s weights is the reversed pointwise path order",
        o.cap,
        |t| {
            for m in connected_pairs(ctx, lo, hi) {
                let tuples: Vec<PathTuple> = enumerate_tuples(&m, ctx)?.collect();
                let ws: Vec<LWeight> = tuples.iter().map(PathTuple::omega).collect();
                for (a, ta) in tuples.iter().enumerate() {
                    for (b, tb) in tuples.iter().enumerate() {
                        let pointwise = ta.0.iter().zip(&tb.0).all(|(x, y)| x.pointwise_le(y));
                        t.check(leq(&ws[b], &ws[a], ctx) == pointwise, || format!("{m}: tuples {a} and {b}"))?;
                    }
                }
            }
            Ok(())
        },
    )
}

fn canonical_segments(ctx: RankContext) -> Vec<Segment> {
    [0, 1]
        .into_iter()
        .flat_map(|ti| (1..ctx.h()).map(move |supp| Segment::new(ti, ti + 2 * supp).expect("ordered")))
        .collect()
}

/// `|C(s)| = supp(s) supp(s*)` and `|C₁(s)| = (supp(s) - 1)(supp(s*) - 1)`.
pub fn check_cover_counts(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    run_check(
        "cover-counts",
        "|C(s)| = supp(s) supp(s*) and |C1(s)| = (supp(s)-1)(supp(s*)-1)",
        o.cap,
        |t| {
            for s in canonical_segments(ctx) {
                let (c, c1) = covered_sets(s, ctx)?;
                let ok = c.len() as i64 == cover_count_formula(s, ctx) && c1.len() as i64 == cover1_count_formula(s, ctx);
                t.check(ok, || format!("{s}: |C| = {}, |C1| = {}", c.len(), c1.len()))?;
            }
            Ok(())
        },
    )
}

/// Enumerated `|C₁(s₁, s₁')|` equals its closed form, and is empty exactly when
/// `i₁ - i₁' < 2` or `j₁ - j₁' < 2`.
pub fn check_c1_formula(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    run_check(
        "one-cover-count",
        "|C1(s1, s1')| matches the closed form and vanishes exactly without room",
        o.cap,
        |t| {
            for s1 in canonical_segments(ctx) {
                for s1p in covered_sets(s1, ctx)?.0 {
                    let r = c1_pairs(s1, s1p, ctx)?;
                    let room = s1.ti() - s1p.ti() >= 4 && s1.tj() - s1p.tj() >= 4;
                    let ok =
                        r.count_enumerated as i64 == r.count_formula && r.pairs.is_empty() != room && (r.pairs.is_empty() || ctx.h() >= 4);
                    t.check(ok, || {
                        format!("{s1}, {s1p}: {} enumerated, formula {}", r.count_enumerated, r.count_formula)
                    })?;
                }
            }
            Ok(())
        },
    )
}

/// `|D₂(s₁)| = supp(s₁*) - 1` for `supp(s₁) ≥ h/2`.
pub fn check_d2_formula(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    run_check("dual-pair-count", "completions with s' = s* number supp(s1*) - 1", o.cap, |t| {
        for s1 in canonical_segments(ctx).into_iter().filter(|s| 2 * s.supp() >= ctx.h()) {
            let r = d2_census(s1, ctx)?;
            t.check(r.count_enumerated as i64 == r.count_formula, || {
                format!("{s1}: {} enumerated, formula {}", r.count_enumerated, r.count_formula)
            })?;
        }
        Ok(())
    })
}

/// Extensions of a 1-covering pair are counted by its last entries alone (seed lengths 1 and 2).
pub fn check_length_reduction(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    run_check("length-reduction", "|C1(s, s')| = |C1(s_last, s'_last)|", o.cap, |t| {
        for s1 in canonical_segments(ctx) {
            for s1p in covered_sets(s1, ctx)?.0 {
                let (a, b) = (Multisegment::new(vec![s1]), Multisegment::new(vec![s1p]));
                let n = c1_extensions(&a, &b, ctx)?.len() as u64;
                t.check(n == c1_pairs(s1, s1p, ctx)?.count_enumerated, || format!("seed {s1}, {s1p}"))?;
            }
        }
        for first in [0, 1] {
            for (s, sp) in one_covering_pairs(ctx, first) {
                let n = c1_extensions(&s, &sp, ctx)?.len() as u64;
                let last = c1_pairs(s[1], sp[1], ctx)?.count_enumerated;
                t.check(n == last, || format!("seed {s}, {sp}: {n} vs {last}"))?;
            }
        }
        Ok(())
    })
}

/// Restricting to any window commutes with `⋄` for covering pairs that stay covering.
pub fn check_window_commutation(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    let (lo, hi) = o.spar_range();
    run_check(
        "window-commutes-with-diamond",
        "restriction to a window commutes with the diamond of a covering pair",
        o.cap,
        |t| {
            for s in proper_segments_in_window(ctx, lo, hi) {
                for sp in covered_sets(s, ctx)?.0 {
                    let (one, two) = (Multisegment::new(vec![s]), Multisegment::new(vec![sp]));
                    let whole = omega_of_multiseg(&diamond(&one, &two, ctx)?, ctx)?;
                    for a in 1..ctx.h() {
                        for b in a..ctx.h() {
                            let w = Window::new(a, b, ctx)?;
                            let (Ok(rs), Ok(rsp)) = (restrict_segment(s, w), restrict_segment(sp, w)) else {
                                continue;
                            };
                            let wc = w.context();
                            if !rs.covers(rsp, wc) {
                                continue;
                            }
                            let small = omega_of_multiseg(&diamond(&Multisegment::new(vec![rs]), &Multisegment::new(vec![rsp]), wc)?, wc)?;
                            t.check(restrict_lweight(&whole, w) == small, || {
                                format!("{s} covers {sp}, window [{a}, {b}]")
                            })?;
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

/// Both constructions on every length-2 1-covering pair with `i₁ ∈ {0, 1/2}`.
pub fn check_constructions(o: &VerifyOptions) -> Result<Check> {
    let ctx = o.ctx;
    run_check(
        "constructions",
        "socle realization reaches pi_1 and extension satisfies the almost-dual conditions",
        o.cap,
        |t| {
            for first in [0, 1] {
                for (s, sp) in one_covering_pairs(ctx, first) {
                    let (e, ep) = construct_extend(&s, &sp, ctx)?;
                    let (r, rp) = construct_socle_realize(&s, &sp, ctx)?;
                    let ok = condition_flags(&e, &ep, ctx)?.almostdual && mcovers(&r, &rp, ctx)?;
                    t.check(ok, || format!("{s}, {sp}"))?;
                }
            }
            Ok(())
        },
    )
}

fn lw(text: &str, ctx: RankContext) -> Result<LWeight> {
    text.parse::<LWeight>()?.normalize(ctx)
}

fn ms(text: &str) -> Result<Multisegment> {
    text.parse()
}

pub const PINNED_S: &str = "[1..4, 2..5]";
pub const PINNED_SP: &str = "[-1..2, 0..3]";
pub const PINNED_PI0: &str = "w[-1..4] * w[1..2] * w[0..5] * w[2..3]";
pub const PINNED_PI1: &str = "w[-1..2] * w[1..3] * w[0..4] * w[2..5]";
pub const PINNED_WEYL_FACTORS: &str = "[-1..2, 2..3, 1..3, 0..4, 2..5, -1..4, 1..2, 0..5]";
pub const PINNED_WEYL_WITNESS: [&str; 8] = [
    "w[-1..2]",
    "w[2..3]",
    "w[3..8]^-1",
    "w[4..7]^-1",
    "w[5..9]^-1",
    "w[0..4] * w[0..6]^-1",
    "w[2..3]^-1 * w[1..3]",
    "w[2..6]^-1 * w[2..5] * w[0..6]",
];

/// The rank-6 pair: socle and `π₁`, the census of highest weights, tensor
/// multiplicities, flags and the Weyl-support witness.
pub fn check_pinned_pair(o: &VerifyOptions) -> Result<Check> {
    let ctx = RankContext::new(6)?;
    let budget = o.node_budget;
    run_check(
        "pinned-rank-six-pair",
        "socle chain, highest weights, multiplicities and Weyl witness of ([1,4],[2,5]) over ([-1,2],[0,3])",
        o.cap,
        |t| {
            let (s, sp) = (ms(PINNED_S)?, ms(PINNED_SP)?);
            let (pi0, pi1) = (lw(PINNED_PI0, ctx)?, lw(PINNED_PI1, ctx)?);
            let chain = pi_chain(&s, &sp, 1, ctx)?;
            t.check(chain.pis == [pi0.clone(), pi1.clone()], || format!("chain {:?}", chain.pis))?;
            let census: BTreeSet<LWeight> = hlw_census(&s, &sp, 1, ctx, crate::character::DEFAULT_TUPLE_CAP)?
                .into_iter()
                .collect();
            t.check(census == [pi0.clone(), pi1.clone()].into_iter().collect(), || {
                format!("census {census:?}")
            })?;
            let two = tensor_multiplicity(&s, &sp, &pi0, ctx)?;
            t.check(two.count == 1, || format!("multiplicity of pi_0 is {}", two.count))?;
            let four = tensor_multiplicity_many(&[s.clone(), sp.clone(), s.clone(), sp.clone()], &pi0.pow(2), ctx, 50_000_000)?;
            t.check(four.count == 1, || format!("multiplicity of pi_0^2 is {}", four.count))?;
            t.check(!condition_flags(&s, &sp, ctx)?.almostdual, || "almost-dual holds".into())?;
            let target = pi1.div(&pi1.star_dual(DualSide::Left, ctx)?);
            let factors = ms(PINNED_WEYL_FACTORS)?;
            let factor_weight = omega_of_multiseg(&factors, ctx)?;
            t.check(factor_weight == pi0.mul(&pi1), || format!("factors give {factor_weight}"))?;
            let witness = PINNED_WEYL_WITNESS.iter().map(|w| lw(w, ctx)).collect::<Result<Vec<_>>>()?;
            let by_witness = weyl_membership(&target, &factors, ctx, Some(&witness), budget)?;
            t.check(by_witness.outcome == Outcome::Holds, || "witness rejected".into())?;
            let searched = weyl_membership(&target, &factors, ctx, None, budget)?;
            t.check(searched.outcome != Outcome::Fails, || "search found no factorization".into())?;
            Ok(())
        },
    )
}

/// The rank-4 listing for `s₁ = [0, 3]`: five completions, one with `𝐬' = 𝐬*`.
pub fn check_rank_four_listing(o: &VerifyOptions) -> Result<Check> {
    let ctx = RankContext::new(4)?;
    run_check(
        "rank-four-listing",
        "five 1-covering completions of [0,3], exactly one dual",
        o.cap,
        |t| {
            let s1 = Segment::int(0, 3);
            let mut got = BTreeSet::new();
            for s1p in covered_sets(s1, ctx)?.0 {
                for c in c1_pairs(s1, s1p, ctx)?.pairs {
                    got.insert((s1p, c.s2p, c.s2));
                }
            }
            let want: BTreeSet<(Segment, Segment, Segment)> = [
                ((-2, 0), (-1, 1), (1, 4)),
                ((-2, 0), (-1, 2), (1, 4)),
                ((-2, 0), (-1, 2), (2, 4)),
                ((-2, 1), (-1, 2), (1, 4)),
                ((-2, 1), (-1, 2), (2, 4)),
            ]
            .into_iter()
            .map(|(a, b, c)| (Segment::int(a.0, a.1), Segment::int(b.0, b.1), Segment::int(c.0, c.1)))
            .collect();
            t.check(got == want, || format!("listing {got:?}"))?;
            let d2 = d2_census(s1, ctx)?;
            t.check(d2.pairs.len() == 1 && d2.pairs[0].s2 == Segment::int(1, 4), || {
                format!("dual completions {:?}", d2.pairs)
            })?;
            Ok(())
        },
    )
}

/// At `h = 4` a nonempty `C₁(s₁, s₁')` forces `supp s₁ = 2`, `s₁' = s₁*`, `s₂ = 1 + s₁`, `s₂' = s₂*`.
pub fn check_forced_rank_three(o: &VerifyOptions) -> Result<Check> {
    let ctx = RankContext::new(3)?;
    run_check(
        "forced-rank-three",
        "at rank 3 the only 1-covers are unit shifts of dual pairs",
        o.cap,
        |t| {
            for s1 in canonical_segments(ctx) {
                for s1p in covered_sets(s1, ctx)?.0 {
                    let r = c1_pairs(s1, s1p, ctx)?;
                    if r.pairs.is_empty() {
                        continue;
                    }
                    let c = r.pairs[0];
                    let ok = r.pairs.len() == 1
                        && s1.supp() == 2
                        && s1p == s1.right_dual(ctx)?
                        && c.s2 == s1.shift(1)
                        && c.s2p == c.s2.right_dual(ctx)?;
                    t.check(ok, || format!("{s1}, {s1p}: {:?}", r.pairs))?;
                }
            }
            Ok(())
        },
    )
}

/// The derived window of the rank-6 pair and its almost-dual restriction.
pub fn check_pinned_window(o: &VerifyOptions) -> Result<Check> {
    let ctx = RankContext::new(6)?;
    run_check(
        "pinned-window",
        "the rank-6 pair restricts to the window [2,4] where it is almost dual",
        o.cap,
        |t| {
            let (s, sp) = (ms(PINNED_S)?, ms(PINNED_SP)?);
            let w = derive_window(&s, &sp, ctx)?;
            t.check((w.a, w.b, w.h()) == (2, 4, 4), || format!("window [{}, {}]", w.a, w.b))?;
            let (rs, rsp) = (restrict_multiseg(&s, w)?, restrict_multiseg(&sp, w)?);
            let expected = (Segment::new(3, 7)?, Segment::new(-1, 3)?);
            t.check((rs[0], rsp[0]) == expected, || format!("restricted to {rs}, {rsp}"))?;
            t.check(condition_flags(&rs, &rsp, w.context())?.almostdual, || {
                "restriction is not almost dual".into()
            })?;
            let (r, rp) = construct_socle_realize(&s, &sp, ctx)?;
            t.check(r == ms("[0..2, 1..4, 4..5]")? && rp == ms("[-1..0, 0..3, 2..4]")?, || {
                format!("realized by {r}, {rp}")
            })?;
            Ok(())
        },
    )
}

pub fn verify_suite(suite: Suite, o: &VerifyOptions) -> Result<VerifyReport> {
    type CheckFn = fn(&VerifyOptions) -> Result<Check>;
    let fns: &[CheckFn] = match suite {
        Suite::Lemmas => &[
            check_path_counts,
            check_lower_corners_are_coverings,
            check_corner_unions,
            check_tau_flip,
            check_peak_uniqueness,
            check_valley_uniqueness,
            check_lower_to_upper,
            check_smaller_spar,
            check_lowest_path_bounds,
            check_ladder_meets_corners_once,
            check_tuple_criterion,
            check_peak_tuples,
            check_order_oracle,
        ],
        Suite::Formulas => &[
            check_cover_counts,
            check_c1_formula,
            check_d2_formula,
            check_length_reduction,
            check_window_commutation,
            check_constructions,
        ],
        Suite::Examples => &[
            check_pinned_pair,
            check_rank_four_listing,
            check_forced_rank_three,
            check_pinned_window,
        ],
    };
    let checks = fns.iter().map(|f| f(o)).collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        suite,
        h: o.ctx.h(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(h: i64) -> VerifyOptions {
        VerifyOptions::new(RankContext::with_h(h).unwrap())
    }

    #[test]
    fn lemma_suite_passes_on_small_ranks() {
        for h in 2..=5 {
            let r = verify_suite(Suite::Lemmas, &opts(h)).unwrap();
            for c in &r.checks {
                assert_eq!(c.status, CheckStatus::Pass, "h={h} {c:?}");
            }
        }
    }

    #[test]
    fn formula_suite_passes_on_small_ranks() {
        for h in 2..=6 {
            let r = verify_suite(Suite::Formulas, &opts(h)).unwrap();
            assert!(r.all_pass(), "h={h} {r:?}");
        }
    }

    #[test]
    fn small_example_checks_pass() {
        let o = opts(5);
        for f in [check_rank_four_listing, check_forced_rank_three, check_pinned_window] {
            assert_eq!(f(&o).unwrap().status, CheckStatus::Pass);
        }
    }

    #[test]
    fn cap_makes_checks_inconclusive() {
        let mut o = opts(5);
        o.cap = 3;
        let c = check_path_counts(&o).unwrap();
        assert_eq!((c.status, c.cases), (CheckStatus::Inconclusive, 3));
    }

    #[test]
    fn failures_carry_a_counterexample() {
        let c = run_check("x", "y", 10, |t| t.check(false, || "here".into())).unwrap();
        assert_eq!(c.status, CheckStatus::Fail);
        assert_eq!(c.counterexample.as_deref(), Some("here"));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Lemmas, Suite::Formulas, Suite::Examples] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
