use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use ladder_core::census::{c1_sweep, canonical_seeds, CensusRecord, ConstructMode, D2Record, Window};
use ladder_core::character::snake_support_capped;
use ladder_core::*;
use serde::Serialize;
use serde_json::json;

use crate::args::{CensusKind, Command, Mode, Pair, Rank, SuiteArg};
use crate::report::{Report, Status};

fn context(rank: Rank) -> Result<RankContext> {
    Ok(RankContext::new(rank.rank)?)
}

fn normalized(w: &LWeight, ctx: RankContext) -> Result<LWeight> {
    Ok(w.normalize(ctx)?)
}

pub fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Paths {
            rank,
            segment,
            count,
            extremal,
            peak,
            valley,
            cap_paths,
        } => paths(context(*rank)?, *segment, *count, *extremal, *peak, *valley, *cap_paths),
        Command::Qchar {
            rank,
            ladder,
            cap_paths,
            dominant,
        } => qchar(context(*rank)?, ladder, *cap_paths, *dominant),
        Command::Socle { rank, pair } => socle(context(*rank)?, pair),
        Command::Pichain {
            rank,
            pair,
            p,
            census,
            cap_paths,
        } => pichain(context(*rank)?, pair, *p, *census, *cap_paths),
        Command::Census { kind } => census(kind),
        Command::WeylMember {
            rank,
            target,
            factors,
            witness,
            node_budget,
        } => weyl(context(*rank)?, target, factors, witness.as_deref(), *node_budget),
        Command::Flags { rank, pair } => {
            let f = condition_flags(&pair.s, &pair.sp, context(*rank)?)?;
            let text = format!(
                "almostdual: {}\nalmostdual_disjoint: {}\nkr: {}\nminmax: {}",
                f.almostdual, f.almostdual_disjoint, f.kr, f.minmax
            );
            Report::new(&f, text)
        }
        Command::Restrict {
            rank,
            window,
            segment,
            ladder,
            weight,
            s,
            sp,
        } => restrict(
            context(*rank)?,
            *window,
            *segment,
            ladder.as_ref(),
            weight.as_ref(),
            s.as_ref().zip(sp.as_ref()),
        ),
        Command::Construct { rank, pair, mode } => {
            let mode = match mode {
                Mode::Extend => ConstructMode::Extend,
                Mode::SocleRealize => ConstructMode::SocleRealize,
            };
            let (t, tp) = construct_examples(&pair.s, &pair.sp, mode, context(*rank)?)?;
            Report::new(&json!({ "s": t, "sp": tp }), format!("s  = {t}\ns' = {tp}"))
        }
        Command::Verify {
            suite,
            rank,
            cap_paths,
            node_budget,
            spar_width,
        } => verify(*suite, *rank, *cap_paths, *node_budget, *spar_width),
    }
}

#[derive(Serialize)]
struct PathEntry<'a> {
    values: &'a Path,
    omega: LWeight,
}

fn path_line(p: &Path) -> String {
    format!("{p}  {}", p.omega())
}

fn paths(
    ctx: RankContext,
    s: Segment,
    count: bool,
    extremal: bool,
    peak: Option<Segment>,
    valley: Option<Segment>,
    cap: u64,
) -> Result<Report> {
    if count {
        let n = path_count(s, ctx)?;
        return Ok(Report::new(&json!({ "segment": s, "count": n }), n.to_string())?
            .with_table(vec!["segment", "count"], vec![vec![s.to_string(), n.to_string()]]));
    }
    let listed: Vec<Path> = if extremal {
        let (hi, lo) = extremal_paths(s, ctx)?;
        vec![hi, lo]
    } else if let Some(s1) = peak {
        vec![peak_path(s, s1, ctx)?]
    } else if let Some(s2) = valley {
        vec![valley_path(s, s2, ctx)?]
    } else {
        let n = path_count(s, ctx)?;
        if n > cap {
            return Err(Error::CapExceeded {
                cap: cap as usize,
                what: format!("{n} paths of {s}"),
            }
            .into());
        }
        all_paths(s, ctx)?
    };
    let entries: Vec<PathEntry> = listed
        .iter()
        .map(|p| PathEntry {
            values: p,
            omega: p.omega(),
        })
        .collect();
    let text = if extremal {
        format!("highest: {}\nlowest:  {}", path_line(&listed[0]), path_line(&listed[1]))
    } else {
        listed.iter().map(path_line).collect::<Vec<_>>().join("\n")
    };
    let rows = listed
        .iter()
        .enumerate()
        .map(|(k, p)| {
            vec![
                k.to_string(),
                p.values().iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
                p.omega().to_string(),
            ]
        })
        .collect();
    Ok(Report::new(&entries, text)?.with_table(vec!["index", "values", "omega"], rows))
}

fn qchar(ctx: RankContext, ladder: &Multisegment, cap: usize, dominant: bool) -> Result<Report> {
    let sup = snake_support_capped(ladder, ctx, cap)?;
    let weights: Vec<&LWeight> = if dominant { sup.dominant() } else { sup.weights.iter().collect() };
    let ses = (ladder.len() >= 2).then(|| snake_ses_data(ladder, ctx)).transpose()?;
    let mut text = format!("dimension: {}\n", sup.dimension);
    if let Some(d) = &ses {
        match &d.kernel_weight {
            Some(k) => writeln!(text, "last factor reducible, kernel weight {k}")?,
            None => writeln!(text, "last factor irreducible")?,
        }
    }
    for w in &weights {
        writeln!(text, "{w}")?;
    }
    let rows = weights.iter().map(|w| vec![w.to_string(), w.is_dominant().to_string()]).collect();
    Ok(Report::new(
        &json!({ "ladder": ladder, "dimension": sup.dimension, "weights": weights, "ses": ses }),
        text,
    )?
    .with_table(vec!["weight", "dominant"], rows))
}

fn socle(ctx: RankContext, pair: &Pair) -> Result<Report> {
    let w = socle_weight(&pair.s, &pair.sp, ctx)?;
    let d = diamond(&pair.s, &pair.sp, ctx)?;
    Report::new(&json!({ "diamond": d, "weight": w }), format!("pi_0 = {w}\ndiamond: {d}"))
}

fn pichain(ctx: RankContext, pair: &Pair, p: usize, with_census: bool, cap: usize) -> Result<Report> {
    let chain = pi_chain(&pair.s, &pair.sp, p, ctx)?;
    let mut text = String::new();
    for (k, (pi, vp)) in chain.pis.iter().zip(&chain.varpis).enumerate() {
        writeln!(text, "pi_{k} = {pi}")?;
        writeln!(text, "varpi_{k} = {vp}")?;
    }
    let census = if with_census {
        Some(hlw_census(&pair.s, &pair.sp, p, ctx, cap)?)
    } else {
        None
    };
    if let Some(c) = &census {
        writeln!(text, "highest l-weights below pi_{p}:")?;
        for w in c {
            writeln!(text, "  {w}")?;
        }
    }
    Report::new(&json!({ "chain": chain, "census": census }), text)
}

fn records_text(records: &[CensusRecord]) -> String {
    let mut text = String::new();
    let mut total = 0;
    for r in records {
        for c in &r.pairs {
            total += 1;
            let _ = writeln!(text, "s = ({}, {})  s' = ({}, {})", r.s1, c.s2, r.s1p, c.s2p);
        }
    }
    let _ = write!(text, "total: {total}");
    text
}

fn check_records(records: &[CensusRecord]) -> Status {
    if records.iter().all(|r| r.count_enumerated as i64 == r.count_formula) {
        Status::Ok
    } else {
        Status::Failed
    }
}

fn census(kind: &CensusKind) -> Result<Report> {
    match kind {
        CensusKind::C { rank, s1, seed_canonical } => {
            let ctx = context(*rank)?;
            let seeds = if *seed_canonical {
                canonical_seeds(ctx)
            } else {
                vec![s1.context("--s1 is required")?]
            };
            let mut out = Vec::new();
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut status = Status::Ok;
            for s in seeds {
                let (c, c1) = covered_sets(s, ctx)?;
                let (fc, fc1) = (cover_count_formula(s, ctx), cover1_count_formula(s, ctx));
                if c.len() as i64 != fc || c1.len() as i64 != fc1 {
                    status = Status::Failed;
                }
                writeln!(text, "{s}: |C| = {} (formula {fc}), |C1| = {} (formula {fc1})", c.len(), c1.len())?;
                for t in &c {
                    writeln!(text, "  {t}{}", if c1.contains(t) { "  in C1" } else { "" })?;
                    rows.push(vec![s.to_string(), t.to_string(), c1.contains(t).to_string()]);
                }
                out.push(json!({ "s": s, "c": c, "c1": c1, "formula_c": fc, "formula_c1": fc1 }));
            }
            Ok(Report::new(&out, text)?
                .with_table(vec!["s", "covered", "in_c1"], rows)
                .with_status(status))
        }
        CensusKind::C1 {
            rank,
            s1,
            s1p,
            seed_canonical,
        } => {
            let ctx = context(*rank)?;
            let records: Vec<CensusRecord> = match (s1, s1p) {
                _ if *seed_canonical => c1_sweep(ctx, &canonical_seeds(ctx))?,
                (Some(a), Some(b)) => vec![c1_pairs(*a, *b, ctx)?],
                (Some(a), None) => c1_sweep(ctx, &[*a])?,
                (None, _) => bail!("--s1 is required"),
            };
            let status = check_records(&records);
            if *seed_canonical {
                let rows: Vec<Vec<String>> = records
                    .iter()
                    .map(|r| {
                        vec![
                            ctx.h().to_string(),
                            r.s1.to_string(),
                            r.s1p.to_string(),
                            r.count_enumerated.to_string(),
                            r.count_formula.to_string(),
                        ]
                    })
                    .collect();
                let mut text = String::new();
                for r in &records {
                    writeln!(text, "{}  {}  {} (formula {})", r.s1, r.s1p, r.count_enumerated, r.count_formula)?;
                }
                return Ok(Report::new(&records, text)?
                    .with_table(vec!["h", "s1", "s1p", "count", "formula"], rows)
                    .with_status(status));
            }
            let rows = records
                .iter()
                .flat_map(|r| {
                    r.pairs
                        .iter()
                        .map(move |c| vec![r.s1.to_string(), c.s2.to_string(), r.s1p.to_string(), c.s2p.to_string()])
                })
                .collect();
            let value: serde_json::Value = if records.len() == 1 && s1p.is_some() {
                serde_json::to_value(&records[0])?
            } else {
                serde_json::to_value(&records)?
            };
            Ok(Report::new(&value, records_text(&records))?
                .with_table(vec!["s1", "s2", "s1p", "s2p"], rows)
                .with_status(status))
        }
        CensusKind::D2 { rank, s1, seed_canonical } => {
            let ctx = context(*rank)?;
            let seeds: Vec<Segment> = if *seed_canonical {
                canonical_seeds(ctx).into_iter().filter(|s| 2 * s.supp() >= ctx.h()).collect()
            } else {
                vec![s1.context("--s1 is required")?]
            };
            let records = seeds
                .into_iter()
                .map(|s| d2_census(s, ctx))
                .collect::<ladder_core::Result<Vec<D2Record>>>()?;
            let ok = records.iter().all(|r| r.count_enumerated as i64 == r.count_formula);
            let mut text = String::new();
            let mut rows = Vec::new();
            for r in &records {
                writeln!(text, "{}: {} (formula {})", r.s1, r.count_enumerated, r.count_formula)?;
                for c in &r.pairs {
                    writeln!(text, "  s2 = {}  s2' = {}", c.s2, c.s2p)?;
                }
                rows.push(vec![
                    ctx.h().to_string(),
                    r.s1.to_string(),
                    r.count_enumerated.to_string(),
                    r.count_formula.to_string(),
                ]);
            }
            let value = if *seed_canonical {
                serde_json::to_value(&records)?
            } else {
                serde_json::to_value(&records[0])?
            };
            Ok(Report::new(&value, text)?
                .with_table(vec!["h", "s1", "count", "formula"], rows)
                .with_status(if ok { Status::Ok } else { Status::Failed }))
        }
    }
}

fn weyl(ctx: RankContext, target: &LWeight, factors: &Multisegment, witness: Option<&str>, budget: u64) -> Result<Report> {
    let target = normalized(target, ctx)?;
    let witness = witness
        .map(|w| {
            w.split(';')
                .map(|t| {
                    t.trim()
                        .parse::<LWeight>()
                        .map_err(anyhow::Error::from)
                        .and_then(|x| normalized(&x, ctx))
                })
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let r = weyl_membership(&target, factors, ctx, witness.as_deref(), budget)?;
    let mut text = format!("{:?} ({} search nodes)", r.outcome, r.nodes).to_lowercase();
    if let Some(ws) = r.witnesses.as_ref().and_then(|w| w.first()) {
        for (s, w) in factors.iter().zip(ws) {
            write!(text, "\n  {s}: {w}")?;
        }
    }
    let status = match r.outcome {
        Outcome::Holds => Status::Ok,
        Outcome::Fails => Status::Failed,
        Outcome::Inconclusive => Status::Inconclusive(format!("node budget {budget} exhausted before a decision")),
    };
    Ok(Report::new(&r, text)?.with_status(status))
}

fn restrict(
    ctx: RankContext,
    window: Option<(i64, i64)>,
    segment: Option<Segment>,
    ladder: Option<&Multisegment>,
    weight: Option<&LWeight>,
    pair: Option<(&Multisegment, &Multisegment)>,
) -> Result<Report> {
    let w: Window = match (window, pair) {
        (Some((a, b)), _) => Window::new(a, b, ctx)?,
        (None, Some((s, sp))) => derive_window(s, sp, ctx)?,
        (None, None) => bail!("give --window a:b or a covering pair --s/--sp to derive it"),
    };
    let wc = w.context();
    let mut out = serde_json::Map::new();
    out.insert("window".into(), json!({ "a": w.a, "b": w.b, "h": w.h() }));
    let mut text = format!("window [{}, {}], h = {}\n", w.a, w.b, w.h());
    if let Some(s) = segment {
        let r = restrict_segment(s, w)?;
        writeln!(text, "segment: {r}")?;
        out.insert("segment".into(), serde_json::to_value(r)?);
    }
    if let Some(m) = ladder {
        let r = restrict_multiseg(m, w)?;
        writeln!(text, "ladder: {r}")?;
        out.insert("ladder".into(), serde_json::to_value(&r)?);
    }
    if let Some(x) = weight {
        let r = restrict_lweight(&normalized(x, ctx)?, w);
        writeln!(text, "weight: {r}")?;
        out.insert("weight".into(), serde_json::to_value(&r)?);
    }
    if let Some((s, sp)) = pair {
        let (rs, rsp) = (restrict_multiseg(s, w)?, restrict_multiseg(sp, w)?);
        writeln!(text, "s: {rs}\ns': {rsp}")?;
        out.insert("s".into(), serde_json::to_value(&rs)?);
        out.insert("sp".into(), serde_json::to_value(&rsp)?);
        if rs.len() >= 2 {
            let f = condition_flags(&rs, &rsp, wc)?;
            writeln!(text, "almostdual in window: {}", f.almostdual)?;
            out.insert("flags".into(), serde_json::to_value(f)?);
        }
    }
    Report::new(&serde_json::Value::Object(out), text)
}

fn verify(suite: SuiteArg, rank: i64, cap: u64, budget: u64, width: Option<i64>) -> Result<Report> {
    let suite = match suite {
        SuiteArg::Lemmas => Suite::Lemmas,
        SuiteArg::Formulas => Suite::Formulas,
        SuiteArg::Examples => Suite::Examples,
    };
    let ctx = RankContext::new(rank)?;
    let mut o = VerifyOptions::new(ctx);
    o.cap = cap;
    o.node_budget = budget;
    if let Some(w) = width {
        if w < 1 {
            bail!("--spar-width must be positive");
        }
        o.spar_width = w;
    }
    let r = verify_suite(suite, &o)?;
    let mut text = String::new();
    for c in &r.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
        };
        writeln!(text, "{tag} {} ({} cases): {}", c.id, c.cases, c.statement)?;
        if let Some(x) = &c.counterexample {
            writeln!(text, "  counterexample: {x}")?;
        }
    }
    write!(text, "{}/{} pass", r.count(CheckStatus::Pass), r.checks.len())?;
    let status = if r.count(CheckStatus::Fail) > 0 {
        Status::Failed
    } else if r.count(CheckStatus::Inconclusive) > 0 {
        Status::Inconclusive(format!("{} checks hit the case cap", r.count(CheckStatus::Inconclusive)))
    } else {
        Status::Ok
    };
    let rows = r
        .checks
        .iter()
        .map(|c| {
            vec![
                c.id.clone(),
                format!("{:?}", c.status).to_lowercase(),
                c.cases.to_string(),
                c.counterexample.clone().unwrap_or_default(),
            ]
        })
        .collect();
    Ok(Report::new(&r, text)?
        .with_table(vec!["id", "status", "cases", "counterexample"], rows)
        .with_status(status))
}
