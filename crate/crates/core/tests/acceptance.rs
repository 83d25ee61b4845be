//! Acceptance criteria: one PASS/FAIL line each, with a wall-clock limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ladder_core::verify::*;
use ladder_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<(), String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ctx(h: i64) -> RankContext {
    RankContext::with_h(h).unwrap()
}

fn opts(h: i64) -> VerifyOptions {
    VerifyOptions::new(ctx(h))
}

fn expect_pass(checks: impl IntoIterator<Item = Result<Check>>) -> Outcome {
    for c in checks {
        let c = c.map_err(|e| e.to_string())?;
        if c.status != CheckStatus::Pass {
            return Err(format!(
                "{} is {:?} after {} cases: {}",
                c.id,
                c.status,
                c.cases,
                c.counterexample.unwrap_or_default()
            ));
        }
    }
    Ok(())
}

fn fundamental_counts() -> Outcome {
    expect_pass((2..=7).map(|h| check_path_counts(&opts(h))))
}

fn corner_lemmas() -> Outcome {
    let per_rank: [fn(&VerifyOptions) -> Result<Check>; 9] = [
        check_lower_corners_are_coverings,
        check_corner_unions,
        check_tau_flip,
        check_peak_uniqueness,
        check_valley_uniqueness,
        check_lower_to_upper,
        check_smaller_spar,
        check_lowest_path_bounds,
        check_ladder_meets_corners_once,
    ];
    expect_pass((2..=5).flat_map(|h| per_rank.iter().map(move |f| f(&opts(h)))))
}

fn tuple_criterion() -> Outcome {
    let o = opts(5);
    expect_pass([check_tuple_criterion(&o), check_peak_tuples(&o)])
}

fn pinned_instance() -> Outcome {
    expect_pass([check_pinned_pair(&opts(7))])
}

fn census_formulas() -> Outcome {
    let mut checks = Vec::new();
    for h in 2..=7 {
        checks.push(check_cover_counts(&opts(h)));
        checks.push(check_d2_formula(&opts(h)));
        if h <= 6 {
            checks.push(check_c1_formula(&opts(h)));
        }
        if h <= 5 {
            checks.push(check_length_reduction(&opts(h)));
        }
    }
    checks.push(check_rank_four_listing(&opts(5)));
    expect_pass(checks)
}

fn order_oracle() -> Outcome {
    expect_pass([check_order_oracle(&opts(5))])?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for round in 0..1000 {
        let h = rng.gen_range(2..=7);
        let c = ctx(h);
        let terms = (0..rng.gen_range(1..=8)).map(|_| {
            let ti = rng.gen_range(-12..=12);
            let supp = rng.gen_range(1..h);
            (Segment::new(ti, ti + 2 * supp).unwrap(), rng.gen_range(-3..=3))
        });
        let n = LRootVector::from_pairs(terms);
        let g = n.to_lweight(c).map_err(|e| e.to_string())?;
        if decompose_lroots(&g, c).as_ref() != Some(&n) {
            return Err(format!("round {round}: {n} does not round-trip through {g}"));
        }
    }
    Ok(())
}

fn window_restriction() -> Outcome {
    expect_pass(
        [check_pinned_window(&opts(7))]
            .into_iter()
            .chain((2..=5).map(|h| check_window_commutation(&opts(h)))),
    )
}

fn constructions() -> Outcome {
    let mut pool = Vec::new();
    for h in 4..=7 {
        let c = ctx(h);
        for first in [0, 1] {
            for (s, sp) in one_covering_pairs(c, first) {
                if let Ok((e, ep)) = construct_extend(&s, &sp, c) {
                    pool.push((h, e, ep));
                }
                pool.push((h, s, sp));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    pool.shuffle(&mut rng);
    for (h, s, sp) in pool.iter().take(50) {
        let c = ctx(*h);
        let fail = |what: &str| format!("h={h} {s} / {sp}: {what}");
        let (t, tp) = construct_socle_realize(s, sp, c).map_err(|e| fail(&e.to_string()))?;
        let pi1 = pi_chain(s, sp, 1, c).unwrap().pis[1].clone();
        if !(t.is_ladder() && tp.is_ladder() && mcovers(&t, &tp, c).unwrap() && socle_weight(&t, &tp, c).unwrap() == pi1) {
            return Err(fail("socle realization misses pi_1"));
        }
        let (e, ep) = construct_extend(s, sp, c).map_err(|e| fail(&e.to_string()))?;
        let prefix = ladder_core::census::is_valid_prefix(e[0], ep[0], s[0], sp[0], c);
        let chain = p_cover(&e, &ep, 1, c).unwrap() && e.is_ladder() && ep.is_ladder();
        if !(prefix && chain && condition_flags(&e, &ep, c).unwrap().almostdual) {
            return Err(fail("extension violates its conditions"));
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "path counts and injectivity of omega, h <= 7", 5, fundamental_counts),
        (2, "corner lemmas, exhaustive for h <= 5", 60, corner_lemmas),
        (3, "tuple criterion and peak tuples at h = 5", 120, tuple_criterion),
        (
            4,
            "socle chain, census, multiplicities and Weyl witness of the rank-6 pair",
            600,
            pinned_instance,
        ),
        (5, "census formulas, rank-4 listing and length reduction", 120, census_formulas),
        (6, "l-root order oracle and decomposition round trip", 60, order_oracle),
        (
            7,
            "window restriction of the rank-6 pair and commutation with diamond",
            10,
            window_restriction,
        ),
        (8, "socle realization and extension on 50 sampled pairs", 30, constructions),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let took = start.elapsed();
        let verdict = match result {
            Ok(()) if took <= Duration::from_secs(limit) => Ok(()),
            Ok(()) => Err(format!("over the {limit} s limit")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS {id}: {name} ({:.2} s, limit {limit} s)", took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {id}: {name} ({:.2} s, limit {limit} s): {e}", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
