//! Fixtures shared by the benchmarks.

use ladder_core::{LWeight, Multisegment, RankContext};

pub fn ctx(h: i64) -> RankContext {
    RankContext::with_h(h).expect("h >= 2")
}

/// The rank-6 covering pair `([1,4],[2,5]) ⊳₁ ([-1,2],[0,3])`.
pub fn pinned_pair() -> (Multisegment, Multisegment) {
    (
        "[1..4, 2..5]".parse().expect("valid ladder"),
        "[-1..2, 0..3]".parse().expect("valid ladder"),
    )
}

/// `(*π₁)⁻¹ π₁` for the pinned pair and the factor list of `π₀ π₁`.
pub fn pinned_weyl_target() -> (LWeight, Multisegment) {
    let c = ctx(7);
    let (s, sp) = pinned_pair();
    let pi1 = ladder_core::pi_chain(&s, &sp, 1, c).expect("pinned pair 1-covers").pis[1].clone();
    let target = pi1.div(&pi1.star_dual(ladder_core::DualSide::Left, c).expect("proper generators"));
    (target, ladder_core::verify::PINNED_WEYL_FACTORS.parse().expect("valid factors"))
}
