//! Segments, ladders, monomial characters and covering censuses for
//! quantum affine `sl_{N+1}` snake modules.

pub mod census;
pub mod character;
pub mod error;
pub mod lweight;
pub mod multiseg;
pub mod path;
pub mod segment;
pub mod verify;

pub use census::{
    c1_count_formula, c1_extensions, c1_pairs, c1_sweep, canonical_seeds, condition_flags, construct_examples, construct_extend,
    construct_socle_realize, cover1_count_formula, cover_count_formula, covered_sets, d2_census, derive_window, one_covering_pairs,
    restrict_lweight, restrict_multiseg, restrict_segment, CensusRecord, Completion, ConditionFlags, ConstructMode, D2Record, Window,
};
pub use character::{
    hlw_candidates, hlw_census, pi_chain, snake_ses_data, snake_support, socle_weight, tensor_multiplicity, tensor_multiplicity_many,
    weyl_membership, MultiplicityReport, Outcome, PiChain, SesData, SnakeSupport,
};
pub use error::{Error, Result};
pub use lweight::{decompose_lroots, leq, omega_of, omega_of_multiseg, simple_lroot, DualSide, LRootVector, LWeight};
pub use multiseg::{diamond, diamond_k, diamond_k_concat, mcorners, mcovers, p_cover, shifted_cover, Multisegment};
pub use path::{
    all_paths, enumerate_paths, enumerate_tuples, extremal_paths, omega_of_path, omega_of_tuple, path_count, peak_path, peak_tuple,
    tuple_membership, tuple_membership_by_corners, valley_path, Corners, Path, PathTuple, TupleEnumerator,
};
pub use segment::{corner_subintervals, MeetJoin, RankContext, Segment};
pub use verify::{verify_suite, Check, CheckStatus, Suite, VerifyOptions, VerifyReport};
