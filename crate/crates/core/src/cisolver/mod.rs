//! Complete intersection decision for simplicial configurations.
//!
//! The merge phase repeatedly fuses two proportional vectors whose minimal
//! multiples coincide, the elimination phase then removes vectors whose
//! minimal integer multiple is reachable from both their own and the other
//! absorbed original vectors. Every accepted step contributes one binomial.

mod families;
mod solver;

pub use families::{
    curve_blocks, curve_family_expected, gen_family_curve, gen_family_surface,
    gen_family_surface_pairs, random_chain, random_simplicial,
};
pub use solver::{ci_projective, ci_simplicial, CiEvent, CiResult, MOutcome, NotCiReason, SolverOptions};
