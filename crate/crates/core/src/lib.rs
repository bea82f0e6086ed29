//! Exact algorithms for toric ideals of configurations `A ⊂ ℕ^m`.
//!
//! The crate decides whether a simplicial toric ideal `I_A` is a complete
//! intersection, computes the reduction `A_red` of an arbitrary
//! configuration, recovers minimal binomial generating sets and certifies
//! candidate generating sets through the mixed dominating matrix criterion.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! no floating point is involved anywhere.
//!
//! Modules, bottom-up:
//!
//! * [`exactlin`]: Hermite/Smith normal forms, determinant divisors, torsion
//!   orders, integer solving, rational span and cone membership.
//! * [`diophantine`]: nonnegative integer feasibility (semigroup membership
//!   with lexicographically smallest certificates) and the `m̄_i` shortcut.
//! * [`toric`]: configurations, binomials, the gcd vector and the reduction
//!   algorithm with generator recovery.
//! * [`cisolver`]: the complete intersection decision procedure for
//!   simplicial configurations, the projective fast path and the test
//!   families with known answers.
//! * [`certify`]: independent verification of generating sets.

pub mod certify;
pub mod cisolver;
pub mod diophantine;
mod error;
pub mod exactlin;
pub mod toric;

pub use certify::{is_dominating, is_mixed, verify_ci, ExponentMatrix, VerifyFailure, VerifyOutcome};
pub use cisolver::{
    ci_projective, ci_simplicial, gen_family_curve, gen_family_surface, CiEvent, CiResult,
    MOutcome, NotCiReason, SolverOptions,
};
pub use diophantine::{
    confirm_exact, m_bar, semigroup_member, semigroup_member_restricted, Certificate, MBar,
    MBarResult,
};
pub use error::{Error, Result};
pub use exactlin::{
    card_group, delta_t, hnf, in_cone, in_q_span, min_multiple_in_zspan, snf, solve_integer,
    torsion_order, GroupOrder, IntMatrix, SnfResult,
};
pub use toric::{
    gcd_vec, height, reduce, Binomial, Configuration, ReductionEvent, ReductionResult,
    SimplicialConfig,
};

/// Arbitrary-precision integer used for every matrix entry and exponent.
pub type Int = num_bigint::BigInt;

/// Convenience conversion of small integer slices into [`Int`] vectors.
pub fn int_vec<T: Copy + Into<Int>>(values: &[T]) -> Vec<Int> {
    values.iter().map(|&v| v.into()).collect()
}
