//! Nonnegative integer feasibility: semigroup membership with certificates
//! and the proportional-class shortcut for the minimal multiples `m_i`.

mod mbar;
mod membership;
mod scalar;

use std::fmt::Debug;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub use mbar::{confirm_exact, m_bar, MBar, MBarResult};
pub use membership::{semigroup_member, semigroup_member_restricted, Certificate};

pub(crate) use mbar::{exact_m, m_bar_unchecked};
pub(crate) use membership::member_columns;

/// Integer types the search runs on: `i128` when values are small, `BigInt` otherwise.
pub(crate) trait Coef: Integer + Signed + Clone + Hash + Debug + ToPrimitive + FromPrimitive {}

impl<T: Integer + Signed + Clone + Hash + Debug + ToPrimitive + FromPrimitive> Coef for T {}
