//! Exact integer and rational linear algebra.
//!
//! Vectors are passed as slices of [`BigInt`](num_bigint::BigInt); a set of
//! vectors is a slice of such vectors, interpreted as matrix columns.

mod cone;
mod lattice;
mod matrix;
mod normal_form;

pub use cone::in_cone;
pub use lattice::{in_q_span, min_multiple_in_zspan, solve_integer};
pub use matrix::IntMatrix;
pub use normal_form::{card_group, delta_t, hnf, snf, torsion_order, GroupOrder, SnfResult};
