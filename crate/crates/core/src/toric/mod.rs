//! Toric configurations, binomials and the reduction `A ↦ A_red`.

mod config;
mod reduction;

pub use config::{Binomial, Configuration, SimplicialConfig};
pub use reduction::{gcd_vec, height, reduce, ReductionEvent, ReductionResult};

pub(crate) use reduction::proportional;
