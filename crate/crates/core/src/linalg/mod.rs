//! Exact linear algebra over R_0: fraction-free rank and determinants,
//! Smith form over ℤ, minors, and cokernel vanishing.

mod bareiss;
mod cokernel;
mod matrix;
mod minors;
mod snf;

pub use bareiss::{determinant, rank_ff};
pub use cokernel::{cokernel_is_zero, cokernel_is_zero_with_candidates, reduce_unit_pivots, CokernelVanishing};
pub use matrix::Matrix;
#[cfg(test)]
pub(crate) use minors::combinations;
pub use minors::{minor_ideal, submatrix_count, MinorIdealResult, DEFAULT_MINOR_BUDGET};
pub use snf::{integer_matrix, smith_normal_form, smith_normal_form_int, SnfResult};

#[cfg(test)]
mod tests;
