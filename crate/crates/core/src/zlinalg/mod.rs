//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point anywhere in the crate.

mod matrix;
mod normal_form;
mod solve;

pub use matrix::{int_vector, to_integer_vector, to_rational_vector};
pub use matrix::{IntMatrix, IntVector, RatMatrix, RatVector};
pub use normal_form::{hnf, snf, SnfDecomposition};
pub use solve::{integer_kernel, invert_rational, lattice_basis, solve_in_lattice};

#[cfg(test)]
mod proptests;
