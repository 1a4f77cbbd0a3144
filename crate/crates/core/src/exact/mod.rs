//! Exact field arithmetic and deterministic dense linear algebra.

pub mod cells;
mod field;
mod linalg;
mod matrix;
mod scalar;

pub use field::{is_prime, Field};
pub use linalg::{kernel, rref, solve, Solution, Subspace};
pub use matrix::Matrix;
pub use scalar::Scalar;
