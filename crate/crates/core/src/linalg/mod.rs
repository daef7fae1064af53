//! Exact dense linear algebra over ℚ(i).

mod matrix;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;
