//! Exact arithmetic over the Gaussian rationals and parametrized coefficients.

mod gaussian;
mod param;

pub use gaussian::{rational, GaussianRational, Rational};
pub use param::{Bindings, ParamExpr};
