//! Exterior algebra over ℚ(i) and the operators of the quaternionic complex.

mod engine;
mod form;

pub use engine::{combinations, is_zero_vector, Engine, OperatorKind, OperatorMatrix};
pub use form::{mask_indices, mask_of, wedge_sign, Derivation, Form, Mask, Substitution};
