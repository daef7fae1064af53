//! Exact cohomology of nilpotent Lie algebras with integrable hypercomplex structures.

pub mod algebra;
pub mod arith;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod exterior;
pub mod io;
pub mod linalg;
pub mod report;
pub mod metric;
pub mod session;
pub mod sl;
pub mod suite;
pub mod variants;

pub use algebra::{Algebra, AlgebraSpec, QuaternionicCoframe, ValidationReport};
pub use arith::{Bindings, GaussianRational, ParamExpr, Rational};
pub use cohomology::{CohomologyRow, CohomologyTable, DoubleComplex};
pub use error::{Error, ErrorClass, Result};
pub use exterior::{Engine, Form, OperatorKind, OperatorMatrix};
pub use linalg::{Matrix, Subspace};
pub use session::Session;
