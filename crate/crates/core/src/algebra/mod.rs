//! Lie algebra input, validation and the quaternionic coframe.

mod coframe;
mod spec;
mod validate;

pub use coframe::{build_coframe, complex_frame, describe_one_form, plus_i_eigenspace, CoframeEntry, ComplexFrame, QuaternionicCoframe};
pub use spec::{Algebra, AlgebraSpec, StructureEquation, StructureTerm};
pub use validate::{nilpotency_step, validate_hypercomplex, validate_lie_algebra, ValidationReport};
