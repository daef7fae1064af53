//! An instantiated, validated algebra with its operator matrices.

use crate::algebra::{build_coframe, validate_hypercomplex, Algebra, AlgebraSpec, QuaternionicCoframe, ValidationReport};
use crate::arith::Bindings;
use crate::cohomology::DoubleComplex;
use crate::error::Result;
use crate::exterior::{Engine, OperatorKind, OperatorMatrix};

/// Everything needed to compute invariants of one algebra at one parameter
/// value. Immutable after construction.
#[derive(Clone, Debug)]
pub struct Session {
    pub name: String,
    pub algebra: Algebra,
    pub validation: ValidationReport,
    pub coframe: QuaternionicCoframe,
    pub engine: Engine,
    /// Index `p` holds the operator on `Λ^{p,0}`, `p = 0..=2n`.
    pub del: Vec<OperatorMatrix>,
    pub del_j: Vec<OperatorMatrix>,
    pub jbar: Vec<OperatorMatrix>,
    pub ddj: Vec<OperatorMatrix>,
}

impl Session {
    pub fn new(spec: &AlgebraSpec, bindings: &Bindings) -> Result<Session> {
        Session::from_algebra(spec.instantiate(bindings)?)
    }

    /// Validates the algebra and builds the coframe and operator matrices.
    pub fn from_algebra(algebra: Algebra) -> Result<Session> {
        let validation = validate_hypercomplex(&algebra);
        validation.check()?;
        let coframe = build_coframe(&algebra)?;
        let engine = Engine::new(&algebra, &coframe);
        let top = engine.holo();
        let build = |kind| (0..=top).map(|p| engine.operator_matrix(kind, p)).collect::<Result<Vec<_>>>();
        let del = build(OperatorKind::Del)?;
        let del_j = build(OperatorKind::DelJ)?;
        let jbar = build(OperatorKind::Jbar)?;
        let ddj = build(OperatorKind::DdJ)?;
        Ok(Session { name: algebra.name.clone(), algebra, validation, coframe, engine, del, del_j, jbar, ddj })
    }

    /// Quaternionic dimension `n` (real dimension `4n`).
    pub fn n(&self) -> usize {
        self.algebra.quaternionic_dim()
    }

    /// The single complex `(Λ^{•,0}, ∂, ∂_J)` as bare matrices.
    pub fn double_complex(&self) -> DoubleComplex {
        DoubleComplex::new(
            self.del.iter().map(|m| m.matrix.clone()).collect(),
            self.del_j.iter().map(|m| m.matrix.clone()).collect(),
        )
        .expect("operator shapes are consistent")
    }
}
