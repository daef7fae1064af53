use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// How a failure is classified at the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input document, coefficient syntax or parameter bindings.
    Parse,
    /// The instantiated algebra or structure fails validation.
    Validation,
    /// A proven identity failed: either the input is outside the theory or the engine is wrong.
    TheoremViolation,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient `{expr}` has a pole at the given parameter values")]
    PoleAtBinding { expr: String },
    #[error("parameter {0} requires --param")]
    UnboundParameter(String),
    #[error("cannot parse coefficient `{input}` at offset {offset}: {message}")]
    CoefficientParse { input: String, offset: usize, message: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("index error: {0}")]
    Index(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("quaternionic relations fail: {0}")]
    QuaternionicRelationFailure(String),
    #[error("{structure} is not integrable: {form}")]
    IntegrabilityFailure { structure: String, form: String },
    #[error("Lie algebra is invalid: {0}")]
    InvalidLieAlgebra(String),
    #[error("+i eigenspace of I has dimension {found}, expected {expected}")]
    EigenspaceDimension { expected: usize, found: usize },
    #[error("d of a ({p},{q})-form has components outside ({p}+1,{q}) and ({p},{q}+1)")]
    IntegrabilityViolation { p: usize, q: usize },
    #[error("not a subspace: {0}")]
    NotASubspace(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("volume form is not holomorphic: {0}")]
    NotHolomorphic(String),
    #[error("volume form is not J-real: {0}")]
    NotReal(String),
    #[error("singular Gram matrix")]
    SingularGram,
    #[error("pairing depends on representatives: {0}")]
    RepresentativeDependence(String),
    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),
    #[error("form is not quaternionic Gauduchon")]
    NotGauduchon,
    #[error("form is not Aeppli closed")]
    NotAeppliClosed,
    #[error("expected a form of bidegree (2,0)")]
    NotBidegree20,
    #[error("existence criteria need real dimension 8 (n = 2), got n = {0}")]
    NotSL2(usize),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            DivisionByZero | PoleAtBinding { .. } | UnboundParameter(_) | CoefficientParse { .. } | Schema { .. }
            | Index(_) => ErrorClass::Parse,
            DimensionMismatch(_)
            | QuaternionicRelationFailure(_)
            | IntegrabilityFailure { .. }
            | InvalidLieAlgebra(_)
            | EigenspaceDimension { .. }
            | NotGauduchon
            | NotAeppliClosed
            | NotBidegree20
            | NotSL2(_) => ErrorClass::Validation,
            IntegrabilityViolation { .. }
            | NotASubspace(_)
            | InternalInconsistency(_)
            | TheoremViolation(_)
            | NotHolomorphic(_)
            | NotReal(_)
            | SingularGram
            | RepresentativeDependence(_)
            | DecompositionFailure(_) => ErrorClass::TheoremViolation,
        }
    }
}
