use thiserror::Error;

use crate::verdict::Verdict;

/// Errors raised by the algebraic layers of the crate.
///
/// File-format problems have their own type, [`crate::io::FormatError`].
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomials have different variable counts ({0} vs {1})")]
    ArityMismatch(usize, usize),

    #[error("interpolation needs samples at the origin and every unit vector; missing {0}")]
    InsufficientSamples(String),
    #[error("samples are not affine: {0}")]
    NotAffine(String),

    #[error("alpha is required to be the identity map")]
    AlphaNotIdentity,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("alpha is not an endomorphism of the operation: {0}")]
    NotEndomorphism(Box<Verdict>),
    #[error("affgebra data violates its invariants: {0}")]
    DataInvariantViolated(String),
    #[error("alpha is not multiplicative for the Lie bracket: {0}")]
    AlphaNotMultiplicative(Box<Verdict>),
    #[error("structure fails an axiom: {0}")]
    AxiomFailure(Box<Verdict>),

    #[error("point is not fixed by alpha: {0}")]
    NotFixedPoint(String),

    #[error("(delta, lambda, lambda) is not a generalized derivation: {0}")]
    NotInDelta(String),
    #[error("(kappa, lambda) does not lie in the pair space: {0}")]
    NotInPairSpace(String),

    #[error("data homomorphism is invalid: {0}")]
    DataHomInvalid(String),
    #[error("psi is not invertible")]
    PsiNotInvertible,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("operation leaves the affine subspace: {0}")]
    ClosureFailure(String),
    #[error("P is not invertible")]
    PNotInvertible,
    #[error("alpha is incompatible with the Hom-Lie structure: {0}")]
    AlphaIncompatible(Box<Verdict>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
