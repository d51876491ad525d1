use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("solution is not unique (nullity {nullity})")]
    NotUnique { nullity: usize },
    #[error("no antipode: the convolution equations are inconsistent")]
    NoAntipode,
    #[error("antipode is not unique ({nullity}-dimensional solution space)")]
    NonUniqueAntipode { nullity: usize },
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("no inverse for {0} in its sandwich subspace")]
    NoInverse(&'static str),
    #[error("Drinfeld element u is not invertible")]
    UNotInvertible,
    #[error("algebra is not cocommutative")]
    NotCocommutative,
    #[error("modules are over different algebras ({0} vs {1})")]
    MismatchedAlgebra(String, String),
    #[error("closure violation: {map} sends carrier basis vector {index} outside its codomain")]
    ClosureViolation { map: &'static str, index: usize },
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("not a bicharacter: {0}")]
    NotABicharacter(String),
    #[error("twisted structure fails check `{0}`")]
    TwistAxiomFailure(String),
    #[error("alpha does not map the quantized carrier onto the twisted centralizer")]
    CarrierMismatch,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
}
