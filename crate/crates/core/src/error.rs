use thiserror::Error;

use crate::cyclic::ZViolation;
use crate::matroid::AxiomViolation;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set of {0} elements exceeds the limit of 16")]
    TooManyElements(usize),
    #[error("rank table violates the matroid axioms: {0}")]
    Axiom(AxiomViolation),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid element label `{0}`")]
    InvalidLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0:?} is not a flat")]
    NotFlat(Subset),
    #[error("{0:?} is not a circuit-hyperplane")]
    NotCircuitHyperplane(Subset),
    #[error("family is not laminar: {0:?} and {1:?} cross")]
    NotLaminar(Subset, Subset),
    #[error("presentation is not a chain: block {0} is not contained in block {1}")]
    NotAChain(usize, usize),
    #[error("basepoint {0} is a loop or coloop")]
    BadBasepoint(String),
    #[error("cyclic flat family violates {0}")]
    CyclicFlats(ZViolation),
    #[error("circuit list is not the circuit family of a matroid")]
    NotMatroidal,
    #[error("graph edge ({0}, {1}) references a vertex outside 0..{2}")]
    BadVertex(usize, usize, usize),
}

pub type Result<T, E = MatroidError> = std::result::Result<T, E>;
