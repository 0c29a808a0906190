use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("complex has {got} vertices; at most {max} are supported")]
    TooManyVertices { got: usize, max: usize },

    #[error("vertex id {vertex} is outside the ground set of {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("pure {d}-skeleton is empty: the complex has dimension {dim}")]
    EmptySkeleton { d: usize, dim: isize },

    #[error("complex is not pure of dimension {expected}")]
    NotPure { expected: usize },

    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,

    #[error("ideal is not generated in a single degree (degrees {low} and {high} occur)")]
    MixedDegree { low: usize, high: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("chain is not a cycle: its boundary is nonzero")]
    NotACycle,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration infeasible: kernel dimension {kernel_dim} exceeds cap {cap}")]
    EnumerationInfeasible { kernel_dim: usize, cap: usize },

    #[error("{what} infeasible: {n} vertices exceeds the limit of {limit}")]
    Infeasible { what: &'static str, n: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
