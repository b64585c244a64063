//! Error types for the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("partite shape is invalid: {0}")]
    BadShape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("universe with {edges} edges exceeds the enumeration limit of 2^30")]
    UniverseTooLarge { edges: usize },
    #[error("tournament order {0} outside supported range 2..=7")]
    TournamentOrder(usize),
    #[error("indegree pruning is unsound for filter `{0}`")]
    UnsoundPrune(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown witness family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} requires a parameter k >= {min}")]
    MissingParameter { family: String, min: usize },
    #[error("family {family} does not take a parameter")]
    UnexpectedParameter { family: String },
    #[error("parameter {got} for family {family} out of range (k >= {min}, order <= 64)")]
    ParameterOutOfRange { family: String, got: usize, min: usize },
    #[error("pattern constraint violated: {0}")]
    PatternConstraint(String),
    #[error(
        "construction of {family} failed validation and no replacement orientation exists \
         on shape {shape:?}"
    )]
    ValidationFailure { family: String, shape: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("input graph contains a triangle")]
    NotTriangleFree,
    #[error("no k-partite tournament exists on fewer than 2 vertices (input order {0})")]
    OrderTooSmall(usize),
    #[error("witness synthesis exhausted all admissible shapes for k={k} (order {order})")]
    SynthesisExhausted { k: usize, order: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}
