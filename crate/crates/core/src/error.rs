use thiserror::Error;

use crate::design::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid design: {}", join(.0))]
    InvalidDesign(Vec<Violation>),

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),

    #[error("star size k = {0} is below 2")]
    StarSizeTooSmall(usize),

    #[error("edge count {edges} is not divisible by k = {k}")]
    EdgeCountNotDivisible { edges: usize, k: usize },

    #[error("function has {got} values but the graph has {n} vertices")]
    LengthMismatch { got: usize, n: usize },

    #[error("function sums to {sum}, expected |E|/k = {expected}")]
    PrecentralSum { sum: usize, expected: usize },

    #[error("vertex subset must be nonempty and proper")]
    ImproperSubset,

    #[error("order {n} exceeds the subset enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("design is not reducible")]
    NotReducible,

    #[error("{0}")]
    OutOfRange(String),

    #[error("could not place star {placed} of {wanted}: no vertex has leftover degree >= k")]
    Stuck { placed: usize, wanted: usize },

    /// A step that is guaranteed to succeed on its inputs has failed.
    #[error("internal defect: {message}")]
    Defect {
        message: String,
        witness: Option<Vec<usize>>,
    },
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
