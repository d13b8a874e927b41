use thiserror::Error;

use crate::set::BitSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A red edge with no vertices: nothing can hit it.
    #[error("red edge {0} is empty, so no transversal exists")]
    EmptyRedEdge(usize),

    #[error("edge {0} is empty, so no transversal exists")]
    EmptyEdge(usize),

    #[error("vertex {vertex} is outside a universe of {universe} vertices")]
    VertexOutOfRange { vertex: usize, universe: usize },

    #[error("universe of {size} exceeds the brute-force limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("more than {cap} partial transversals were generated")]
    PartialsCapExceeded { cap: usize },

    #[error("set {set:?} at position {index} is not a transversal")]
    NotTransversal { index: usize, set: BitSet },

    #[error("set {set:?} at position {index} is a transversal but not a minimal one")]
    NotMinimal { index: usize, set: BitSet },

    #[error("set {set:?} at position {index} has a blue footprint that is not minimal")]
    FootprintNotMinimal { index: usize, set: BitSet },

    #[error("set {set:?} at position {index} is not a model of the formula")]
    NotModel { index: usize, set: BitSet },

    #[error("set {set:?} at position {index} is a model but not a minimal one")]
    NotMinimalModel { index: usize, set: BitSet },

    #[error("assignment has {got} values but the formula has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },

    #[error("formula parse error at byte {pos}: {msg}")]
    FormulaParse { pos: usize, msg: String },

    #[error("DIMACS parse error on line {line}: {msg}")]
    Dimacs { line: usize, msg: String },

    #[error("invalid clause {clause}: {msg}")]
    InvalidClause { clause: usize, msg: String },

    #[error("variable x{0} occurs in every clause")]
    SideCondition(usize),

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A check that can only fail through a bug in this crate.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
