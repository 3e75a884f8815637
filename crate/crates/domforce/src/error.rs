//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop ({0},{0}) is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("graph order must be at least 1")]
    EmptyGraph,

    #[error("operation would leave an empty graph")]
    EmptyResult,

    #[error("graph order {order} exceeds the solver cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("solver cap {0} is invalid (must be between 1 and 64)")]
    InvalidCap(usize),

    #[error("the given set does not force the whole graph")]
    NotForcingSet,

    #[error("forcing trace is incomplete; chains are defined for forcing sets only")]
    IncompleteTrace,

    #[error("naive oracle is limited to order <= {limit}, got {order}")]
    OracleLimit { order: usize, limit: usize },

    #[error("naive oracle does not support the {0} invariant")]
    OracleUnsupported(&'static str),

    #[error("invalid parameter for family {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },

    #[error("cannot parse family spec '{spec}': {reason}")]
    ParseSpec { spec: String, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    ParseEdgeList { line: usize, reason: String },

    #[error("unknown theorem id '{0}'")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
