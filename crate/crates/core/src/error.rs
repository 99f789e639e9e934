use thiserror::Error;

use crate::graph::MAX_ORDER;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {0} outside supported range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop requested at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("edge endpoint cannot have degree 0")]
    ZeroDegree,
    #[error("isomorphism test supports order <= {limit}, got {order}")]
    IsoLimit { order: usize, limit: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("scan of {masks} masks for n = {n} exceeds the hard cap")]
    ScanCap { n: usize, masks: u128 },
    #[error("no graph on {0} vertices matches the filter")]
    EmptyClass(usize),
    #[error("unknown function id {0:?}")]
    UnknownFunction(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}
