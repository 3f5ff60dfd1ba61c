use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum Error {
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("the two vertices must be distinct (got {0} twice)")]
    SameVertex(usize),
    #[error("malformed graph6 record: {0}")]
    MalformedRecord(String),
    #[error("order {0} exceeds the supported cap of {1}")]
    UnsupportedOrder(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is 3-connected, no 2-cut exists")]
    Is3Connected,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("construction parameter out of range: {0}")]
    SpecOutOfRange(String),
    #[error("order {0} exceeds the isomorphism cap of {1}")]
    OrderTooLarge(usize, usize),
    #[error("bad filter expression: {0}")]
    BadFilter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
