use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ground-set size outside the supported construction range.
    #[error("ground set size n={n} is out of range (expected {min}..={max})")]
    OutOfRange { n: usize, min: usize, max: usize },

    /// An input exceeded the size limit of an exhaustive routine.
    #[error("{routine} accepts graphs of order at most {cap}, got {order}")]
    Capacity {
        routine: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("vertex index {index} is out of bounds for a graph of order {order}")]
    VertexOutOfBounds { index: usize, order: usize },

    #[error("mask {mask:#x} is not a nonempty proper subset of a {n}-element set")]
    InvalidSubset { mask: u32, n: usize },

    #[error("element {element} is not in the ground set {{1..{n}}}")]
    InvalidElement { element: usize, n: usize },

    #[error("induced subgraph requires a nonempty vertex selection")]
    EmptySelection,

    #[error("graph must be nonempty")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components); eccentricity is undefined")]
    Disconnected { components: usize },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("solver and oracle disagree on {routine}: solver {solver}, oracle {oracle}")]
    OracleMismatch {
        routine: &'static str,
        solver: String,
        oracle: String,
    },

    #[error("invalid range {n_min}..={n_max}")]
    InvalidRange { n_min: usize, n_max: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("serialization failed: {0}")]
    Serialize(String),
}
