use thiserror::Error;

/// Errors shared across the oracle library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input document; `line` is 1-based.
    #[error("{msg} at line {line}")]
    Parse { line: usize, msg: String },

    /// A failure set was larger than the capacity an oracle was built for.
    #[error("failure set has {got} edges but capacity is {capacity}")]
    CapacityExceeded { got: usize, capacity: usize },

    /// A brute-force or enumeration routine refused to run above its cap.
    #[error("{what} = {got} exceeds cap of {cap}")]
    CapViolation {
        what: &'static str,
        got: u64,
        cap: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Vertex-cover validation failed; reports one uncovered edge.
    #[error("not a vertex cover: edge {edge} = ({tail}, {head}) has no endpoint in the cover")]
    NotACover {
        edge: usize,
        tail: usize,
        head: usize,
    },

    /// A randomized matrix turned out singular. When `retryable`, fresh
    /// randomness (a different build seed) fixes it with high probability.
    #[error("singular {what} (retryable: {retryable})")]
    Singular {
        what: &'static str,
        retryable: bool,
    },

    #[error("oracle file error: {0}")]
    Envelope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
