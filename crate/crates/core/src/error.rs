use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Vertex indices carried by the variants are 0-based; the CLI shifts them
/// when it renders messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a digraph needs at least one vertex")]
    EmptyVertexSet,

    #[error("loop arc ({0}, {0}) is not allowed")]
    Loop(usize),

    #[error("vertex {vertex} is out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid size {size} for {family}: {reason}")]
    InvalidSize {
        family: &'static str,
        size: usize,
        reason: &'static str,
    },

    #[error("{0} requires a seed")]
    MissingSeed(&'static str),

    #[error("order {n} exceeds the cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("{count} edges exceed the orientation enumeration cap of {cap}")]
    EdgeCap { count: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input is not a tournament")]
    NotTournament,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("parameter {param} is missing from the result map")]
    MissingParameter { param: &'static str },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
