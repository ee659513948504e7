use thiserror::Error;

/// Errors produced by parsing, spectral grouping, and the characterization
/// gates.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error: {reason}")]
    EdgeList { reason: String },

    #[error("graph not connected")]
    NotConnected,

    #[error("analysis requires at least 2 vertices")]
    TooSmall,

    #[error(
        "adjacency gate requires a regular graph (degrees range {min}..={max}); \
         use the Laplacian gate instead"
    )]
    IrregularAdjacency { min: usize, max: usize },

    #[error("graph disconnected by spectrum: Laplacian eigenvalue 0 has multiplicity {multiplicity}")]
    DisconnectedSpectrum { multiplicity: usize },

    #[error("matrix not symmetric: max |M - M^T| entry is {deviation:e}")]
    NotSymmetric { deviation: f64 },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("I/O error at line {line}: {source}")]
    Io {
        line: usize,
        #[source]
        source: std::io::Error,
    },

    #[error("internal consistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
