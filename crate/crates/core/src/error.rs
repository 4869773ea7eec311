use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain (bad vertex, non-edge, wrong graph class, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Exhaustive analyzers refuse instances above their configured cap.
    #[error("exhaustive-only: {what} needs n <= {cap}, got n = {n}")]
    ExhaustiveOnly {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("decomposition failed at node {node:?}: {source}")]
    Decomposition {
        node: Vec<Vertex>,
        #[source]
        source: Box<Error>,
    },

    #[error("budget exceeded: removed {removed} edges but beta(n) = {budget}")]
    BudgetExceeded { removed: usize, budget: f64 },

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A proof-guaranteed step did not go through; carries a diagnostic dump.
    #[error("embedding failed: {0}")]
    EmbeddingFailed(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for refusals caused by size caps or unrepresentable values, as
    /// opposed to bad input.
    pub fn is_refusal(&self) -> bool {
        match self {
            Error::ExhaustiveOnly { .. } | Error::Overflow(_) => true,
            Error::Decomposition { source, .. } => source.is_refusal(),
            _ => false,
        }
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
