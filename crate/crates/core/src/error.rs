use thiserror::Error;

/// Why a graph document was rejected after it parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("edge references unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {label:?} has negative genus {genus}")]
    NegativeGenus { label: String, genus: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid graph: {0}")]
    Validation(#[from] ValidationError),
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("arithmetic genus is undefined for the zero cycle")]
    ZeroCycle,
    #[error("subcycle enumeration exceeds the cap of {cap} cycles")]
    EnumerationTooLarge { cap: u64 },
    #[error("geometric genus is not derivable from the graph; supply it explicitly")]
    PgUnderdetermined,
    #[error("invalid self-intersection {0}: must be negative")]
    InvalidWeight(i64),
    #[error("no ruled surface over an elliptic curve has invariant e = {0} (need e >= -1)")]
    InvalidRuledSurface(i64),
    #[error("C0 + {a}F is not very ample for e = {e} (need a >= e + 3)")]
    NotVeryAmple { e: i64, a: i64 },
    #[error("no sweep plan realizes self-intersection {0} (need d <= -5)")]
    NoPlan(i64),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
