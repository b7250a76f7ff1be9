//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by parsing, diagram algebra, realization and verification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("word syntax error: unexpected character {found:?} at position {position}")]
    WordSyntax { found: char, position: usize },

    #[error("partition syntax error: {reason}")]
    PartitionSyntax { reason: String },

    #[error("invalid partition over [{ground_size}]: {reason}")]
    InvalidPartition { ground_size: usize, reason: String },

    #[error("ground set of size {requested} exceeds the enumeration cap {cap}; raise the cap explicitly to proceed")]
    GroundCapExceeded { requested: usize, cap: usize },

    #[error("matrix dimension n^{exponent} with n = {n} exceeds the cap {cap} (k = {k}, l = {l}); set EASYQG_DIM_CAP or pass a larger cap")]
    DimCapExceeded {
        n: usize,
        k: usize,
        l: usize,
        exponent: usize,
        cap: usize,
    },

    #[error("word mismatch: expected the glued words to agree, got {left} vs {right}")]
    WordMismatch { left: String, right: String },

    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("multi-index arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("multi-index entry {entry} out of range 1..={n}")]
    IndexOutOfRange { entry: usize, n: usize },

    #[error("family {family} is one-coloured but the requested words contain black points; pass coercion to map them to white")]
    ColouredWordRejected { family: String },

    #[error("operation requires family {expected}, got {got}")]
    WrongFamily { expected: String, got: String },

    #[error("unknown family name {name:?}")]
    UnknownFamily { name: String },

    #[error("group dimension n must be at least 1")]
    InvalidDimension,

    #[error("weight assignment does not match the spanning set: {expected} diagrams expected, got {got}")]
    WeightMismatch { expected: usize, got: usize },

    #[error("layer {layer} breaks the word chain: previous output word {previous}, next input word {next}")]
    ChainBreak {
        layer: usize,
        previous: String,
        next: String,
    },

    #[error("network must contain at least one layer")]
    EmptyNetwork,

    #[error("input vector length {got} does not match the first layer domain {expected}")]
    InputLength { expected: usize, got: usize },

    #[error("unknown symbol in relation text: {symbol:?}")]
    UnknownSymbol { symbol: String },

    #[error("relation syntax error: {reason}")]
    RelationSyntax { reason: String },

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
