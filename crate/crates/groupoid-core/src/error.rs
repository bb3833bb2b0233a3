use thiserror::Error;

/// Every failure mode of the core crate. The uppercase prefix in each message
/// is the stable machine-readable code surfaced by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ENTRY_OUT_OF_RANGE: table entry {entry} at flat position {position} is not below order {order}")]
    EntryOutOfRange {
        entry: usize,
        position: usize,
        order: usize,
    },

    #[error("LENGTH_MISMATCH: order {order} needs {expected} table entries, got {actual}")]
    LengthMismatch {
        order: usize,
        expected: usize,
        actual: usize,
    },

    #[error("INDEX_OUT_OF_RANGE: element {index} is not below order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("ORDER_MISMATCH: orders {left} and {right} differ")]
    OrderMismatch { left: usize, right: usize },

    #[error("ORDER_TOO_LARGE: order {order} exceeds the bound {bound} for {operation}")]
    OrderTooLarge {
        order: usize,
        bound: usize,
        operation: &'static str,
    },

    #[error("PRODUCT_ORDER_OVERFLOW: direct product of order {requested} exceeds the cap {cap}")]
    ProductOrderOverflow { requested: usize, cap: usize },

    #[error("INVALID_SPEC: {0}")]
    InvalidSpec(String),

    #[error("INVALID_LOOP_PARAMS: {0}")]
    InvalidLoopParams(String),

    #[error("SUBSET_OUT_OF_RANGE: subset width {width} does not match magma order {order}")]
    SubsetOutOfRange { width: usize, order: usize },

    #[error("NOT_CLOSED: {subset} is not a subgroupoid ({reason})")]
    NotClosed { subset: String, reason: String },

    #[error("NOT_DISJOINT: {left} and {right} intersect")]
    NotDisjoint { left: String, right: String },

    #[error("NOT_S_SUBGROUPOID: {subset} is not a Smarandache subgroupoid")]
    NotSSubgroupoid { subset: String },

    #[error("NOT_SMARANDACHE: no proper subset of the magma is a qualifying semigroup")]
    NotSmarandache,

    #[error("NOT_SEMIGROUP: {subset} is not associative under the restricted operation ({reason})")]
    NotSemigroup { subset: String, reason: String },

    #[error("PARSE_ERROR: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code (the prefix of the display form).
    pub fn code(&self) -> &'static str {
        match self {
            Error::EntryOutOfRange { .. } => "ENTRY_OUT_OF_RANGE",
            Error::LengthMismatch { .. } => "LENGTH_MISMATCH",
            Error::IndexOutOfRange { .. } => "INDEX_OUT_OF_RANGE",
            Error::OrderMismatch { .. } => "ORDER_MISMATCH",
            Error::OrderTooLarge { .. } => "ORDER_TOO_LARGE",
            Error::ProductOrderOverflow { .. } => "PRODUCT_ORDER_OVERFLOW",
            Error::InvalidSpec(_) => "INVALID_SPEC",
            Error::InvalidLoopParams(_) => "INVALID_LOOP_PARAMS",
            Error::SubsetOutOfRange { .. } => "SUBSET_OUT_OF_RANGE",
            Error::NotClosed { .. } => "NOT_CLOSED",
            Error::NotDisjoint { .. } => "NOT_DISJOINT",
            Error::NotSSubgroupoid { .. } => "NOT_S_SUBGROUPOID",
            Error::NotSmarandache => "NOT_SMARANDACHE",
            Error::NotSemigroup { .. } => "NOT_SEMIGROUP",
            Error::Parse(_) => "PARSE_ERROR",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
