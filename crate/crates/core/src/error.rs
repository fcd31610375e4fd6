use thiserror::Error;

use crate::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be positive")]
    EmptyTable,
    #[error("table must be {order}x{order}, row {row} has {len} entries")]
    BadShape { order: usize, row: usize, len: usize },
    #[error("expected {order} rows, found {rows}")]
    BadRowCount { order: usize, rows: usize },
    #[error("entry at ({x},{y}) is {value}, outside 0..{order}")]
    OutOfRangeEntry {
        x: Element,
        y: Element,
        value: usize,
        order: usize,
    },
    #[error("not associative at ({x},{y},{z}): (x*y)*z = {left} but x*(y*z) = {right}")]
    NotAssociative {
        x: Element,
        y: Element,
        z: Element,
        left: Element,
        right: Element,
    },
    #[error("expected {order} names, found {found}")]
    BadNames { order: usize, found: usize },
    #[error("generating set is empty")]
    EmptyGeneratorSet,
    #[error("subset is not closed: {x}*{y} = {product} lies outside it")]
    NotClosed {
        x: Element,
        y: Element,
        product: Element,
    },
    #[error("element {0} is not idempotent")]
    NotIdempotent(Element),
    #[error("element {element} out of range for a semigroup of order {order}")]
    ElementOutOfRange { element: Element, order: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse construct {input:?}: {reason}")]
    BadConstruct { input: String, reason: String },
    #[error("graphs come from different semigroups")]
    SourceMismatch,
    #[error("unknown export format {0:?} (expected dot or json)")]
    UnknownFormat(String),
    #[error("unknown graph kind {0:?}")]
    UnknownKind(String),
    #[error("order {0} exceeds the exhaustive subsemigroup bound {1}")]
    TooLargeForExhaustive(usize, usize),
    #[error("census order {0} is not supported (1..=5)")]
    OrderTooLarge(usize),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
