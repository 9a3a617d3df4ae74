use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("universe label {0:?} appears more than once")]
    DuplicateLabel(String),
    #[error("universe of {size} elements exceeds the limit of {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("block {block}: unknown element {label:?}")]
    UnknownElementInBlock { block: usize, label: String },
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("block {second} duplicates block {first}")]
    DuplicateBlock { first: usize, second: usize },
    #[error("blocks do not cover the universe; missing {}", .missing.join(", "))]
    NotACover { missing: Vec<String> },
    #[error("block is not a member of the covering")]
    BlockNotInCovering,
    #[error("malformed covering document: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
