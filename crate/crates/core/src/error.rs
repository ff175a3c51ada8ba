use thiserror::Error;

/// Errors raised by the analyzer and the concrete arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cardinal {0} is not regular")]
    NotRegular(String),

    #[error("empty order has no cofinality")]
    EmptyOrder,

    #[error("not derivable: {0}")]
    NotDerivable(String),

    #[error("side condition `{condition}` failed: {witness}")]
    SideCondition { condition: String, witness: String },

    #[error("missing cardinality bound for {0}")]
    MissingBound(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("mismatched index chains")]
    ChainMismatch,

    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("in definition `{name}`: {source}")]
    Definition {
        name: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn not_derivable(msg: impl Into<String>) -> Self {
        Error::NotDerivable(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
