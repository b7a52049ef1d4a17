use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable `{0}` is not bound in the evaluation point")]
    UnboundVariable(&'static str),

    #[error("{op} requires constant term {expected}, found {found}")]
    ConstantTerm {
        op: &'static str,
        expected: &'static str,
        found: String,
    },

    #[error("fixed-point iteration for {0} did not converge")]
    NotContracting(String),

    #[error("{what} = {value} exceeds the enumeration limit {limit} (time/memory budget)")]
    LimitExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
