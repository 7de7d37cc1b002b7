use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("invalid number `{0}`")]
    InvalidNumber(String),

    #[error("`{op}` expects {expected} argument(s), found {found} (at {pos})")]
    Arity {
        op: String,
        expected: usize,
        found: usize,
        pos: usize,
    },

    #[error("nullary connective `{0}` cannot be unreliable")]
    UnreliableNullary(String),

    #[error("formula has {gates} unreliable gates, above the limit of {limit}")]
    GateLimit { gates: usize, limit: usize },

    #[error("misfire pattern has length {found}, formula has {expected} unreliable gates")]
    PatternLength { expected: usize, found: usize },

    #[error("variable `{0}` is not bound by the valuation")]
    UnboundVariable(String),

    #[error("{what} = {value} is outside (1/2, 1]")]
    OutOfRange { what: &'static str, value: String },

    #[error("`mu` may not occur inside an ambition bound")]
    MuInBound,

    #[error("`{0}` is not a possible outcome of the target formula")]
    NotAnOutcome(String),

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            message: message.into(),
        }
    }
}
