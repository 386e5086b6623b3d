use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("element is not a real paravector: {0}")]
    NotParavector(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("propagator is singular: q·q = {0}")]
    Singular(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("momentum is off shell: p·p = {found}, expected {expected}")]
    OffShell { found: f64, expected: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
