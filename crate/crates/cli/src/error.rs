use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("n = {n}: {attempts} consecutive singular samples")]
    TooManySingular { n: usize, attempts: usize },
}

impl ExperimentError {
    /// 2 for configuration errors, 3 for I/O, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => 2,
            Self::Io(_) => 3,
            _ => 1,
        }
    }
}

impl From<structnorm::Error> for ExperimentError {
    fn from(e: structnorm::Error) -> Self {
        Self::Numeric(e.to_string())
    }
}

impl From<structnorm_random::RandomError> for ExperimentError {
    fn from(e: structnorm_random::RandomError) -> Self {
        match e {
            structnorm_random::RandomError::InvalidParameter(m) => Self::Config(m),
            structnorm_random::RandomError::Core(c) => c.into(),
        }
    }
}

impl From<csv::Error> for ExperimentError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Self::Io(io),
            other => Self::Numeric(format!("{other:?}")),
        }
    }
}

pub type Result<T, E = ExperimentError> = std::result::Result<T, E>;
