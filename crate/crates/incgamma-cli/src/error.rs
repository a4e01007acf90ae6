use std::fmt;

/// Failures mapped to process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad or incomplete arguments, or a point outside the supported sector.
    Precondition(String),
    /// Numerical failure, e.g. a quadrature that did not converge.
    Runtime(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Precondition(_) => 2,
            CliError::Runtime(_) | CliError::Io(_) => 1,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Precondition(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Precondition(m) | CliError::Runtime(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<incgamma::Error> for CliError {
    fn from(e: incgamma::Error) -> Self {
        use incgamma::Error::*;
        match e {
            Domain(_) | Sector(_) | Singular(_) | Parse(_) => CliError::Precondition(e.to_string()),
            Quadrature { .. } | Mismatch(_) => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Runtime(format!("csv: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
