use thiserror::Error;

/// Failures that end a run. Per-point numerical failures are recorded in
/// report rows instead; `Numerical` covers pipelines without a row to put
/// them in.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        }
    }
}

/// Process exit status: all checks passed.
pub const EXIT_PASS: i32 = 0;
/// At least one check failed or did not converge.
pub const EXIT_FAIL: i32 = 1;
/// Unusable configuration.
pub const EXIT_USAGE: i32 = 2;
