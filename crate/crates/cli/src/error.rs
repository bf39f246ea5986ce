use thiserror::Error;

use crate::config::ConfigError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(chaoscrypt::Error),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl From<chaoscrypt::Error> for CliError {
    fn from(e: chaoscrypt::Error) -> Self {
        match e {
            chaoscrypt::Error::InvalidArgument(msg) => CliError::Usage(msg),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 2 for usage/argument problems, 3 for domain/validation failures,
    /// 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(_) | CliError::Config(_) | CliError::Input(_) => 3,
            CliError::Io { .. } => 1,
        }
    }
}
