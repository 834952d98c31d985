use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cqf_core::Error),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("{what} is limited to n <= {max}, got n = {n}; pass --allow-large to override")]
    OutOfBounds { what: &'static str, n: usize, max: usize },

    #[error("{0}")]
    Usage(String),
}
