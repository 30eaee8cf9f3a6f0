use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: demazure::Error,
    },
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core { source: demazure::Error::Internal(_) | demazure::Error::NotPointed, .. } => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Attaches a context string to core errors.
pub trait Context<T> {
    fn ctx(self, context: impl FnOnce() -> String) -> CliResult<T>;
}

impl<T> Context<T> for demazure::Result<T> {
    fn ctx(self, context: impl FnOnce() -> String) -> CliResult<T> {
        self.map_err(|source| CliError::Core { context: context(), source })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let internal = CliError::Core { context: "x".into(), source: demazure::Error::Internal("y".into()) };
        assert_eq!(internal.exit_code(), 1);
        let parse = CliError::Core { context: "x".into(), source: demazure::Error::Parse("y".into()) };
        assert_eq!(parse.exit_code(), 2);
        assert_eq!(CliError::Usage("z".into()).exit_code(), 2);
    }
}
