use gamekit_core::Error as CoreError;

/// Everything the command line can fail with.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("header says {header} but the matrix is not one")]
    HeaderClassMismatch { header: String },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

impl AppError {
    pub fn name(&self) -> &'static str {
        match self {
            AppError::Core(e) => e.name(),
            AppError::Parse { .. } => "ParseError",
            AppError::HeaderClassMismatch { .. } => "HeaderClassMismatch",
            AppError::Usage(_) => "UsageError",
            AppError::Io { .. } => "IoError",
        }
    }

    /// One line for standard error, starting with the error name.
    pub fn report(&self) -> String {
        match self {
            AppError::Core(e) => e.to_string(),
            e => format!("{}: {e}", e.name()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> AppError {
        AppError::Parse { line, msg: msg.into() }
    }
}

pub type AppResult<T> = Result<T, AppError>;
