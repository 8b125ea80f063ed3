use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("singular linear system ({context})")]
    Singular { context: String },

    #[error("ill-conditioned linear system ({context}): condition estimate {condition:.3e}")]
    IllConditioned { context: String, condition: f64 },

    #[error("linear solve residual {residual:.3e} exceeds tolerance ({context})")]
    Residual { context: String, residual: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("analysis failed: {0}")]
    Analysis(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures of the numerical solve rather than of the inputs.
    pub fn is_solver_failure(&self) -> bool {
        matches!(
            self,
            Error::Singular { .. } | Error::IllConditioned { .. } | Error::Residual { .. }
        )
    }

    /// Attaches scan coordinates or parameter values to a solver failure.
    pub fn with_context(self, extra: impl AsRef<str>) -> Self {
        let extra = extra.as_ref();
        match self {
            Error::Singular { context } => Error::Singular {
                context: format!("{context}; {extra}"),
            },
            Error::IllConditioned { context, condition } => Error::IllConditioned {
                context: format!("{context}; {extra}"),
                condition,
            },
            Error::Residual { context, residual } => Error::Residual {
                context: format!("{context}; {extra}"),
                residual,
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
