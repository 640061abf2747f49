use thiserror::Error;

/// Errors raised by construction, precondition, and file-format checks.
///
/// Semantic negatives (a check that fails, a witness that does not exist)
/// are not errors; they are reported through [`crate::morphism::Verdict`]
/// or an empty `Option`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown agent `{0}`")]
    UnknownAgent(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("unknown dimension `{0}`")]
    UnknownDimension(String),

    #[error("base mismatch: {0}")]
    BaseMismatch(String),

    #[error("ground mismatch: {0}")]
    GroundMismatch(String),

    #[error("map is not total: no value for `{0}`")]
    PartialMap(String),

    #[error("invalid coalition label `{0}`")]
    CoalitionLabel(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("unknown proposition id `{0}`")]
    UnknownProposition(String),

    #[error("unknown demo `{0}`")]
    UnknownDemo(String),

    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            msg: msg.into(),
        }
    }
}
