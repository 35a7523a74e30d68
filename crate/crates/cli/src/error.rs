use fivepoint::scalar::ScalarParseError;
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
    #[error(transparent)]
    Domain(#[from] fivepoint::Error),
    #[error("cannot read {0}")]
    Io(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::MalformedJson(_) => "malformed_json",
            CliError::Scalar(ScalarParseError::Decimal(_)) => "decimal_literal",
            CliError::Scalar(_) => "malformed_rational",
            CliError::Domain(e) => e.code(),
            CliError::Io(_) => "io_error",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "code": self.code(), "message": self.to_string() } })
    }
}
