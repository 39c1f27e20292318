use std::collections::BTreeMap;

use cyclorep::ansearch::SearchError;
use cyclorep::matrixrep::MatrixError;
use cyclorep::numtheory::NumTheoryError;
use cyclorep::verify::{Check, UnknownSuite};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The JSON document every subcommand prints under `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub result: Value,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            result: Value::Null,
            checks: Vec::new(),
            error: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn failed_checks(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

pub fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("library types serialize to JSON")
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    NumTheory(#[from] NumTheoryError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Suite(#[from] UnknownSuite),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid matrix document: {0}")]
    MatrixFormat(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::NumTheory(e) => e.kind(),
            CliError::Matrix(e) => e.kind(),
            CliError::Search(e) => e.kind(),
            CliError::Suite(_) => "UnknownSuite",
            CliError::Io { .. } => "Io",
            CliError::MatrixFormat(_) => "MatrixFormat",
        }
    }

    pub fn info(&self) -> ErrorInfo {
        ErrorInfo {
            kind: self.kind().to_string(),
            message: self.to_string(),
        }
    }
}
