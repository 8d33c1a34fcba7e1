use std::path::PathBuf;

use fillings_core::lattice::LatticeError;
use fillings_core::replay::ReplayError;
use fillings_core::su12::Su12Error;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Su12(#[from] Su12Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Replay(#[from] ReplayError),
}

impl CliError {
    /// 1 for domain errors, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Json { .. } | CliError::Usage(_) => 2,
            CliError::Replay(ReplayError::UnknownBuiltin(_)) => 2,
            _ => 1,
        }
    }

    /// Name of the error variant, e.g. `NotInGroup`.
    pub fn kind(&self) -> String {
        let debug = match self {
            CliError::Io { .. } => return "Io".into(),
            CliError::Json { .. } => return "MalformedJson".into(),
            CliError::Usage(_) => return "Usage".into(),
            CliError::Su12(Su12Error::Linalg(e)) => format!("{e:?}"),
            CliError::Su12(e) => format!("{e:?}"),
            CliError::Lattice(e) => format!("{e:?}"),
            CliError::Replay(ReplayError::Lattice(e)) => format!("{e:?}"),
            CliError::Replay(e) => format!("{e:?}"),
        };
        debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({ "kind": self.kind(), "message": self.to_string() });
        if let CliError::Replay(ReplayError::AssertionFailed { step, expected, got }) = self {
            err["step"] = json!(step);
            err["expected"] = json!(expected);
            err["got"] = json!(got);
        }
        json!({ "error": err })
    }
}
