use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsl::ChainParseError;

/// Exit codes of the command-line contract.
pub mod exit {
    pub const OK: i32 = 0;
    pub const ADMISSIBILITY: i32 = 2;
    pub const VERIFICATION: i32 = 3;
    pub const INPUT: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ChainParseError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("chain is not admissible: {0}")]
    Admissibility(String),
    #[error("verification failed: {}", .0.join(", "))]
    Verification(Vec<String>),
    #[error(transparent)]
    Core(#[from] isodbt::Error),
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// A core error caused by user-supplied values.
    pub fn input(e: isodbt::Error) -> Self {
        match e {
            isodbt::Error::InvalidParams(m) => CliError::Input(m),
            other => CliError::Input(other.to_string()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        use isodbt::Error as E;
        match self {
            CliError::Parse(e) if e.reason.is_constraint() => exit::ADMISSIBILITY,
            CliError::Parse(_) | CliError::Input(_) | CliError::Io { .. } => exit::INPUT,
            CliError::Admissibility(_) => exit::ADMISSIBILITY,
            CliError::Verification(_) => exit::VERIFICATION,
            CliError::Core(e) => match e {
                E::NotAdmissible(_)
                | E::SeedConstraint { .. }
                | E::DuplicateStep { .. }
                | E::CoincidentEnergies(_)
                | E::ZeroWronskian => exit::ADMISSIBILITY,
                E::InvalidParams(_) => exit::INPUT,
                E::Exact(_) | E::Inconsistent(_) | E::Numeric(_) => exit::VERIFICATION,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            exit::ADMISSIBILITY => "admissibility",
            exit::VERIFICATION => "verification",
            _ => "input",
        }
    }

    pub fn diagnostic(&self) -> Diagnostic {
        let (position, token) = match self {
            CliError::Parse(e) => (Some(e.position), Some(e.token.clone())),
            _ => (None, None),
        };
        Diagnostic {
            kind: self.kind().to_string(),
            exit_code: self.exit_code(),
            message: self.to_string(),
            position,
            token,
        }
    }
}

/// Machine-readable failure written to stderr.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub kind: String,
    pub exit_code: i32,
    pub message: String,
    /// Character offset of the offending chain token.
    pub position: Option<usize>,
    pub token: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct DiagnosticEnvelope {
    pub error: Diagnostic,
}
