use thiserror::Error;

/// Failures mapped onto the process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable file, malformed JSON, or a document of the wrong kind. Exit 2.
    #[error("parse error: {0}")]
    Parse(String),

    /// A well-formed document whose contents violate a domain invariant. Exit 3.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A computed relation or round trip fell outside tolerance. Exit 1.
    #[error("relation check failed: {0}")]
    Relation(String),

    /// Orbit mismatch, or a tuple off the quadric where one is required. Exit 4.
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Relation(_) => 1,
            Self::Parse(_) => 2,
            Self::Invalid(_) => 3,
            Self::Mismatch(_) => 4,
        }
    }
}

impl From<threeterm::Error> for CliError {
    fn from(e: threeterm::Error) -> Self {
        use threeterm::Error as E;
        match e {
            E::NotSameOrbit { .. } | E::OffQuadric { .. } => Self::Mismatch(e.to_string()),
            E::Verification { .. } => Self::Relation(e.to_string()),
            _ => Self::Invalid(e.to_string()),
        }
    }
}
