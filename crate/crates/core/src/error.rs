use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{op}: precondition failed ({})", first_failed(.report))]
    Precondition { op: &'static str, report: CheckReport },

    #[error("{0}")]
    Invalid(String),

    #[error("parse error at byte {offset} in {field}: {message}")]
    Parse { offset: usize, field: String, message: String },
}

fn first_failed(report: &CheckReport) -> String {
    report.items.iter().filter(|i| !i.passed).map(|i| i.name.clone()).collect::<Vec<_>>().join("; ")
}

impl Error {
    pub fn precondition(op: &'static str, report: CheckReport) -> Self {
        Error::Precondition { op, report }
    }

    /// The failing precondition report, if this is a precondition error.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ensure_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
