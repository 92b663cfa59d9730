use crate::report::VerificationReport;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("interior product of a 0-form")]
    ZeroDegree,

    #[error("bilinear form is not a metric (not symmetric positive-definite)")]
    NotMetric,

    #[error("g(X, phi Y) is not alternating; (g, phi) are incompatible at ({0}, {1})")]
    NotAlternating(usize, usize),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,

    #[error("precondition `{stage}` failed: {report}")]
    Precondition { stage: String, report: VerificationReport },

    #[error("not 3-(α,δ)-Sasakian: {0}")]
    NotSasakian(String),

    #[error("verification failed: {0}")]
    VerificationFailed(VerificationReport),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
