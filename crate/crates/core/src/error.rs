use thiserror::Error;

/// Errors raised by the spectral derivative routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Sample locations do not match the grid required by the chosen basis.
    /// `example` holds a correctly sampled grid with the same count and interval.
    #[error("invalid sampling: {reason}; a valid grid would be {example:?}")]
    InvalidSampling { reason: String, example: Vec<f64> },

    /// A real-valued result carried more imaginary residue than rounding explains.
    #[error("numeric contamination: imaginary residue {residue:e} exceeds bound {bound:e}")]
    NumericContamination { residue: f64, bound: f64 },

    #[error("derivative order {order} exceeds the supported maximum {max}")]
    UnsupportedOrder { order: usize, max: usize },

    /// Reaching this means a bug in the symbolic endpoint engine, not bad input.
    #[error("internal logic error: {0}")]
    InternalLogic(String),
}

pub type Result<T> = std::result::Result<T, SpecError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(SpecError::InvalidArgument(msg.into()))
}
