use thiserror::Error;

/// Errors raised by operator evaluation, stepping, and profile construction.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite sample data: {0}")]
    NonFinite(String),

    #[error("spectral operators need decaying data (a = b = 0), got a = {left}, b = {right}")]
    NonDecayingData { left: f64, right: f64 },

    #[error("tilted evaluation (beta = {beta}) is only defined for kernel exponent 0, got {kernel_exponent}")]
    TiltWithRegularizedKernel { beta: f64, kernel_exponent: f64 },

    #[error("test function support violation: {0}")]
    SupportViolation(String),

    #[error("signal below noise floor: {0}")]
    BelowNoiseFloor(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
