use thiserror::Error;

/// Errors raised across the library. Each variant maps to a stable code string
/// used by the command-line front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quaternion has zero norm")]
    ZeroNorm,
    #[error("bicomplex number is singular")]
    SingularNumber,
    #[error("input is zero")]
    ZeroInput,
    #[error("not differentiable: {0}")]
    NotDifferentiable(String),
    #[error("evaluation failed: {0}")]
    EvaluationFailure(String),
    #[error("derivative order {order} exceeds the supported maximum {max}")]
    OrderTooHigh { order: u32, max: u32 },
    #[error("quadrature failed to converge: {0}")]
    QuadratureFailure(String),
    #[error("curve passes through a singular point at t = {t}")]
    SingularOnCurve { t: f64 },
    #[error("twining number is not integral: raw value {raw:?}, residual {residual:e}")]
    NonIntegerResult { residual: f64, raw: [f64; 4] },
    #[error("precondition could not be verified: {0}")]
    PreconditionUnverified(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroNorm => "ZeroNorm",
            Error::SingularNumber => "SingularNumber",
            Error::ZeroInput => "ZeroInput",
            Error::NotDifferentiable(_) => "NotDifferentiable",
            Error::EvaluationFailure(_) => "EvaluationFailure",
            Error::OrderTooHigh { .. } => "OrderTooHigh",
            Error::QuadratureFailure(_) => "QuadratureFailure",
            Error::SingularOnCurve { .. } => "SingularOnCurve",
            Error::NonIntegerResult { .. } => "NonIntegerResult",
            Error::PreconditionUnverified(_) => "PreconditionUnverified",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
