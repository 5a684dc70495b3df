use thiserror::Error;

use crate::expr::{EvalError, SyntaxError};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadrature did not converge within {panels} panels (error estimate {estimate:e})")]
    NonConvergence { panels: usize, estimate: f64 },

    #[error("non-finite value at {at}")]
    NonFinite { at: f64 },

    #[error("root is not bracketed: f({lo}) and f({hi}) have the same sign")]
    NoBracket { lo: f64, hi: f64 },

    #[error("pole of the Gamma function at {x}")]
    Pole { x: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero at {at}")]
    DivisionByZero { at: f64 },

    #[error("zero denominator at {at}")]
    ZeroDenominator { at: f64 },

    #[error("period function is undefined on its singular locus at ({x}, {y})")]
    SingularLocus { x: f64, y: f64 },

    #[error("exponential base a = 1 has no finite period")]
    DegenerateBase,

    #[error("branch point of sqrt(c^2 - 4) at c = {re}{im:+}i")]
    BranchPole { re: f64, im: f64 },

    #[error("no real root: discriminant {discriminant:e} is negative")]
    NoRealRoot { discriminant: f64 },

    #[error("no finite period exists (T = -inf)")]
    NoFinitePeriod,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid tolerance {0}: must be finite and strictly positive")]
    InvalidTolerance(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("closed form {what} failed residual substitution (residual {residual:e})")]
    Inconsistent { what: &'static str, residual: f64 },

    #[error(transparent)]
    Syntax(#[from] SyntaxError),

    #[error(transparent)]
    Eval(#[from] EvalError),
}
