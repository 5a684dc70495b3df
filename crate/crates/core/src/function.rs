//! Function abstractions shared by the verification code.

use crate::error::{Error, Result};

/// A real function of one real variable that may fail outside its domain.
pub trait RealFunction {
    fn eval(&self, x: f64) -> Result<f64>;
}

impl<F: Fn(f64) -> f64> RealFunction for F {
    fn eval(&self, x: f64) -> Result<f64> {
        let v = self(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { at: x })
        }
    }
}

/// Adapter for closures that already return `Result`.
pub struct Fallible<F>(pub F);

impl<F: Fn(f64) -> Result<f64>> RealFunction for Fallible<F> {
    fn eval(&self, x: f64) -> Result<f64> {
        (self.0)(x)
    }
}

/// A period (or scaleability) function of two variables. Returning
/// `Error::SingularLocus` marks a point where it is undefined.
pub trait PeriodFunction {
    fn period(&self, x: f64, y: f64) -> Result<f64>;
}

impl<F: Fn(f64, f64) -> Result<f64>> PeriodFunction for F {
    fn period(&self, x: f64, y: f64) -> Result<f64> {
        self(x, y)
    }
}

/// A period that is either a fixed number or depends on the evaluation pair.
#[derive(Clone, Copy)]
pub enum Period<'a> {
    Constant(f64),
    Variable(&'a dyn PeriodFunction),
}

impl Period<'_> {
    pub fn at(&self, x: f64, y: f64) -> Result<f64> {
        match self {
            Period::Constant(t) => Ok(*t),
            Period::Variable(p) => p.period(x, y),
        }
    }

    pub fn constant(&self) -> Option<f64> {
        match self {
            Period::Constant(t) => Some(*t),
            Period::Variable(_) => None,
        }
    }
}

impl std::fmt::Debug for Period<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Period::Constant(t) => write!(f, "Constant({t})"),
            Period::Variable(_) => f.write_str("Variable(..)"),
        }
    }
}

/// Choice of square-root branch. Quadratic roots are always listed with
/// `Minus` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    pub fn value(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}
