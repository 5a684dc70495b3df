use crate::error::{Error, Result};

/// Tolerance policy used across the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute error target for quadrature.
    pub quad_abs: f64,
    /// Largest residual for which a verification passes.
    pub residual_pass: f64,
    /// Absolute termination tolerance for root finding.
    pub root_abs: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            quad_abs: 1e-10,
            residual_pass: 1e-9,
            root_abs: 1e-12,
        }
    }
}

impl Tolerances {
    pub fn new(quad_abs: f64, residual_pass: f64, root_abs: f64) -> Result<Self> {
        for v in [quad_abs, residual_pass, root_abs] {
            check_positive(v)?;
        }
        Ok(Self {
            quad_abs,
            residual_pass,
            root_abs,
        })
    }

    pub fn with_residual_pass(self, residual_pass: f64) -> Result<Self> {
        check_positive(residual_pass)?;
        Ok(Self {
            residual_pass,
            ..self
        })
    }
}

pub(crate) fn check_positive(v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let t = Tolerances::default();
        assert_eq!(t.quad_abs, 1e-10);
        assert_eq!(t.residual_pass, 1e-9);
        assert_eq!(t.root_abs, 1e-12);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(Tolerances::new(0.0, 1e-9, 1e-12).is_err());
        assert!(Tolerances::new(1e-10, -1.0, 1e-12).is_err());
        assert!(Tolerances::new(1e-10, 1e-9, f64::NAN).is_err());
        assert!(Tolerances::default().with_residual_pass(0.0).is_err());
    }
}
