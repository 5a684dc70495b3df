//! Period and scaleability functions of Cauchy pairs.
//!
//! Every closed form is substituted back into its defining equation when it
//! is built; a residual above [`CONSISTENCY`] (relative to the size of the
//! terms involved) is reported as [`Error::Inconsistent`] instead of being
//! returned.

mod additive;
mod bridge;
mod exponential;
mod power;

pub use additive::{
    extremum_probe, printed_extremum_derivative, period_additive_c, period_additive_c_sum_constrained,
    period_additive_s, period_additive_s_dual, period_equality_residual, ExtremumBranch,
    ExtremumProbe,
};
pub use bridge::{scaling_translation_bridge_check, BridgeReport};
pub use exponential::{
    dual_exponential_s_exists, period_exponential_c, period_exponential_c_gf, period_exponential_s,
    DualExponentialCertificate,
};
pub use power::{printed_power_s_radicand, period_power_s, power_s_radicand, scaleability_power, scaleability_residual};

use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::Complex;

/// Residual bound used when a closed form is checked at construction.
pub const CONSISTENCY: f64 = 1e-9;

/// One period value with the residual of its defining equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodEntry {
    /// `None` encodes "no finite period" (`T = -inf`).
    pub value: Option<Complex>,
    pub residual: f64,
}

impl PeriodEntry {
    pub fn finite(&self) -> bool {
        self.value.is_some()
    }

    /// The value if it is finite and real.
    pub fn real(&self) -> Option<f64> {
        self.value.filter(|v| v.im == 0.0).map(|v| v.re)
    }
}

/// Zero, one or two periods at a query point, or the marker that every `T`
/// works.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodResult {
    pub entries: Vec<PeriodEntry>,
    pub any_period: bool,
}

impl PeriodResult {
    /// Degenerate case (slope zero) in which every period satisfies the
    /// equation.
    pub fn any() -> Self {
        PeriodResult {
            entries: Vec::new(),
            any_period: true,
        }
    }

    pub fn no_finite_period() -> Self {
        PeriodResult {
            entries: vec![PeriodEntry {
                value: None,
                residual: 0.0,
            }],
            any_period: false,
        }
    }

    fn from_entries(entries: Vec<PeriodEntry>) -> Self {
        PeriodResult {
            entries,
            any_period: false,
        }
    }

    pub fn real_values(&self) -> Vec<f64> {
        self.entries.iter().filter_map(PeriodEntry::real).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for PeriodResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.any_period {
            return f.write_str("any T");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| match e.value {
                None => "-inf".to_owned(),
                Some(v) if v.im == 0.0 => format!("{}", v.re),
                Some(v) => format!("{}{:+}i", v.re, v.im),
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Accepts `value` when `residual <= CONSISTENCY * max(1, scale)`.
fn checked(what: &'static str, value: Complex, residual: f64, scale: f64) -> Result<PeriodEntry> {
    if !(residual <= CONSISTENCY * scale.max(1.0)) {
        return Err(Error::Inconsistent { what, residual });
    }
    Ok(PeriodEntry {
        value: Some(value),
        residual,
    })
}

fn real(v: f64) -> Complex {
    Complex::new(v, 0.0)
}

fn require_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {v} must be finite")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(PeriodResult::any().to_string(), "any T");
        assert_eq!(PeriodResult::no_finite_period().to_string(), "-inf");
        let r = PeriodResult::from_entries(vec![
            PeriodEntry { value: Some(real(0.5)), residual: 0.0 },
            PeriodEntry { value: Some(Complex::new(-1.0, 2.0)), residual: 0.0 },
        ]);
        assert_eq!(r.to_string(), "0.5, -1+2i");
        assert_eq!(r.real_values(), vec![0.5]);
    }

    #[test]
    fn consistency_gate() {
        assert!(checked("t", real(1.0), 1e-12, 1.0).is_ok());
        assert!(matches!(checked("t", real(1.0), 1e-3, 1.0), Err(Error::Inconsistent { .. })));
        assert!(checked("t", real(1.0), f64::NAN, 1.0).is_err());
    }
}
