use std::fmt;

use super::euler_gamma;
use crate::error::{Error, Result};
use crate::expr::ExprFunction;
use crate::numerics::integrate_01_complement;

/// A positive generator `φ` on (0, 1) for `Γ_φ(x) = ∫₀¹ φ(t)^{x-1} dt`.
#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    /// `φ(t) = -log t`; `Γ_φ` is Euler's Gamma.
    NegLog,
    /// `φ(t) = a^t`, `a > 0`.
    Exponential { a: f64 },
    /// `φ(t) = c t`, `c > 0`.
    Additive { c: f64 },
    /// `φ(t) = c log t`, `c < 0`.
    Logarithmic { c: f64 },
    /// `φ(t) = t^p`.
    Multiplicative { p: f64 },
    /// A user expression in `t`.
    Custom(ExprFunction),
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {v} must be finite")))
    }
}

impl Generator {
    pub fn exponential(a: f64) -> Result<Self> {
        finite("a", a)?;
        if a <= 0.0 {
            return Err(Error::Domain(format!("exponential generator needs a > 0, got {a}")));
        }
        Ok(Generator::Exponential { a })
    }

    pub fn additive(c: f64) -> Result<Self> {
        finite("c", c)?;
        if c <= 0.0 {
            return Err(Error::Domain(format!("additive generator needs c > 0, got {c}")));
        }
        Ok(Generator::Additive { c })
    }

    pub fn logarithmic(c: f64) -> Result<Self> {
        finite("c", c)?;
        if c >= 0.0 {
            return Err(Error::Domain(format!("logarithmic generator needs c < 0, got {c}")));
        }
        Ok(Generator::Logarithmic { c })
    }

    pub fn multiplicative(p: f64) -> Result<Self> {
        finite("p", p)?;
        Ok(Generator::Multiplicative { p })
    }

    /// Accepts an expression in `t` that is positive on `t = 0.01, ..., 0.99`.
    /// Integrability for the requested `x` remains the caller's concern.
    pub fn custom(f: ExprFunction) -> Result<Self> {
        for k in 1..100 {
            let t = k as f64 / 100.0;
            let v = f.value(t)?;
            if v <= 0.0 {
                return Err(Error::Domain(format!(
                    "generator must be positive on (0, 1); value {v} at t = {t}"
                )));
            }
        }
        Ok(Generator::Custom(f))
    }

    /// `φ(t)`, given `t` and its complement `s = 1 - t`.
    fn phi(&self, t: f64, s: f64) -> Result<f64> {
        // log t computed from the complement near t = 1
        let ln_t = || if t > 0.5 { (-s).ln_1p() } else { t.ln() };
        Ok(match self {
            Generator::NegLog => -ln_t(),
            Generator::Exponential { a } => (t * a.ln()).exp(),
            Generator::Additive { c } => c * t,
            Generator::Logarithmic { c } => c * ln_t(),
            Generator::Multiplicative { p } => t.powf(*p),
            Generator::Custom(f) => f.value(t)?,
        })
    }

    /// Whether `Γ_φ(x)` is a convergent integral.
    fn admissible(&self, x: f64) -> bool {
        match self {
            Generator::NegLog | Generator::Additive { .. } | Generator::Logarithmic { .. } => x > 0.0,
            Generator::Exponential { .. } | Generator::Custom(_) => true,
            Generator::Multiplicative { p } => p * (x - 1.0) + 1.0 > 0.0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::NegLog => f.write_str("-log(t)"),
            Generator::Exponential { a } => write!(f, "{a}^t"),
            Generator::Additive { c } => write!(f, "{c}*t"),
            Generator::Logarithmic { c } => write!(f, "{c}*log(t)"),
            Generator::Multiplicative { p } => write!(f, "t^{p}"),
            Generator::Custom(e) => write!(f, "{}", e.expr()),
        }
    }
}

/// `Γ_φ(x)` by adaptive quadrature with absolute error target `tol`.
pub fn gamma_phi(gen: &Generator, x: f64, tol: f64) -> Result<f64> {
    if !x.is_finite() || !gen.admissible(x) {
        return Err(Error::Domain(format!(
            "Γ_φ({x}) diverges for generator {gen}"
        )));
    }
    let q = integrate_01_complement(
        |t, s| {
            let phi = gen.phi(t, s)?;
            if phi < 0.0 {
                return Err(Error::Domain(format!(
                    "generator is negative ({phi}) at t = {t}; fractional power undefined"
                )));
            }
            Ok(phi.powf(x - 1.0))
        },
        tol,
    )?;
    Ok(q.value)
}

/// The closed form of `Γ_φ` for the built-in generators.
///
/// Evaluated as the analytic expression, so it is defined wherever the
/// formula is, including points where the integral itself diverges.
pub fn closed_form(gen: &Generator, x: f64) -> Result<f64> {
    match gen {
        Generator::NegLog => euler_gamma(x),
        Generator::Exponential { a } => {
            // (a^{x-1} - 1) / ((x - 1) log a); removable point x = 1 has value 1
            let l = (x - 1.0) * a.ln();
            if l == 0.0 {
                Ok(1.0)
            } else {
                Ok(l.exp_m1() / l)
            }
        }
        Generator::Additive { c } => {
            if x == 0.0 {
                return Err(Error::Domain("Γ_add has a pole at x = 0".into()));
            }
            Ok(c.powf(x - 1.0) / x)
        }
        Generator::Logarithmic { c } => {
            if x <= 0.0 && x.fract() == 0.0 {
                return Err(Error::Domain(format!("Γ_log has a pole at x = {x}")));
            }
            Ok((-c).powf(x - 1.0) * euler_gamma(x)?)
        }
        Generator::Multiplicative { p } => {
            if *p == 0.0 {
                return Ok(1.0);
            }
            let d = p * (x - 1.0) + 1.0;
            if d == 0.0 {
                return Err(Error::Domain(format!("Γ_pow has a pole at x = {x}")));
            }
            Ok(1.0 / d)
        }
        Generator::Custom(_) => Err(Error::Unsupported(
            "custom generators have no closed form".into(),
        )),
    }
}
