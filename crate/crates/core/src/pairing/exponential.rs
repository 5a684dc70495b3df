use std::f64::consts::LN_2;

use super::{checked, real, PeriodResult};
use crate::error::{Error, Result};
use crate::numerics::principal_ln;

fn check_base(a: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("exponential base must be positive, got {a}")));
    }
    if a == 1.0 {
        return Err(Error::DegenerateBase);
    }
    Ok(a.ln())
}

/// The constant period `T = -log_a 2` of the (S)-pair `(a^x, a^{x+T})`.
/// The reported residual is `|2 a^T - 1|`, to which every (S) residual is
/// proportional.
pub fn period_exponential_s(a: f64) -> Result<PeriodResult> {
    let ln_a = check_base(a)?;
    let t = -LN_2 / ln_a;
    let residual = (2.0 * a.powf(t) - 1.0).abs();
    Ok(PeriodResult::from_entries(vec![checked(
        "exponential (S) period",
        real(t),
        residual,
        1.0,
    )?]))
}

/// Evidence that no dual exponential (S)-pair `(a^x, a^{x+T})` in the roles
/// `(g, f)` exists: the equation reduces to `a^T = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualExponentialCertificate {
    pub exists: bool,
    /// `min log(a^T)` over `T` in `[-50, 50]`; finite, so `a^T` stays
    /// positive on the whole scan.
    pub min_log_power: f64,
}

pub fn dual_exponential_s_exists(a: f64) -> Result<DualExponentialCertificate> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("exponential base must be positive, got {a}")));
    }
    // log(a^T) = T log a is linear in T, so its minimum over the scan sits at
    // an end point
    let ln_a = a.ln();
    let min_log_power = (-50.0 * ln_a).min(50.0 * ln_a);
    Ok(DualExponentialCertificate {
        exists: min_log_power == f64::NEG_INFINITY,
        min_log_power,
    })
}

/// Periods of the (C)-pair `(a^x, a^{x+T})` with `f = a^x` in the sine role:
/// `q = a^T` solves `q^2 - q - 1 = 0`. The real branch `log_a` of the golden
/// ratio comes first; the second branch, `log_a` of the negative root, is
/// complex.
pub fn period_exponential_c(a: f64) -> Result<PeriodResult> {
    let ln_a = check_base(a)?;
    let sqrt5 = 5f64.sqrt();
    let phi = 0.5 * (1.0 + sqrt5);
    let psi = 0.5 * (1.0 - sqrt5);
    let t_real = phi.ln() / ln_a;
    let t_complex = principal_ln(real(psi)) / ln_a;
    let entries = [real(t_real), t_complex]
        .into_iter()
        .map(|t| {
            let q = (t * ln_a).exp();
            let residual = (q * q - q - 1.0).norm();
            checked("exponential (C) period", t, residual, 1.0)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PeriodResult::from_entries(entries))
}

/// The (C)-pair in the other order, `(g, g(. + T))` with `g = a^x`, would
/// need `a^{2T} = 0`: there is no finite period.
pub fn period_exponential_c_gf(a: f64) -> Result<PeriodResult> {
    check_base(a)?;
    Ok(PeriodResult::no_finite_period())
}
