use super::{checked, period_additive_s, real, require_finite, PeriodResult};
use crate::error::{Error, Result};

fn check_positive_args(x: f64, y: f64) -> Result<()> {
    if !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite()) {
        return Err(Error::Domain(format!("power pairs need x, y > 0, got ({x}, {y})")));
    }
    Ok(())
}

/// Quarter discriminant of `(x²+y²)T² + 2xy(x+y)T + 2x²y² - (x+y)² = 0`,
/// the expansion of `(x+y)² = x²(y+T)² + y²(x+T)²`:
/// `(x²+y²)(x+y)² - x²y²(x-y)²`.
pub fn power_s_radicand(x: f64, y: f64) -> f64 {
    let (s, d) = (x + y, x - y);
    (x * x + y * y) * s * s - (x * y * d).powi(2)
}

/// The radicand in its commonly printed form, `2(xy)³ + (x+y)²(x²+y²)`.
pub fn printed_power_s_radicand(x: f64, y: f64) -> f64 {
    2.0 * (x * y).powi(3) + (x + y).powi(2) * (x * x + y * y)
}

/// Periods `T` of the (S)-pair `(x^p, (x+T)^p)` on the positive reals.
///
/// `p = 1` is the additive case with `c = 1`; `p = 2` solves the quadratic
/// obtained by expanding the equation. Other exponents lead to equations
/// without a closed-form solution and are rejected.
pub fn period_power_s(p: f64, x: f64, y: f64) -> Result<PeriodResult> {
    require_finite("p", p)?;
    check_positive_args(x, y)?;
    if p == 1.0 {
        return period_additive_s(1.0, x, y);
    }
    if p != 2.0 {
        return Err(Error::Unsupported(format!(
            "closed-form power periods exist only for p = 1 and p = 2, got p = {p}"
        )));
    }
    let a = x * x + y * y;
    let half_b = x * y * (x + y);
    let c = 2.0 * (x * y).powi(2) - (x + y).powi(2);
    let disc = power_s_radicand(x, y);
    if disc < 0.0 {
        return Err(Error::NoRealRoot { discriminant: disc });
    }
    // half_b > 0, so the minus branch has the larger magnitude
    let big = (-half_b - disc.sqrt()) / a;
    let small = c / (a * big);
    let s2 = (x + y).powi(2);
    let entries = [big, small]
        .into_iter()
        .map(|t| {
            let (u, v) = ((x * (y + t)).powi(2), (y * (x + t)).powi(2));
            checked("power (S) period", real(t), (s2 - u - v).abs(), s2 + u + v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PeriodResult::from_entries(entries))
}

/// Scaleability function `t = (x+y) / (2^{1/p} x y)` of `x^p`: the pair
/// `(x^p, (t x)^p)` satisfies (S).
pub fn scaleability_power(p: f64, x: f64, y: f64) -> Result<f64> {
    require_finite("p", p)?;
    if p == 0.0 {
        return Err(Error::Domain("scaleability needs p != 0".into()));
    }
    check_positive_args(x, y)?;
    Ok((x + y) / (2f64.powf(1.0 / p) * x * y))
}

/// `|(x+y)^p - 2(t x y)^p|`
pub fn scaleability_residual(p: f64, x: f64, y: f64, t: f64) -> f64 {
    ((x + y).powf(p) - 2.0 * (t * x * y).powf(p)).abs()
}
