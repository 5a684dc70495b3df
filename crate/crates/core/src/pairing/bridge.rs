use crate::error::{Error, Result};
use crate::families::GridSpec;
use crate::function::{Period, RealFunction};
use crate::numerics::check_positive;
use crate::verify::{pair_residual, PairEquation, Partner};

/// Outcome of checking a translation pair `(f, f(. + T))` on `x = ln u`
/// against the scaling pair `(F, F(t .))` with `F = f ∘ ln` and `t = e^T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BridgeReport {
    pub translation_pass: bool,
    pub scaling_pass: bool,
    pub translation_residual: f64,
    pub scaling_residual: f64,
    /// Both sides agree.
    pub pass: bool,
    /// Pairs skipped on a singular locus of the period.
    pub skipped: usize,
}

fn scaling_residual(
    f: &dyn RealFunction,
    period: Period<'_>,
    eq: PairEquation,
    u: f64,
    v: f64,
) -> Result<f64> {
    let big_f = |w: f64| -> Result<f64> {
        if !(w > 0.0) {
            return Err(Error::Domain(format!("scaled argument {w} is not positive")));
        }
        f.eval(w.ln())
    };
    let t = period.at(u.ln(), v.ln())?.exp();
    let r = match eq {
        PairEquation::Sine => big_f(u * v)? - big_f(u)? * big_f(t * v)? - big_f(v)? * big_f(t * u)?,
        PairEquation::Cosine => big_f(u * v)? - big_f(u)? * big_f(v)? + big_f(t * u)? * big_f(t * v)?,
        PairEquation::CosineDual => {
            big_f(t * u * v)? - big_f(t * u)? * big_f(t * v)? + big_f(u)? * big_f(v)?
        }
    };
    if r.is_nan() {
        return Err(Error::NonFinite { at: u });
    }
    Ok(r.abs())
}

/// Checks that a pair passes on the translation side exactly when its
/// logarithmic transport passes on the scaling side. `grid` lives in
/// `u`-space and must be positive.
pub fn scaling_translation_bridge_check(
    f: &dyn RealFunction,
    period: Period<'_>,
    eq: PairEquation,
    grid: &GridSpec,
    tol: f64,
) -> Result<BridgeReport> {
    check_positive(tol)?;
    if !(grid.lo > 0.0) {
        return Err(Error::Domain(format!(
            "bridge grid must lie in u > 0, got lower end {}",
            grid.lo
        )));
    }
    let (pairs, _) = grid.pairs();
    let mut skipped = 0;
    let (mut tr, mut sc) = (0.0f64, 0.0f64);
    for (u, v) in pairs {
        let a = match pair_residual(f, Partner::Period(period), eq, u.ln(), v.ln()) {
            Ok(a) => a,
            Err(Error::SingularLocus { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let b = scaling_residual(f, period, eq, u, v)?;
        tr = tr.max(a);
        sc = sc.max(b);
    }
    let translation_pass = tr <= tol;
    let scaling_pass = sc <= tol;
    Ok(BridgeReport {
        translation_pass,
        scaling_pass,
        translation_residual: tr,
        scaling_residual: sc,
        pass: translation_pass == scaling_pass,
        skipped,
    })
}
