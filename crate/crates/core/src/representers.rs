//! Sine and cosine representers, their closed forms on the regular Cauchy
//! families, parity properties and the periods that make a representer a
//! shift of the function itself.

use std::f64::consts::LN_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::families::CauchyFamily;
use crate::function::{RealFunction, Sign};
use crate::numerics::{check_positive, principal_sqrt, Complex};

/// Below this magnitude `f(x)` counts as a zero of `f`.
pub const ZERO_DENOMINATOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepresenterKind {
    Sine,
    Cosine(Sign),
}

impl fmt::Display for RepresenterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepresenterKind::Sine => f.write_str("sine"),
            RepresenterKind::Cosine(s) => write!(f, "cosine{s}"),
        }
    }
}

/// `f(2x) / (2 f(x))`
pub fn sine_representer(f: &dyn RealFunction, x: f64) -> Result<f64> {
    let fx = f.eval(x)?;
    if fx.abs() < ZERO_DENOMINATOR {
        return Err(Error::ZeroDenominator { at: x });
    }
    Ok(f.eval(2.0 * x)? / (2.0 * fx))
}

/// `g(x)² - g(2x)`, the square of the cosine representer.
pub fn cosine_radicand(g: &dyn RealFunction, x: f64) -> Result<f64> {
    let gx = g.eval(x)?;
    Ok(gx * gx - g.eval(2.0 * x)?)
}

/// `±√(g(x)² - g(2x))`, imaginary when the radicand is negative.
pub fn cosine_representer(g: &dyn RealFunction, x: f64, sign: Sign) -> Result<Complex> {
    Ok(sign.value() * principal_sqrt(Complex::new(cosine_radicand(g, x)?, 0.0)))
}

/// Real-only variant of [`cosine_representer`].
pub fn cosine_representer_real(g: &dyn RealFunction, x: f64, sign: Sign) -> Result<f64> {
    let r = cosine_radicand(g, x)?;
    if r < 0.0 {
        return Err(Error::Domain(format!(
            "cosine representer at {x} is imaginary (radicand {r})"
        )));
    }
    Ok(sign.value() * r.sqrt())
}

/// Generic representer of either kind, as a complex number.
pub fn representer(f: &dyn RealFunction, kind: RepresenterKind, x: f64) -> Result<Complex> {
    match kind {
        RepresenterKind::Sine => Ok(Complex::new(sine_representer(f, x)?, 0.0)),
        RepresenterKind::Cosine(sign) => cosine_representer(f, x, sign),
    }
}

fn check_domain(fam: CauchyFamily, x: f64) -> Result<()> {
    if !(fam.domain().contains(x) && fam.domain().contains(2.0 * x)) {
        return Err(Error::Domain(format!("{x} is outside the domain of {fam}")));
    }
    Ok(())
}

fn signed_sqrt(sign: Sign, r: f64) -> Complex {
    sign.value() * principal_sqrt(Complex::new(r, 0.0))
}

/// Representers of `cx`, `a^x`, `c log x` and `x^p` in closed form. The
/// additive sine representer is `1` everywhere, including `x = 0`; the
/// logarithmic one is undefined at `x = 1`.
pub fn closed_form_representer(fam: CauchyFamily, kind: RepresenterKind, x: f64) -> Result<Complex> {
    check_domain(fam, x)?;
    let re = |v: f64| Complex::new(v, 0.0);
    match (fam, kind) {
        (CauchyFamily::Additive(c), RepresenterKind::Sine) => {
            if c == 0.0 {
                return Err(Error::ZeroDenominator { at: x });
            }
            Ok(re(1.0))
        }
        (CauchyFamily::Additive(c), RepresenterKind::Cosine(s)) => Ok(signed_sqrt(s, c * x * (c * x - 2.0))),
        (CauchyFamily::Exponential(a), RepresenterKind::Sine) => Ok(re(0.5 * a.powf(x))),
        (CauchyFamily::Exponential(_), RepresenterKind::Cosine(_)) => Ok(re(0.0)),
        (CauchyFamily::Logarithmic(c), RepresenterKind::Sine) => {
            let l = x.ln();
            if c == 0.0 || l == 0.0 {
                return Err(Error::ZeroDenominator { at: x });
            }
            Ok(re(0.5 * (LN_2 / l + 1.0)))
        }
        (CauchyFamily::Logarithmic(c), RepresenterKind::Cosine(s)) => {
            let cl = c * x.ln();
            Ok(signed_sqrt(s, cl * (cl - 1.0) - c * LN_2))
        }
        (CauchyFamily::Multiplicative(p), RepresenterKind::Sine) => Ok(re(2f64.powf(p - 1.0))),
        (CauchyFamily::Multiplicative(p), RepresenterKind::Cosine(s)) => {
            let xp = x.powf(p);
            Ok(signed_sqrt(s, xp * xp - 2f64.powf(p) * xp))
        }
    }
}

/// `|f(x+y) - f(x) f_S(y) - f(y) f_S(x)|` with the generic sine
/// representer in the role of the partner.
pub fn sine_reconstruction_residual(f: &dyn RealFunction, x: f64, y: f64) -> Result<f64> {
    let r = f.eval(x + y)? - f.eval(x)? * sine_representer(f, y)? - f.eval(y)? * sine_representer(f, x)?;
    Ok(r.abs())
}

/// `|g(x+y) - g(x) g(y) + f_C(x) f_C(y)|` with the same branch at both
/// points.
pub fn cosine_reconstruction_residual(g: &dyn RealFunction, x: f64, y: f64, sign: Sign) -> Result<f64> {
    let prod = cosine_representer(g, x, sign)? * cosine_representer(g, y, sign)?;
    Ok((g.eval(x + y)? - g.eval(x)? * g.eval(y)? + prod).norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Neither => "neither",
        })
    }
}

fn check_symmetric(points: &[f64]) -> Result<()> {
    let n = points.len();
    for i in 0..n / 2 + 1 {
        let (a, b) = (points[i], points[n - 1 - i]);
        if (a + b).abs() > 1e-12 * a.abs().max(1.0) {
            return Err(Error::Domain(format!(
                "parity needs a grid symmetric about 0 ({a} has no mirror)"
            )));
        }
    }
    Ok(())
}

fn classify_parity(values: &[(Complex, Complex)], tol: f64) -> Parity {
    let even = values.iter().map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let odd = values.iter().map(|(a, b)| (a + b).norm()).fold(0.0, f64::max);
    if even <= tol {
        Parity::Even
    } else if odd <= tol {
        Parity::Odd
    } else {
        Parity::Neither
    }
}

/// Classifies `f` on a grid symmetric about zero.
pub fn parity_check(f: &dyn RealFunction, points: &[f64], tol: f64) -> Result<Parity> {
    check_positive(tol)?;
    check_symmetric(points)?;
    let values = points
        .iter()
        .map(|&x| Ok((Complex::new(f.eval(x)?, 0.0), Complex::new(f.eval(-x)?, 0.0))))
        .collect::<Result<Vec<_>>>()?;
    Ok(classify_parity(&values, tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityReport {
    pub parity: Parity,
    pub sine: Parity,
    pub cosine: Parity,
    /// `f` even or odd gives an even sine representer, and `f` even gives
    /// an even cosine representer.
    pub consistent: bool,
    /// Mirror pairs left out because a representer is undefined there.
    pub skipped: usize,
}

/// Parity of `f` and of both representers. Points where a representer is
/// undefined (zeros of `f`) are skipped together with their mirror image.
pub fn parity_report(f: &dyn RealFunction, points: &[f64], tol: f64) -> Result<ParityReport> {
    let parity = parity_check(f, points, tol)?;
    let mut skipped = 0;
    let mut sine = Vec::new();
    let mut cosine = Vec::new();
    for &x in points {
        match (representer(f, RepresenterKind::Sine, x), representer(f, RepresenterKind::Sine, -x)) {
            (Ok(a), Ok(b)) => sine.push((a, b)),
            (Err(Error::ZeroDenominator { .. }), _) | (_, Err(Error::ZeroDenominator { .. })) => skipped += 1,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
        let plus = RepresenterKind::Cosine(Sign::Plus);
        cosine.push((representer(f, plus, x)?, representer(f, plus, -x)?));
    }
    let sine = classify_parity(&sine, tol);
    let cosine = classify_parity(&cosine, tol);
    let consistent = (parity == Parity::Neither || sine == Parity::Even)
        && (parity != Parity::Even || cosine == Parity::Even);
    Ok(ParityReport {
        parity,
        sine,
        cosine,
        consistent,
        skipped,
    })
}

/// One branch of a representer period at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodBranch {
    /// Quadratic branch, `None` for single-valued formulas.
    pub sign: Option<Sign>,
    pub t: f64,
}

/// The shift `T(x)` with `f_S(x) = f(x + 2T)` (sine) or
/// `±f_C(x) = g(x + 2T)` (cosine) for a regular family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepresenterPeriod {
    pub family: CauchyFamily,
    pub kind: RepresenterKind,
}

fn no_real_root(d: f64) -> Result<()> {
    if d < 0.0 || d.is_nan() {
        return Err(Error::NoRealRoot { discriminant: d });
    }
    Ok(())
}

/// Representer period of `fam`. Only the sine/cosine distinction of `kind`
/// matters: cosine periods are listed for both signs of the representer.
pub fn representer_period(fam: CauchyFamily, kind: RepresenterKind) -> Result<RepresenterPeriod> {
    match (fam, kind) {
        (CauchyFamily::Exponential(a), _) if !(a > 0.0 && a.is_finite()) || a == 1.0 => Err(Error::DegenerateBase),
        (CauchyFamily::Exponential(_), RepresenterKind::Cosine(_)) => Err(Error::NoFinitePeriod),
        (CauchyFamily::Additive(0.0) | CauchyFamily::Logarithmic(0.0), _) => {
            Err(Error::Domain(format!("{fam} vanishes identically")))
        }
        (CauchyFamily::Multiplicative(0.0), _) => Err(Error::Domain("x^0 is constant".into())),
        _ => Ok(RepresenterPeriod { family: fam, kind }),
    }
}

impl RepresenterPeriod {
    /// Branches at `x`, minus branch first.
    pub fn at(&self, x: f64) -> Result<Vec<PeriodBranch>> {
        check_domain(self.family, x)?;
        let single = |t: f64| Ok(vec![PeriodBranch { sign: None, t }]);
        let pair = |r: f64, make: &dyn Fn(f64) -> f64| {
            Ok(vec![
                PeriodBranch { sign: Some(Sign::Minus), t: make(-r) },
                PeriodBranch { sign: Some(Sign::Plus), t: make(r) },
            ])
        };
        match (self.family, self.kind) {
            (CauchyFamily::Additive(c), RepresenterKind::Sine) => single(0.5 * (1.0 / c - x)),
            (CauchyFamily::Exponential(a), RepresenterKind::Sine) => single(-0.5 * LN_2 / a.ln()),
            (CauchyFamily::Logarithmic(c), RepresenterKind::Sine) => {
                let fs = closed_form_representer(self.family, self.kind, x)?.re;
                single(0.5 * ((fs / c).exp() - x))
            }
            (CauchyFamily::Multiplicative(p), RepresenterKind::Sine) => single(2f64.powf(-1.0 / p) - 0.5 * x),
            (CauchyFamily::Additive(c), RepresenterKind::Cosine(_)) => {
                // T² + xT + x/(2c) = 0
                let d = x * x - 2.0 * x / c;
                no_real_root(d)?;
                pair(d.sqrt(), &|r| 0.5 * (r - x))
            }
            (CauchyFamily::Logarithmic(c), RepresenterKind::Cosine(_)) => {
                let l = x.ln();
                let d = l * l - (2.0 * x).ln() / c;
                no_real_root(d)?;
                pair(d.sqrt(), &|r| 0.5 * (r.exp() - x))
            }
            (CauchyFamily::Multiplicative(p), RepresenterKind::Cosine(_)) => {
                let xp = x.powf(p);
                let r = xp * xp - 2f64.powf(p) * xp;
                if !(r > 0.0) {
                    return Err(Error::NoRealRoot { discriminant: r });
                }
                single(0.5 * (r.powf(0.5 / p) - x))
            }
            (CauchyFamily::Exponential(_), RepresenterKind::Cosine(_)) => Err(Error::NoFinitePeriod),
        }
    }

    /// Residual of the periodicity equation at `x` for shift `t`. For the
    /// cosine kind the better of the two representer signs is used.
    pub fn residual(&self, x: f64, t: f64) -> Result<f64> {
        let f = self.family;
        let shifted = Complex::new(f.eval(x + 2.0 * t)?, 0.0);
        match self.kind {
            RepresenterKind::Sine => Ok((representer(&f, RepresenterKind::Sine, x)? - shifted).norm()),
            RepresenterKind::Cosine(_) => Sign::BOTH
                .into_iter()
                .map(|s| Ok((representer(&f, RepresenterKind::Cosine(s), x)? - shifted).norm()))
                .try_fold(f64::INFINITY, |m, r: Result<f64>| Ok(m.min(r?))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const PLUS: RepresenterKind = RepresenterKind::Cosine(Sign::Plus);

    fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn generic_examples() {
        assert!((sine_representer(&f64::sin, 0.7).unwrap() - 0.7f64.cos()).abs() <= 1e-15);
        assert_eq!(sine_representer(&|x: f64| 3.0 * x, 1.5).unwrap(), 1.0);
        assert!(matches!(sine_representer(&f64::sin, 0.0), Err(Error::ZeroDenominator { .. })));
        let c = cosine_representer(&f64::cos, 0.5, Sign::Minus).unwrap();
        assert!((c.re + 0.5f64.sin()).abs() <= 1e-15 && c.im == 0.0);
        // imaginary branch: g = 2^x - 1 has g² - g(2x) = -2(2^x - 1) < 0 for x > 0
        let g = |x: f64| 2f64.powf(x) - 1.0;
        let c = cosine_representer(&g, 1.0, Sign::Plus).unwrap();
        assert_eq!(c, Complex::new(0.0, 2f64.sqrt()));
        assert!(cosine_representer_real(&g, 1.0, Sign::Plus).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let m3 = CauchyFamily::Multiplicative(3.0);
        assert_eq!(closed_form_representer(m3, RepresenterKind::Sine, 0.4).unwrap().re, 4.0);
        let a1 = CauchyFamily::Additive(1.0);
        assert_eq!(closed_form_representer(a1, PLUS, 3.0).unwrap().re, 3f64.sqrt());
        assert_eq!(closed_form_representer(a1, RepresenterKind::Sine, 0.0).unwrap().re, 1.0);
        let l1 = CauchyFamily::Logarithmic(1.0);
        assert_eq!(closed_form_representer(l1, RepresenterKind::Sine, 2.0).unwrap().re, 1.0);
        assert!(matches!(
            closed_form_representer(l1, RepresenterKind::Sine, 1.0),
            Err(Error::ZeroDenominator { .. })
        ));
        assert!(matches!(closed_form_representer(l1, PLUS, -1.0), Err(Error::Domain(_))));
        let e = CauchyFamily::Exponential(3.0);
        assert_eq!(closed_form_representer(e, PLUS, 0.3).unwrap(), Complex::new(0.0, 0.0));
        // x^p: x^{2p} - (2x)^p is not zero
        let m2 = CauchyFamily::Multiplicative(2.0);
        assert_eq!(closed_form_representer(m2, PLUS, 3.0).unwrap().re, 45f64.sqrt());
    }

    #[test]
    fn parity() {
        let pts = grid(-3.0, 3.0, 24);
        let r = parity_report(&f64::sin, &pts, 1e-12).unwrap();
        assert_eq!((r.parity, r.sine, r.cosine), (Parity::Odd, Parity::Even, Parity::Neither));
        assert!(r.consistent);
        let r = parity_report(&f64::cosh, &pts, 1e-12).unwrap();
        assert_eq!((r.parity, r.sine, r.cosine), (Parity::Even, Parity::Even, Parity::Even));
        assert_eq!(parity_check(&|x: f64| x + 1.0, &pts, 1e-12).unwrap(), Parity::Neither);
        assert!(parity_check(&f64::sin, &grid(0.0, 1.0, 5), 1e-12).is_err());
    }

    #[test]
    fn period_examples() {
        let p = representer_period(CauchyFamily::Multiplicative(2.0), RepresenterKind::Sine).unwrap();
        let t = p.at(1.3).unwrap()[0].t;
        assert!((t - (0.5f64.sqrt() - 0.65)).abs() <= 1e-15);
        assert!(((1.3 + 2.0 * t).powi(2) - 2.0).abs() <= 1e-14);

        let p = representer_period(CauchyFamily::Additive(2.0), PLUS).unwrap();
        let b = p.at(1.0).unwrap();
        assert_eq!((b[0].t, b[1].t), (-0.5, -0.5));
        assert!(p.residual(1.0, -0.5).unwrap() <= 1e-15);
        assert!(matches!(p.at(0.5), Err(Error::NoRealRoot { .. })));

        assert_eq!(
            representer_period(CauchyFamily::Exponential(2.0), PLUS),
            Err(Error::NoFinitePeriod)
        );
        let p = representer_period(CauchyFamily::Exponential(2.0), RepresenterKind::Sine).unwrap();
        assert_eq!(p.at(0.0).unwrap()[0].t, -0.5);
    }

    proptest! {
        #[test]
        fn sine_periods_substitute(x in 0.2..4.0f64, c in 0.3..3.0f64, p in prop_oneof![-2.0..-0.2f64, 0.2..3.0f64]) {
            prop_assume!((x - 1.0).abs() > 0.05);
            for fam in [CauchyFamily::Additive(c), CauchyFamily::Exponential(c + 1.0),
                        CauchyFamily::Logarithmic(c), CauchyFamily::Multiplicative(p)] {
                let per = representer_period(fam, RepresenterKind::Sine).unwrap();
                for b in per.at(x).unwrap() {
                    prop_assert!(per.residual(x, b.t).unwrap() <= 1e-9, "{} at {}", fam, x);
                }
            }
        }

        #[test]
        fn cosine_closed_form_squares_to_radicand(x in 0.1..4.0f64, c in -3.0..3.0f64) {
            for fam in [CauchyFamily::Additive(c), CauchyFamily::Logarithmic(c), CauchyFamily::Multiplicative(c)] {
                let v = closed_form_representer(fam, PLUS, x).unwrap();
                let r = cosine_radicand(&fam, x).unwrap();
                prop_assert!((v * v - r).norm() <= 1e-9 * r.abs().max(1.0));
            }
        }

        #[test]
        fn cosine_reconstruction_where_a_partner_exists(x in 0.05..3.0f64, y in 0.05..3.0f64, a in 0.2..5.0f64) {
            // sin is the cosine representer of cos on (0, pi); a^x has f_C = 0
            prop_assert!(cosine_reconstruction_residual(&f64::cos, x, y, Sign::Plus).unwrap() <= 1e-10);
            let g = CauchyFamily::Exponential(a);
            let r = cosine_reconstruction_residual(&g, x, y, Sign::Plus).unwrap();
            prop_assert!(r <= 1e-10 * a.powf(x + y).max(1.0));
        }

        #[test]
        fn exponential_sine_reconstruction(a in 0.2..5.0f64, x in -2.0..2.0f64, y in -2.0..2.0f64) {
            let f = CauchyFamily::Exponential(a);
            prop_assert!(sine_reconstruction_residual(&f, x, y).unwrap() <= 1e-12 * a.powf(x + y).max(1.0));
        }
    }
}
