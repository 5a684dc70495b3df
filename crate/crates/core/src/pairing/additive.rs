use super::{checked, real, require_finite, PeriodEntry, PeriodResult};
use crate::error::{Error, Result};
use crate::function::Sign;
use crate::numerics::{derivative_fd_complex, principal_sqrt, Complex};

/// Period of the (S)-pair `(f, f(. + T))` with `f(u) = c u`:
/// `T = 1/c - 2xy/(x+y)`, a constant minus the harmonic mean.
///
/// The harmonic mean is evaluated as `x * (2y / (x+y))`, which makes
/// `T(x, x) = 1/c - x` and `T(x, 0) = 1/c` exact. `c = 0` admits every
/// period.
pub fn period_additive_s(c: f64, x: f64, y: f64) -> Result<PeriodResult> {
    for (n, v) in [("c", c), ("x", x), ("y", y)] {
        require_finite(n, v)?;
    }
    if c == 0.0 {
        return Ok(PeriodResult::any());
    }
    let s = x + y;
    if s == 0.0 {
        return Err(Error::SingularLocus { x, y });
    }
    let t = 1.0 / c - x * (2.0 * y / s);
    let f = |u: f64| c * u;
    let (a, b) = (f(x) * f(y + t), f(y) * f(x + t));
    let residual = (f(s) - a - b).abs();
    let scale = f(s).abs() + a.abs() + b.abs();
    Ok(PeriodResult::from_entries(vec![checked(
        "additive (S) period",
        real(t),
        residual,
        scale,
    )?]))
}

/// Period of the dual (S)-pair `(g, g(. + T))` with `g(u) = c u` playing the
/// role of the cosine: `T = (x + y - cxy) / (c(x+y) - 1)`.
pub fn period_additive_s_dual(c: f64, x: f64, y: f64) -> Result<PeriodResult> {
    for (n, v) in [("c", c), ("x", x), ("y", y)] {
        require_finite(n, v)?;
    }
    if c == 0.0 {
        return Ok(PeriodResult::any());
    }
    let s = x + y;
    let den = c * s - 1.0;
    if den == 0.0 {
        return Err(Error::SingularLocus { x, y });
    }
    let t = (s - c * x * y) / den;
    // x + y + T = c(xy + T(x + y))
    let (lhs, rhs) = (s + t, c * (x * y + t * s));
    let residual = (lhs - rhs).abs();
    let scale = lhs.abs() + (c * x * y).abs() + (c * t * s).abs();
    Ok(PeriodResult::from_entries(vec![checked(
        "dual additive (S) period",
        real(t),
        residual,
        scale,
    )?]))
}

/// `|T - T_dual|` at `(x, y)`: zero exactly where the periods of the pair
/// and of the dual pair coincide.
pub fn period_equality_residual(c: f64, x: f64, y: f64) -> Result<f64> {
    if c == 0.0 {
        return Err(Error::Domain("every T is a period when c = 0".into()));
    }
    let t = period_additive_s(c, x, y)?.real_values()[0];
    let t_dual = period_additive_s_dual(c, x, y)?.real_values()[0];
    Ok((t - t_dual).abs())
}

/// Roots of `T^2 + sT + s/c = 0`, minus branch first.
fn additive_c_roots(c: f64, s: f64) -> Result<PeriodResult> {
    require_finite("c", c)?;
    require_finite("x + y", s)?;
    if c == 0.0 {
        return Ok(PeriodResult::any());
    }
    let q = s / c;
    let disc = s * s - 4.0 * q;
    let roots: [Complex; 2] = if disc >= 0.0 {
        let r = disc.sqrt();
        if s == 0.0 {
            [real(0.0), real(0.0)]
        } else {
            // larger root by the formula, the other from the product s/c
            let big = -0.5 * (s + s.signum() * r);
            let small = if big == 0.0 { 0.0 } else { q / big };
            [real(big.min(small)), real(big.max(small))]
        }
    } else {
        let r = principal_sqrt(real(disc));
        [(-s - r) * 0.5, (-s + r) * 0.5]
    };
    let entries = roots
        .iter()
        .map(|&t| {
            let residual = (t * t + t * s + q).norm();
            let scale = t.norm_sqr() + (t * s).norm() + q.abs();
            checked("additive (C) period", t, residual, scale)
        })
        .collect::<Result<Vec<PeriodEntry>>>()?;
    Ok(PeriodResult::from_entries(entries))
}

/// Periods `T` of the (C)-pair `(g, g(. + T))` with `g(u) = c u`: the roots
/// of `T^2 + (x+y)T + (x+y)/c = 0`. Complex roots are returned when the
/// discriminant is negative.
pub fn period_additive_c(c: f64, x: f64, y: f64) -> Result<PeriodResult> {
    require_finite("x", x)?;
    require_finite("y", y)?;
    additive_c_roots(c, x + y)
}

/// The additive (C) period along the line `x + y = d`:
/// `T_c(d) = (-d ± sqrt(d^2 - 4d/c)) / 2`.
pub fn period_additive_c_sum_constrained(c: f64, d: f64) -> Result<PeriodResult> {
    additive_c_roots(c, d)
}

/// One branch of `T(c) = (-c ± sqrt(c^2 - 4)) / 2` and its derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumBranch {
    pub sign: Sign,
    pub t: Complex,
    /// `(-1 ± c / sqrt(c^2 - 4)) / 2`
    pub dt: Complex,
    /// Central difference of `T` at `c`.
    pub dt_fd: Complex,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumProbe {
    pub c: Complex,
    /// Minus branch first.
    pub branches: [ExtremumBranch; 2],
}

fn t_of_c(c: Complex, sign: Sign) -> Complex {
    (-c + principal_sqrt(c * c - 4.0) * sign.value()) * 0.5
}

/// Evaluates `T(c)` and `T'(c)` on both branches, with a finite-difference
/// cross-check of the derivative.
///
/// For purely imaginary `c` the radicand `c^2 - 4` lies on the branch cut of
/// the square root; the difference is then taken along the imaginary axis,
/// which keeps both samples on the cut.
pub fn extremum_probe(c: Complex) -> Result<ExtremumProbe> {
    if !(c.re.is_finite() && c.im.is_finite()) {
        return Err(Error::Domain(format!("c = {c} must be finite")));
    }
    let rad = c * c - 4.0;
    if rad == Complex::new(0.0, 0.0) {
        return Err(Error::BranchPole { re: c.re, im: c.im });
    }
    let root = principal_sqrt(rad);
    let direction = if c.re == 0.0 && c.im != 0.0 {
        Complex::new(0.0, 1.0)
    } else {
        Complex::new(1.0, 0.0)
    };
    let h = 1e-6 * c.norm().max(1.0);
    let branch = |sign: Sign| -> Result<ExtremumBranch> {
        Ok(ExtremumBranch {
            sign,
            t: t_of_c(c, sign),
            dt: (c / root * sign.value() - 1.0) * 0.5,
            dt_fd: derivative_fd_complex(|z| t_of_c(z, sign), c, h, direction)?,
        })
    };
    Ok(ExtremumProbe {
        c,
        branches: [branch(Sign::Minus)?, branch(Sign::Plus)?],
    })
}

/// The derivative in its commonly printed form, `-1/2 ± c / sqrt(c^2 - 4)`,
/// which lacks the factor 1/2 on the second term.
pub fn printed_extremum_derivative(c: Complex, sign: Sign) -> Complex {
    c / principal_sqrt(c * c - 4.0) * sign.value() - 0.5
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::find_root;
    use proptest::prelude::*;

    fn one(r: PeriodResult) -> f64 {
        assert_eq!(r.entries.len(), 1);
        r.real_values()[0]
    }

    #[test]
    fn additive_s_period_examples() {
        assert_eq!(one(period_additive_s(1.0, 1.0, 1.0).unwrap()), 0.0);
        assert_eq!(one(period_additive_s(2.0, 3.0, 0.0).unwrap()), 0.5);
        for &(c, x) in &[(0.5, 1.7), (3.0, -2.2), (-2.0, 0.3)] {
            assert_eq!(one(period_additive_s(c, x, x).unwrap()), 1.0 / c - x);
            assert_eq!(one(period_additive_s(c, x, 0.0).unwrap()), 1.0 / c);
        }
        assert_eq!(
            period_additive_s(1.0, 1.0, -1.0),
            Err(Error::SingularLocus { x: 1.0, y: -1.0 })
        );
        assert!(period_additive_s(0.0, 1.0, 2.0).unwrap().any_period);
    }

    #[test]
    fn large_slope_limit_is_minus_harmonic_mean() {
        for &(x, y) in &[(1.0, 2.0), (0.5, 4.0), (-3.0, 1.0)] {
            let t = one(period_additive_s(1e8, x, y).unwrap());
            assert!((t + 2.0 * x * y / (x + y)).abs() <= 1e-6);
        }
    }

    #[test]
    fn vanishes_on_harmonic_level_set() {
        // 2xy/(x+y) = 1/c solved for y: y = x / (2cx - 1)
        let c = 0.8;
        for &x in &[0.9, 1.5, 3.0, -2.0] {
            let y = x / (2.0 * c * x - 1.0);
            let t = one(period_additive_s(c, x, y).unwrap());
            assert!(t.abs() <= 1e-14, "x = {x}: {t}");
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(one(period_additive_s_dual(1.0, 2.0, 1.0).unwrap()), 0.5);
        assert_eq!(one(period_additive_s_dual(1.0, 0.0, 0.0).unwrap()), 0.0);
        assert_eq!(
            period_additive_s_dual(2.0, 1.0, -0.5),
            Err(Error::SingularLocus { x: 1.0, y: -0.5 })
        );
    }

    #[test]
    fn equality_residual() {
        assert_eq!(period_equality_residual(1.0, 1.0, 1.0).unwrap(), 1.0);
        let r = period_equality_residual(2.0, 1.0, 2.0).unwrap();
        assert!((r - (5.0 / 6.0 - 0.2)).abs() <= 1e-15);
        // c = -1, x = 1: the periods agree at y = sqrt(3) - 2
        let y = 3f64.sqrt() - 2.0;
        assert!(period_equality_residual(-1.0, 1.0, y).unwrap() <= 1e-15);
    }

    #[test]
    fn additive_c_period_examples() {
        let r = period_additive_c(4.0, 1.0, 1.0).unwrap();
        let v = r.real_values();
        assert!((v[0] - (-1.0 - 0.5f64.sqrt())).abs() <= 1e-15);
        assert!((v[1] - (-1.0 + 0.5f64.sqrt())).abs() <= 1e-15);
        let oracle = find_root(|t| t * t + 2.0 * t + 0.5, -1.0, 0.0, 1e-14).unwrap();
        assert!((v[1] - oracle).abs() <= 1e-12);

        let r = period_additive_c(1.0, 1.0, 1.0).unwrap();
        assert!(r.real_values().is_empty());
        let (lo, hi) = (r.entries[0].value.unwrap(), r.entries[1].value.unwrap());
        assert_eq!(lo, Complex::new(-1.0, -1.0));
        assert_eq!(hi, Complex::new(-1.0, 1.0));

        let r = period_additive_c(3.0, 1.0, -1.0).unwrap();
        assert_eq!(r.real_values(), vec![0.0, 0.0]);
        let r = period_additive_c(3.0, 2.0, -2.0).unwrap();
        assert!(r.real_values().contains(&0.0));
    }

    #[test]
    fn sum_constrained() {
        let a = period_additive_c_sum_constrained(4.0, 2.0).unwrap();
        let b = period_additive_c(4.0, 0.3, 1.7).unwrap();
        assert_eq!(a, b);
        let r = period_additive_c_sum_constrained(5.0, 5.0).unwrap().real_values();
        let s21 = 21f64.sqrt();
        assert!((r[0] - 0.5 * (-5.0 - s21)).abs() <= 1e-14);
        assert!((r[1] - 0.5 * (-5.0 + s21)).abs() <= 1e-14);
        assert_eq!(period_additive_c_sum_constrained(7.0, 0.0).unwrap().real_values(), vec![0.0, 0.0]);
    }

    #[test]
    fn extremum_values() {
        let p = extremum_probe(Complex::new(3.0, 0.0)).unwrap();
        let plus = p.branches[1];
        assert!((plus.dt.re - (-0.5 + 3.0 / (2.0 * 5f64.sqrt()))).abs() <= 1e-15);
        assert!((plus.dt.re - 0.17082).abs() <= 1e-5);
        assert!((plus.dt - plus.dt_fd).norm() <= 1e-6);

        let p = extremum_probe(Complex::new(10.0, 0.0)).unwrap();
        assert!((p.branches[1].dt.re - (-0.5 + 5.0 / 96f64.sqrt())).abs() <= 1e-15);

        let c = Complex::new(0.0, 2.0 / 3f64.sqrt());
        let p = extremum_probe(c).unwrap();
        let [minus, plus] = p.branches;
        assert!((minus.dt - Complex::new(-0.75, 0.0)).norm() <= 1e-14);
        assert!((plus.dt - Complex::new(-0.25, 0.0)).norm() <= 1e-14);
        assert!((minus.dt - minus.dt_fd).norm() <= 1e-6);
        assert!((plus.dt - plus.dt_fd).norm() <= 1e-6);
        assert!((plus.t - Complex::new(0.0, 1.0 / 3f64.sqrt())).norm() <= 1e-14);
        assert!((minus.t - Complex::new(0.0, -3f64.sqrt())).norm() <= 1e-14);
        // the printed derivative does vanish there, the true one does not
        assert!(printed_extremum_derivative(c, Sign::Plus).norm() <= 1e-15);

        assert!(matches!(extremum_probe(Complex::new(2.0, 0.0)), Err(Error::BranchPole { .. })));
    }

    proptest! {
        #[test]
        fn additive_s_period_residual(c in prop_oneof![-5.0..-0.1f64, 0.1..5.0f64], x in -3.0..3.0f64, y in -3.0..3.0f64) {
            prop_assume!((x + y).abs() > 1e-3);
            let r = period_additive_s(c, x, y).unwrap();
            prop_assert!(r.max_residual() <= 1e-9);
        }

        #[test]
        fn additive_c_period_residual(c in prop_oneof![-5.0..-0.1f64, 0.1..5.0f64], x in -3.0..3.0f64, y in -3.0..3.0f64) {
            let r = period_additive_c(c, x, y).unwrap();
            prop_assert_eq!(r.entries.len(), 2);
            prop_assert!(r.max_residual() <= 1e-9);
        }

        #[test]
        fn dual_residual(c in prop_oneof![-5.0..-0.1f64, 0.1..5.0f64], x in -3.0..3.0f64, y in -3.0..3.0f64) {
            prop_assume!((c * (x + y) - 1.0).abs() > 1e-3);
            let r = period_additive_s_dual(c, x, y).unwrap();
            prop_assert!(r.max_residual() <= 1e-9 * (1.0 + r.real_values()[0].abs()));
        }

        #[test]
        fn symbolic_derivative_matches_fd(c in prop_oneof![-20.0..-2.5f64, 2.5..20.0f64]) {
            let p = extremum_probe(Complex::new(c, 0.0)).unwrap();
            for b in p.branches {
                prop_assert!((b.dt - b.dt_fd).norm() <= 1e-6);
            }
        }
    }
}
