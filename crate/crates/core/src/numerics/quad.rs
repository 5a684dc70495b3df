//! Adaptive Gauss–Kronrod (7/15) quadrature on the open unit interval.
//!
//! The integrand is never sampled at 0 or 1. The interval is folded at 1/2:
//! panels on the right half are parametrised by the distance `s = 1 - t` to
//! the upper endpoint, so integrands that need `1 - t` accurately (for
//! instance `-log t` near `t = 1`) can receive it without cancellation.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::tolerance::check_positive;
use crate::error::{Error, Result};

/// Upper bound on the number of live panels.
pub const MAX_PANELS: usize = 1 << 20;

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss points.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    /// Coordinate is `t` itself, panel inside (0, 1/2].
    Lower,
    /// Coordinate is `s = 1 - t`, panel inside (0, 1/2].
    Upper,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    side: Side,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    // Largest error first; ties resolved by position so the refinement order
    // is fully deterministic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
            .then_with(|| (other.side as u8).cmp(&(self.side as u8)))
    }
}

fn gk15<F>(f: &mut F, a: f64, b: f64, side: Side) -> Result<Panel>
where
    F: FnMut(f64, f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut eval = |u: f64| -> Result<f64> {
        let (t, s) = match side {
            Side::Lower => (u, 1.0 - u),
            Side::Upper => (1.0 - u, u),
        };
        let v = f(t, s)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { at: t })
        }
    };

    let fc = eval(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = eval(center - dx)? + eval(center + dx)?;
        kronrod += wk * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Ok(Panel {
        a,
        b,
        side,
        value,
        error,
    })
}

// Both halves of [a, b] must keep all 15 nodes strictly inside and above
// `floor`.
fn splittable(a: f64, b: f64, floor: f64) -> bool {
    let m = 0.5 * (a + b);
    if !(m > a && m < b) {
        return false;
    }
    [(a, m), (m, b)].iter().all(|&(lo, hi)| {
        let c = 0.5 * (lo + hi);
        let h = 0.5 * (hi - lo);
        c - h * XGK[0] > lo && c + h * XGK[0] < hi && c - h * XGK[0] > floor
    })
}

/// Integrates `f(t, 1 - t)` over (0, 1). The second argument is the exact
/// complement of `t` for nodes in the upper half of the interval, where `t`
/// itself may round to 1.
pub fn integrate_01_complement<F>(f: F, tol: f64) -> Result<Quadrature>
where
    F: FnMut(f64, f64) -> Result<f64>,
{
    adaptive(f, tol, 0.0)
}

fn adaptive<F>(mut f: F, tol: f64, upper_floor: f64) -> Result<Quadrature>
where
    F: FnMut(f64, f64) -> Result<f64>,
{
    check_positive(tol)?;
    let mut heap = BinaryHeap::new();
    heap.push(gk15(&mut f, 0.0, 0.5, Side::Lower)?);
    heap.push(gk15(&mut f, 0.0, 0.5, Side::Upper)?);
    // Panels too narrow to split; they stay in the final sum.
    let mut frozen: Vec<Panel> = Vec::new();

    loop {
        let frozen_error: f64 = frozen.iter().map(|p| p.error).sum();
        let error: f64 = frozen_error + heap.iter().map(|p| p.error).sum::<f64>();
        if error <= tol {
            break;
        }
        if heap.len() + frozen.len() >= MAX_PANELS || heap.is_empty() || frozen_error > tol {
            return Err(Error::NonConvergence {
                panels: heap.len() + frozen.len(),
                estimate: error,
            });
        }
        // Refine in batches so the error sum is not recomputed after every
        // split.
        let batch = (heap.len() / 8).max(1);
        for _ in 0..batch {
            let Some(p) = heap.pop() else { break };
            let floor = match p.side {
                Side::Lower => 0.0,
                Side::Upper => upper_floor,
            };
            if !splittable(p.a, p.b, floor) {
                frozen.push(p);
                continue;
            }
            let m = 0.5 * (p.a + p.b);
            heap.push(gk15(&mut f, p.a, m, p.side)?);
            heap.push(gk15(&mut f, m, p.b, p.side)?);
        }
    }

    let mut panels: Vec<Panel> = heap.into_vec();
    panels.extend(frozen);
    panels.sort_by(|p, q| {
        (p.side as u8)
            .cmp(&(q.side as u8))
            .then_with(|| p.a.total_cmp(&q.a))
    });
    Ok(Quadrature {
        value: panels.iter().map(|p| p.value).sum(),
        error: panels.iter().map(|p| p.error).sum(),
        panels: panels.len(),
    })
}

/// Adaptive integral of `f` over (0, 1) with estimated absolute error at most
/// `tol`.
pub fn integrate_01<F>(mut f: F, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    // keep upper-half nodes at least one ulp below 1 so t never rounds to 1
    adaptive(|t, _| Ok(f(t)), tol, f64::EPSILON).map(|q| q.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constant() {
        let v = integrate_01(|_| 1.0, 1e-10).unwrap();
        assert!((v - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn negative_log() {
        // antiderivative t - t log t
        let v = integrate_01(|t| -t.ln(), 1e-10).unwrap();
        assert!((v - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn square() {
        let v = integrate_01(|t| t * t, 1e-10).unwrap();
        assert!((v - 1.0 / 3.0).abs() <= 1e-10);
    }

    #[test]
    fn kronrod_rule_is_exact_for_high_degree_polynomials() {
        // K15 integrates degree 22 exactly on each half.
        let v = integrate_01(|t| t.powi(21), 1e-14).unwrap();
        assert!((v - 1.0 / 22.0).abs() <= 1e-15);
    }

    #[test]
    fn power_singularities_at_both_ends() {
        for &x in &[0.5, 1.0, 2.0, 5.0] {
            let v = integrate_01(|t: f64| t.powf(x - 1.0), 1e-10).unwrap();
            assert!((v - 1.0 / x).abs() <= 1e-10, "x = {x}: {v}");
        }
        let v = integrate_01_complement(|_, s: f64| Ok(s.powf(-0.5)), 1e-10).unwrap();
        assert!((v.value - 2.0).abs() <= 1e-10);
    }

    #[test]
    fn never_samples_endpoints() {
        let mut seen = Vec::new();
        integrate_01_complement(
            |t, s| {
                seen.push((t, s));
                Ok(t.powf(-0.9))
            },
            1e-8,
        )
        .unwrap();
        assert!(seen.iter().all(|&(t, s)| t > 0.0 && t < 1.0 && s > 0.0));

        let mut worst = 0.0f64;
        let r = integrate_01(
            |t| {
                worst = worst.max(t);
                (1.0 - t).powf(-0.5)
            },
            1e-6,
        );
        assert!(worst < 1.0, "{r:?}");
    }

    #[test]
    fn non_finite_interior_value_is_reported() {
        let e = integrate_01(|t| if t > 0.3 && t < 0.31 { f64::NAN } else { 1.0 }, 1e-10);
        assert!(matches!(e, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn divergent_integrand_does_not_converge() {
        // refinement toward 0 ends either at the panel floor or in overflow
        let e = integrate_01(|t| 1.0 / t, 1e-10);
        assert!(
            matches!(e, Err(Error::NonConvergence { .. }) | Err(Error::NonFinite { .. })),
            "{e:?}"
        );
        let e = integrate_01(|t| 1.0 / (t * (1.0 - t.ln()).sqrt()), 1e-10);
        assert!(e.is_err(), "{e:?}");
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(matches!(
            integrate_01(|t| t, 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn linearity(a in -10.0..10.0f64, b in -10.0..10.0f64) {
            let tol = 1e-10;
            let f = |t: f64| (-t.ln()).sqrt();
            let g = |t: f64| (3.0 * t).cos();
            let lhs = integrate_01(|t| a * f(t) + b * g(t), tol).unwrap();
            let rf = integrate_01(f, tol).unwrap();
            let rg = integrate_01(g, tol).unwrap();
            prop_assert!((lhs - a * rf - b * rg).abs() <= 3.0 * tol);
        }
    }
}
