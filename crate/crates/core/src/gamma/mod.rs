//! Euler's Gamma function, its entire reciprocal, the generalized Gamma
//! function of an arbitrary generator, and trigonometric identities written
//! purely in terms of Gamma.

mod generator;
mod trig;

use std::f64::consts::PI;

pub use generator::{closed_form, gamma_phi, Generator};
pub use trig::{
    cos_via_gamma, euler_identity_residual, product_identity_residuals,
    pythagoras_gamma_residual, sin_via_gamma, tan_via_gamma,
};

use crate::error::{Error, Result};
use crate::numerics::Complex;

// Lanczos approximation with g = 10.900511 and 11 terms (Pugh, 2004).
const LANCZOS_G: f64 = 10.900511;
#[allow(clippy::excessive_precision)]
const LANCZOS_D: [f64; 11] = [
    2.485_740_891_387_535_655_46e-5,
    1.051_423_785_817_219_742_10,
    -3.456_870_972_220_162_354_69,
    4.512_277_094_668_948_237_00,
    -2.982_852_253_235_766_557_21,
    1.056_397_115_771_267_130_77,
    -1.954_287_731_916_458_695_83e-1,
    1.709_705_434_044_412_243_07e-2,
    -5.719_261_174_043_057_812_83e-4,
    4.633_994_733_599_056_367_08e-6,
    -2.719_949_084_886_077_039_10e-9,
];
// 2 sqrt(e / pi)
const TWO_SQRT_E_OVER_PI: f64 = 1.860_382_734_205_265_717_336_249_247_266_663_112_059_421_841_408_575_5;

fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `sin(pi x)` with exact zeros at the integers.
fn sin_pi(x: f64) -> f64 {
    if x.fract() == 0.0 {
        return 0.0;
    }
    let r = x - 2.0 * (0.5 * x).round();
    (PI * r).sin()
}

/// `Γ(n) = (n - 1)!` by direct product for integers `1 <= n <= 171`.
fn factorial(x: f64) -> Option<f64> {
    if x.fract() != 0.0 || !(1.0..=171.0).contains(&x) {
        return None;
    }
    Some((2..x as u32).fold(1.0, |p, k| p * k as f64))
}

fn lanczos_real(x: f64) -> f64 {
    let s = LANCZOS_D
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_D[0], |s, (k, &d)| s + d / (x + k as f64 - 1.0));
    s * TWO_SQRT_E_OVER_PI * ((x - 0.5 + LANCZOS_G) / std::f64::consts::E).powf(x - 0.5)
}

fn lanczos_complex(z: Complex) -> Complex {
    let s = LANCZOS_D
        .iter()
        .enumerate()
        .skip(1)
        .fold(Complex::new(LANCZOS_D[0], 0.0), |s, (k, &d)| {
            s + d / (z + (k as f64 - 1.0))
        });
    let base = (z - 0.5 + LANCZOS_G) / std::f64::consts::E;
    s * TWO_SQRT_E_OVER_PI * ((z - 0.5) * base.ln()).exp()
}

/// Euler's Gamma function on the reals.
///
/// Uses the Lanczos approximation for `x >= 1/2`, the recurrence
/// `Γ(x) = Γ(x + 1) / x` on `(0, 1/2)` and the reflection formula for
/// negative arguments.
pub fn euler_gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("Gamma of NaN".into()));
    }
    if is_non_positive_integer(x) {
        return Err(Error::Pole { x });
    }
    if let Some(f) = factorial(x) {
        Ok(f)
    } else if x >= 0.5 {
        Ok(lanczos_real(x))
    } else if x > 0.0 {
        Ok(lanczos_real(x + 1.0) / x)
    } else {
        Ok(PI / (sin_pi(x) * lanczos_real(1.0 - x)))
    }
}

/// `1/Γ` on the real line: entire, and exactly zero at `0, -1, -2, ...`.
pub fn reciprocal_gamma_real(x: f64) -> f64 {
    if is_non_positive_integer(x) {
        return 0.0;
    }
    if let Some(f) = factorial(x) {
        1.0 / f
    } else if x >= 0.5 {
        1.0 / lanczos_real(x)
    } else if x > 0.0 {
        x / lanczos_real(x + 1.0)
    } else {
        sin_pi(x) * lanczos_real(1.0 - x) / PI
    }
}

/// `1/Γ(z)` for complex `z`, exactly zero at the non-positive integers.
pub fn reciprocal_gamma(z: Complex) -> Complex {
    if z.im == 0.0 {
        return Complex::new(reciprocal_gamma_real(z.re), 0.0);
    }
    if z.re >= 0.5 {
        lanczos_complex(z).inv()
    } else {
        // 1/Γ(z) = Γ(1 - z) sin(pi z) / pi
        lanczos_complex(1.0 - z) * (z * PI).sin() / PI
    }
}
