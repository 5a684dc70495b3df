//! Trigonometric functions expressed only through `1/Γ`.
//!
//! `sin z = π / (Γ(z/π) Γ(1 - z/π))` and
//! `cos z = π / (Γ(1/2 - z/π) Γ(1/2 + z/π))`. Using the entire reciprocal
//! Gamma turns every pole of a denominator into an exact zero.

use std::f64::consts::PI;

use super::reciprocal_gamma_real as rg;
use crate::error::{Error, Result};
use crate::numerics::{exp_i, Complex};

pub fn sin_via_gamma(z: f64) -> f64 {
    let u = z / PI;
    PI * rg(u) * rg(1.0 - u)
}

pub fn cos_via_gamma(z: f64) -> f64 {
    let u = z / PI;
    PI * rg(0.5 - u) * rg(0.5 + u)
}

/// `sin z / cos z` from the two Gamma forms.
pub fn tan_via_gamma(z: f64) -> Result<f64> {
    let c = cos_via_gamma(z);
    if c == 0.0 {
        return Err(Error::DivisionByZero { at: z });
    }
    Ok(sin_via_gamma(z) / c)
}

/// `|e^{iz} - (cos z + i sin z)|` with both trigonometric parts in Gamma form.
pub fn euler_identity_residual(z: f64) -> f64 {
    (exp_i(z) - Complex::new(cos_via_gamma(z), sin_via_gamma(z))).norm()
}

/// `|1/(Γ(u)Γ(1-u))² + 1/(Γ(1/2-u)Γ(1/2+u))² - 1/π²|` with `u = z/π`.
pub fn pythagoras_gamma_residual(z: f64) -> f64 {
    let u = z / PI;
    let s = rg(u) * rg(1.0 - u);
    let c = rg(0.5 - u) * rg(0.5 + u);
    (s * s + c * c - 1.0 / (PI * PI)).abs()
}

/// Residuals of the real and imaginary parts of `e^{iz} e^{-iz} = 1`, with
/// every factor written in Gamma form:
/// `|C² - S S₋ - 1|` and `|C S₋ + S C|`, where `S₋ = π/(Γ(-z/π)Γ(1+z/π))`.
pub fn product_identity_residuals(z: f64) -> (f64, f64) {
    let u = z / PI;
    let c = cos_via_gamma(z);
    let s = sin_via_gamma(z);
    let s_neg = PI * rg(-u) * rg(1.0 + u);
    ((c * c - s * s_neg - 1.0).abs(), (c * s_neg + s * c).abs())
}
