use std::f64::consts::PI;

pub use num_complex::Complex64 as Complex;

/// Principal square root: non-negative real part, and a positive imaginary
/// part on the whole negative real axis (including `-x - 0i`).
pub fn principal_sqrt(z: Complex) -> Complex {
    if z.im == 0.0 {
        if z.re >= 0.0 {
            return Complex::new(z.re.sqrt(), 0.0);
        }
        return Complex::new(0.0, (-z.re).sqrt());
    }
    z.sqrt()
}

/// Principal logarithm with `arg` in (-pi, pi]; the negative real axis maps
/// to `arg = +pi` regardless of the sign of a zero imaginary part.
pub fn principal_ln(z: Complex) -> Complex {
    if z.im == 0.0 && z.re < 0.0 {
        return Complex::new((-z.re).ln(), PI);
    }
    z.ln()
}

/// `e^{i theta}` for real `theta`.
pub fn exp_i(theta: f64) -> Complex {
    let (s, c) = theta.sin_cos();
    Complex::new(c, s)
}
