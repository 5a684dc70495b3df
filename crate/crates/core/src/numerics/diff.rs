use super::complex::Complex;
use crate::error::{Error, Result};

/// Central difference `(f(x + h) - f(x - h)) / 2h`.
pub fn derivative_fd<F>(mut f: F, x: f64, h: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step h = {h} must be positive")));
    }
    let (up, down) = (f(x + h), f(x - h));
    if !up.is_finite() {
        return Err(Error::NonFinite { at: x + h });
    }
    if !down.is_finite() {
        return Err(Error::NonFinite { at: x - h });
    }
    Ok((up - down) / (2.0 * h))
}

/// Central difference of a holomorphic function along `direction` (a unit
/// complex number). For a holomorphic `f` every direction gives the same
/// derivative; choosing one parallel to a branch cut keeps both samples on
/// the same sheet.
pub fn derivative_fd_complex<F>(mut f: F, z: Complex, h: f64, direction: Complex) -> Result<Complex>
where
    F: FnMut(Complex) -> Complex,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step h = {h} must be positive")));
    }
    let step = direction * h;
    let (up, down) = (f(z + step), f(z - step));
    if !(up.re.is_finite() && up.im.is_finite() && down.re.is_finite() && down.im.is_finite()) {
        return Err(Error::NonFinite { at: z.re });
    }
    Ok((up - down) / (step * 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square() {
        let d = derivative_fd(|x| x * x, 3.0, 1e-5).unwrap();
        assert!((d - 6.0).abs() <= 1e-8);
    }

    #[test]
    fn exponential() {
        let d = derivative_fd(f64::exp, 0.0, 1e-5).unwrap();
        assert!((d - 1.0).abs() <= 1e-8);
    }

    #[test]
    fn golden_branch_slope() {
        // d/dc of (-c + sqrt(c^2 - 4)) / 2 at c = 3 is -1/2 + 3 / (2 sqrt 5)
        let t = |c: f64| 0.5 * (-c + (c * c - 4.0).sqrt());
        let d = derivative_fd(t, 3.0, 1e-5).unwrap();
        assert!((d - (-0.5 + 3.0 / (2.0 * 5f64.sqrt()))).abs() <= 1e-8);
        assert!((d - 0.170_82).abs() <= 1e-5);
    }

    #[test]
    fn errors() {
        assert!(derivative_fd(|x| x, 0.0, 0.0).is_err());
        assert!(matches!(
            derivative_fd(|x| 1.0 / x, 1e-6, 1e-6),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn complex_direction() {
        let d = derivative_fd_complex(|z| z * z, Complex::new(1.0, 2.0), 1e-5, Complex::new(0.0, 1.0))
            .unwrap();
        assert!((d - Complex::new(2.0, 4.0)).norm() <= 1e-8);
    }
}
