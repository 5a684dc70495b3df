//! Brent's method with a guaranteed bisection fallback.

use super::tolerance::check_positive;
use crate::error::{Error, Result};

const MAX_ITER: usize = 500;

/// Finds `x` in `[lo, hi]` with `|f(x)| <= tol` or a bracket narrower than
/// `tol`. Requires `f(lo) * f(hi) <= 0`.
pub fn find_root<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    check_positive(tol)?;
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    for (x, v) in [(a, fa), (b, fb)] {
        if !v.is_finite() {
            return Err(Error::NonFinite { at: x });
        }
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { lo, hi });
    }

    // b is the best estimate, c the previous one, [b, c] brackets the root.
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let half_width = 0.5 * (c - b);
        if fb.abs() <= tol || half_width.abs() <= 0.5 * tol {
            return Ok(b);
        }

        if e.abs() >= tol && fa.abs() > fb.abs() {
            // inverse quadratic interpolation, or secant when a == c
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * half_width * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * half_width * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            let min1 = 3.0 * half_width * q - (tol * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = half_width;
                e = d;
            }
        } else {
            d = half_width;
            e = d;
        }

        a = b;
        fa = fb;
        b += if d.abs() > 0.5 * tol {
            d
        } else {
            0.5 * tol * half_width.signum()
        };
        fb = f(b);
        if !fb.is_finite() {
            return Err(Error::NonFinite { at: b });
        }
    }
    // Unreachable for finite brackets: each bisection step halves [b, c].
    Ok(b)
}
