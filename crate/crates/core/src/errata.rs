//! Commonly printed closed forms that fail substitution, each
//! evaluated next to the value computed here at a counterexample.

use std::f64::consts::LN_2;

use crate::error::Result;
use crate::families::CauchyFamily;
use crate::function::Sign;
use crate::gamma::{cos_via_gamma, sin_via_gamma, tan_via_gamma};
use crate::numerics::Complex;
use crate::pairing::{
    extremum_probe, printed_extremum_derivative, printed_power_s_radicand, period_additive_s,
    period_additive_s_dual, power_s_radicand,
};
use crate::representers::{closed_form_representer, representer_period, RepresenterKind};

#[derive(Debug, Clone, PartialEq)]
pub struct Erratum {
    pub topic: &'static str,
    /// Where the two sides are compared.
    pub at: String,
    pub printed: String,
    pub computed: String,
    /// The printed value differs from the computed one beyond rounding.
    pub contradicted: bool,
}

const GAP: f64 = 1e-9;

fn entry(topic: &'static str, at: String, printed: f64, computed: f64) -> Erratum {
    Erratum {
        topic,
        at,
        printed: format!("{printed}"),
        computed: format!("{computed}"),
        contradicted: (printed - computed).abs() > GAP,
    }
}

fn complex(z: Complex) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

/// Every known discrepancy, in a fixed order.
pub fn errata_table() -> Result<Vec<Erratum>> {
    let mut out = Vec::new();

    // Gamma-form tangent: the printed quotient is cos/sin
    let z = 0.3;
    out.push(entry(
        "tan via Gamma (printed quotient is the cotangent)",
        format!("z={z}"),
        cos_via_gamma(z) / sin_via_gamma(z),
        tan_via_gamma(z)?,
    ));

    out.push(entry(
        "multiplicative (S) period, p=2: radicand",
        "x=1,y=1".into(),
        printed_power_s_radicand(1.0, 1.0),
        power_s_radicand(1.0, 1.0),
    ));

    let (x, y) = (1.0, 2.0);
    out.push(entry(
        "multiplicative (S) period, p=2: numerator -(x^2y+yx^2) vs -xy(x+y)",
        format!("x={x},y={y}"),
        -(x * x * y + y * x * x),
        -x * y * (x + y),
    ));

    // the periods of the pair and the dual pair agree here
    let (c, x, y) = (-1.0, 1.0, 3f64.sqrt() - 2.0);
    let printed = (x * x * y + y * x * x) * c * (c - 1.0) - c * (x * x + y * y + 4.0 * x * y) + x + y;
    let t = period_additive_s(c, x, y)?.real_values()[0];
    let t_dual = period_additive_s_dual(c, x, y)?.real_values()[0];
    out.push(entry(
        "period equality polynomial (should vanish where T = T_dual)",
        format!("c={c},x=1,y=sqrt(3)-2; |T-T_dual|={:e}", (t - t_dual).abs()),
        printed,
        c * c * x * y * (x + y) - 2.0 * c * x * y + x + y,
    ));

    let (c, x) = (2.0, 1.0f64);
    let per = representer_period(CauchyFamily::Additive(c), RepresenterKind::Cosine(Sign::Plus))?;
    let printed_t = 0.5 * (-x + x.abs() * (1.0 - 1.0 / c).sqrt());
    let oracle_t = per.at(x)?[1].t;
    out.push(Erratum {
        topic: "additive cosine representer period",
        at: format!("c={c},x={x}"),
        printed: format!("T={printed_t} (residual {:e})", per.residual(x, printed_t)?),
        computed: format!("T={oracle_t} (residual {:e})", per.residual(x, oracle_t)?),
        contradicted: per.residual(x, printed_t)? > GAP,
    });

    let (p, x) = (2.0, 3.0);
    let fam = CauchyFamily::Multiplicative(p);
    out.push(entry(
        "multiplicative cosine representer (printed as 0)",
        format!("p={p},x={x}"),
        0.0,
        closed_form_representer(fam, RepresenterKind::Cosine(Sign::Plus), x)?.re,
    ));

    let per = representer_period(fam, RepresenterKind::Cosine(Sign::Plus))?;
    let printed_t = -0.5 * x;
    let oracle_t = per.at(x)?[0].t;
    // x + 2T = 0 sits on the boundary of the domain, where 0^p is still defined
    let f_c = closed_form_representer(fam, RepresenterKind::Cosine(Sign::Plus), x)?.re;
    let printed_residual = (f_c - (x + 2.0 * printed_t).powf(p)).abs();
    out.push(Erratum {
        topic: "multiplicative cosine representer period (printed as -x/2)",
        at: format!("p={p},x={x}"),
        printed: format!("T={printed_t} (residual {printed_residual:e})"),
        computed: format!("T={oracle_t} (residual {:e})", per.residual(x, oracle_t)?),
        contradicted: printed_residual > GAP,
    });

    let c = Complex::new(0.0, 2.0 / 3f64.sqrt());
    let probe = extremum_probe(c)?;
    for b in probe.branches {
        let printed = printed_extremum_derivative(c, b.sign);
        out.push(Erratum {
            topic: "dT/dc at the claimed extremum T_E",
            at: format!("c=2i/sqrt(3),branch {},T={}", b.sign, complex(b.t)),
            printed: complex(printed),
            computed: complex(b.dt),
            contradicted: (printed - b.dt).norm() > GAP,
        });
    }

    // g = 2e^x with T = -ln(2)/2 is a (C)-pair (g, g(. + T)) and
    // g(x + T) = e^T g(x)
    let g = |x: f64| 2.0 * x.exp();
    let t = -0.5 * LN_2;
    out.push(entry(
        "generalized periodicity constant of a (C)-pair",
        format!("g=2e^x,T=-ln(2)/2; true c={}", t.exp()),
        (1.0 - g(0.0)) / g(t),
        (g(0.0) - 1.0) / g(t),
    ));

    Ok(out)
}

/// The printed tangent at `z`, for reference.
pub fn printed_tan(z: f64) -> f64 {
    cos_via_gamma(z) / sin_via_gamma(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn every_entry_is_contradicted() {
        let t = errata_table().unwrap();
        assert_eq!(t.len(), 10);
        for e in &t {
            assert!(e.contradicted, "{e:?}");
        }
        assert_eq!(t[1].printed, "10");
        assert_eq!(t[1].computed, "8");
    }

    #[test]
    fn printed_tan_is_cotangent() {
        assert!((printed_tan(0.3) - 1.0 / 0.3f64.tan()).abs() <= 1e-12);
        assert!(printed_tan(FRAC_PI_2).abs() <= 1e-15);
    }

    #[test]
    fn corrected_periodicity_constant() {
        let g = |x: f64| 2.0 * x.exp();
        let t = -0.5 * LN_2;
        // (C): g(x+y) = g(x)g(y) - g(x+T)g(y+T)
        for (x, y) in [(0.1, 0.4), (-1.0, 2.0)] {
            let r: f64 = g(x + y) - g(x) * g(y) + g(x + t) * g(y + t);
            assert!(r.abs() <= 1e-12);
        }
        let c = (g(0.0) - 1.0) / g(t);
        assert!((g(0.7 + t) - c * g(0.7)).abs() <= 1e-14);
    }
}
