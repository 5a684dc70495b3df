//! Regular solutions of the four Cauchy equations and grid checks of a
//! function against one of them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::function::RealFunction;

/// Default margin around an excluded singular locus.
pub const EXCLUSION_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    AllReals,
    PositiveReals,
    NonZeroReals,
}

impl Domain {
    pub fn contains(self, x: f64) -> bool {
        match self {
            Domain::AllReals => x.is_finite(),
            Domain::PositiveReals => x.is_finite() && x > 0.0,
            Domain::NonZeroReals => x.is_finite() && x != 0.0,
        }
    }
}

/// A regular (continuous) solution of one of the Cauchy equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CauchyFamily {
    /// `c x`
    Additive(f64),
    /// `a^x`, `a > 0`
    Exponential(f64),
    /// `c log x`
    Logarithmic(f64),
    /// `x^p`
    Multiplicative(f64),
}

impl CauchyFamily {
    pub fn exponential(a: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!("exponential base must be positive, got {a}")));
        }
        Ok(CauchyFamily::Exponential(a))
    }

    pub fn domain(&self) -> Domain {
        match self {
            CauchyFamily::Additive(_) | CauchyFamily::Exponential(_) => Domain::AllReals,
            CauchyFamily::Logarithmic(_) | CauchyFamily::Multiplicative(_) => Domain::PositiveReals,
        }
    }

    /// The Cauchy equation this family solves.
    pub fn equation(&self) -> EquationKind {
        match self {
            CauchyFamily::Additive(_) => EquationKind::AdditiveEq,
            CauchyFamily::Exponential(_) => EquationKind::ExponentialEq,
            CauchyFamily::Logarithmic(_) => EquationKind::LogarithmicEq,
            CauchyFamily::Multiplicative(_) => EquationKind::MultiplicativeEq,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !self.domain().contains(x) {
            return Err(Error::Domain(format!("{x} is outside the domain of {self}")));
        }
        Ok(match *self {
            CauchyFamily::Additive(c) => c * x,
            CauchyFamily::Exponential(a) => a.powf(x),
            CauchyFamily::Logarithmic(c) => c * x.ln(),
            CauchyFamily::Multiplicative(p) => x.powf(p),
        })
    }
}

impl RealFunction for CauchyFamily {
    fn eval(&self, x: f64) -> Result<f64> {
        CauchyFamily::eval(self, x)
    }
}

impl fmt::Display for CauchyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CauchyFamily::Additive(c) => write!(f, "additive(c={c})"),
            CauchyFamily::Exponential(a) => write!(f, "exponential(a={a})"),
            CauchyFamily::Logarithmic(c) => write!(f, "logarithmic(c={c})"),
            CauchyFamily::Multiplicative(p) => write!(f, "multiplicative(p={p})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationKind {
    /// `f(x+y) = f(x) + f(y)`
    AdditiveEq,
    /// `f(x+y) = f(x) f(y)`
    ExponentialEq,
    /// `f(xy) = f(x) + f(y)`
    LogarithmicEq,
    /// `f(xy) = f(x) f(y)`
    MultiplicativeEq,
    /// `f(x+y) = f(x) g(y) + f(y) g(x)`
    SineAddition,
    /// `g(x+y) = g(x) g(y) - f(x) f(y)`
    CosineAddition,
}

impl EquationKind {
    pub const CAUCHY: [EquationKind; 4] = [
        EquationKind::AdditiveEq,
        EquationKind::ExponentialEq,
        EquationKind::LogarithmicEq,
        EquationKind::MultiplicativeEq,
    ];

    pub fn is_two_function(self) -> bool {
        matches!(self, EquationKind::SineAddition | EquationKind::CosineAddition)
    }

    /// Whether the arguments combine as `x y` rather than `x + y`.
    pub fn is_multiplicative_argument(self) -> bool {
        matches!(self, EquationKind::LogarithmicEq | EquationKind::MultiplicativeEq)
    }

    /// Residual of a one-function equation at `(x, y)`.
    pub fn cauchy_residual(self, f: &dyn RealFunction, x: f64, y: f64) -> Result<f64> {
        let (fx, fy) = (f.eval(x)?, f.eval(y)?);
        let r = match self {
            EquationKind::AdditiveEq => f.eval(x + y)? - fx - fy,
            EquationKind::ExponentialEq => f.eval(x + y)? - fx * fy,
            EquationKind::LogarithmicEq => f.eval(x * y)? - fx - fy,
            EquationKind::MultiplicativeEq => f.eval(x * y)? - fx * fy,
            EquationKind::SineAddition | EquationKind::CosineAddition => {
                return Err(Error::Unsupported(format!("{self} involves two functions")))
            }
        };
        Ok(r.abs())
    }
}

impl fmt::Display for EquationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquationKind::AdditiveEq => "additive",
            EquationKind::ExponentialEq => "exponential",
            EquationKind::LogarithmicEq => "logarithmic",
            EquationKind::MultiplicativeEq => "multiplicative",
            EquationKind::SineAddition => "S",
            EquationKind::CosineAddition => "C",
        })
    }
}

/// Pairs `(x, y)` with `|x + y - sum| < margin` are left out of a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exclusion {
    pub sum: f64,
    pub margin: f64,
}

impl Exclusion {
    pub fn sum_near(sum: f64) -> Self {
        Exclusion {
            sum,
            margin: EXCLUSION_MARGIN,
        }
    }

    pub fn excludes(&self, x: f64, y: f64) -> bool {
        (x + y - self.sum).abs() < self.margin
    }
}

/// `n` equally spaced points on `[lo, hi]`, used for all pairs `(x, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub exclusions: Vec<Exclusion>,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo > hi {
            return Err(Error::InvalidGrid(format!("bounds {lo}:{hi}")));
        }
        if n == 0 || (n == 1 && lo != hi) {
            return Err(Error::InvalidGrid(format!("{n} points on [{lo}, {hi}]")));
        }
        Ok(GridSpec {
            lo,
            hi,
            n,
            exclusions: Vec::new(),
        })
    }

    pub fn exclude(mut self, e: Exclusion) -> Self {
        self.exclusions.push(e);
        self
    }

    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n)
            .map(|k| if k + 1 == self.n { self.hi } else { self.lo + step * k as f64 })
            .collect()
    }

    pub fn is_excluded(&self, x: f64, y: f64) -> bool {
        self.exclusions.iter().any(|e| e.excludes(x, y))
    }

    /// Included pairs in lexicographic order, and the number excluded.
    pub fn pairs(&self) -> (Vec<(f64, f64)>, usize) {
        let pts = self.points();
        let mut out = Vec::with_capacity(pts.len() * pts.len());
        let mut skipped = 0;
        for &x in &pts {
            for &y in &pts {
                if self.is_excluded(x, y) {
                    skipped += 1;
                } else {
                    out.push((x, y));
                }
            }
        }
        (out, skipped)
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    /// Parses `lo:hi:n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGrid(format!("expected lo:hi:n, got '{s}'"));
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts.as_slice() else {
            return Err(bad());
        };
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        GridSpec::new(lo, hi, n)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.n)
    }
}

/// Maximum residual over a grid and where it occurred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyCheck {
    pub pass: bool,
    pub max_residual: f64,
    pub worst_point: (f64, f64),
}

/// Checks a one-function Cauchy equation on every grid pair. Ties for the
/// worst point keep the lexicographically first pair.
pub fn satisfies_cauchy(
    f: &dyn RealFunction,
    eq: EquationKind,
    grid: &GridSpec,
    tol: f64,
) -> Result<CauchyCheck> {
    crate::numerics::check_positive(tol)?;
    if eq.is_two_function() {
        return Err(Error::Unsupported(format!("{eq} involves two functions")));
    }
    let (pairs, _) = grid.pairs();
    let mut max_residual = 0.0f64;
    let mut worst_point = pairs.first().copied().unwrap_or((grid.lo, grid.lo));
    for (x, y) in pairs {
        let r = eq.cauchy_residual(f, x, y)?;
        if r.is_nan() {
            return Err(Error::NonFinite { at: x });
        }
        if r > max_residual {
            max_residual = r;
            worst_point = (x, y);
        }
    }
    Ok(CauchyCheck {
        pass: max_residual <= tol,
        max_residual,
        worst_point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn evaluation() {
        assert_eq!(CauchyFamily::Additive(3.0).eval(2.0).unwrap(), 6.0);
        assert_eq!(CauchyFamily::Exponential(2.0).eval(10.0).unwrap(), 1024.0);
        assert_eq!(CauchyFamily::Logarithmic(1.0).eval(E).unwrap(), 1.0);
        assert_eq!(CauchyFamily::Multiplicative(2.0).eval(3.0).unwrap(), 9.0);
        assert!(CauchyFamily::Logarithmic(1.0).eval(-1.0).is_err());
        assert!(CauchyFamily::Multiplicative(0.5).eval(0.0).is_err());
        assert!(CauchyFamily::exponential(-2.0).is_err());
    }

    #[test]
    fn each_family_solves_its_equation() {
        let real = GridSpec::new(-3.0, 3.0, 20).unwrap();
        let pos = GridSpec::new(0.1, 4.0, 20).unwrap();
        let cases = [
            (CauchyFamily::Additive(2.0), &real),
            (CauchyFamily::Exponential(2.0), &real),
            (CauchyFamily::Logarithmic(-1.5), &pos),
            (CauchyFamily::Multiplicative(2.0), &pos),
        ];
        for (fam, grid) in cases {
            let r = satisfies_cauchy(&fam, fam.equation(), grid, 1e-12).unwrap();
            assert!(r.pass, "{fam}: {}", r.max_residual);
        }
    }

    #[test]
    fn shifted_functions_fail() {
        let grid = GridSpec::new(-3.0, 3.0, 20).unwrap();
        let shifted = |x: f64| 2f64.powf(x + 1.0);
        assert!(!satisfies_cauchy(&shifted, EquationKind::ExponentialEq, &grid, 1e-9).unwrap().pass);
        for (c, t) in [(2.0, 0.1), (-1.0, 3.0), (0.5, -0.01)] {
            let f = move |x: f64| c * (x + t);
            let r = satisfies_cauchy(&f, EquationKind::AdditiveEq, &grid, 1e-9).unwrap();
            assert!(r.max_residual >= (c * t).abs() * (1.0 - 1e-9));
        }
    }

    #[test]
    fn out_of_domain_grid_is_an_error() {
        let grid = GridSpec::new(-1.0, 1.0, 5).unwrap();
        let f = CauchyFamily::Logarithmic(1.0);
        assert!(satisfies_cauchy(&f, EquationKind::LogarithmicEq, &grid, 1e-9).is_err());
    }

    #[test]
    fn grid_parsing_and_exclusion() {
        let g: GridSpec = "-3:3:25".parse().unwrap();
        assert_eq!(g.points().len(), 25);
        assert_eq!(g.points()[12], 0.0);
        assert_eq!(*g.points().last().unwrap(), 3.0);
        let (pairs, skipped) = g.clone().exclude(Exclusion::sum_near(0.0)).pairs();
        assert_eq!(skipped, 25);
        assert_eq!(pairs.len(), 600);
        assert!("1:0:5".parse::<GridSpec>().is_err());
        assert!("0:1".parse::<GridSpec>().is_err());
        assert!("0:1:0".parse::<GridSpec>().is_err());
        assert!("a:1:3".parse::<GridSpec>().is_err());
    }
}
