//! Grid verification of (S) and (C) pairs, pair classification,
//! generalized periodicity, trivial pairability and the symmetry probe.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{satisfies_cauchy, EquationKind, GridSpec};
use crate::function::{Fallible, Period, RealFunction};
use crate::numerics::check_positive;

/// Which addition law, and which member of the pair is the given function
/// when the partner is described by a period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairEquation {
    /// `f(x+y) = f(x) g(y) + f(y) g(x)`; with a period, `g = f(. + T)`.
    Sine,
    /// `g(x+y) = g(x) g(y) - f(x) f(y)`; with a period the given function is
    /// `g` and `f = g(. + T)`.
    Cosine,
    /// The cosine law with the given function `f` and `g = f(. + T)`.
    CosineDual,
}

impl PairEquation {
    pub fn kind(self) -> EquationKind {
        match self {
            PairEquation::Sine => EquationKind::SineAddition,
            PairEquation::Cosine | PairEquation::CosineDual => EquationKind::CosineAddition,
        }
    }
}

impl fmt::Display for PairEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairEquation::Sine => "S",
            PairEquation::Cosine => "C",
            PairEquation::CosineDual => "C-dual",
        })
    }
}

impl FromStr for PairEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(PairEquation::Sine),
            "C" | "c" => Ok(PairEquation::Cosine),
            "C-dual" | "c-dual" | "Cdual" | "cdual" => Ok(PairEquation::CosineDual),
            _ => Err(Error::Domain(format!(
                "unknown equation '{s}' (expected S, C or C-dual)"
            ))),
        }
    }
}

/// The second member of a pair: an explicit function or a period.
#[derive(Clone, Copy)]
pub enum Partner<'a> {
    Function(&'a dyn RealFunction),
    Period(Period<'a>),
}

impl fmt::Debug for Partner<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partner::Function(_) => f.write_str("Function(..)"),
            Partner::Period(p) => write!(f, "Period({p:?})"),
        }
    }
}

/// Absolute residual of the pair equation at `(x, y)`. A period that
/// depends on `(x, y)` is evaluated once per pair and used for both shifted
/// arguments.
pub fn pair_residual(
    f: &dyn RealFunction,
    partner: Partner<'_>,
    eq: PairEquation,
    x: f64,
    y: f64,
) -> Result<f64> {
    let r = match partner {
        Partner::Function(g) => match eq {
            PairEquation::Sine => f.eval(x + y)? - f.eval(x)? * g.eval(y)? - f.eval(y)? * g.eval(x)?,
            PairEquation::Cosine | PairEquation::CosineDual => {
                g.eval(x + y)? - g.eval(x)? * g.eval(y)? + f.eval(x)? * f.eval(y)?
            }
        },
        Partner::Period(p) => {
            let t = p.at(x, y)?;
            match eq {
                PairEquation::Sine => {
                    f.eval(x + y)? - f.eval(x)? * f.eval(y + t)? - f.eval(y)? * f.eval(x + t)?
                }
                PairEquation::Cosine => {
                    f.eval(x + y)? - f.eval(x)? * f.eval(y)? + f.eval(x + t)? * f.eval(y + t)?
                }
                PairEquation::CosineDual => {
                    f.eval(x + y + t)? - f.eval(x + t)? * f.eval(y + t)? + f.eval(x)? * f.eval(y)?
                }
            }
        }
    };
    if r.is_nan() {
        return Err(Error::NonFinite { at: x });
    }
    Ok(r.abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    NotCauchyPair,
    CauchyPair(EquationKind),
    TrueCauchyPair(EquationKind),
    Unclassified,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::NotCauchyPair => f.write_str("not a Cauchy pair"),
            Classification::CauchyPair(k) => write!(f, "Cauchy pair ({k})"),
            Classification::TrueCauchyPair(k) => write!(f, "true Cauchy pair ({k})"),
            Classification::Unclassified => f.write_str("unclassified"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub equation: PairEquation,
    pub grid: GridSpec,
    pub tol: f64,
    pub max_residual: f64,
    pub worst_point: (f64, f64),
    /// Pairs at which the residual was evaluated.
    pub evaluated: usize,
    /// Pairs excluded by the grid or lying on a singular locus of the period.
    pub skipped: usize,
    pub pass: bool,
    pub classification: Classification,
    pub notes: Vec<String>,
}

/// Evaluates the pair equation on every grid pair. Points where the period
/// is undefined are skipped and counted; ties for the worst point keep the
/// lexicographically first pair.
pub fn verify_pair(
    f: &dyn RealFunction,
    partner: Partner<'_>,
    eq: PairEquation,
    grid: &GridSpec,
    tol: f64,
) -> Result<VerificationReport> {
    check_positive(tol)?;
    let (pairs, mut skipped) = grid.pairs();
    let mut evaluated = 0;
    let mut max_residual = 0.0f64;
    let mut worst_point = None;
    for (x, y) in pairs {
        let r = match pair_residual(f, partner, eq, x, y) {
            Ok(r) => r,
            Err(Error::SingularLocus { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        evaluated += 1;
        if worst_point.is_none() || r > max_residual {
            max_residual = r;
            worst_point = Some((x, y));
        }
    }
    let Some(worst_point) = worst_point else {
        return Err(Error::InvalidGrid(format!("no admissible pair on {grid}")));
    };
    Ok(VerificationReport {
        equation: eq,
        grid: grid.clone(),
        tol,
        max_residual,
        worst_point,
        evaluated,
        skipped,
        pass: max_residual <= tol,
        classification: Classification::Unclassified,
        notes: Vec::new(),
    })
}

fn max_shift_mismatch(f: &dyn RealFunction, g: &dyn RealFunction, shift: f64, points: &[f64]) -> Result<f64> {
    let mut worst = 0.0f64;
    for &x in points {
        let d = (g.eval(x + shift)? - f.eval(x)?).abs();
        if d.is_nan() {
            return Err(Error::NonFinite { at: x });
        }
        worst = worst.max(d);
    }
    Ok(worst)
}

fn passes(f: &dyn RealFunction, eq: EquationKind, grid: &GridSpec, tol: f64) -> bool {
    satisfies_cauchy(f, eq, grid, tol).map(|r| r.pass).unwrap_or(false)
}

/// Labels a verified pair by the Cauchy equation its given function
/// satisfies, and whether the partner satisfies the same one. The result is
/// also stored in `report`, together with notes on trivial pairability.
pub fn classify_pair(
    f: &dyn RealFunction,
    partner: Partner<'_>,
    report: &mut VerificationReport,
) -> Classification {
    let class = classify(f, partner, report);
    report.classification = class;
    class
}

fn classify(f: &dyn RealFunction, partner: Partner<'_>, report: &mut VerificationReport) -> Classification {
    if !report.pass {
        return Classification::Unclassified;
    }
    let tol = report.tol;
    let grid = GridSpec {
        exclusions: Vec::new(),
        ..report.grid.clone()
    };
    let points = grid.points();

    let trivial = match partner {
        Partner::Period(p) => p.constant() == Some(0.0),
        Partner::Function(g) => max_shift_mismatch(f, g, 0.0, &points).is_ok_and(|d| d <= tol),
    };
    if trivial {
        if let Ok(c) = trivial_pairability_consequence(f, report.equation, &grid, tol) {
            if c.pass {
                report.notes.push(c.statement.to_owned());
            }
        }
    }

    let Some(kind) = EquationKind::CAUCHY.into_iter().find(|&k| passes(f, k, &grid, tol)) else {
        return Classification::NotCauchyPair;
    };
    let partner_passes = match partner {
        Partner::Function(g) => passes(g, kind, &grid, tol),
        Partner::Period(Period::Constant(t)) => {
            let g = Fallible(|u: f64| f.eval(u + t));
            passes(&g, kind, &grid, tol)
        }
        Partner::Period(Period::Variable(_)) => {
            report
                .notes
                .push("period depends on (x, y); the partner is not a single function".into());
            false
        }
    };
    if partner_passes {
        Classification::TrueCauchyPair(kind)
    } else {
        Classification::CauchyPair(kind)
    }
}

/// `f(x + T) = c f(x)` with the constant obtained by setting `y = 0` in the
/// pair equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedPeriodicity {
    pub c: f64,
    pub max_residual: f64,
    pub usual_periodic: bool,
}

/// For an (S)-pair `(f, f(. + T))`: `c = (1 - f(T)) / f(0)`.
/// For a (C)-pair `(g, g(. + T))` with `g` in the cosine role:
/// `c = (g(0) - 1) / g(T)`.
pub fn generalized_periodicity_check(
    f: &dyn RealFunction,
    t: f64,
    eq: PairEquation,
    points: &[f64],
    tol: f64,
) -> Result<GeneralizedPeriodicity> {
    check_positive(tol)?;
    let c = match eq {
        PairEquation::Sine => {
            let f0 = f.eval(0.0)?;
            if f0 == 0.0 {
                return Err(Error::ZeroDenominator { at: 0.0 });
            }
            (1.0 - f.eval(t)?) / f0
        }
        PairEquation::Cosine => {
            let gt = f.eval(t)?;
            if gt == 0.0 {
                return Err(Error::ZeroDenominator { at: t });
            }
            (f.eval(0.0)? - 1.0) / gt
        }
        PairEquation::CosineDual => {
            return Err(Error::Unsupported(
                "generalized periodicity is defined for S and C pairs".into(),
            ))
        }
    };
    let mut max_residual = 0.0f64;
    for &x in points {
        let r = (f.eval(x + t)? - c * f.eval(x)?).abs();
        if r.is_nan() {
            return Err(Error::NonFinite { at: x });
        }
        max_residual = max_residual.max(r);
    }
    Ok(GeneralizedPeriodicity {
        c,
        max_residual,
        usual_periodic: (c - 1.0).abs() <= tol,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrivialConsequence {
    pub pass: bool,
    pub max_residual: f64,
    pub statement: &'static str,
}

/// What a zero period forces. (S): `2f` is exponential. (C): the function
/// vanishes on every sum `x + y`.
pub fn trivial_pairability_consequence(
    f: &dyn RealFunction,
    eq: PairEquation,
    grid: &GridSpec,
    tol: f64,
) -> Result<TrivialConsequence> {
    check_positive(tol)?;
    match eq {
        PairEquation::Sine => {
            let twice = Fallible(|x: f64| Ok(2.0 * f.eval(x)?));
            let r = satisfies_cauchy(&twice, EquationKind::ExponentialEq, grid, tol)?;
            Ok(TrivialConsequence {
                pass: r.pass,
                max_residual: r.max_residual,
                statement: "2f is exponential",
            })
        }
        PairEquation::Cosine | PairEquation::CosineDual => {
            let (pairs, _) = grid.pairs();
            let mut max_residual = 0.0f64;
            for (x, y) in pairs {
                max_residual = max_residual.max(f.eval(x + y)?.abs());
            }
            Ok(TrivialConsequence {
                pass: max_residual <= tol,
                max_residual,
                statement: "g vanishes identically",
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryProbe {
    pub symmetric: bool,
    /// The reversed period that worked, if any.
    pub t_bar: Option<f64>,
    /// Smallest (S) residual of `(g, g(. + T̄))` among candidates with
    /// `g(. + T̄) = f` on the grid.
    pub best_residual: f64,
    pub note: Option<String>,
}

/// Number of scanned reversed periods besides `-T`: `-5, -4.95, ..., 5`.
const SCAN: usize = 201;

/// Looks for a constant `T̄` making `g` pairable with `f`, i.e.
/// `g(. + T̄) = f` and `(g, f)` an (S)-pair on the grid. Candidates are `-T`
/// and an even scan of `[-5, 5]`.
pub fn symmetry_probe(
    f: &dyn RealFunction,
    g: &dyn RealFunction,
    period: Period<'_>,
    grid: &GridSpec,
    tol: f64,
) -> Result<SymmetryProbe> {
    check_positive(tol)?;
    let Some(t) = period.constant() else {
        return Ok(SymmetryProbe {
            symmetric: false,
            t_bar: None,
            best_residual: f64::INFINITY,
            note: Some("NonConstantPeriod: only constant reversed periods are scanned".into()),
        });
    };
    let forward = verify_pair(f, Partner::Period(period), PairEquation::Sine, grid, tol)?;
    if !forward.pass {
        return Ok(SymmetryProbe {
            symmetric: false,
            t_bar: None,
            best_residual: f64::INFINITY,
            note: Some(format!("(f, f(. + {t})) is not an (S)-pair on the grid")),
        });
    }
    let points = grid.points();
    let candidates =
        std::iter::once(-t).chain((0..SCAN).map(|k| -5.0 + 10.0 * k as f64 / (SCAN - 1) as f64));
    let mut best = f64::INFINITY;
    for t_bar in candidates {
        let shifted = max_shift_mismatch(f, g, t_bar, &points).unwrap_or(f64::INFINITY);
        if !(shifted <= tol) {
            continue;
        }
        let Ok(rev) = verify_pair(g, Partner::Function(f), PairEquation::Sine, grid, tol) else {
            continue;
        };
        best = best.min(rev.max_residual);
        if rev.pass {
            return Ok(SymmetryProbe {
                symmetric: true,
                t_bar: Some(t_bar),
                best_residual: rev.max_residual,
                note: None,
            });
        }
    }
    Ok(SymmetryProbe {
        symmetric: false,
        t_bar: None,
        best_residual: best,
        note: None,
    })
}
