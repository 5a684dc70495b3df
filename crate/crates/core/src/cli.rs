//! Command-line front end: argument parsing, table emission and exit codes.
//!
//! Exit code 0 means success, 1 a failed check or computation, 2 a usage or
//! parse error. Every failure prints one line starting with `error:` on
//! stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::errata::errata_table;
use crate::error::{Error, Result};
use crate::expr::{parse, Env, EvalErrorKind, ExprFunction, ExprPeriod};
use crate::families::{CauchyFamily, Exclusion, GridSpec};
use crate::function::{Period, PeriodFunction, RealFunction, Sign};
use crate::gamma::{
    closed_form, cos_via_gamma, euler_identity_residual, gamma_phi, product_identity_residuals,
    pythagoras_gamma_residual, sin_via_gamma, tan_via_gamma, Generator,
};
use crate::numerics::Complex;
use crate::pairing::{
    dual_exponential_s_exists, extremum_probe, printed_extremum_derivative, period_additive_c,
    period_additive_c_sum_constrained, period_additive_s, period_additive_s_dual,
    period_equality_residual, period_exponential_c, period_exponential_c_gf, period_exponential_s,
    period_power_s, scaleability_power, scaleability_residual, scaling_translation_bridge_check,
    PeriodResult,
};
use crate::representers::{closed_form_representer, representer, representer_period, RepresenterKind};
use crate::verify::{classify_pair, verify_pair, PairEquation, Partner};

#[derive(Debug, Parser)]
#[command(name = "pairability", version, about = "Generalized Gamma functions and sine/cosine addition-law pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate a generalized Gamma function against its closed form
    Gamma(GammaArgs),
    /// Sine, cosine and tangent through the reciprocal Gamma function
    Trig(PointArgs),
    /// Residuals of the Gamma-form trigonometric identities
    Identity(IdentityArgs),
    /// Period and scaleability functions of Cauchy pairs
    Period(PeriodArgs),
    /// Check an (S) or (C) pair on a grid
    Verify(VerifyArgs),
    /// Sine and cosine representers and their periods
    Representer(RepresenterArgs),
    /// Compare a translation pair with its logarithmic transport
    Bridge(BridgeArgs),
    /// Closed forms that fail substitution, with counterexamples
    Errata(FormatArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct FormatArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn parse_param(s: &str) -> std::result::Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got '{s}'"))?;
    let v: f64 = v.trim().parse().map_err(|_| format!("'{v}' is not a number"))?;
    let k = k.trim();
    if k.is_empty() || !k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(format!("invalid parameter name '{k}'"));
    }
    Ok((k.to_owned(), v))
}

fn parse_grid(s: &str) -> std::result::Result<GridSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_tol(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::InvalidTolerance(v).to_string());
    }
    Ok(v)
}

#[derive(Debug, Args)]
struct Params {
    /// Named parameter, e.g. `c=2` (repeatable)
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, f64)>,
}

impl Params {
    fn env(&self) -> Env {
        let mut env = Env::new();
        for (k, v) in &self.params {
            env.set(k, *v);
        }
        env
    }

    fn get(&self, name: &str) -> Option<f64> {
        self.params.iter().rev().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    fn require(&self, name: &str) -> Result<f64> {
        self.get(name)
            .ok_or_else(|| Error::Domain(format!("missing --param {name}=<value>")))
    }
}

#[derive(Debug, Args)]
struct PointArgs {
    /// Comma-separated evaluation points
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "grid")]
    points: Vec<f64>,
    /// Evenly spaced points `lo:hi:n`
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    grid: Option<GridSpec>,
    #[arg(long, value_parser = parse_tol, default_value = "1e-9")]
    tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

impl PointArgs {
    fn points(&self, default: &str) -> Vec<f64> {
        match (&self.grid, self.points.is_empty()) {
            (Some(g), _) => g.points(),
            (None, false) => self.points.clone(),
            (None, true) => parse_grid(default).expect("default grid").points(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GeneratorName {
    Neglog,
    Exponential,
    Additive,
    Logarithmic,
    Multiplicative,
    Custom,
}

#[derive(Debug, Args)]
struct GammaArgs {
    #[arg(long, value_enum)]
    generator: GeneratorName,
    /// Generator expression in `t` for `--generator custom`
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<String>,
    #[command(flatten)]
    params: Params,
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    #[arg(long)]
    step: f64,
    /// Absolute error target of the quadrature
    #[arg(long, value_parser = parse_tol, default_value = "1e-10")]
    quad_tol: f64,
    /// Largest accepted |quadrature - closed form|
    #[arg(long, value_parser = parse_tol, default_value = "1e-6")]
    tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentityCheck {
    Euler,
    Pythagoras,
    Product,
}

#[derive(Debug, Args)]
struct IdentityArgs {
    #[arg(long, value_enum)]
    check: IdentityCheck,
    #[command(flatten)]
    points: PointArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PeriodKind {
    AdditiveS,
    AdditiveSDual,
    AdditiveC,
    AdditiveCSum,
    Equality,
    Extremum,
    ExponentialS,
    ExponentialSDual,
    ExponentialC,
    ExponentialCGf,
    PowerS,
    Scaleability,
}

#[derive(Debug, Args)]
struct PeriodArgs {
    #[arg(long, value_enum)]
    kind: PeriodKind,
    /// Family and point parameters: c, a, p, d, x, y, c_im
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    Additive,
    Exponential,
    Logarithmic,
    Multiplicative,
}

fn family(name: FamilyName, params: &Params) -> Result<CauchyFamily> {
    Ok(match name {
        FamilyName::Additive => CauchyFamily::Additive(params.require("c")?),
        FamilyName::Exponential => CauchyFamily::exponential(params.require("a")?)?,
        FamilyName::Logarithmic => CauchyFamily::Logarithmic(params.require("c")?),
        FamilyName::Multiplicative => CauchyFamily::Multiplicative(params.require("p")?),
    })
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// The given function as an expression in `x`
    #[arg(long, allow_hyphen_values = true, required_unless_present = "family", conflicts_with = "family")]
    f: Option<String>,
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Partner function as an expression in `x`
    #[arg(long, allow_hyphen_values = true, required_unless_present = "period", conflicts_with = "period")]
    g: Option<String>,
    /// Period as an expression in `x` and `y`
    #[arg(long, allow_hyphen_values = true)]
    period: Option<String>,
    #[arg(long, default_value = "S")]
    equation: PairEquation,
    #[arg(long, value_parser = parse_grid, default_value = "-3:3:25", allow_hyphen_values = true)]
    grid: GridSpec,
    /// Skip pairs with |x + y - s| below the exclusion margin (repeatable)
    #[arg(long, allow_negative_numbers = true)]
    exclude_sum: Vec<f64>,
    #[arg(long, value_parser = parse_tol, default_value = "1e-9")]
    tol: f64,
    /// Also label the pair by the Cauchy equations it satisfies
    #[arg(long)]
    classify: bool,
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindName {
    Sine,
    CosinePlus,
    CosineMinus,
}

impl From<KindName> for RepresenterKind {
    fn from(k: KindName) -> Self {
        match k {
            KindName::Sine => RepresenterKind::Sine,
            KindName::CosinePlus => RepresenterKind::Cosine(Sign::Plus),
            KindName::CosineMinus => RepresenterKind::Cosine(Sign::Minus),
        }
    }
}

#[derive(Debug, Args)]
struct RepresenterArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "family", conflicts_with = "family")]
    f: Option<String>,
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long, value_enum, default_value = "sine")]
    kind: KindName,
    /// Tabulate the representer period of the family instead
    #[arg(long, requires = "family")]
    period: bool,
    #[command(flatten)]
    params: Params,
    #[command(flatten)]
    points: PointArgs,
}

#[derive(Debug, Args)]
struct BridgeArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "family", conflicts_with = "family")]
    f: Option<String>,
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Period as an expression in `x` and `y` (translation side)
    #[arg(long, allow_hyphen_values = true)]
    period: String,
    #[arg(long, default_value = "S")]
    equation: PairEquation,
    /// Grid in the scaled variable `u > 0`
    #[arg(long, value_parser = parse_grid, default_value = "0.25:4:10", allow_hyphen_values = true)]
    grid: GridSpec,
    #[arg(long, value_parser = parse_tol, default_value = "1e-9")]
    tol: f64,
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// A user period; division by zero marks the singular locus.
struct CliPeriod(ExprPeriod);

impl PeriodFunction for CliPeriod {
    fn period(&self, x: f64, y: f64) -> Result<f64> {
        match self.0.period(x, y) {
            Err(Error::Eval(e)) if e.kind == EvalErrorKind::DivisionByZero => Err(Error::SingularLocus { x, y }),
            r => r,
        }
    }
}

fn function_of_x(src: &str, params: &Params) -> Result<ExprFunction> {
    Ok(ExprFunction::new(parse(src)?, "x", params.env())?)
}

fn given_function(f: &Option<String>, fam: Option<FamilyName>, params: &Params) -> Result<Box<dyn RealFunction>> {
    match (f, fam) {
        (Some(src), _) => Ok(Box::new(function_of_x(src, params)?)),
        (None, Some(name)) => Ok(Box::new(family(name, params)?)),
        (None, None) => Err(Error::Domain("either --f or --family is required".into())),
    }
}

fn period_expr(src: &str, params: &Params) -> Result<CliPeriod> {
    Ok(CliPeriod(ExprPeriod::new(parse(src)?, params.env())?))
}

fn as_period(p: &CliPeriod) -> Period<'_> {
    match p.0.constant_value() {
        Some(t) => Period::Constant(t),
        None => Period::Variable(p),
    }
}

/// Fixed-width scientific notation; non-finite values as `inf`, `-inf`,
/// `nan`.
pub fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Outcome of a command before it is turned into an exit code.
enum Outcome {
    Pass,
    Fail(String),
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        let io = |e: std::io::Error| Error::Unsupported(format!("write failed: {e}"));
        match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(out);
                let csv_err = |e: csv::Error| Error::Unsupported(format!("write failed: {e}"));
                w.write_record(&self.header).map_err(csv_err)?;
                for r in &self.rows {
                    w.write_record(r).map_err(csv_err)?;
                }
                w.flush().map_err(io)?;
            }
            Format::Text => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .map(|r| r[i].len())
                            .chain([self.header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                for r in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    writeln!(out, "{}", cells.join("  ").trim_end()).map_err(io)?;
                }
            }
        }
        Ok(())
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Unsupported(format!("write failed: {e}"))
}

fn exceeded(what: &str, worst: f64, tol: f64) -> Outcome {
    if worst <= tol {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("{what} {worst:e} exceeds tolerance {tol:e}"))
    }
}

fn run_gamma(a: &GammaArgs, out: &mut dyn Write) -> Result<Outcome> {
    let p = &a.params;
    let gen = match a.generator {
        GeneratorName::Neglog => Generator::NegLog,
        GeneratorName::Exponential => Generator::exponential(p.require("a")?)?,
        GeneratorName::Additive => Generator::additive(p.require("c")?)?,
        GeneratorName::Logarithmic => Generator::logarithmic(p.require("c")?)?,
        GeneratorName::Multiplicative => Generator::multiplicative(p.require("p")?)?,
        GeneratorName::Custom => {
            let src = a
                .phi
                .as_deref()
                .ok_or_else(|| Error::Domain("--generator custom needs --phi <expr in t>".into()))?;
            Generator::custom(ExprFunction::new(parse(src)?, "t", p.env())?)?
        }
    };
    if !(a.step > 0.0 && a.step.is_finite()) || !(a.to >= a.from) {
        return Err(Error::InvalidGrid(format!(
            "need from <= to and step > 0, got {}..{} step {}",
            a.from, a.to, a.step
        )));
    }
    let n = ((a.to - a.from) / a.step + 1e-9).floor() as usize + 1;
    let mut table = Table::new(&["x", "quadrature", "closed_form", "abs_diff"]);
    let mut worst = 0.0f64;
    for k in 0..n {
        let x = a.from + k as f64 * a.step;
        let q = gamma_phi(&gen, x, a.quad_tol)?;
        match closed_form(&gen, x) {
            Ok(c) => {
                let d = (q - c).abs();
                worst = worst.max(d);
                table.push(vec![num(x), num(q), num(c), num(d)]);
            }
            Err(Error::Unsupported(_)) => table.push(vec![num(x), num(q), String::new(), String::new()]),
            Err(e) => return Err(e),
        }
    }
    table.write(a.format, out)?;
    Ok(exceeded("largest |quadrature - closed form|", worst, a.tol))
}

fn run_trig(a: &PointArgs, out: &mut dyn Write) -> Result<Outcome> {
    let mut table = Table::new(&["z", "sin", "cos", "tan", "abs_diff"]);
    let mut worst = 0.0f64;
    for z in a.points("0.05:3.1:50") {
        let (s, c) = (sin_via_gamma(z), cos_via_gamma(z));
        let mut d = (s - z.sin()).abs().max((c - z.cos()).abs());
        let t = match tan_via_gamma(z) {
            Ok(t) => {
                d = d.max((t - z.tan()).abs());
                num(t)
            }
            Err(Error::DivisionByZero { .. }) => "nan".into(),
            Err(e) => return Err(e),
        };
        worst = worst.max(d);
        table.push(vec![num(z), num(s), num(c), t, num(d)]);
    }
    table.write(a.format, out)?;
    Ok(exceeded("largest deviation from library trigonometry", worst, a.tol))
}

fn run_identity(a: &IdentityArgs, out: &mut dyn Write) -> Result<Outcome> {
    let pts = a.points.points("0.05:3.1:50");
    let mut worst = 0.0f64;
    let mut table = match a.check {
        IdentityCheck::Product => Table::new(&["z", "residual_one", "residual_zero"]),
        _ => Table::new(&["z", "residual"]),
    };
    for z in pts {
        let row = match a.check {
            IdentityCheck::Euler => vec![euler_identity_residual(z)],
            IdentityCheck::Pythagoras => vec![pythagoras_gamma_residual(z)],
            IdentityCheck::Product => {
                let (r1, r0) = product_identity_residuals(z);
                vec![r1, r0]
            }
        };
        worst = row.iter().copied().fold(worst, f64::max);
        table.push(std::iter::once(num(z)).chain(row.into_iter().map(num)).collect());
    }
    table.write(a.points.format, out)?;
    Ok(exceeded("largest identity residual", worst, a.points.tol))
}

fn period_table(r: &PeriodResult) -> Table {
    let mut table = Table::new(&["branch", "re", "im", "finite", "residual"]);
    if r.any_period {
        table.push(vec!["any".into(), String::new(), String::new(), "true".into(), num(0.0)]);
    }
    for (i, e) in r.entries.iter().enumerate() {
        let branch = if r.entries.len() == 2 { ["-", "+"][i] } else { "" };
        let (re, im) = match e.value {
            Some(v) => (num(v.re), num(v.im)),
            None => ("-inf".into(), num(0.0)),
        };
        table.push(vec![branch.into(), re, im, e.finite().to_string(), num(e.residual)]);
    }
    table
}

fn run_period(a: &PeriodArgs, out: &mut dyn Write) -> Result<Outcome> {
    let p = &a.params;
    let xy = || -> Result<(f64, f64)> { Ok((p.require("x")?, p.require("y")?)) };
    let table = match a.kind {
        PeriodKind::AdditiveS => {
            let (x, y) = xy()?;
            period_table(&period_additive_s(p.require("c")?, x, y)?)
        }
        PeriodKind::AdditiveSDual => {
            let (x, y) = xy()?;
            period_table(&period_additive_s_dual(p.require("c")?, x, y)?)
        }
        PeriodKind::AdditiveC => {
            let (x, y) = xy()?;
            period_table(&period_additive_c(p.require("c")?, x, y)?)
        }
        PeriodKind::AdditiveCSum => period_table(&period_additive_c_sum_constrained(p.require("c")?, p.require("d")?)?),
        PeriodKind::ExponentialS => period_table(&period_exponential_s(p.require("a")?)?),
        PeriodKind::ExponentialC => period_table(&period_exponential_c(p.require("a")?)?),
        PeriodKind::ExponentialCGf => period_table(&period_exponential_c_gf(p.require("a")?)?),
        PeriodKind::PowerS => {
            let (x, y) = xy()?;
            period_table(&period_power_s(p.require("p")?, x, y)?)
        }
        PeriodKind::Equality => {
            let (x, y) = xy()?;
            let mut t = Table::new(&["abs_difference"]);
            t.push(vec![num(period_equality_residual(p.require("c")?, x, y)?)]);
            t
        }
        PeriodKind::ExponentialSDual => {
            let cert = dual_exponential_s_exists(p.require("a")?)?;
            let mut t = Table::new(&["exists", "min_log_power"]);
            t.push(vec![cert.exists.to_string(), num(cert.min_log_power)]);
            t
        }
        PeriodKind::Scaleability => {
            let (x, y) = xy()?;
            let pp = p.require("p")?;
            let t = scaleability_power(pp, x, y)?;
            let mut tab = Table::new(&["t", "residual"]);
            tab.push(vec![num(t), num(scaleability_residual(pp, x, y, t))]);
            tab
        }
        PeriodKind::Extremum => {
            let c = Complex::new(p.require("c")?, p.get("c_im").unwrap_or(0.0));
            let probe = extremum_probe(c)?;
            let mut tab = Table::new(&[
                "branch", "t_re", "t_im", "dt_re", "dt_im", "dt_fd_re", "dt_fd_im", "printed_dt_re", "printed_dt_im",
            ]);
            for b in probe.branches {
                let printed = printed_extremum_derivative(c, b.sign);
                tab.push(vec![
                    b.sign.to_string(),
                    num(b.t.re),
                    num(b.t.im),
                    num(b.dt.re),
                    num(b.dt.im),
                    num(b.dt_fd.re),
                    num(b.dt_fd.im),
                    num(printed.re),
                    num(printed.im),
                ]);
            }
            tab
        }
    };
    table.write(a.format, out)?;
    Ok(Outcome::Pass)
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let f = given_function(&a.f, a.family, &a.params)?;
    let mut grid = a.grid.clone();
    for &s in &a.exclude_sum {
        grid = grid.exclude(Exclusion::sum_near(s));
    }
    let g_fn;
    let period;
    let partner = match (&a.g, &a.period) {
        (Some(src), _) => {
            g_fn = function_of_x(src, &a.params)?;
            Partner::Function(&g_fn)
        }
        (None, Some(src)) => {
            period = period_expr(src, &a.params)?;
            Partner::Period(as_period(&period))
        }
        (None, None) => return Err(Error::Domain("either --g or --period is required".into())),
    };
    let mut report = verify_pair(f.as_ref(), partner, a.equation, &grid, a.tol)?;
    if a.classify {
        classify_pair(f.as_ref(), partner, &mut report);
    }
    let classification = if a.classify { report.classification.to_string() } else { String::new() };
    match a.format {
        Format::Csv => {
            let mut t = Table::new(&[
                "equation", "max_residual", "worst_x", "worst_y", "evaluated", "skipped", "pass", "classification",
            ]);
            t.push(vec![
                report.equation.to_string(),
                num(report.max_residual),
                num(report.worst_point.0),
                num(report.worst_point.1),
                report.evaluated.to_string(),
                report.skipped.to_string(),
                report.pass.to_string(),
                classification,
            ]);
            t.write(Format::Csv, out)?;
        }
        Format::Text => {
            writeln!(out, "equation: {}", report.equation).map_err(io_err)?;
            writeln!(out, "grid: {}", report.grid).map_err(io_err)?;
            writeln!(out, "max_residual: {:e}", report.max_residual).map_err(io_err)?;
            writeln!(out, "worst_point: ({}, {})", report.worst_point.0, report.worst_point.1).map_err(io_err)?;
            writeln!(out, "evaluated: {}", report.evaluated).map_err(io_err)?;
            writeln!(out, "skipped: {}", report.skipped).map_err(io_err)?;
            if a.classify {
                writeln!(out, "classification: {classification}").map_err(io_err)?;
            }
            for n in &report.notes {
                writeln!(out, "note: {n}").map_err(io_err)?;
            }
            writeln!(out, "result: {}", if report.pass { "pass" } else { "fail" }).map_err(io_err)?;
        }
    }
    Ok(exceeded("max residual", report.max_residual, a.tol))
}

fn run_representer(a: &RepresenterArgs, out: &mut dyn Write) -> Result<Outcome> {
    let kind = RepresenterKind::from(a.kind);
    let pts = a.points.points("0.5:3:11");
    let tol = a.points.tol;
    if a.period {
        let fam = family(a.family.expect("clap enforces --family"), &a.params)?;
        let per = representer_period(fam, kind)?;
        let mut table = Table::new(&["x", "branch", "t", "residual"]);
        let mut worst = 0.0f64;
        for x in pts {
            for b in per.at(x)? {
                let r = per.residual(x, b.t)?;
                worst = worst.max(r);
                let branch = b.sign.map(|s| s.to_string()).unwrap_or_default();
                table.push(vec![num(x), branch, num(b.t), num(r)]);
            }
        }
        table.write(a.points.format, out)?;
        return Ok(exceeded("largest periodicity residual", worst, tol));
    }
    let f = given_function(&a.f, a.family, &a.params)?;
    let fam = match (&a.f, a.family) {
        (None, Some(name)) => Some(family(name, &a.params)?),
        _ => None,
    };
    let mut header = vec!["x", "re", "im"];
    if fam.is_some() {
        header.extend(["closed_re", "closed_im", "abs_diff"]);
    }
    let mut table = Table::new(&header);
    let mut worst = 0.0f64;
    for x in pts {
        let v = representer(f.as_ref(), kind, x)?;
        let mut row = vec![num(x), num(v.re), num(v.im)];
        if let Some(fam) = fam {
            let c = closed_form_representer(fam, kind, x)?;
            let d = (c - v).norm();
            worst = worst.max(d);
            row.extend([num(c.re), num(c.im), num(d)]);
        }
        table.push(row);
    }
    table.write(a.points.format, out)?;
    Ok(exceeded("largest |closed form - generic|", worst, tol))
}

fn run_bridge(a: &BridgeArgs, out: &mut dyn Write) -> Result<Outcome> {
    let f = given_function(&a.f, a.family, &a.params)?;
    let period = period_expr(&a.period, &a.params)?;
    let r = scaling_translation_bridge_check(f.as_ref(), as_period(&period), a.equation, &a.grid, a.tol)?;
    let mut t = Table::new(&[
        "translation_pass", "translation_residual", "scaling_pass", "scaling_residual", "skipped", "pass",
    ]);
    t.push(vec![
        r.translation_pass.to_string(),
        num(r.translation_residual),
        r.scaling_pass.to_string(),
        num(r.scaling_residual),
        r.skipped.to_string(),
        r.pass.to_string(),
    ]);
    t.write(a.format, out)?;
    if r.pass {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail(format!(
            "translation side {} but scaling side {}",
            if r.translation_pass { "passes" } else { "fails" },
            if r.scaling_pass { "passes" } else { "fails" }
        )))
    }
}

fn run_errata(a: &FormatArgs, out: &mut dyn Write) -> Result<Outcome> {
    let mut t = Table::new(&["topic", "at", "printed", "computed", "contradicted"]);
    for e in errata_table()? {
        t.push(vec![e.topic.into(), e.at, e.printed, e.computed, e.contradicted.to_string()]);
    }
    t.write(a.format, out)?;
    Ok(Outcome::Pass)
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax(_) | Error::InvalidGrid(_) | Error::InvalidTolerance(_)
    ) || matches!(e, Error::Eval(ev) if matches!(ev.kind, EvalErrorKind::UnboundVariable(_)))
        || matches!(e, Error::Domain(m) if m.starts_with("missing --param") || m.contains("is required"))
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(err, "error: {}", one_line(first));
            return 2;
        }
    };
    let result = match &cli.command {
        Command::Gamma(a) => run_gamma(a, out),
        Command::Trig(a) => run_trig(a, out),
        Command::Identity(a) => run_identity(a, out),
        Command::Period(a) => run_period(a, out),
        Command::Verify(a) => run_verify(a, out),
        Command::Representer(a) => run_representer(a, out),
        Command::Bridge(a) => run_bridge(a, out),
        Command::Errata(a) => run_errata(a, out),
    };
    match result {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail(reason)) => {
            let _ = writeln!(err, "error: {}", one_line(&reason));
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", one_line(&e.to_string()));
            if is_usage(&e) {
                2
            } else {
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("pairability").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn number_format() {
        assert_eq!(num(0.5), "5.0000000000000000e-1");
        assert_eq!(num(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn params() {
        assert_eq!(parse_param("c=2"), Ok(("c".into(), 2.0)));
        assert!(parse_param("c").is_err());
        assert!(parse_param("=2").is_err());
        assert!(parse_param("c=x").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = call(&["verify", "--f", "2^x", "--period", "-1", "--grid", "1:2"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:") && err.lines().count() == 1, "{err}");
        let (code, _, err) = call(&["verify", "--f", "2^(x", "--period", "-1"]);
        assert_eq!(code, 2, "{err}");
        let (code, _, _) = call(&["nonsense"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["verify", "--f", "2^x", "--period", "-1", "--tol", "-1"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_pass_and_fail() {
        let (code, out, _) = call(&["verify", "--f", "2^x", "--period", "-1", "--equation", "S", "--grid", "-3:3:25"]);
        assert_eq!(code, 0);
        assert!(out.contains("result: pass"));
        let (code, _, err) = call(&["verify", "--f", "2^x", "--period", "-0.99"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn period_no_finite() {
        let (code, out, _) = call(&["period", "--kind", "exponential-c-gf", "--param", "a=2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "branch,re,im,finite,residual\n,-inf,0.0000000000000000e0,false,0.0000000000000000e0\n");
    }
}
