use std::collections::BTreeMap;
use std::fmt;

use super::ast::{BinOp, Expr, Func};
use crate::error::Result;
use crate::function::{PeriodFunction, RealFunction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalErrorKind {
    LogOfNonPositive,
    SqrtOfNegative,
    DivisionByZero,
    NegativeBaseFractionalPower,
    UnboundVariable(String),
    NonFinite,
}

impl fmt::Display for EvalErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalErrorKind::LogOfNonPositive => f.write_str("logarithm of a non-positive number"),
            EvalErrorKind::SqrtOfNegative => f.write_str("square root of a negative number"),
            EvalErrorKind::DivisionByZero => f.write_str("division by zero"),
            EvalErrorKind::NegativeBaseFractionalPower => {
                f.write_str("fractional power of a negative base")
            }
            EvalErrorKind::UnboundVariable(v) => write!(f, "unbound variable '{v}'"),
            EvalErrorKind::NonFinite => f.write_str("non-finite result"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("evaluation error: {kind} in {subexpression}")]
pub struct EvalError {
    pub kind: EvalErrorKind,
    /// Canonical form of the failing subexpression.
    pub subexpression: String,
}

/// Variable bindings, e.g. from `--param c=2`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Env {
    vars: BTreeMap<String, f64>,
}

impl Env {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: f64) {
        self.vars.insert(name.to_owned(), value);
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.vars.get(name).copied()
    }
}

fn fail(kind: EvalErrorKind, e: &Expr) -> EvalError {
    EvalError {
        kind,
        subexpression: e.to_string(),
    }
}

impl Expr {
    /// Evaluates with variables resolved by `lookup`.
    pub fn eval_with(&self, lookup: &dyn Fn(&str) -> Option<f64>) -> std::result::Result<f64, EvalError> {
        let v = match self {
            Expr::Num(v) => *v,
            Expr::Const(c) => c.value(),
            Expr::Var(name) => {
                lookup(name).ok_or_else(|| fail(EvalErrorKind::UnboundVariable(name.clone()), self))?
            }
            Expr::Neg(a) => -a.eval_with(lookup)?,
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval_with(lookup)?, b.eval_with(lookup)?);
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(fail(EvalErrorKind::DivisionByZero, self));
                        }
                        a / b
                    }
                    BinOp::Pow => {
                        if a < 0.0 && b.fract() != 0.0 {
                            return Err(fail(EvalErrorKind::NegativeBaseFractionalPower, self));
                        }
                        if a == 0.0 && b < 0.0 {
                            return Err(fail(EvalErrorKind::DivisionByZero, self));
                        }
                        a.powf(b)
                    }
                }
            }
            Expr::Call(func, a) => {
                let a = a.eval_with(lookup)?;
                match func {
                    Func::Log => {
                        if a <= 0.0 {
                            return Err(fail(EvalErrorKind::LogOfNonPositive, self));
                        }
                        a.ln()
                    }
                    Func::Exp => a.exp(),
                    Func::Sqrt => {
                        if a < 0.0 {
                            return Err(fail(EvalErrorKind::SqrtOfNegative, self));
                        }
                        a.sqrt()
                    }
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Abs => a.abs(),
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(fail(EvalErrorKind::NonFinite, self))
        }
    }

    pub fn eval(&self, env: &Env) -> std::result::Result<f64, EvalError> {
        self.eval_with(&|n| env.get(n))
    }
}

/// Evaluates `e` with `x` bound to the given value.
pub fn eval_expr(e: &Expr, x: f64) -> std::result::Result<f64, EvalError> {
    e.eval_with(&|n| (n == "x").then_some(x))
}

fn check_bound(expr: &Expr, free: &[&str], env: &Env) -> std::result::Result<(), EvalError> {
    for v in expr.variables() {
        if !free.contains(&v.as_str()) && env.get(&v).is_none() {
            return Err(fail(EvalErrorKind::UnboundVariable(v.clone()), &Expr::Var(v)));
        }
    }
    Ok(())
}

/// An expression viewed as a function of one variable.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprFunction {
    expr: Expr,
    var: String,
    env: Env,
}

impl ExprFunction {
    /// Fails if the expression has a free variable other than `var` that is
    /// not bound in `env`.
    pub fn new(expr: Expr, var: &str, env: Env) -> std::result::Result<Self, EvalError> {
        check_bound(&expr, &[var], &env)?;
        Ok(Self {
            expr,
            var: var.to_owned(),
            env,
        })
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn value(&self, x: f64) -> std::result::Result<f64, EvalError> {
        self.expr
            .eval_with(&|n| if n == self.var { Some(x) } else { self.env.get(n) })
    }
}

impl RealFunction for ExprFunction {
    fn eval(&self, x: f64) -> Result<f64> {
        Ok(self.value(x)?)
    }
}

/// An expression in `x` and `y`, used as a period (or scaleability)
/// function.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprPeriod {
    expr: Expr,
    env: Env,
}

impl ExprPeriod {
    pub fn new(expr: Expr, env: Env) -> std::result::Result<Self, EvalError> {
        check_bound(&expr, &["x", "y"], &env)?;
        Ok(Self { expr, env })
    }

    /// `Some(value)` when the expression mentions neither `x` nor `y`.
    pub fn constant_value(&self) -> Option<f64> {
        let vars = self.expr.variables();
        if vars.iter().any(|v| v == "x" || v == "y") {
            return None;
        }
        self.expr.eval(&self.env).ok()
    }
}

impl PeriodFunction for ExprPeriod {
    fn period(&self, x: f64, y: f64) -> Result<f64> {
        let v = self.expr.eval_with(&|n| match n {
            "x" => Some(x),
            "y" => Some(y),
            _ => self.env.get(n),
        })?;
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn bound_parameter() {
        let e = parse("c*log(x)").unwrap();
        let f = ExprFunction::new(e, "x", Env::new().with("c", 2.0)).unwrap();
        assert!((f.value(std::f64::consts::E).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn fractional_power_of_negative_base() {
        let e = parse("x^0.5").unwrap();
        let err = eval_expr(&e, -1.0).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::NegativeBaseFractionalPower);
        assert_eq!(err.subexpression, "(x ^ 0.5)");
        // integer powers of negative numbers are fine
        assert_eq!(eval_expr(&parse("x^3").unwrap(), -2.0).unwrap(), -8.0);
    }

    #[test]
    fn exp_at_one() {
        let v = eval_expr(&parse("exp(x)").unwrap(), 1.0).unwrap();
        assert_eq!(v, std::f64::consts::E);
    }

    #[test]
    fn tagged_errors() {
        let kind = |s: &str, x: f64| eval_expr(&parse(s).unwrap(), x).unwrap_err().kind;
        assert_eq!(kind("log(x)", 0.0), EvalErrorKind::LogOfNonPositive);
        assert_eq!(kind("1/x", 0.0), EvalErrorKind::DivisionByZero);
        assert_eq!(kind("sqrt(x)", -1.0), EvalErrorKind::SqrtOfNegative);
        assert_eq!(kind("x^-1", 0.0), EvalErrorKind::DivisionByZero);
        assert_eq!(kind("exp(x)", 1000.0), EvalErrorKind::NonFinite);
        assert_eq!(kind("z", 1.0), EvalErrorKind::UnboundVariable("z".into()));
    }

    #[test]
    fn unbound_parameter_rejected_up_front() {
        let e = parse("c*x").unwrap();
        assert!(ExprFunction::new(e.clone(), "x", Env::new()).is_err());
        assert!(ExprPeriod::new(parse("x+y+k").unwrap(), Env::new()).is_err());
    }

    #[test]
    fn constant_period_detection() {
        let p = ExprPeriod::new(parse("-log(2)/log(a)").unwrap(), Env::new().with("a", 2.0)).unwrap();
        assert!((p.constant_value().unwrap() + 1.0).abs() < 1e-15);
        let q = ExprPeriod::new(parse("1 - 2*x*y/(x+y)").unwrap(), Env::new()).unwrap();
        assert_eq!(q.constant_value(), None);
        assert_eq!(q.period(1.0, 1.0).unwrap(), 0.0);
    }
}
