//! A small expression language for user-supplied functions, generators and
//! period functions.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" unary)?
//! atom  := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"
//! ```
//!
//! `^` is right-associative, and `-x^2` parses as `-(x^2)`. `log` is the
//! natural logarithm; `log_a(x)` is written `log(x)/log(a)`.

mod ast;
mod eval;
mod parser;

pub use ast::{BinOp, Constant, Expr, Func};
pub use eval::{eval_expr, Env, EvalError, EvalErrorKind, ExprFunction, ExprPeriod};
pub use parser::{parse, SyntaxError};
