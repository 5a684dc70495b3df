//! Generalized Gamma functions, Gamma-only trigonometric identities, period
//! and scaleability functions of sine/cosine addition-law pairs, sine and
//! cosine representers, and a residual-based verification engine.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod errata;
pub mod error;
pub mod expr;
pub mod families;
pub mod function;
pub mod gamma;
pub mod numerics;
pub mod pairing;
pub mod representers;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::{Complex, Tolerances};
