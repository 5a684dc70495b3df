//! Numeric kernels shared by every other module: complex helpers, open
//! adaptive quadrature on (0, 1), bracketed root finding, central
//! differences and the tolerance policy.

mod complex;
mod diff;
mod quad;
mod roots;
mod tolerance;

pub use complex::{exp_i, principal_ln, principal_sqrt, Complex};
pub use diff::{derivative_fd, derivative_fd_complex};
pub use quad::{integrate_01, integrate_01_complement, Quadrature, MAX_PANELS};
pub use roots::find_root;
pub use tolerance::Tolerances;
pub(crate) use tolerance::check_positive;
