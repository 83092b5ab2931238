//! Eigenvalues of the Neumann-Poincaré operator for the Helmholtz equation on
//! the unit ball (3D) and the unit disk (2D).
//!
//! The crate is organized bottom-up:
//!
//! - [`specfun`]: spherical and cylindrical Bessel/Neumann/Hankel functions and
//!   Legendre polynomials for real arguments.
//! - [`quad`]: Gauss-Legendre rules, the boundary moment `c_{n,k}` and the
//!   Funk-Hecke functional.
//! - [`np3d`] / [`np2d`]: closed-form eigenvalues and their asymptotics.
//! - [`oracle`]: brute-force quadrature of the boundary kernels, sharing no
//!   code with the Bessel-function formulas.
//! - [`sweep`], [`figures`], [`verify`]: grid evaluation, CSV emission and
//!   the invariant suites driven by the `npspec` binary.
//!
//! Grid work is spread over threads with rayon when the `parallel` feature is
//! enabled (the default); see [`par`].

pub mod error;
pub mod figures;
pub mod np2d;
pub mod np3d;
pub mod oracle;
pub mod par;
pub mod quad;
pub mod record;
pub mod specfun;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use record::{Dimension, EigenRecord, Method};
