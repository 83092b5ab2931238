//! Eigenvalues `tau_{n,k}` of the Neumann-Poincaré operator on the unit ball.
//!
//! On the sphere every spherical harmonic of degree `n` is an eigenfunction,
//! with an eigenvalue that does not depend on the harmonic's index `m`.
//! Three equivalent closed forms are provided:
//!
//! ```text
//! A:  -1/2 - i k^2 j_n(k) h_n'(k)
//! B:   1/2 - i k^2 j_n'(k) h_n(k)
//! C:  (ik/2) (j_n(k) h_n(k) + c_{n,k})
//! ```
//!
//! A and B differ by the Wronskian; C routes through the boundary moment
//! [`c_nk`](crate::quad::c_nk). Form B is the default.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::quad::c_nk;
use crate::record::{Dimension, EigenRecord, Method};
use crate::specfun::{check_order, sph_h1, sph_h1_prime, sph_j, sph_j_prime};

/// Below this magnitude of `ik(j_n + 2k j_n')` the Hankel identity is
/// reported as near-singular rather than evaluated.
pub const DENOM_TOL: f64 = 1e-8;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn check_wavenumber(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(domain(format!(
            "closed forms require a finite k > 0, got {k}"
        )));
    }
    Ok(())
}

/// `k -> 0` eigenvalue `1 / (2(2n+1))`.
pub fn static_limit(n: u32) -> f64 {
    1.0 / (2.0 * f64::from(2 * n + 1))
}

pub fn tau_form_a(n: u32, k: f64) -> Result<Complex64> {
    check_wavenumber(k)?;
    let j = sph_j(n, k)?;
    let hp = sph_h1_prime(n, k)?;
    Ok(-0.5 - I * (k * k * j) * hp)
}

pub fn tau_form_b(n: u32, k: f64) -> Result<Complex64> {
    check_wavenumber(k)?;
    let jp = sph_j_prime(n, k)?;
    let h = sph_h1(n, k)?;
    Ok(0.5 - I * (k * k * jp) * h)
}

pub fn tau_form_c(n: u32, k: f64) -> Result<Complex64> {
    check_wavenumber(k)?;
    let j = sph_j(n, k)?;
    let h = sph_h1(n, k)?;
    let c = c_nk(n, k)?.value;
    Ok(0.5 * I * k * (j * h + c))
}

/// Eigenvalue on the ball of radius `radius`.
///
/// A ball of radius `R` at wavenumber `k` has the spectrum of the unit ball at
/// `kR`, so only the product enters. At `kR = 0` the static value is returned.
pub fn tau(n: u32, k: f64, radius: f64) -> Result<EigenRecord> {
    tau_with(n, k, radius, Method::FormB)
}

/// [`tau`] with an explicit closed form (`FormA`, `FormB` or `FormC`).
pub fn tau_with(n: u32, k: f64, radius: f64, method: Method) -> Result<EigenRecord> {
    check_order(n)?;
    if !radius.is_finite() || radius <= 0.0 {
        return Err(domain(format!(
            "radius must be finite and > 0, got {radius}"
        )));
    }
    if !k.is_finite() || k < 0.0 {
        return Err(domain(format!("k must be finite and >= 0, got {k}")));
    }
    let kr = k * radius;
    let (value, method) = if kr == 0.0 {
        (Complex64::new(static_limit(n), 0.0), Method::StaticLimit)
    } else {
        let v = match method {
            Method::FormA => tau_form_a(n, kr)?,
            Method::FormB => tau_form_b(n, kr)?,
            Method::FormC => tau_form_c(n, kr)?,
            other => return Err(domain(format!("{other} is not a closed form on the ball"))),
        };
        (v, method)
    };
    Ok(EigenRecord {
        dimension: Dimension::Three,
        n,
        k,
        radius,
        value,
        method,
    })
}

/// Leading large-order term `1/(2(2n+1)) + (i/2) k c_{n,k}`.
pub fn tau_leading(n: u32, k: f64) -> Result<Complex64> {
    let c = c_nk(n, k)?.value;
    Ok(static_limit(n) + 0.5 * I * k * c)
}

/// Outcome of checking `h_n = (1 - ik c) / (ik (j_n + 2k j_n'))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HankelResidual {
    /// Absolute difference between the two sides.
    Value(f64),
    /// The denominator is below [`DENOM_TOL`]; the identity only holds as a
    /// limit here.
    NearSingular { denominator: f64 },
}

impl HankelResidual {
    pub fn is_near_singular(&self) -> bool {
        matches!(self, Self::NearSingular { .. })
    }
}

pub fn hankel_identity_residual(n: u32, k: f64) -> Result<HankelResidual> {
    check_wavenumber(k)?;
    let denom = I * k * (sph_j(n, k)? + 2.0 * k * sph_j_prime(n, k)?);
    if denom.norm() < DENOM_TOL {
        return Ok(HankelResidual::NearSingular {
            denominator: denom.norm(),
        });
    }
    let c = c_nk(n, k)?.value;
    let rhs = (1.0 - I * k * c) / denom;
    Ok(HankelResidual::Value((sph_h1(n, k)? - rhs).norm()))
}
