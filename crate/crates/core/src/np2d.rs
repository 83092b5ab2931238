//! Eigenvalues `kappa_{n,k}` of the Neumann-Poincaré operator on the unit
//! disk, acting on the Fourier modes `e^{i n theta}`.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::record::{Dimension, EigenRecord, Method};
use crate::specfun::{check_order, cyl_h1, cyl_h1_prime, cyl_j, cyl_j_prime};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn check_wavenumber(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(domain(format!(
            "closed forms require a finite k > 0, got {k}"
        )));
    }
    Ok(())
}

/// `k -> 0` limit: `1/2` for `n = 0`, `0` otherwise.
pub fn static_limit(n: u32) -> f64 {
    if n == 0 {
        0.5
    } else {
        0.0
    }
}

/// `-1/2 - (i pi / 2) k J_n(k) H_n'(k)`.
pub fn kappa_form_a(n: u32, k: f64) -> Result<Complex64> {
    check_wavenumber(k)?;
    let j = cyl_j(n, k)?;
    let hp = cyl_h1_prime(n, k)?;
    Ok(-0.5 - I * (0.5 * PI * k * j) * hp)
}

/// `1/2 - (i pi / 2) k J_n'(k) H_n(k)`.
pub fn kappa_form_b(n: u32, k: f64) -> Result<Complex64> {
    check_wavenumber(k)?;
    let jp = cyl_j_prime(n, k)?;
    let h = cyl_h1(n, k)?;
    Ok(0.5 - I * (0.5 * PI * k * jp) * h)
}

/// Eigenvalue on the disk of radius `radius`; depends only on `k * radius`.
pub fn kappa(n: u32, k: f64, radius: f64) -> Result<EigenRecord> {
    kappa_with(n, k, radius, Method::FormB)
}

/// [`kappa`] with an explicit closed form (`FormA` or `FormB`).
pub fn kappa_with(n: u32, k: f64, radius: f64, method: Method) -> Result<EigenRecord> {
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
            Method::FormA => kappa_form_a(n, kr)?,
            Method::FormB => kappa_form_b(n, kr)?,
            other => return Err(domain(format!("{other} is not a closed form on the disk"))),
        };
        (v, method)
    };
    Ok(EigenRecord {
        dimension: Dimension::Two,
        n,
        k,
        radius,
        value,
        method,
    })
}

/// Large-order decay `-k^2 / (4 n (n-1)(n+1))`, defined for `n >= 2`.
pub fn kappa_large_n(n: u32, k: f64) -> Result<Complex64> {
    if n < 2 {
        return Err(domain(format!(
            "large-order expansion is singular for n < 2, got n = {n}"
        )));
    }
    if !k.is_finite() || k < 0.0 {
        return Err(domain(format!("k must be finite and >= 0, got {k}")));
    }
    let nf = f64::from(n);
    Ok(Complex64::new(
        -k * k / (4.0 * nf * (nf - 1.0) * (nf + 1.0)),
        0.0,
    ))
}

/// Small-`k` expansion `1/2 - (k^2/2) ln(k/2)` of the `n = 0` eigenvalue,
/// valid for `0 < k < 1`.
pub fn kappa_smallk_n0(k: f64) -> Result<Complex64> {
    if !(k > 0.0 && k < 1.0) {
        return Err(domain(format!(
            "small-k expansion needs 0 < k < 1, got {k}"
        )));
    }
    Ok(Complex64::new(0.5 - 0.5 * k * k * (0.5 * k).ln(), 0.0))
}
