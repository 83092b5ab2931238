//! Brute-force eigenvalues from direct quadrature of the boundary kernels.
//!
//! On the unit sphere and unit circle the Neumann-Poincaré kernel
//! `d/dnu_x G_k(x - y)` depends only on the angle between `x` and `y`, so its
//! eigenvalues are one-dimensional integrals: a Funk-Hecke projection onto
//! `P_n` on the sphere and a Fourier coefficient on the circle. Neither route
//! touches spherical Bessel functions or the boundary moment `c_{n,k}`.
//!
//! Both kernels are only weakly singular on smooth boundaries, so the
//! principal value is an ordinary improper integral.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::quad::QuadratureRule;
use crate::specfun::{check_order, cyl_h1, cyl_h1_unchecked, legendre_unchecked};

/// Gauss-Legendre order in the `u = |x - y|` variable on the sphere.
pub const SPHERE_NODES: usize = 128;

/// Half-shifted trapezoid nodes on the circle.
pub const CIRCLE_NODES: usize = 4096;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn check_wavenumber(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(domain(format!("oracle requires a finite k > 0, got {k}")));
    }
    Ok(())
}

/// Helmholtz fundamental solution in 3D, `-exp(ik|x|) / (4 pi |x|)`.
pub fn green_3d(x: [f64; 3], k: f64) -> Complex64 {
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    -Complex64::from_polar(1.0, k * r) / (4.0 * PI * r)
}

/// Helmholtz fundamental solution in 2D, `-(i/4) H_0^(1)(k|x|)`.
pub fn green_2d(x: [f64; 2], k: f64) -> Result<Complex64> {
    let r = x[0].hypot(x[1]);
    Ok(-0.25 * I * cyl_h1(0, k * r)?)
}

// kernel on the unit sphere as a function of the chord length r
fn sphere_kernel_chord(r: f64, k: f64) -> Complex64 {
    -Complex64::from_polar(1.0, k * r) * Complex64::new(-1.0, k * r) / (8.0 * PI * r)
}

/// Normal derivative `d/dnu_x G_k(x - y)` for `|x| = |y| = 1`, as a function
/// of `t = x . y`. With `r = sqrt(2 - 2t)` and `(x - y) . x = r^2 / 2` this is
/// `-exp(ikr)(ikr - 1) / (8 pi r)`.
pub fn np_kernel_sphere(t: f64, k: f64) -> Result<Complex64> {
    check_wavenumber(k)?;
    if !(-1.0..1.0).contains(&t) {
        return Err(domain(format!("sphere kernel needs -1 <= t < 1, got {t}")));
    }
    Ok(sphere_kernel_chord((2.0 - 2.0 * t).sqrt(), k))
}

/// `2 pi int f(t) P_n(t) dt` over the sphere kernel, integrated in the
/// chord variable `u = sqrt(2 - 2t)` where `dt = -u du` cancels the `1/u`
/// singularity.
pub fn tau_oracle(n: u32, k: f64) -> Result<Complex64> {
    tau_oracle_with_nodes(n, k, SPHERE_NODES)
}

pub fn tau_oracle_with_nodes(n: u32, k: f64, nodes: usize) -> Result<Complex64> {
    check_order(n)?;
    check_wavenumber(k)?;
    let rule = QuadratureRule::gauss_legendre(nodes)?;
    let integral = rule.integrate_complex_on(0.0, 2.0, |u| {
        sphere_kernel_chord(u, k) * (u * legendre_unchecked(n, 1.0 - 0.5 * u * u))
    });
    Ok(2.0 * PI * integral)
}

/// Normal derivative of the 2D fundamental solution on the unit circle, as a
/// function of the angle `theta` between `x` and `y`:
/// `(ik/8) H_1^(1)(kr) r` with `r = 2|sin(theta/2)|`. Tends to `1/(4 pi)` as
/// `theta -> 0`.
pub fn np_kernel_circle(theta: f64, k: f64) -> Result<Complex64> {
    check_wavenumber(k)?;
    if !(theta > 0.0 && theta < 2.0 * PI) {
        return Err(domain(format!(
            "circle kernel needs 0 < theta < 2pi, got {theta}"
        )));
    }
    let r = 2.0 * (0.5 * theta).sin().abs();
    Ok(I * (0.125 * k * r) * cyl_h1_unchecked(1, k * r)?)
}

/// Fourier coefficient `int_0^{2pi} K(theta) e^{-in theta} d theta` of the
/// circle kernel by the periodic trapezoid rule on a half-shifted grid.
///
/// The kernel has an `r^2 ln r` term at `theta = 0`, so convergence is
/// algebraic rather than spectral.
pub fn kappa_oracle(n: u32, k: f64) -> Result<Complex64> {
    kappa_oracle_with_nodes(n, k, CIRCLE_NODES)
}

pub fn kappa_oracle_with_nodes(n: u32, k: f64, nodes: usize) -> Result<Complex64> {
    check_order(n)?;
    check_wavenumber(k)?;
    if nodes < 2 {
        return Err(domain("circle oracle needs at least two nodes"));
    }
    let h = 2.0 * PI / nodes as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..nodes {
        let theta = (j as f64 + 0.5) * h;
        // the kernel is even in theta, so e^{-in theta} reduces to cos
        acc += np_kernel_circle(theta, k)? * (f64::from(n) * theta).cos();
    }
    Ok(acc * h)
}
