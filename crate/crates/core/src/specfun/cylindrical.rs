//! Cylindrical Bessel `J_n`, Neumann `Y_n` and Hankel `H_n^(1)` functions.
//!
//! `J_n` comes from the ascending series when `t^2 <= 2(n+1)` and from
//! Miller's downward recurrence normalized by `J_0 + 2 sum J_{2k} = 1`
//! otherwise. `Y_0` and `Y_1` are obtained from the Neumann series
//!
//! ```text
//! Y_0(t) = (2/pi) (ln(t/2) + gamma) J_0(t) - (4/pi) sum_{k>=1} (-1)^k J_{2k}(t) / k
//! ```
//!
//! and its term-wise derivative (`Y_1 = -Y_0'`), evaluated on the same Miller
//! sequence. Higher `Y_n` follow by upward recurrence, which is stable for
//! the Neumann family.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::{
    check_magnitude, check_nonneg, check_order, check_positive, miller_start, EULER_GAMMA,
    RESCALE_AT,
};
use crate::error::Result;

/// Bessel function of the first kind `J_n(t)`, `t >= 0`.
pub fn cyl_j(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_nonneg(t, "cyl_j")?;
    check_magnitude(cyl_j_unchecked(n, t), "cyl_j")
}

/// Bessel function of the second kind `Y_n(t)`, `t > 0`.
pub fn cyl_y(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_positive(t, "cyl_y")?;
    Ok(y_pair(n, t)?.1)
}

/// `H_n^(1)(t) = J_n(t) + i Y_n(t)`, `t > 0`.
pub fn cyl_h1(n: u32, t: f64) -> Result<Complex64> {
    check_order(n)?;
    check_positive(t, "cyl_h1")?;
    cyl_h1_unchecked(n, t)
}

/// `J_n'(t)`, `t > 0`.
pub fn cyl_j_prime(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_positive(t, "cyl_j_prime")?;
    check_magnitude(j_prime(n, t), "cyl_j_prime")
}

/// `Y_n'(t)`, `t > 0`.
pub fn cyl_y_prime(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_positive(t, "cyl_y_prime")?;
    y_prime(n, t)
}

/// `H_n^(1)'(t)`, `t > 0`.
pub fn cyl_h1_prime(n: u32, t: f64) -> Result<Complex64> {
    check_order(n)?;
    check_positive(t, "cyl_h1_prime")?;
    let yp = y_prime(n, t)?;
    let jp = check_magnitude(j_prime(n, t), "cyl_j_prime")?;
    Ok(Complex64::new(jp, yp))
}

pub(crate) fn cyl_h1_unchecked(n: u32, t: f64) -> Result<Complex64> {
    let y = y_pair(n, t)?.1;
    Ok(Complex64::new(cyl_j_unchecked(n, t), y))
}

pub(crate) fn cyl_j_unchecked(n: u32, t: f64) -> f64 {
    if t * t <= 2.0 * f64::from(n + 1) {
        j_series(n, t)
    } else {
        let seq = j_miller(n, t);
        seq[n as usize]
    }
}

// C_n' = C_{n-1} - (n/t) C_n, with C_0' = -C_1
fn j_prime(n: u32, t: f64) -> f64 {
    if n == 0 {
        -cyl_j_unchecked(1, t)
    } else {
        cyl_j_unchecked(n - 1, t) - f64::from(n) / t * cyl_j_unchecked(n, t)
    }
}

fn y_prime(n: u32, t: f64) -> Result<f64> {
    let d = if n == 0 {
        -y_pair(1, t)?.1
    } else {
        let (prev, cur) = y_pair(n, t)?;
        prev - f64::from(n) / t * cur
    };
    check_magnitude(d, "cyl_y_prime")
}

fn j_series(n: u32, t: f64) -> f64 {
    let half = 0.5 * t;
    let mut term = 1.0;
    for i in 1..=n {
        term *= half / f64::from(i);
    }
    if term == 0.0 {
        return 0.0;
    }
    let q = half * half;
    let mut sum = term;
    let mut quiet = 0;
    let mut l = 0u32;
    while quiet < 3 && l < 1000 {
        l += 1;
        term *= -q / (f64::from(l) * f64::from(n + l));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            quiet += 1;
        } else {
            quiet = 0;
        }
    }
    sum
}

/// Normalized `J_0 ..= J_N` from downward recurrence, with `N` even and
/// large enough for orders up to `n_min` to be accurate.
fn j_miller(n_min: u32, t: f64) -> Vec<f64> {
    let mut start = miller_start(n_min.max(2), t) as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut f = vec![0.0f64; start + 2];
    f[start] = 1.0;
    for k in (1..=start).rev() {
        let v = 2.0 * k as f64 / t * f[k] - f[k + 1];
        f[k - 1] = v;
        if v.abs() > RESCALE_AT {
            for x in &mut f[k - 1..] {
                *x /= RESCALE_AT;
            }
        }
    }
    let norm = f[0] + 2.0 * f[2..=start].iter().step_by(2).sum::<f64>();
    for x in &mut f {
        *x /= norm;
    }
    f
}

fn y01(t: f64) -> (f64, f64) {
    let j = j_miller(2, t);
    let log_term = (0.5 * t).ln() + EULER_GAMMA;
    let mut s = 0.0;
    let mut ds = 0.0;
    let last = (j.len() - 2) / 2;
    for k in 1..=last {
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        let kf = k as f64;
        s += sign * j[2 * k] / kf;
        // J_{2k}' = (J_{2k-1} - J_{2k+1}) / 2
        ds += sign * (j[2 * k - 1] - j[2 * k + 1]) / (2.0 * kf);
    }
    let y0 = 2.0 / PI * log_term * j[0] - 4.0 / PI * s;
    let y0_prime = 2.0 / PI * (j[0] / t - log_term * j[1]) - 4.0 / PI * ds;
    (y0, -y0_prime)
}

/// Returns `(Y_{n-1}, Y_n)`; the first entry is meaningless for `n = 0`.
fn y_pair(n: u32, t: f64) -> Result<(f64, f64)> {
    let (y0, y1) = y01(t);
    let y0 = check_magnitude(y0, "cyl_y")?;
    if n == 0 {
        return Ok((0.0, y0));
    }
    let y1 = check_magnitude(y1, "cyl_y")?;
    let (mut prev, mut cur) = (y0, y1);
    for k in 1..n {
        let next = 2.0 * f64::from(k) / t * cur - prev;
        prev = cur;
        cur = check_magnitude(next, "cyl_y")?;
    }
    Ok((prev, cur))
}
