use num_complex::Complex64;

use super::{check_magnitude, check_nonneg, check_order, check_positive, miller_start, RESCALE_AT};
use crate::error::Result;

// Above this argument the Miller start index gets long; upward recurrence is
// stable there for every order we accept.
const UPWARD_ARG: f64 = 1e4;

/// Spherical Bessel function of the first kind `j_n(t)`, `t >= 0`.
///
/// Small arguments (`t^2 <= 2n + 3`) use the ascending series, where the
/// alternating terms cost at most a factor `e` in cancellation. Larger
/// arguments use Miller's downward recurrence normalized against the closed
/// forms of `j_0` or `j_1`, whichever has the larger magnitude.
pub fn sph_j(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_nonneg(t, "sph_j")?;
    check_magnitude(sph_j_unchecked(n, t), "sph_j")
}

/// Spherical Neumann function `y_n(t)`, `t > 0`.
pub fn sph_y(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_positive(t, "sph_y")?;
    Ok(sph_y_pair(n, t)?.1)
}

/// Spherical Hankel function of the first kind `h_n(t) = j_n(t) + i y_n(t)`.
pub fn sph_h1(n: u32, t: f64) -> Result<Complex64> {
    let y = sph_y(n, t)?;
    Ok(Complex64::new(sph_j_unchecked(n, t), y))
}

/// `j_n'(t)`. Defined at `t = 0`, where it vanishes except for `n = 1`.
pub fn sph_j_prime(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_nonneg(t, "sph_j_prime")?;
    if t == 0.0 {
        return Ok(if n == 1 { 1.0 / 3.0 } else { 0.0 });
    }
    check_magnitude(sph_j_prime_unchecked(n, t), "sph_j_prime")
}

/// `y_n'(t)`, `t > 0`.
pub fn sph_y_prime(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    check_positive(t, "sph_y_prime")?;
    sph_y_prime_checked(n, t)
}

/// `h_n'(t) = j_n'(t) + i y_n'(t)`, `t > 0`.
pub fn sph_h1_prime(n: u32, t: f64) -> Result<Complex64> {
    let yp = sph_y_prime(n, t)?;
    let jp = check_magnitude(sph_j_prime_unchecked(n, t), "sph_j_prime")?;
    Ok(Complex64::new(jp, yp))
}

pub(crate) fn sph_j_unchecked(n: u32, t: f64) -> f64 {
    if t * t <= f64::from(2 * n + 3) {
        series(n, t)
    } else if t > UPWARD_ARG {
        upward(n, t)
    } else {
        miller(n, t)
    }
}

fn sph_j_prime_unchecked(n: u32, t: f64) -> f64 {
    // j_n' = j_{n-1} - (n+1)/t j_n, with j_0' = -j_1
    if n == 0 {
        -sph_j_unchecked(1, t)
    } else {
        sph_j_unchecked(n - 1, t) - f64::from(n + 1) / t * sph_j_unchecked(n, t)
    }
}

fn sph_y_prime_checked(n: u32, t: f64) -> Result<f64> {
    let (prev, cur) = sph_y_pair(n, t)?;
    let d = if n == 0 {
        // y_0' = -y_1
        -sph_y_pair(1, t)?.1
    } else {
        prev - f64::from(n + 1) / t * cur
    };
    check_magnitude(d, "sph_y_prime")
}

/// Returns `(y_{n-1}, y_n)`; the first entry is meaningless for `n = 0`.
fn sph_y_pair(n: u32, t: f64) -> Result<(f64, f64)> {
    let (s, c) = t.sin_cos();
    let y0 = check_magnitude(-c / t, "sph_y")?;
    if n == 0 {
        return Ok((0.0, y0));
    }
    let y1 = check_magnitude(-c / (t * t) - s / t, "sph_y")?;
    let (mut prev, mut cur) = (y0, y1);
    for k in 1..n {
        let next = f64::from(2 * k + 1) / t * cur - prev;
        prev = cur;
        cur = check_magnitude(next, "sph_y")?;
    }
    Ok((prev, cur))
}

fn series(n: u32, t: f64) -> f64 {
    // leading term t^n / (2n+1)!!, built as a product to stay in range
    let mut term = 1.0;
    for i in 1..=n {
        term *= t / f64::from(2 * i + 1);
    }
    if term == 0.0 {
        return 0.0;
    }
    let t2 = t * t;
    let mut sum = term;
    let mut quiet = 0;
    let mut l = 0u32;
    while quiet < 3 && l < 1000 {
        l += 1;
        term *= -t2 / (2.0 * f64::from(l) * f64::from(2 * n + 2 * l + 1));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            quiet += 1;
        } else {
            quiet = 0;
        }
    }
    sum
}

fn miller(n: u32, t: f64) -> f64 {
    let start = miller_start(n, t);
    let (mut above, mut cur) = (0.0f64, 1.0f64);
    let (mut f_n, mut f_1) = (0.0f64, 0.0f64);
    // cur holds f_k; step to f_{k-1}
    for k in (1..=start).rev() {
        let next = f64::from(2 * k + 1) / t * cur - above;
        above = cur;
        cur = next;
        if k - 1 == n {
            f_n = cur;
        }
        if k - 1 == 1 {
            f_1 = cur;
        }
        if cur.abs() > RESCALE_AT {
            cur /= RESCALE_AT;
            above /= RESCALE_AT;
            f_n /= RESCALE_AT;
            f_1 /= RESCALE_AT;
        }
    }
    let f_0 = cur;
    let (s, c) = t.sin_cos();
    let j0 = s / t;
    let j1 = s / (t * t) - c / t;
    if j0.abs() >= j1.abs() {
        f_n * (j0 / f_0)
    } else {
        f_n * (j1 / f_1)
    }
}

fn upward(n: u32, t: f64) -> f64 {
    let (s, c) = t.sin_cos();
    let j0 = s / t;
    if n == 0 {
        return j0;
    }
    let (mut prev, mut cur) = (j0, s / (t * t) - c / t);
    for k in 1..n {
        let next = f64::from(2 * k + 1) / t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}
