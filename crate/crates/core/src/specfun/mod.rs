//! Real-argument special functions.
//!
//! Everything here is a pure function of `(n, t)`. Orders are capped at
//! [`N_MAX`]; magnitudes beyond [`OVERFLOW_LIMIT`] are reported as
//! [`Error::Overflow`] instead of escaping as infinities.

mod cylindrical;
mod legendre;
mod spherical;

pub use cylindrical::{cyl_h1, cyl_h1_prime, cyl_j, cyl_j_prime, cyl_y, cyl_y_prime};
pub use legendre::legendre_p;
pub use spherical::{sph_h1, sph_h1_prime, sph_j, sph_j_prime, sph_y, sph_y_prime};

pub(crate) use cylindrical::cyl_h1_unchecked;
pub(crate) use legendre::legendre_unchecked;

use crate::error::{domain, Error, Result};

/// Largest order accepted by the public evaluators.
pub const N_MAX: u32 = 200;

/// Intermediate magnitudes above this abort with [`Error::Overflow`].
pub const OVERFLOW_LIMIT: f64 = 1e300;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// Values in downward recurrences are rescaled once they pass this.
const RESCALE_AT: f64 = 1e250;

pub(crate) fn check_order(n: u32) -> Result<()> {
    if n > N_MAX {
        return Err(Error::OrderTooLarge { n, max: N_MAX });
    }
    Ok(())
}

fn check_nonneg(t: f64, what: &str) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(domain(format!("{what} requires a finite t >= 0, got {t}")));
    }
    Ok(())
}

fn check_positive(t: f64, what: &str) -> Result<()> {
    if !t.is_finite() || t <= 0.0 {
        return Err(domain(format!("{what} requires a finite t > 0, got {t}")));
    }
    Ok(())
}

fn check_magnitude(v: f64, what: &'static str) -> Result<f64> {
    if !v.is_finite() || v.abs() > OVERFLOW_LIMIT {
        return Err(Error::Overflow(what));
    }
    Ok(v)
}

/// Starting index for Miller's downward recurrence so that orders up to
/// `n` are accurate to working precision at argument `t`.
fn miller_start(n: u32, t: f64) -> u32 {
    let m = f64::from(n).max(t.ceil());
    (m + 20.0 + (40.0 * m.max(1.0)).sqrt()).ceil() as u32
}
