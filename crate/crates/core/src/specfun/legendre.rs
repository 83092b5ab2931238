use super::check_order;
use crate::error::{domain, Result};

/// Legendre polynomial `P_n(t)` on `[-1, 1]` by the three-term recurrence.
pub fn legendre_p(n: u32, t: f64) -> Result<f64> {
    check_order(n)?;
    if !(-1.0..=1.0).contains(&t) {
        return Err(domain(format!("legendre_p requires -1 <= t <= 1, got {t}")));
    }
    Ok(legendre_unchecked(n, t))
}

pub(crate) fn legendre_unchecked(n: u32, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, t);
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0) * t * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn low_orders() {
        assert_eq!(legendre_p(0, 0.3).unwrap(), 1.0);
        assert_eq!(legendre_p(1, -0.5).unwrap(), -0.5);
        let t: f64 = 0.7;
        let p4 = (35.0 * t.powi(4) - 30.0 * t * t + 3.0) / 8.0;
        assert!((legendre_p(4, t).unwrap() - p4).abs() <= 1e-15);
    }

    #[test]
    fn unit_at_one() {
        for n in 0..=200 {
            assert!((legendre_p(n, 1.0).unwrap() - 1.0).abs() <= 1e-13);
        }
    }

    #[test]
    fn rejects_outside_interval() {
        assert!(matches!(legendre_p(3, 1.0 + 1e-12), Err(Error::Domain(_))));
        assert!(matches!(legendre_p(3, f64::NAN), Err(Error::Domain(_))));
    }
}
