//! Gauss-Legendre quadrature, the boundary moment `c_{n,k}` and the
//! Funk-Hecke eigenvalue functional.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{domain, Result};
use crate::specfun::{check_order, legendre_unchecked};

/// Largest supported Gauss-Legendre order.
pub const MAX_RULE_ORDER: usize = 2048;

/// Rule order used for `c_{n,k}` when `n <= 50`.
pub const DEFAULT_C_ORDER: usize = 64;

/// Nodes and weights of an `m`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds the rule by Newton iteration on `P_m` from Chebyshev-like
    /// initial guesses. Nodes come out strictly increasing and exactly
    /// symmetric about zero.
    pub fn gauss_legendre(m: usize) -> Result<Self> {
        if !(1..=MAX_RULE_ORDER).contains(&m) {
            return Err(domain(format!(
                "Gauss-Legendre order must be in 1..={MAX_RULE_ORDER}, got {m}"
            )));
        }
        let mut nodes = vec![0.0; m];
        let mut weights = vec![0.0; m];
        let mf = m as f64;
        for i in 0..m / 2 {
            // descending guesses; node i lands at position m - 1 - i
            let mut x = (PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(m, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-15 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(m, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[m - 1 - i] = x;
            nodes[i] = -x;
            weights[m - 1 - i] = w;
            weights[i] = w;
        }
        if m % 2 == 1 {
            let (_, d) = legendre_with_derivative(m, 0.0);
            nodes[m / 2] = 0.0;
            weights[m / 2] = 2.0 / (d * d);
        }
        Ok(Self { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum w_i f(x_i)` over `[-1, 1]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Complex integral over `[a, b]` by the affine map of the rule.
    pub fn integrate_complex_on<F>(&self, a: f64, b: f64, f: F) -> Complex64
    where
        F: Fn(f64) -> Complex64,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let s: Complex64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        s * half
    }
}

/// `(P_m(x), P_m'(x))`.
fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, x);
    for k in 1..m {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    let mf = m as f64;
    let d = if m == 0 {
        0.0
    } else if x.abs() == 1.0 {
        x.powi(m as i32 + 1) * mf * (mf + 1.0) / 2.0
    } else {
        mf * (x * cur - prev) / (x * x - 1.0)
    };
    (if m == 0 { 1.0 } else { cur }, d)
}

/// Convenience wrapper matching the operation name used elsewhere.
pub fn gauss_legendre(m: usize) -> Result<QuadratureRule> {
    QuadratureRule::gauss_legendre(m)
}

/// Rule order used for `c_{n,k}` at mode order `n`.
pub fn default_c_order(n: u32) -> usize {
    if n <= 50 {
        DEFAULT_C_ORDER
    } else {
        DEFAULT_C_ORDER.max(2 * n as usize)
    }
}

fn default_rule() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| QuadratureRule::gauss_legendre(DEFAULT_C_ORDER).expect("valid order"))
}

/// `c_{n,k}` together with the arguments it was evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CCoefficient {
    pub n: u32,
    pub k: f64,
    pub value: Complex64,
}

/// `c_{n,k} = -1/2 int_{-1}^{1} exp(ik sqrt(2(1-t))) P_n(t) dt`.
///
/// The substitution `u = sqrt(2(1-t))` turns the integrand into the smooth
/// `exp(iku) P_n(1 - u^2/2) u` on `[0, 2]`.
pub fn c_nk(n: u32, k: f64) -> Result<CCoefficient> {
    check_order(n)?;
    let order = default_c_order(n);
    if order == DEFAULT_C_ORDER {
        c_nk_with_rule(n, k, default_rule())
    } else {
        c_nk_with_rule(n, k, &QuadratureRule::gauss_legendre(order)?)
    }
}

/// [`c_nk`] with an explicit rule, used for convergence checks.
pub fn c_nk_with_rule(n: u32, k: f64, rule: &QuadratureRule) -> Result<CCoefficient> {
    check_order(n)?;
    if !k.is_finite() || k < 0.0 {
        return Err(domain(format!("c_nk requires a finite k >= 0, got {k}")));
    }
    let integral = rule.integrate_complex_on(0.0, 2.0, |u| {
        let p = legendre_unchecked(n, 1.0 - 0.5 * u * u);
        Complex64::from_polar(1.0, k * u) * (p * u)
    });
    Ok(CCoefficient {
        n,
        k,
        value: -0.5 * integral,
    })
}

/// `int_{-1}^{1} sqrt(1-t) P_n(t) dt`, exact by quadrature after `t = 1 - s^2`.
pub fn sqrt_moment(n: u32) -> Result<f64> {
    check_order(n)?;
    // 2 int_0^sqrt2 s^2 P_n(1 - s^2) ds has polynomial degree 2n + 2
    let rule = QuadratureRule::gauss_legendre(n as usize + 2)?;
    let b = std::f64::consts::SQRT_2;
    let half = 0.5 * b;
    Ok(2.0
        * half
        * rule.integrate(|x| {
            let s = half * (x + 1.0);
            s * s * legendre_unchecked(n, 1.0 - s * s)
        }))
}

/// Leading small-`k` term of `c_{n,k}` for `n >= 1`:
/// `-(sqrt2/2) i k int sqrt(1-t) P_n(t) dt`.
pub fn c_nk_smallk_n(n: u32, k: f64) -> Result<Complex64> {
    if n == 0 {
        return Err(domain(
            "c_nk_smallk_n is defined for n >= 1; n = 0 has its own expansion",
        ));
    }
    if !k.is_finite() {
        return Err(domain(format!("c_nk_smallk_n requires finite k, got {k}")));
    }
    let m = sqrt_moment(n)?;
    Ok(Complex64::new(
        0.0,
        -std::f64::consts::FRAC_1_SQRT_2 * k * m,
    ))
}

/// Funk-Hecke eigenvalue `2 pi int_{-1}^{1} f(t) P_n(t) dt` of a zonal kernel.
pub fn funk_hecke<F>(f: F, n: u32, rule: &QuadratureRule) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    check_order(n)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
        acc += f(t)? * (w * legendre_unchecked(n, t));
    }
    Ok(2.0 * PI * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn one_and_two_point_rules() {
        let r1 = gauss_legendre(1).unwrap();
        assert_eq!(r1.nodes(), &[0.0]);
        assert_relative_eq!(r1.weights()[0], 2.0, max_relative = 1e-15);
        let r2 = gauss_legendre(2).unwrap();
        let x = 1.0 / 3f64.sqrt();
        assert_relative_eq!(r2.nodes()[0], -x, max_relative = 1e-15);
        assert_relative_eq!(r2.nodes()[1], x, max_relative = 1e-15);
        assert_relative_eq!(r2.weights()[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(r2.weights()[1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn sixteen_point_monomial() {
        let r = gauss_legendre(16).unwrap();
        assert!((r.integrate(|t| t.powi(10)) - 2.0 / 11.0).abs() <= 1e-14);
    }

    #[test]
    fn order_bounds() {
        assert!(gauss_legendre(0).is_err());
        assert!(gauss_legendre(2049).is_err());
        assert_eq!(gauss_legendre(2048).unwrap().order(), 2048);
    }

    #[test]
    fn c_at_zero_wavenumber() {
        assert!((c_nk(0, 0.0).unwrap().value - Complex64::new(-1.0, 0.0)).norm() <= 1e-14);
        assert!(c_nk(3, 0.0).unwrap().value.norm() <= 1e-14);
    }

    #[test]
    fn c_small_k_n0() {
        let c = c_nk(0, 0.01).unwrap().value;
        assert!((c.re + 1.0).abs() <= 1e-4);
        assert!((c.im + 4.0 / 3.0 * 0.01).abs() <= 1e-4);
    }

    #[test]
    fn sqrt_moment_closed_form() {
        // int_0^2 sqrt(s)(1 - s) ds = -4 sqrt2 / 15
        let m1 = sqrt_moment(1).unwrap();
        assert_relative_eq!(m1, -4.0 * 2f64.sqrt() / 15.0, max_relative = 1e-14);
        assert_relative_eq!(
            sqrt_moment(0).unwrap(),
            4.0 * 2f64.sqrt() / 3.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn small_k_leading_term() {
        assert_eq!(c_nk_smallk_n(1, 0.0).unwrap(), Complex64::new(0.0, 0.0));
        let lead = c_nk_smallk_n(1, 0.1).unwrap();
        assert_relative_eq!(lead.im, 0.1 * 4.0 / 15.0, max_relative = 1e-13);
        assert!((lead - c_nk(1, 0.1).unwrap().value).norm() <= 1e-2);
        let lead2 = c_nk_smallk_n(2, 0.05).unwrap();
        assert!((lead2 - c_nk(2, 0.05).unwrap().value).norm() <= 2.5e-3);
        assert!(c_nk_smallk_n(0, 0.1).is_err());
    }

    #[test]
    fn funk_hecke_constants() {
        let rule = gauss_legendre(32).unwrap();
        let one = |_t: f64| Ok(Complex64::new(1.0, 0.0));
        assert_relative_eq!(
            funk_hecke(one, 0, &rule).unwrap().re,
            4.0 * PI,
            max_relative = 1e-14
        );
        assert!(funk_hecke(one, 2, &rule).unwrap().norm() <= 1e-13);
    }

    #[test]
    fn funk_hecke_matches_c_coefficient() {
        // the raw integrand has a sqrt singularity at t = 1, so a high order
        // is needed on [-1, 1]
        let rule = gauss_legendre(1024).unwrap();
        let k = 1.0;
        let f = |t: f64| Ok(Complex64::from_polar(1.0, k * (2.0 * (1.0 - t)).sqrt()));
        let lhs = funk_hecke(f, 1, &rule).unwrap();
        let rhs = -4.0 * PI * c_nk(1, k).unwrap().value;
        assert!((lhs - rhs).norm() <= 1e-7, "{lhs} vs {rhs}");
    }
}
