//! Invariant suites run by `npspec verify`.
//!
//! Each suite is a list of checks. A check evaluates a residual on a fixed
//! grid and passes when the largest residual is within its tolerance. Grids
//! are evaluated through [`par`] and reduced in grid order, so reports are
//! identical with and without the `parallel` feature.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::figures::{self, FigureData};
use crate::np3d::{self, static_limit, HankelResidual};
use crate::quad::{self, QuadratureRule};
use crate::specfun::{
    cyl_h1, cyl_h1_prime, cyl_j, cyl_j_prime, cyl_y, cyl_y_prime, legendre_p, sph_h1, sph_h1_prime,
    sph_j, sph_j_prime, sph_y, sph_y_prime,
};
use crate::{np2d, oracle, par};

/// Named invariant suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Wronskian,
    Forms3d,
    Forms2d,
    Limits,
    Cbound,
    Oracle3d,
    Oracle2d,
    Asymptotics,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Wronskian,
        Suite::Forms3d,
        Suite::Forms2d,
        Suite::Limits,
        Suite::Cbound,
        Suite::Oracle3d,
        Suite::Oracle2d,
        Suite::Asymptotics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Wronskian => "wronskian",
            Suite::Forms3d => "forms3d",
            Suite::Forms2d => "forms2d",
            Suite::Limits => "limits",
            Suite::Cbound => "cbound",
            Suite::Oracle3d => "oracle3d",
            Suite::Oracle2d => "oracle2d",
            Suite::Asymptotics => "asymptotics",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| domain(format!("unknown suite '{s}'")))
    }
}

/// Grid point with the largest residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Worst {
    pub n: u32,
    pub k: f64,
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub check: String,
    pub cases: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub worst: Option<Worst>,
    pub note: Option<String>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}/{}: cases={} max_residual={:.3e} tol={:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.check,
            self.cases,
            self.max_residual,
            self.tolerance
        )?;
        if let Some(w) = self.worst {
            write!(f, " worst=(n={}, k={})", w.n, w.k)?;
        }
        if let Some(note) = &self.note {
            write!(f, " {note}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
struct Tally {
    cases: usize,
    max: f64,
    worst: Option<Worst>,
}

impl Tally {
    fn add(&mut self, n: u32, k: f64, residual: f64) {
        self.cases += 1;
        let r = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual
        };
        if self.worst.is_none() || r > self.max {
            self.max = r;
            self.worst = Some(Worst { n, k });
        }
    }

    fn from_iter<I: IntoIterator<Item = (u32, f64, f64)>>(items: I) -> Self {
        let mut t = Tally::default();
        for (n, k, r) in items {
            t.add(n, k, r);
        }
        t
    }

    fn report(
        self,
        suite: Suite,
        check: &str,
        tolerance: f64,
        note: Option<String>,
    ) -> VerificationReport {
        VerificationReport {
            suite: suite.name().to_string(),
            check: check.to_string(),
            cases: self.cases,
            max_residual: self.max,
            tolerance,
            passed: self.cases > 0 && self.max <= tolerance,
            worst: self.worst,
            note,
        }
    }
}

/// Runs one suite. `tol` replaces the default tolerance of every check in it.
pub fn run_suite(suite: Suite, tol: Option<f64>) -> Result<Vec<VerificationReport>> {
    let t = |default: f64| tol.unwrap_or(default);
    match suite {
        Suite::Wronskian => wronskian_suite(t),
        Suite::Forms3d => forms3d_suite(t),
        Suite::Forms2d => forms2d_suite(t),
        Suite::Limits => limits_suite(t),
        Suite::Cbound => cbound_suite(t),
        Suite::Oracle3d => oracle3d_suite(t),
        Suite::Oracle2d => oracle2d_suite(t),
        Suite::Asymptotics => asymptotics_suite(t),
    }
}

pub fn run_all(tol: Option<f64>) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for suite in Suite::ALL {
        out.extend(run_suite(suite, tol)?);
    }
    Ok(out)
}

/// `k = 0.1, 0.2, ..., 30`.
pub fn cross_form_k_grid() -> Vec<f64> {
    (1..=300).map(|i| f64::from(i) / 10.0).collect()
}

/// `count` log-spaced points on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

fn nk_points(ns: impl IntoIterator<Item = u32>, ks: &[f64]) -> Vec<(u32, f64)> {
    ns.into_iter()
        .flat_map(|n| ks.iter().map(move |&k| (n, k)))
        .collect()
}

fn tally_grid<F>(points: &[(u32, f64)], f: F) -> Result<Tally>
where
    F: Fn(u32, f64) -> Result<f64> + Sync + Send,
{
    let residuals = par::try_map(points, |&(n, k)| f(n, k))?;
    Ok(Tally::from_iter(
        points.iter().zip(residuals).map(|(&(n, k), r)| (n, k, r)),
    ))
}

/// Spherical Wronskian `j'h - jh' + i/t^2`, scaled by `t^2`.
pub fn spherical_wronskian_residual(n: u32, t: f64) -> Result<f64> {
    let w = sph_j_prime(n, t)? * sph_h1(n, t)? - sph_j(n, t)? * sph_h1_prime(n, t)?;
    Ok((w - Complex64::new(0.0, -1.0 / (t * t))).norm() * t * t)
}

/// Cylindrical Wronskian `J'H - JH' + 2i/(pi t)`, scaled by `pi t / 2`.
pub fn cylindrical_wronskian_residual(n: u32, t: f64) -> Result<f64> {
    let w = cyl_j_prime(n, t)? * cyl_h1(n, t)? - cyl_j(n, t)? * cyl_h1_prime(n, t)?;
    let expected = 2.0 / (PI * t);
    Ok((w - Complex64::new(0.0, -expected)).norm() / expected)
}

fn five_point(f: &dyn Fn(f64) -> Result<f64>, t: f64, h: f64) -> Result<f64> {
    Ok((f(t - 2.0 * h)? - 8.0 * f(t - h)? + 8.0 * f(t + h)? - f(t + 2.0 * h)?) / (12.0 * h))
}

/// Largest five-point finite-difference mismatch of the four derivative
/// routines at `(n, t)`, relative to the local envelope `hypot(f, f')`.
pub fn derivative_residual(n: u32, t: f64) -> Result<f64> {
    let h = 1e-4 * t.min(1.0);
    type Pair = (fn(u32, f64) -> Result<f64>, fn(u32, f64) -> Result<f64>);
    let pairs: [Pair; 4] = [
        (sph_j, sph_j_prime),
        (sph_y, sph_y_prime),
        (cyl_j, cyl_j_prime),
        (cyl_y, cyl_y_prime),
    ];
    let mut worst: f64 = 0.0;
    for (f, d) in pairs {
        let fd = five_point(&|x| f(n, x), t, h)?;
        let an = d(n, t)?;
        let scale = f(n, t)?.hypot(an);
        if scale > 0.0 {
            worst = worst.max((fd - an).abs() / scale);
        }
    }
    Ok(worst)
}

fn wronskian_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Wronskian;
    let mut ts = cross_form_k_grid();
    ts.extend(log_grid(1e-3, 60.0, 200));
    let pts = nk_points(0..=50, &ts);
    let sph = tally_grid(&pts, spherical_wronskian_residual)?;
    let cyl = tally_grid(&pts, cylindrical_wronskian_residual)?;

    let fd_pts = nk_points(0..=50, &log_grid(1e-3, 60.0, 40));
    let fd = tally_grid(&fd_pts, derivative_residual)?;

    // Gauss-Legendre of order 31 is exact through degree 61
    let rule = QuadratureRule::gauss_legendre(31)?;
    let mut ortho = Tally::default();
    for m in 0..=30u32 {
        for n in 0..=30u32 {
            let q = rule.integrate(|x| legendre_p(m, x).unwrap() * legendre_p(n, x).unwrap());
            let exact = if m == n {
                2.0 / f64::from(2 * n + 1)
            } else {
                0.0
            };
            ortho.add(n, f64::from(m), (q - exact).abs());
        }
    }

    // j_n(t) / [t^n / (2n+1)!!] = 1 - t^2 / (2(2n+3)) + ..., so n |dev| < t^2/4
    let mut lead = Tally::default();
    for n in [20u32, 40, 80] {
        for tt in [0.5, 1.0, 2.0] {
            let mut leading = 1.0;
            for i in 1..=n {
                leading *= tt / f64::from(2 * i + 1);
            }
            let ratio = sph_j(n, tt)? / leading;
            lead.add(n, tt, f64::from(n) * (ratio - 1.0).abs());
        }
    }
    let fitted = lead.max;

    Ok(vec![
        sph.report(s, "spherical_wronskian", t(1e-12), None),
        cyl.report(s, "cylindrical_wronskian", t(1e-12), None),
        fd.report(
            s,
            "derivative_consistency",
            t(1e-7),
            Some("relative to hypot(f, f')".into()),
        ),
        ortho.report(s, "legendre_orthogonality", t(1e-13), None),
        lead.report(
            s,
            "large_n_leading_order",
            t(1.0),
            Some(format!("fitted C = max n|dev| = {fitted:.4}")),
        ),
    ])
}

/// Largest pairwise gap between the three closed forms on the ball.
pub fn forms3d_residual(n: u32, k: f64) -> Result<f64> {
    let a = np3d::tau_form_a(n, k)?;
    let b = np3d::tau_form_b(n, k)?;
    let c = np3d::tau_form_c(n, k)?;
    Ok((a - b).norm().max((b - c).norm()).max((a - c).norm()))
}

pub fn forms2d_residual(n: u32, k: f64) -> Result<f64> {
    Ok((np2d::kappa_form_a(n, k)? - np2d::kappa_form_b(n, k)?).norm())
}

const SCALE_RADII: [f64; 4] = [0.25, 0.5, 2.0, 3.0];

fn forms3d_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Forms3d;
    let pts = nk_points(0..=50, &cross_form_k_grid());
    let cross = tally_grid(&pts, forms3d_residual)?;

    let scale_pts = nk_points(0..=20, &[0.0, 0.3, 1.7, 4.0, 9.5]);
    let scaling = tally_grid(&scale_pts, |n, k| {
        let mut worst: f64 = 0.0;
        for r in SCALE_RADII {
            let lhs = np3d::tau(n, k, r)?.value;
            let rhs = np3d::tau(n, k * r, 1.0)?.value;
            worst = worst.max((lhs - rhs).norm());
        }
        Ok(worst)
    })?;

    let h_pts = nk_points(0..=20, &[0.5, 1.0, 2.5, 3.3, 5.0, 10.0]);
    let results = par::try_map(&h_pts, |&(n, k)| {
        Ok::<_, Error>((np3d::hankel_identity_residual(n, k)?, sph_h1(n, k)?.norm()))
    })?;
    let mut hank = Tally::default();
    let mut flagged = 0;
    for (&(n, k), (res, scale)) in h_pts.iter().zip(results) {
        match res {
            HankelResidual::Value(r) => hank.add(n, k, r / scale),
            HankelResidual::NearSingular { .. } => flagged += 1,
        }
    }

    Ok(vec![
        cross.report(s, "cross_form_abc", t(1e-10), None),
        scaling.report(s, "scaling_invariance", t(0.0), None),
        hank.report(
            s,
            "hankel_identity",
            t(1e-10),
            Some(format!(
                "relative to |h_n|; near-singular points skipped: {flagged}"
            )),
        ),
    ])
}

fn forms2d_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Forms2d;
    let pts = nk_points(0..=50, &cross_form_k_grid());
    let cross = tally_grid(&pts, forms2d_residual)?;
    let scale_pts = nk_points(0..=20, &[0.0, 0.3, 1.7, 4.0, 9.5]);
    let scaling = tally_grid(&scale_pts, |n, k| {
        let mut worst: f64 = 0.0;
        for r in SCALE_RADII {
            let lhs = np2d::kappa(n, k, r)?.value;
            let rhs = np2d::kappa(n, k * r, 1.0)?.value;
            worst = worst.max((lhs - rhs).norm());
        }
        Ok(worst)
    })?;
    Ok(vec![
        cross.report(s, "cross_form_ab", t(1e-10), None),
        scaling.report(s, "scaling_invariance", t(0.0), None),
    ])
}

/// `k` values along which the static limits are approached.
pub const STATIC_K: [f64; 4] = [1e-1, 1e-2, 1e-3, 1e-4];

fn limits_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Limits;
    let mut monotone = Tally::default();
    let mut last = Tally::default();
    for n in 0..=20u32 {
        let devs: Vec<f64> = STATIC_K
            .iter()
            .map(|&k| Ok((np3d::tau_form_b(n, k)? - static_limit(n)).norm()))
            .collect::<Result<_>>()?;
        for (i, w) in devs.windows(2).enumerate() {
            monotone.add(n, STATIC_K[i + 1], w[1] / w[0]);
        }
        last.add(n, 1e-4, devs[3]);
    }

    // |kappa_0 - 1/2| <= k^2 |ln(k/2)| + C k^2, residual is the implied C
    let mut n0 = Tally::default();
    for k in [1e-1f64, 1e-2, 1e-3] {
        let dev = (np2d::kappa_form_b(0, k)? - 0.5).norm();
        n0.add(0, k, (dev - k * k * (0.5 * k).ln().abs()) / (k * k));
    }
    // n = 1 carries a logarithm: |kappa_1| / (k^2 (|ln(k/2)| + 1))
    let mut n1 = Tally::default();
    for k in [1e-1f64, 1e-2, 1e-3] {
        let v = np2d::kappa_form_b(1, k)?.norm();
        n1.add(1, k, v / (k * k * ((0.5 * k).ln().abs() + 1.0)));
    }
    // n >= 2: |kappa_n| / k^2 against the cubic-decay scale 1/(4n(n^2-1))
    let mut higher = Tally::default();
    for n in 2..=20u32 {
        let nf = f64::from(n);
        for k in [1e-1, 1e-2, 1e-3] {
            let v = np2d::kappa_form_b(n, k)?.norm();
            higher.add(n, k, v * 4.0 * nf * (nf * nf - 1.0) / (k * k));
        }
    }

    Ok(vec![
        monotone.report(
            s,
            "tau_static_monotone",
            t(1.0),
            Some("ratio of successive deviations along k = 1e-1..1e-4".into()),
        ),
        last.report(s, "tau_static_final", t(1e-3), None),
        n0.report(
            s,
            "kappa_static_n0",
            t(5.0),
            Some("implied constant C".into()),
        ),
        n1.report(s, "kappa_static_n1", t(1.0), None),
        higher.report(
            s,
            "kappa_static_higher",
            t(2.0),
            Some("|kappa| 4n(n^2-1)/k^2".into()),
        ),
    ])
}

fn cbound_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Cbound;
    let ks: Vec<f64> = (0..=60).map(|i| f64::from(i) * 0.5).collect();
    let pts = nk_points(0..=50, &ks);
    let bound = tally_grid(&pts, |n, k| {
        let c = quad::c_nk(n, k)?.value;
        Ok(c.norm() - 1.0 / f64::from(2 * n + 1).sqrt())
    })?;

    let stat = tally_grid(&nk_points(0..=50, &[0.0]), |n, _| {
        let c = quad::c_nk(n, 0.0)?.value;
        let expected = if n == 0 { -1.0 } else { 0.0 };
        Ok((c - expected).norm())
    })?;

    let doubled = QuadratureRule::gauss_legendre(2 * quad::DEFAULT_C_ORDER)?;
    let dk: Vec<f64> = (0..=30).map(f64::from).collect();
    let doubling = tally_grid(&nk_points(0..=50, &dk), |n, k| {
        let a = quad::c_nk(n, k)?.value;
        let b = quad::c_nk_with_rule(n, k, &doubled)?.value;
        Ok((a - b).norm())
    })?;

    let rule = QuadratureRule::gauss_legendre(32)?;
    let mut fh = Tally::default();
    for m in 0..=20u32 {
        for n in 0..=20u32 {
            let v = quad::funk_hecke(|x| Ok(Complex64::new(legendre_p(m, x)?, 0.0)), n, &rule)?;
            let exact = if m == n {
                2.0 * PI * 2.0 / f64::from(2 * n + 1)
            } else {
                0.0
            };
            fh.add(n, f64::from(m), (v - exact).norm());
        }
    }

    let propagation = tally_grid(&pts, |n, k| {
        let lead = np3d::tau_leading(n, k)?;
        Ok((lead - static_limit(n)).norm() - 0.5 * k / f64::from(2 * n + 1).sqrt())
    })?;

    let mut rules = Tally::default();
    for m in [1usize, 2, 3, 4, 7, 8, 16, 33, 64, 128] {
        let r = QuadratureRule::gauss_legendre(m)?;
        let mut worst = (r.weights().iter().sum::<f64>() - 2.0).abs();
        for (x, y) in r.nodes().iter().zip(r.nodes().iter().rev()) {
            worst = worst.max((x + y).abs());
        }
        if r.nodes().windows(2).any(|w| w[0] >= w[1]) || r.weights().iter().any(|&w| w <= 0.0) {
            worst = f64::INFINITY;
        }
        for d in 0..=(2 * m - 1).min(40) {
            let q = r.integrate(|x| x.powi(d as i32));
            let exact = if d % 2 == 0 {
                2.0 / (d as f64 + 1.0)
            } else {
                0.0
            };
            worst = worst.max((q - exact).abs());
        }
        rules.add(m as u32, 0.0, worst);
    }

    Ok(vec![
        bound.report(s, "c_bound", t(1e-12), Some("|c| - 1/sqrt(2n+1)".into())),
        stat.report(s, "c_static", t(1e-14), None),
        doubling.report(s, "c_doubling", t(1e-11), None),
        fh.report(s, "funk_hecke_legendre", t(1e-12), None),
        propagation.report(s, "leading_bound_propagation", t(1e-12), None),
        rules.report(s, "gauss_rule_exactness", t(1e-13), None),
    ])
}

/// Wavenumbers of the oracle comparison.
pub const ORACLE_K: [f64; 5] = [0.5, 1.0, 2.5, 5.0, 10.0];
const FD_PAIRS: usize = 20;
const FD_STEP: f64 = 1e-5;

fn random_unit_3(rng: &mut StdRng) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

/// Relative mismatch between the sphere kernel and a central difference of
/// the 3D fundamental solution along the normal at `x`, over seeded random
/// point pairs.
pub fn sphere_kernel_fd_check(seed: u64) -> Vec<(f64, f64)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(FD_PAIRS);
    while out.len() < FD_PAIRS {
        let x = random_unit_3(&mut rng);
        let y = random_unit_3(&mut rng);
        let diff = [x[0] - y[0], x[1] - y[1], x[2] - y[2]];
        if diff.iter().map(|d| d * d).sum::<f64>().sqrt() < 0.1 {
            continue;
        }
        let k = ORACLE_K[rng.gen_range(0..ORACLE_K.len())];
        let g = |h: f64| {
            oracle::green_3d(
                [diff[0] + h * x[0], diff[1] + h * x[1], diff[2] + h * x[2]],
                k,
            )
        };
        let fd = (g(FD_STEP) - g(-FD_STEP)) / (2.0 * FD_STEP);
        let t = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
        let kernel = oracle::np_kernel_sphere(t, k).expect("t < 1 for separated points");
        out.push((k, (fd - kernel).norm() / kernel.norm()));
    }
    out
}

/// Circle analogue of [`sphere_kernel_fd_check`].
pub fn circle_kernel_fd_check(seed: u64) -> Result<Vec<(f64, f64)>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(FD_PAIRS);
    while out.len() < FD_PAIRS {
        let a: f64 = rng.gen_range(0.0..2.0 * PI);
        let b: f64 = rng.gen_range(0.0..2.0 * PI);
        let theta = (a - b).rem_euclid(2.0 * PI);
        if !(0.1..=2.0 * PI - 0.1).contains(&theta) {
            continue;
        }
        let x = [a.cos(), a.sin()];
        let y = [b.cos(), b.sin()];
        let k = ORACLE_K[rng.gen_range(0..ORACLE_K.len())];
        let g = |h: f64| oracle::green_2d([x[0] + h * x[0] - y[0], x[1] + h * x[1] - y[1]], k);
        let fd = (g(FD_STEP)? - g(-FD_STEP)?) / (2.0 * FD_STEP);
        let kernel = oracle::np_kernel_circle(theta, k)?;
        out.push((k, (fd - kernel).norm() / kernel.norm()));
    }
    Ok(out)
}

const FD_SEED: u64 = 0x5eed_0f9e;

fn oracle3d_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Oracle3d;
    let pts = nk_points(0..=20, &ORACLE_K);
    let eq = tally_grid(&pts, |n, k| {
        Ok((oracle::tau_oracle(n, k)? - np3d::tau_form_b(n, k)?).norm())
    })?;
    let dbl = tally_grid(&pts, |n, k| {
        let a = oracle::tau_oracle(n, k)?;
        let b = oracle::tau_oracle_with_nodes(n, k, 2 * oracle::SPHERE_NODES)?;
        Ok((a - b).norm())
    })?;
    let fd = Tally::from_iter(
        sphere_kernel_fd_check(FD_SEED)
            .into_iter()
            .map(|(k, r)| (0, k, r)),
    );
    Ok(vec![
        eq.report(s, "oracle_vs_formb", t(1e-8), None),
        dbl.report(s, "oracle_doubling", t(1e-8), None),
        fd.report(s, "kernel_finite_difference", t(1e-6), None),
    ])
}

fn oracle2d_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Oracle2d;
    let pts = nk_points(0..=20, &ORACLE_K);
    let eq = tally_grid(&pts, |n, k| {
        Ok((oracle::kappa_oracle(n, k)? - np2d::kappa_form_b(n, k)?).norm())
    })?;
    let dbl = tally_grid(&pts, |n, k| {
        let a = oracle::kappa_oracle(n, k)?;
        let b = oracle::kappa_oracle_with_nodes(n, k, 2 * oracle::CIRCLE_NODES)?;
        Ok((a - b).norm())
    })?;
    let fd = Tally::from_iter(
        circle_kernel_fd_check(FD_SEED)?
            .into_iter()
            .map(|(k, r)| (0, k, r)),
    );
    Ok(vec![
        eq.report(s, "oracle_vs_formb", t(1e-6), None),
        dbl.report(s, "oracle_doubling", t(1e-6), None),
        fd.report(s, "kernel_finite_difference", t(1e-6), None),
    ])
}

/// `|tau - tau_leading| n^{3/2} / k` for the large-order residual check.
pub fn scaled_leading_residual(n: u32, k: f64) -> Result<f64> {
    let exact = np3d::tau_form_b(n, k)?;
    let lead = np3d::tau_leading(n, k)?;
    Ok((exact - lead).norm() * f64::from(n).powf(1.5) / k)
}

pub const LARGE_N: [u32; 4] = [16, 32, 64, 128];

fn asymptotics_suite(t: impl Fn(f64) -> f64) -> Result<Vec<VerificationReport>> {
    let s = Suite::Asymptotics;

    let mut growth = Tally::default();
    let mut bounds = Vec::new();
    for k in [1.0, 5.0, 10.0] {
        let seq: Vec<f64> = LARGE_N
            .iter()
            .map(|&n| scaled_leading_residual(n, k))
            .collect::<Result<_>>()?;
        for (i, w) in seq.windows(2).enumerate() {
            growth.add(LARGE_N[i + 1], k, w[1] / w[0]);
        }
        bounds.push(format!(
            "k={k}: {:.3e}",
            seq.iter().cloned().fold(0.0, f64::max)
        ));
    }

    let mut cubic = Tally::default();
    let k = 0.1;
    for n in 16..=50u32 {
        let nf = f64::from(n);
        let r = np2d::kappa_form_b(n, k)?.norm() * 4.0 * nf * (nf - 1.0) * (nf + 1.0) / (k * k);
        cubic.add(n, k, (r - 1.0).abs());
    }

    let mut ratio = Tally::default();
    for n in [8u32, 16, 32] {
        let r = np2d::kappa_form_b(n, 0.1)?.re / np2d::kappa_large_n(n, 0.1)?.re;
        ratio.add(n, 0.1, (r - 1.0).abs());
    }

    let mut small_k = Tally::default();
    for k in [1e-1, 1e-2, 1e-3] {
        let c = (np2d::kappa_form_b(0, k)? - np2d::kappa_smallk_n0(k)?).norm() / (k * k);
        small_k.add(0, k, c);
    }

    let mut faster = Tally::default();
    for n in 5..=50u32 {
        let r = np2d::kappa_form_b(n, 0.1)?.norm() / np3d::tau_form_b(n, 0.1)?.norm();
        faster.add(n, 0.1, r);
    }

    let mut c_small = Tally::default();
    for n in 1..=10u32 {
        for k in [0.01, 0.05, 0.1] {
            let d = (quad::c_nk(n, k)?.value - quad::c_nk_smallk_n(n, k)?).norm();
            c_small.add(n, k, d / (k * k));
        }
    }

    Ok(vec![
        growth.report(
            s,
            "large_n_residual_3d",
            t(1.0),
            Some(format!(
                "growth ratio of |tau - tau0| n^1.5/k along n=16..128; bounds {}",
                bounds.join(", ")
            )),
        ),
        cubic.report(s, "cubic_decay_2d", t(0.1), None),
        ratio.report(s, "large_n_ratio_2d", t(0.02), None),
        small_k.report(
            s,
            "small_k_n0_2d",
            t(5.0),
            Some("implied constant C".into()),
        ),
        faster.report(
            s,
            "decay_2d_vs_3d",
            t(1.0),
            Some("|kappa_n| / |tau_n| at k = 0.1".into()),
        ),
        c_small.report(
            s,
            "c_small_k_leading",
            t(1.0),
            Some("|c - lead| / k^2".into()),
        ),
        figure_caption_tally()?.report(
            s,
            "figure_captions",
            t(0.0),
            Some("mismatched parameter sets and anchors".into()),
        ),
        csv_stability_tally()?.report(s, "csv_byte_stable", t(0.0), None),
    ])
}

fn sorted_unique(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

fn same_axis(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-12)
}

/// One case per figure; the residual counts parameter-set and anchor
/// mismatches against the captions.
fn figure_caption_tally() -> Result<Tally> {
    let k_axis: Vec<f64> = (0..figures::K_STEPS)
        .map(|i| figures::K_MAX * i as f64 / (figures::K_STEPS - 1) as f64)
        .collect();
    let all_n = |max: u32| (0..=max).map(f64::from).collect::<Vec<_>>();
    let as_f64 = |ns: &[u32]| ns.iter().map(|&n| f64::from(n)).collect::<Vec<_>>();
    let expected: [(Vec<f64>, Vec<f64>); 5] = [
        (as_f64(&figures::FIG1_N), k_axis.clone()),
        (as_f64(&figures::FIG2_N), k_axis.clone()),
        (all_n(figures::FIG3_N_MAX), figures::FIG3_K.to_vec()),
        (as_f64(&figures::FIG4_N), k_axis),
        (all_n(figures::FIG5_N_MAX), figures::FIG5_K.to_vec()),
    ];
    let mut tally = Tally::default();
    for (which, (ns, ks)) in (1u8..=5).zip(expected) {
        let data = figures::figure_data(which)?;
        let got_n = sorted_unique(data.rows.iter().map(|r| f64::from(r.record.n)).collect());
        let got_k = sorted_unique(data.rows.iter().map(|r| r.record.k).collect());
        let mut bad = usize::from(got_n != sorted_unique(ns.clone()))
            + usize::from(!same_axis(&got_k, &sorted_unique(ks.clone())))
            + usize::from(data.rows.len() != ns.len() * ks.len());
        for row in &data.rows {
            let rec = &row.record;
            let anchor_broken = match which {
                1..=3 => rec.k == 0.0 && rec.value.norm() != static_limit(rec.n),
                4 => rec.k == 0.0 && rec.value.norm() != np2d::static_limit(rec.n),
                _ => row.asymptotic.is_some() != (rec.n >= 2),
            };
            bad += usize::from(anchor_broken);
        }
        tally.add(u32::from(which), 0.0, bad as f64);
    }
    Ok(tally)
}

fn render(data: &FigureData) -> Vec<u8> {
    let mut buf = Vec::new();
    data.write_to(&mut buf).expect("writing to memory");
    buf
}

/// One case per figure; the residual is 1 when two evaluations render to
/// different bytes.
fn csv_stability_tally() -> Result<Tally> {
    let mut tally = Tally::default();
    for which in 1u8..=5 {
        let a = render(&figures::figure_data(which)?);
        let b = render(&figures::figure_data(which)?);
        let clean = !a.contains(&b'\r') && a.ends_with(b"\n");
        tally.add(u32::from(which), 0.0, f64::from(u8::from(a != b || !clean)));
    }
    Ok(tally)
}
