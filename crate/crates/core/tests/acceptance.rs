//! End-to-end acceptance criteria. Each test prints one PASS/FAIL line.

use std::time::{Duration, Instant};

use np_spectrum::figures::{self, FIG5_HEADER};
use np_spectrum::quad::c_nk;
use np_spectrum::specfun::{
    cyl_h1, cyl_h1_prime, cyl_j, cyl_j_prime, sph_h1, sph_h1_prime, sph_j, sph_j_prime,
};
use np_spectrum::verify::{circle_kernel_fd_check, sphere_kernel_fd_check};
use np_spectrum::{np2d, np3d, oracle, Complex64};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!(
        "criterion {id} {name}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

fn k_grid() -> impl Iterator<Item = f64> {
    (1..=300).map(|i| f64::from(i) / 10.0)
}

#[test]
fn criterion_1_cross_form_equivalence() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 0..=50u32 {
        for k in k_grid() {
            let a = np3d::tau_form_a(n, k).unwrap();
            let b = np3d::tau_form_b(n, k).unwrap();
            let c = np3d::tau_form_c(n, k).unwrap();
            worst = worst
                .max((a - b).norm())
                .max((b - c).norm())
                .max((a - c).norm());
            let a2 = np2d::kappa_form_a(n, k).unwrap();
            let b2 = np2d::kappa_form_b(n, k).unwrap();
            worst = worst.max((a2 - b2).norm());
        }
    }
    let elapsed = start.elapsed();
    report(
        1,
        "cross-form equivalence",
        worst <= 1e-10 && elapsed < Duration::from_secs(10),
        format!("max gap {worst:.3e}, {:.2} s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_2_wronskians() {
    let mut worst: f64 = 0.0;
    for n in 0..=50u32 {
        for t in k_grid() {
            let w = sph_j_prime(n, t).unwrap() * sph_h1(n, t).unwrap()
                - sph_j(n, t).unwrap() * sph_h1_prime(n, t).unwrap();
            let target = -I / (t * t);
            worst = worst.max((w - target).norm() / target.norm());

            let w = cyl_j_prime(n, t).unwrap() * cyl_h1(n, t).unwrap()
                - cyl_j(n, t).unwrap() * cyl_h1_prime(n, t).unwrap();
            let target = -2.0 * I / (std::f64::consts::PI * t);
            worst = worst.max((w - target).norm() / target.norm());
        }
    }
    report(
        2,
        "wronskian residuals",
        worst <= 1e-12,
        format!("max relative {worst:.3e}"),
    );
}

#[test]
fn criterion_3_static_limit_ball() {
    let ks = [1e-1, 1e-2, 1e-3, 1e-4];
    let mut final_worst: f64 = 0.0;
    let mut monotone = true;
    for n in 0..=20u32 {
        let devs: Vec<f64> = ks
            .iter()
            .map(|&k| (np3d::tau_form_b(n, k).unwrap() - np3d::static_limit(n)).norm())
            .collect();
        monotone &= devs.windows(2).all(|w| w[1] < w[0]);
        final_worst = final_worst.max(devs[3]);
    }
    report(
        3,
        "static limit 1/(2(2n+1))",
        final_worst <= 1e-3 && monotone,
        format!("max deviation at k=1e-4 {final_worst:.3e}, monotone {monotone}"),
    );
}

#[test]
fn criterion_4_large_order_structure() {
    let ns = [16u32, 32, 64, 128];
    let mut no_growth = true;
    let mut detail = Vec::new();
    for k in [1.0, 5.0, 10.0] {
        let seq: Vec<f64> = ns
            .iter()
            .map(|&n| {
                let gap =
                    (np3d::tau_form_b(n, k).unwrap() - np3d::tau_leading(n, k).unwrap()).norm();
                gap * f64::from(n).powf(1.5) / k
            })
            .collect();
        no_growth &= seq.windows(2).all(|w| w[1] <= w[0]);
        detail.push(format!("k={k}: {:.2e}..{:.2e}", seq[0], seq[3]));
    }
    let mut c_excess = f64::NEG_INFINITY;
    for n in (0..=50u32).chain(ns) {
        for i in 0..=60 {
            let k = f64::from(i) * 0.5;
            let c = c_nk(n, k).unwrap().value.norm();
            c_excess = c_excess.max(c - 1.0 / f64::from(2 * n + 1).sqrt());
        }
    }
    report(
        4,
        "large-order residual and c bound",
        no_growth && c_excess <= 1e-12,
        format!("{}; max |c| - bound {c_excess:.3e}", detail.join(", ")),
    );
}

#[test]
fn criterion_5_disk_limits() {
    let mut c_max: f64 = 0.0;
    for k in [1e-1f64, 1e-2, 1e-3] {
        let expansion = 0.5 - 0.5 * k * k * (0.5 * k).ln();
        c_max = c_max.max((np2d::kappa_form_b(0, k).unwrap() - expansion).norm() / (k * k));
    }
    let k = 0.1;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for n in 16..=50u32 {
        let nf = f64::from(n);
        let r =
            np2d::kappa_form_b(n, k).unwrap().norm() * 4.0 * nf * (nf - 1.0) * (nf + 1.0) / (k * k);
        lo = lo.min(r);
        hi = hi.max(r);
    }
    report(
        5,
        "disk small-k expansion and cubic decay",
        c_max <= 5.0 && lo >= 0.9 && hi <= 1.1,
        format!("C = {c_max:.4}, scaled band [{lo:.6}, {hi:.6}]"),
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let (mut d3, mut d2): (f64, f64) = (0.0, 0.0);
    for n in 0..=20u32 {
        for k in [0.5, 1.0, 2.5, 5.0, 10.0] {
            d3 = d3
                .max((oracle::tau_oracle(n, k).unwrap() - np3d::tau_form_b(n, k).unwrap()).norm());
            d2 = d2.max(
                (oracle::kappa_oracle(n, k).unwrap() - np2d::kappa_form_b(n, k).unwrap()).norm(),
            );
        }
    }
    let fd3 = sphere_kernel_fd_check(2024);
    let fd2 = circle_kernel_fd_check(2024).unwrap();
    let fd_worst = fd3.iter().chain(&fd2).map(|&(_, r)| r).fold(0.0, f64::max);
    report(
        6,
        "oracle equivalence",
        d3 <= 1e-8 && d2 <= 1e-6 && fd3.len() == 20 && fd2.len() == 20 && fd_worst <= 1e-6,
        format!("ball {d3:.3e}, disk {d2:.3e}, kernel FD {fd_worst:.3e}"),
    );
}

#[test]
fn criterion_7_figures() {
    let dir = tempfile::tempdir().unwrap();
    let start = Instant::now();
    let paths = figures::write_all(dir.path()).unwrap();
    let elapsed = start.elapsed();
    let read = |i: usize| std::fs::read_to_string(&paths[i]).unwrap();
    let fields = |line: &str| line.split(',').map(str::to_string).collect::<Vec<_>>();

    // Fig 3: k = 0 modulus equals the static value exactly
    let mut fig3_exact = true;
    for line in read(2).lines().skip(1) {
        let f = fields(line);
        if f[2] == "0" {
            let n: u32 = f[1].parse().unwrap();
            fig3_exact &= f[6].parse::<f64>().unwrap() == np3d::static_limit(n);
        }
    }

    // Fig 1: n = 0 modulus decreases toward 1/2 as k -> 0
    let n0: Vec<(f64, f64)> = read(0)
        .lines()
        .skip(1)
        .map(fields)
        .filter(|f| f[1] == "0")
        .map(|f| (f[2].parse().unwrap(), f[6].parse().unwrap()))
        .collect();
    let fig1_anchor = n0[0] == (0.0, 0.5)
        && n0[1..6]
            .windows(2)
            .all(|w| (w[0].1 - 0.5).abs() <= (w[1].1 - 0.5).abs());

    // Fig 5: cubic-decay band for n in 16..=36 at k = 0.1
    let text = read(4);
    let mut lines = text.lines();
    let header_ok = lines.next() == Some(FIG5_HEADER);
    let mut band_ok = true;
    for f in lines.map(fields).filter(|f| f[2] == "0.1") {
        let n: u32 = f[1].parse().unwrap();
        if n >= 16 {
            let nf = f64::from(n);
            let r = f[6].parse::<f64>().unwrap() * 4.0 * nf * (nf * nf - 1.0) / 0.01;
            let asym: f64 = f[7].parse().unwrap();
            band_ok &= (0.9..=1.1).contains(&r) && asym < 0.0;
        }
    }

    // qualitative: disk modulus decays in n at every caption k
    let mut decay_ok = true;
    for k in ["0.1", "5.1", "10.1", "15.1"] {
        let moduli: Vec<f64> = text
            .lines()
            .skip(1)
            .map(fields)
            .filter(|f| f[2] == k)
            .map(|f| f[6].parse().unwrap())
            .collect();
        decay_ok &= moduli[moduli.len() - 1] < moduli[moduli.len() / 2];
    }

    report(
        7,
        "figure reproduction",
        paths.len() == 5
            && elapsed < Duration::from_secs(5)
            && fig3_exact
            && fig1_anchor
            && header_ok
            && band_ok
            && decay_ok,
        format!(
            "{:.2} s, fig3 exact {fig3_exact}, fig1 anchor {fig1_anchor}, fig5 band {band_ok}, decay {decay_ok}",
            elapsed.as_secs_f64()
        ),
    );
}
