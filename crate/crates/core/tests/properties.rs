use np_spectrum::quad::{c_nk, QuadratureRule};
use np_spectrum::record::Dimension;
use np_spectrum::specfun::{
    cyl_h1, cyl_h1_prime, cyl_j, cyl_j_prime, legendre_p, sph_h1, sph_h1_prime, sph_j, sph_j_prime,
};
use np_spectrum::sweep::{evaluate_grid, write_csv, MethodChoice, SweepGrid};
use np_spectrum::{np2d, np3d, par, Complex64};
use proptest::prelude::*;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn spherical_wronskian(n in 0u32..=60, t in 0.05f64..40.0) {
        let w = sph_j_prime(n, t).unwrap() * sph_h1(n, t).unwrap()
            - sph_j(n, t).unwrap() * sph_h1_prime(n, t).unwrap();
        prop_assert!((w + I / (t * t)).norm() * t * t <= 1e-12);
    }

    #[test]
    fn cylindrical_wronskian(n in 0u32..=60, t in 0.05f64..40.0) {
        let w = cyl_j_prime(n, t).unwrap() * cyl_h1(n, t).unwrap()
            - cyl_j(n, t).unwrap() * cyl_h1_prime(n, t).unwrap();
        let target = 2.0 / (PI * t);
        prop_assert!((w + I * target).norm() / target <= 1e-12);
    }

    #[test]
    fn bessel_magnitudes_bounded(n in 0u32..=100, t in 0.0f64..100.0) {
        prop_assert!(sph_j(n, t).unwrap().abs() <= 1.0);
        prop_assert!(cyl_j(n, t).unwrap().abs() <= 1.0);
    }

    #[test]
    fn legendre_bounded_and_normalized(n in 0u32..=200, t in -1.0f64..=1.0) {
        prop_assert!(legendre_p(n, t).unwrap().abs() <= 1.0 + 1e-12);
        prop_assert!((legendre_p(n, 1.0).unwrap() - 1.0).abs() <= 1e-12);
        let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((legendre_p(n, -t).unwrap() - parity * legendre_p(n, t).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn gauss_rule_integrates_polynomials(m in 1usize..=40, d in 0u32..80) {
        prop_assume!(d < 2 * m as u32);
        let r = QuadratureRule::gauss_legendre(m).unwrap();
        let q = r.integrate(|x| x.powi(d as i32));
        let exact = if d % 2 == 0 { 2.0 / f64::from(d + 1) } else { 0.0 };
        prop_assert!((q - exact).abs() <= 1e-13);
    }

    #[test]
    fn c_bound(n in 0u32..=80, k in 0.0f64..30.0) {
        let c = c_nk(n, k).unwrap().value;
        prop_assert!(c.norm() <= 1.0 / f64::from(2 * n + 1).sqrt() + 1e-12);
    }

    #[test]
    fn ball_forms_agree(n in 0u32..=50, k in 0.1f64..30.0) {
        let a = np3d::tau_form_a(n, k).unwrap();
        let b = np3d::tau_form_b(n, k).unwrap();
        let c = np3d::tau_form_c(n, k).unwrap();
        prop_assert!((a - b).norm() <= 1e-10);
        prop_assert!((b - c).norm() <= 1e-10);
    }

    #[test]
    fn disk_forms_agree(n in 0u32..=50, k in 0.1f64..30.0) {
        let a = np2d::kappa_form_a(n, k).unwrap();
        let b = np2d::kappa_form_b(n, k).unwrap();
        prop_assert!((a - b).norm() <= 1e-10);
    }

    #[test]
    fn only_the_product_kr_matters(n in 0u32..=30, k in 0.0f64..10.0, r in 0.1f64..3.0) {
        prop_assert_eq!(np3d::tau(n, k, r).unwrap().value, np3d::tau(n, k * r, 1.0).unwrap().value);
        prop_assert_eq!(np2d::kappa(n, k, r).unwrap().value, np2d::kappa(n, k * r, 1.0).unwrap().value);
    }

    #[test]
    fn sweep_shape(
        n_set in prop::collection::btree_set(0u32..=30, 1..4),
        k_max in 0.0f64..10.0,
        steps in 1usize..20,
    ) {
        let n_list: Vec<u32> = n_set.into_iter().rev().collect();
        let grid = SweepGrid {
            dimension: Dimension::Three,
            n_list: n_list.clone(),
            k_min: 0.0,
            k_max: if steps == 1 { 0.0 } else { k_max },
            k_steps: steps,
            method: MethodChoice::Auto,
            radius: 1.0,
        };
        let ks = grid.k_values();
        prop_assert_eq!(ks.len(), steps);
        prop_assert_eq!(ks[0], 0.0);
        prop_assert_eq!(*ks.last().unwrap(), grid.k_max);
        let rows = evaluate_grid(&grid).unwrap();
        prop_assert_eq!(rows.len(), n_list.len() * steps);
        prop_assert!(rows.windows(2).all(|w| (w[0].n, w[0].k) <= (w[1].n, w[1].k)));
    }
}

#[test]
fn csv_is_byte_stable() {
    let grid = SweepGrid {
        dimension: Dimension::Two,
        n_list: vec![0, 3, 7],
        k_min: 0.0,
        k_max: 5.0,
        k_steps: 21,
        method: MethodChoice::B,
        radius: 1.0,
    };
    let render = || {
        let mut buf = Vec::new();
        write_csv(&evaluate_grid(&grid).unwrap(), &mut buf).unwrap();
        buf
    };
    let first = render();
    assert_eq!(first, render());
    let text = String::from_utf8(first).unwrap();
    assert!(!text.contains('\r'));
    assert!(text.lines().all(|l| !l.ends_with(',')));
}

#[test]
fn parallel_and_sequential_agree() {
    let points: Vec<(u32, f64)> = (0..40u32).map(|n| (n, 0.37 * f64::from(n) + 0.1)).collect();
    let f = |&(n, k): &(u32, f64)| np3d::tau_form_b(n, k).unwrap();
    assert_eq!(par::map(&points, f), par::map_sequential(&points, f));
}
