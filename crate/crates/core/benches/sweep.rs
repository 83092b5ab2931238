use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use np_spectrum::{np3d, oracle, par};

fn grid() -> Vec<(u32, f64)> {
    (0..=50u32)
        .flat_map(|n| (1..=40).map(move |i| (n, f64::from(i) * 0.5)))
        .collect()
}

fn bench_form_b(c: &mut Criterion) {
    let points = grid();
    let mut g = c.benchmark_group("tau_form_b_grid");
    let eval = |&(n, k): &(u32, f64)| np3d::tau_form_b(n, k).unwrap();
    g.bench_function(BenchmarkId::new("sequential", points.len()), |b| {
        b.iter(|| par::map_sequential(black_box(&points), eval))
    });
    #[cfg(feature = "parallel")]
    g.bench_function(BenchmarkId::new("parallel", points.len()), |b| {
        b.iter(|| par::map_parallel(black_box(&points), eval))
    });
    g.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let points: Vec<(u32, f64)> = (0..=10u32).map(|n| (n, 2.5)).collect();
    let mut g = c.benchmark_group("kappa_oracle");
    g.sample_size(10);
    let eval = |&(n, k): &(u32, f64)| oracle::kappa_oracle(n, k).unwrap();
    g.bench_function("sequential", |b| {
        b.iter(|| par::map_sequential(black_box(&points), eval))
    });
    #[cfg(feature = "parallel")]
    g.bench_function("parallel", |b| {
        b.iter(|| par::map_parallel(black_box(&points), eval))
    });
    g.finish();
}

criterion_group!(benches, bench_form_b, bench_oracle);
criterion_main!(benches);
