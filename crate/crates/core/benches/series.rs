use borwein_core::par::ExecMode;
use borwein_core::qseries::borwein_coeffs_with;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn borwein_expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("borwein_coeffs");
    group.sample_size(10);
    for &(t, m, order) in &[(5usize, 6usize, 2000usize), (2, 24, 4000), (23, 1, 20000)] {
        let label = format!("t{t}_m{m}_n{order}");
        for (name, mode) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
            group.bench_with_input(BenchmarkId::new(name, &label), &(t, m, order), |b, &(t, m, order)| {
                b.iter(|| borwein_coeffs_with(t, m, order, mode))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, borwein_expansion);
criterion_main!(benches);
