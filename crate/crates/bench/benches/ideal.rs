use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use indset_bench::family;
use indset_core::oracle::DEFAULT_BETTI_VAR_CAP;
use indset_core::{
    betti_table_oracle, dual_has_linear_resolution, ideal_of_independent_sets,
    verify_linear_quotients,
};

fn quotients(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_linear_quotients");
    group.sample_size(20);
    for spec in ["path:12", "cycle:12", "centipede:6"] {
        let (_, order) = ideal_of_independent_sets(&family(spec));
        group.bench_with_input(BenchmarkId::from_parameter(spec), &order, |b, order| {
            b.iter(|| verify_linear_quotients(black_box(order)))
        });
    }
    group.finish();
}

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table_oracle");
    group.sample_size(10);
    for spec in ["path:4", "cycle:5", "complete:5"] {
        let (ideal, _) = ideal_of_independent_sets(&family(spec));
        group.bench_with_input(BenchmarkId::from_parameter(spec), &ideal, |b, ideal| {
            b.iter(|| betti_table_oracle(black_box(ideal), DEFAULT_BETTI_VAR_CAP).unwrap())
        });
    }
    group.finish();
}

fn dual(c: &mut Criterion) {
    let mut group = c.benchmark_group("dual_has_linear_resolution");
    group.sample_size(10);
    for spec in ["complete:8", "path:5"] {
        let g = family(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| dual_has_linear_resolution(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, quotients, betti, dual);
criterion_main!(benches);
