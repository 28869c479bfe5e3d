use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tridom::batch::{solve_batch, solve_batch_sequential};
use tridom::embedding::PlaneGraph;
use tridom::generators::random_triangulation;
use tridom::solver::SolverConfig;

fn graphs(n: usize, count: u64) -> Vec<PlaneGraph> {
    (0..count).map(|s| random_triangulation(n, s)).collect()
}

fn bench_batch(c: &mut Criterion) {
    let cfg = SolverConfig::default();
    let mut group = c.benchmark_group("solve_batch");
    group.sample_size(10);
    for n in [100usize, 400] {
        let gs = graphs(n, 16);
        group.bench_with_input(BenchmarkId::new("sequential", n), &gs, |b, gs| {
            b.iter(|| black_box(solve_batch_sequential(gs, &cfg)))
        });
        // same as sequential when built without the parallel feature
        group.bench_with_input(BenchmarkId::new("parallel", n), &gs, |b, gs| {
            b.iter(|| black_box(solve_batch(gs, &cfg)))
        });
    }
    group.finish();
}

fn bench_single(c: &mut Criterion) {
    let cfg = SolverConfig::default();
    let g = random_triangulation(200, 7);
    c.bench_function("solve_200", |b| {
        b.iter(|| black_box(tridom::solver::solve_graph(&g, &cfg).unwrap()))
    });
}

criterion_group!(benches, bench_batch, bench_single);
criterion_main!(benches);
