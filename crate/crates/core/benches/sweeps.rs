//! Sweep timings on the rayon pool versus a single-thread pool (which runs the
//! same code path without parallel speedup).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use tau_cotorsion::algebra::Algebra;
use tau_cotorsion::context::Context;
use tau_cotorsion::modrep::EnumConfig;
use tau_cotorsion::suite::{count_check, tau_e_check};
use tau_cotorsion::twoterm::enumerate_two_term_silting;

fn fresh(text: &str) -> Context {
    Context::new(Algebra::from_json(text).unwrap(), EnumConfig::default()).unwrap()
}

fn sweeps(c: &mut Criterion) {
    let a3 = include_str!("../fixtures/a3.json");
    let a3_rel = include_str!("../fixtures/a3_rel.json");
    let pools = [("single", ThreadPoolBuilder::new().num_threads(1).build().unwrap()), ("default", ThreadPoolBuilder::new().build().unwrap())];
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (label, pool) in &pools {
        group.bench_function(BenchmarkId::new("context-and-tables/a3", label), |b| b.iter(|| pool.install(|| tau_e_check(&fresh(a3)))));
        group.bench_function(BenchmarkId::new("silting/a3", label), |b| b.iter(|| pool.install(|| enumerate_two_term_silting(&fresh(a3)).unwrap().len())));
        group.bench_function(BenchmarkId::new("counts/a3_rel", label), |b| b.iter(|| pool.install(|| count_check(&fresh(a3_rel), 0).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
