use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use chempoly::exec::Exec;
use chempoly::index::IndexRegistry;
use chempoly::optimize::{sweep, Direction};
use chempoly::oracle::enumerate::{connected_level, seed};
use chempoly::polytope::build_polytope_with;
use chempoly::OrderSize;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn polytope_sweep(c: &mut Criterion) {
    let pairs: Vec<OrderSize> = OrderSize::all_up_to(3, 120);
    let mut group = c.benchmark_group("polytope_sweep_n120");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                let out = exec.map(&pairs, |&ns| build_polytope_with(ns, Exec::Sequential).map(|d| d.vertices.len()));
                black_box(out)
            })
        });
    }
    group.finish();
}

fn single_polytope(c: &mut Criterion) {
    let mut group = c.benchmark_group("polytope_single");
    for (n, m) in [(13, 15), (200, 260), (2000, 2900)] {
        let ns = OrderSize::new(n, m).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{n}_{m}")), &ns, |b, &ns| {
                b.iter(|| black_box(build_polytope_with(ns, exec).unwrap()))
            });
        }
    }
    group.finish();
}

fn optimize_sweep(c: &mut Criterion) {
    let idx = IndexRegistry::standard().lookup("randic").unwrap().clone();
    let mut group = c.benchmark_group("optimize_sweep_n40");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| black_box(sweep(12, 40, &idx, Direction::Max, exec))));
    }
    group.finish();
}

fn oracle_level(c: &mut Criterion) {
    // The public lookup caches whole levels, so drive the generator directly.
    let mut level8 = seed();
    for _ in 1..8 {
        level8 = connected_level(&level8, Exec::Parallel);
    }
    let mut group = c.benchmark_group("oracle_order9");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| black_box(connected_level(&level8, exec).len())));
    }
    group.finish();
}

criterion_group!(benches, polytope_sweep, single_polytope, optimize_sweep, oracle_level);
criterion_main!(benches);
