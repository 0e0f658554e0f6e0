//! Sequential against rayon for the data-parallel loops. Without the
//! `parallel` feature only the sequential runs are built.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use nilcone::decomposer::{Decomposer, Strategy};
use nilcone::orbit_maps::enumerate_striped;
use nilcone::rep_builder::build_johnson;
use nilcone::rep_type::search_witness;
use nilcone::residues::{enumerate_q, DimensionVector};
use nilcone::Exec;

fn modes() -> Vec<(&'static str, Exec)> {
    vec![
        ("sequential", Exec::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", Exec::Parallel),
    ]
}

fn bench_enumerate_q(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_q");
    for (n, ell) in [(8, 1), (3, 3), (2, 5)] {
        for (name, exec) in modes() {
            group.bench_with_input(
                BenchmarkId::new(name, format!("n{n}_l{ell}")),
                &exec,
                |b, &exec| b.iter(|| enumerate_q(black_box(n), ell, exec)),
            );
        }
    }
    group.finish();
}

fn bench_enumerate_striped(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_striped");
    for (n, ell) in [(3, 2), (2, 4)] {
        let xi = DimensionVector::multiple_of_delta(n, ell, 0);
        for (name, exec) in modes() {
            group.bench_with_input(
                BenchmarkId::new(name, format!("n{n}_l{ell}")),
                &exec,
                |b, &exec| b.iter(|| enumerate_striped(ell, black_box(&xi), exec)),
            );
        }
    }
    group.finish();
}

fn bench_decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose_striped_normal_forms");
    group.sample_size(10);
    let ell = 2;
    let xi = DimensionVector::multiple_of_delta(2, ell, 0);
    let reps: Vec<_> = enumerate_striped(ell, &xi, Exec::Sequential)
        .iter()
        .map(|s| build_johnson(s, ell).expect("striped input"))
        .collect();
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::new(name, reps.len()), &exec, |b, &exec| {
            b.iter(|| {
                // A fresh decomposer so the candidate memo is rebuilt each time.
                let d = Decomposer::new(Strategy::Candidates, exec);
                exec.map(&reps, |r| d.decompose(r).expect("nilpotent").label())
            })
        });
    }
    group.finish();
}

fn bench_witness_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness_search");
    group.sample_size(10);
    for (ell, x) in [(3, 2), (5, 1)] {
        for (name, exec) in modes() {
            group.bench_with_input(
                BenchmarkId::new(name, format!("l{ell}_x{x}")),
                &exec,
                |b, &exec| b.iter(|| search_witness(ell, x, 12, 6, exec)),
            );
        }
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_enumerate_q,
    bench_enumerate_striped,
    bench_decompose,
    bench_witness_search
);
criterion_main!(benches);
