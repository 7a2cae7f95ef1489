//! Throughput comparison between the library's data-parallel assembly (rayon,
//! on by default) and a sequential fold over the same public pieces.
//!
//! The `parallel` feature is a compile-time switch, so one binary cannot run
//! both builds; instead the "sequential-fold" case reassembles the identical
//! result with an explicit loop, which is what the library does when built
//! with `--no-default-features`. Re-run `cargo bench --no-default-features`
//! to get the library path itself without rayon; on a single-core host the
//! three numbers should agree up to pool overhead.

use criterion::{criterion_group, criterion_main, Criterion};

use fanocoh::classify::obstruction_check;
use fanocoh::koszul::{koszul_table, CIProblem, CoefficientBundle};
use fanocoh::plethysm::{sym_rank, wedge_sum, wedge_symd, BundleSpec, SearchOptions};
use fanocoh::ModuleSum;

fn wedge_assembly(c: &mut Criterion) {
    let spec = BundleSpec::new(3, vec![3, 3]).unwrap();
    let t = 10u64;
    // Warm the global ∧^t Sym^d memo so every case below measures assembly
    // (tensor products and merges), not one-time table construction.
    wedge_sum(&spec, t).unwrap();

    let mut g = c.benchmark_group("wedge-assembly");
    g.bench_function("library", |b| b.iter(|| wedge_sum(&spec, t).unwrap()));
    g.bench_function("sequential-fold", |b| {
        b.iter(|| {
            let m = sym_rank(3, 3).unwrap();
            let mut out = ModuleSum::new(3);
            for t1 in t.saturating_sub(m)..=m.min(t) {
                let left = wedge_symd(t1, 3, 3).unwrap();
                let right = wedge_symd(t - t1, 3, 3).unwrap();
                out.merge(&left.tensor(&right).unwrap()).unwrap();
            }
            out
        })
    });
    g.finish();
}

fn koszul_tables(c: &mut Criterion) {
    let prob = CIProblem::new(8, vec![2, 2], 2).unwrap();
    let sym2 = CoefficientBundle::sym_sigma(2);
    koszul_table(&prob, &sym2, 0).unwrap();

    let mut g = c.benchmark_group("koszul-table");
    g.sample_size(20);
    g.bench_function("two-quadrics-r2", |b| {
        b.iter(|| koszul_table(&prob, &sym2, 0).unwrap())
    });
    g.finish();
}

fn obstruction_scan(c: &mut Criterion) {
    let pruned = SearchOptions::default();
    let exhaustive = SearchOptions {
        sym_row_bound: false,
        ..SearchOptions::default()
    };
    obstruction_check(11, &[2, 2, 2], 3, &exhaustive).unwrap();

    let mut g = c.benchmark_group("obstruction-scan");
    g.sample_size(20);
    g.bench_function("case3-pruned", |b| {
        b.iter(|| obstruction_check(11, &[2, 2, 2], 3, &pruned).unwrap())
    });
    g.bench_function("case3-exhaustive", |b| {
        b.iter(|| obstruction_check(11, &[2, 2, 2], 3, &exhaustive).unwrap())
    });
    g.finish();
}

criterion_group!(benches, wedge_assembly, koszul_tables, obstruction_scan);
criterion_main!(benches);
