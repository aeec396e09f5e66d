use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use metridim_bench::connected_gnp;
use metridim_core::solvers::Budget;
use metridim_core::{
    build_pair_cover, estimate_resolve_probability, exact_beta, greedy_resolving, is_resolving,
};

fn bench_verification(c: &mut Criterion) {
    let g = connected_gnp(256, 0.5, 3);
    let set: Vec<u32> = (0..20).map(|i| i * 12).collect();
    c.bench_function("is_resolving/n=256,r=20", |b| {
        b.iter(|| is_resolving(&g, black_box(&set)).unwrap())
    });
}

fn bench_pair_cover(c: &mut Criterion) {
    let g = connected_gnp(128, 0.3, 5);
    c.bench_function("pair_cover/n=128", |b| {
        b.iter(|| build_pair_cover(&g).unwrap())
    });
}

fn bench_solvers(c: &mut Criterion) {
    let g64 = connected_gnp(64, 0.3, 9);
    c.bench_function("greedy/n=64", |b| {
        b.iter(|| greedy_resolving(&g64).unwrap())
    });

    let g16 = connected_gnp(16, 0.4, 13);
    c.bench_function("exact/n=16", |b| {
        b.iter(|| exact_beta(&g16, &Budget::default()).unwrap())
    });

    let g128 = connected_gnp(128, 0.5, 1);
    c.bench_function("estimate_resolve_probability/n=128,w=18,t=10", |b| {
        b.iter(|| estimate_resolve_probability(&g128, 18, 10, black_box(0xCAFE)).unwrap())
    });
}

criterion_group!(benches, bench_verification, bench_pair_cover, bench_solvers);
criterion_main!(benches);
