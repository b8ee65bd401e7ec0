//! Sequential against parallel timings for the three scan-heavy routines.
//! The parallel entries only exist when the `parallel` feature is on
//! (the default); results are identical either way, only the wall clock
//! moves.

use criterion::{criterion_group, criterion_main, Criterion};
use z2z4::construct::{build_cstar, extend};
use z2z4::verify;

fn sphere_scan(c: &mut Criterion) {
    let code = build_cstar();
    code.codewords().unwrap();
    let mut g = c.benchmark_group("sphere_scan");
    g.bench_function("seq", |b| {
        b.iter(|| verify::sphere_check_seq(&code).unwrap())
    });
    #[cfg(feature = "parallel")]
    g.bench_function("par", |b| b.iter(|| verify::sphere_check(&code).unwrap()));
    g.finish();
}

fn arrangement_scan(c: &mut Criterion) {
    let code = extend(&build_cstar()).unwrap();
    code.codewords().unwrap();
    let mut g = c.benchmark_group("arrangement_scan");
    g.sample_size(20);
    g.bench_function("seq", |b| {
        b.iter(|| verify::exists_cyclic_arrangement_seq(&code, 1_000_000).unwrap())
    });
    #[cfg(feature = "parallel")]
    g.bench_function("par", |b| {
        b.iter(|| verify::exists_cyclic_arrangement(&code, 1_000_000).unwrap())
    });
    g.finish();
}

fn closure_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure_search");
    g.sample_size(10);
    g.bench_function("seq", |b| {
        b.iter(|| verify::uniqueness_search_seq().unwrap())
    });
    #[cfg(feature = "parallel")]
    g.bench_function("par", |b| b.iter(|| verify::uniqueness_search().unwrap()));
    g.finish();
}

criterion_group!(benches, sphere_scan, arrangement_scan, closure_search);
criterion_main!(benches);
