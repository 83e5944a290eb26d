use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mckay_bench::{extended_icosahedral, generators, group};
use mckay_core::matgroup::embed_det_inverse;
use mckay_core::quiver::build_mckay;
use mckay_core::{CharacterTable, FiniteMatrixGroup, DEFAULT_MAX_ORDER};

fn enumerate(c: &mut Criterion) {
    let gens = generators("binary_icosahedral").generators;
    c.bench_function("enumerate binary_icosahedral", |b| {
        b.iter(|| FiniteMatrixGroup::enumerate(black_box(&gens), DEFAULT_MAX_ORDER).unwrap())
    });
}

fn chartab(c: &mut Criterion) {
    let mut g = c.benchmark_group("chartab");
    g.sample_size(20);
    let bi = group("binary_icosahedral");
    g.bench_function("binary_icosahedral", |b| {
        b.iter(|| CharacterTable::compute(black_box(&bi)).unwrap())
    });
    let ext = extended_icosahedral();
    g.bench_function("binary_icosahedral x zeta6", |b| {
        b.iter(|| CharacterTable::compute(black_box(&ext)).unwrap())
    });
    g.finish();
}

fn quiver(c: &mut Criterion) {
    let ext = extended_icosahedral();
    let table = CharacterTable::compute(&ext).unwrap();
    c.bench_function("build_mckay binary_icosahedral x zeta6", |b| {
        b.iter(|| build_mckay(black_box(&ext), black_box(&table)).unwrap())
    });
    let (image, _) = embed_det_inverse(&ext);
    let table = CharacterTable::compute(&image).unwrap();
    c.bench_function("build_mckay embedded", |b| {
        b.iter(|| build_mckay(black_box(&image), black_box(&table)).unwrap())
    });
}

criterion_group!(benches, enumerate, chartab, quiver);
criterion_main!(benches);
