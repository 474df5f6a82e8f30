use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use symlam::{build_pullback, compute_gaps, enumerate_comajors, is_legal_pair, Bounds, SymmetricPair};
use symlam_bench::{seeds, short_chords};

fn legality(c: &mut Criterion) {
    let chords = short_chords();
    c.bench_function("legality/216", |b| {
        b.iter(|| {
            chords
                .iter()
                .filter(|l| is_legal_pair(&SymmetricPair::new((*l).clone())).is_ok_and(|v| v.legal))
                .count()
        })
    });
}

fn pullback(c: &mut Criterion) {
    let mut group = c.benchmark_group("pullback");
    group.sample_size(10);
    for seed in seeds() {
        for depth in [4, 6] {
            group.bench_with_input(BenchmarkId::new(seed.c.to_string(), depth), &depth, |b, &d| {
                b.iter(|| build_pullback(black_box(&seed), d).unwrap().len())
            });
        }
    }
    let ls = build_pullback(&seeds()[0], 6).unwrap();
    group.bench_function("gaps/depth6", |b| b.iter(|| compute_gaps(black_box(&ls)).len()));
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (k, m) in [(3, 1), (4, 2)] {
        group.bench_function(format!("period{k}_preperiod{m}"), |b| {
            b.iter(|| enumerate_comajors(Bounds::new(k, m)).unwrap().records.len())
        });
    }
    group.finish();
}

criterion_group!(benches, legality, pullback, enumeration);
criterion_main!(benches);
