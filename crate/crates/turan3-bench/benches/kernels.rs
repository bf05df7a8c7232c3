use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::hint::black_box;
use turan3_bench::{dense_irregular_8, widest_blowup};
use turan3_core::canon::{canonical_form, is_canonical};
use turan3_core::constructions::{bound_check, hn_graph, EdgeCountTable};
use turan3_core::enumerate::enumerate_free;
use turan3_core::patterns::{blowup_balanced, contains, Pattern};

fn bench_canonical(c: &mut Criterion) {
    let dense = dense_irregular_8();
    c.bench_function("canonical_form dense n=8", |b| {
        b.iter(|| canonical_form(black_box(&dense)))
    });
    let symmetric = blowup_balanced(&Pattern::tight_cycle_minus(5).unwrap().graph, 2).unwrap();
    c.bench_function("canonical_form blowup n=10", |b| {
        b.iter(|| canonical_form(black_box(&symmetric)))
    });
    c.bench_function("is_canonical dense n=8", |b| {
        b.iter(|| is_canonical(black_box(&dense)))
    });
}

fn bench_containment(c: &mut Criterion) {
    let (host, pattern) = widest_blowup();
    c.bench_function("contains C11- in C8-[2]", |b| {
        b.iter(|| contains(black_box(&host), black_box(&pattern)))
    });
    let c5m = Pattern::tight_cycle_minus(5).unwrap().graph;
    let h12 = hn_graph(12).unwrap();
    c.bench_function("contains C5- in H12 (absent)", |b| {
        b.iter(|| contains(black_box(&h12), black_box(&c5m)))
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let forbidden = [Pattern::tight_cycle_minus(5).unwrap(), Pattern::k4_minus()];
    c.bench_function("enumerate n=6 {C5-,K4-}", |b| {
        b.iter(|| enumerate_free(black_box(6), black_box(&forbidden), 1).unwrap())
    });
}

fn bench_constructions(c: &mut Criterion) {
    c.bench_function("edge counts to 1e5", |b| {
        b.iter(|| {
            let mut t = EdgeCountTable::new();
            let mut acc = num_bigint::BigUint::from(0u32);
            for n in (1000..100_000).step_by(1000) {
                acc += t.count(black_box(n));
            }
            acc
        })
    });
    let two = BigRational::from(BigInt::from(2));
    c.bench_function("bound sweep to 1e4", |b| {
        b.iter(|| bound_check(black_box(10_000), black_box(&two)).unwrap())
    });
}

fn bench_claims(c: &mut Criterion) {
    let step = BigRational::new(BigInt::from(1), BigInt::from(200));
    c.bench_function("falsify grid 1/200", |b| {
        b.iter(|| turan3_core::claims::falsify_region(black_box(&step)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_canonical,
    bench_containment,
    bench_enumeration,
    bench_constructions,
    bench_claims
);
criterion_main!(benches);
