//! Benchmarks for the hot paths: capped products, huge-exponent powering,
//! total-class assembly, and the detection kernel computation.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;

use swcalc::gf2ring::{st_ring, v_ring};
use swcalc::swc::{total_swc, verify_detection, DetectionCase};
use swcalc_bench::dense_input;

fn bench_mul(c: &mut Criterion) {
    let ring = v_ring(6, Some(8)).unwrap();
    // (1 + v1 + ... + v6)^4 has most monomials up to the cap
    let mut dense = ring.one();
    for i in 0..6 {
        dense = dense.add(&ring.generator(i).unwrap()).unwrap();
    }
    let dense = dense.pow_u64(4).unwrap();
    c.bench_function("mul dense deg<=8 6 vars", |b| {
        b.iter(|| black_box(&dense).mul(black_box(&dense)).unwrap())
    });
}

fn bench_pow(c: &mut Criterion) {
    let ring = st_ring(4, Some(10)).unwrap();
    let mut base = ring.one();
    for i in 4..8 {
        base = base.add(&ring.generator(i).unwrap()).unwrap();
    }
    let exponent = BigInt::parse_bytes(b"123456789012345678901234567890123456789", 10).unwrap();
    c.bench_function("pow astronomically large exponent", |b| {
        b.iter(|| black_box(&base).pow(black_box(&exponent)).unwrap())
    });
}

fn bench_total_class(c: &mut Criterion) {
    let input = dense_input(6, 7);
    c.bench_function("total class rank 6 cap 8", |b| {
        b.iter(|| total_swc(black_box(&input), 8, false).unwrap())
    });
}

fn bench_detection(c: &mut Criterion) {
    c.bench_function("detection kernel (m,n)=(5,3) deg<=4", |b| {
        b.iter(|| verify_detection(DetectionCase::Q1, 5, 3, 4).unwrap())
    });
}

criterion_group!(benches, bench_mul, bench_pow, bench_total_class, bench_detection);
criterion_main!(benches);
