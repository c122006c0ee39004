use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qident_core::identities::{check, sides, Params};
use qident_core::poly::p;
use qident_core::qfun::{qbinom, qbinom_uncached};

fn poly_mul(c: &mut Criterion) {
    let a = p("1 + q*z + q^2*A + q^3*B*z^-1 + q^5*C - q^7*A*B");
    let mut g = c.benchmark_group("poly_mul");
    for k in [4u32, 8] {
        let x = a.pow(k);
        g.bench_with_input(BenchmarkId::from_parameter(k), &x, |b, x| b.iter(|| black_box(x * x)));
    }
    g.finish();
}

fn q_binomial(c: &mut Criterion) {
    let mut g = c.benchmark_group("qbinom");
    for n in [20i64, 40] {
        g.bench_with_input(BenchmarkId::new("fresh", n), &n, |b, &n| b.iter(|| qbinom_uncached(black_box(n), n / 2)));
        // memo hit plus q -> q^2
        g.bench_with_input(BenchmarkId::new("memo", n), &n, |b, &n| b.iter(|| qbinom(black_box(n), n / 2, 2)));
    }
    g.finish();
}

fn theorem4(c: &mut Criterion) {
    let mut g = c.benchmark_group("thm4");
    g.sample_size(10);
    for l in [4i64, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(l), &l, |b, &l| b.iter(|| sides::thm4_4_4(black_box(l))));
    }
    g.finish();
}

fn key_identity(c: &mut Criterion) {
    let mut g = c.benchmark_group("key-3.7");
    g.sample_size(10);
    for l in [4i64, 8] {
        let params: Params = [("L".to_string(), l), ("max_ijk".to_string(), 2)].into();
        g.bench_with_input(BenchmarkId::from_parameter(l), &params, |b, params| b.iter(|| check("key-3.7", params, 1).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, poly_mul, q_binomial, theorem4, key_identity);
criterion_main!(benches);
