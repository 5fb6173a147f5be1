//! Benchmarks comparing the sequential and work-stealing execution paths
//! on the two data-parallel kernels: whole multiplication tables of the
//! quotient algebras and large single products.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fused_hecke::hecke::{quasi_idempotent_e, symmetriser_lambda, Ambient, EigenvaluePair};
use fused_hecke::par::Parallelism;
use fused_hecke::quotient::{build_context, structure_constants_with, QuotientSpec};
use fused_hecke::ring::QSign;

fn strategies() -> [(&'static str, Parallelism); 2] {
    [("sequential", Parallelism::Sequential), ("rayon", Parallelism::Rayon)]
}

fn bench_structure_constants(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure_constants");
    group.sample_size(10);
    for (label, spec) in [
        ("A_3", QuotientSpec::symmetric_one_boundary(3)),
        ("C_3_2", QuotientSpec::one_boundary_tl(3)),
    ] {
        let ctx = build_context(spec);
        for (name, par) in strategies() {
            group.bench_with_input(BenchmarkId::new(label, name), &par, |b, &par| {
                b.iter(|| structure_constants_with(&ctx, par));
            });
        }
    }
    group.finish();
}

fn bench_large_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("large_products");
    group.sample_size(10);
    let e = quasi_idempotent_e(4, EigenvaluePair::new(QSign::Q, 1));
    let lambda = symmetriser_lambda(Ambient::TypeB(4), QSign::NegQInv, 1, 3);
    for (name, par) in strategies() {
        group.bench_with_input(BenchmarkId::new("E4_times_Lambda", name), &par, |b, &par| {
            b.iter(|| e.mul_with(&lambda, par));
        });
    }
    group.finish();
}

criterion_group!(benches, bench_structure_constants, bench_large_products);
criterion_main!(benches);
