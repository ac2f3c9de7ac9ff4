//! Timings for the hot paths: complex construction, the normalization
//! retraction, and integral homology via Smith normal form.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use trihom::chain::{build_ce_complex, BuildOptions};
use trihom::homology::{homology_over_field, homology_over_Z};
use trihom::morse::{normalization_reduce, normalized_complex_direct};
use trihom::{CoefficientRing, LieAlgebra};

fn bench_build(c: &mut Criterion) {
    let ring = CoefficientRing::Integers;
    c.bench_function("build sol4 over Z", |b| {
        b.iter(|| build_ce_complex(Arc::new(LieAlgebra::sol(4)), &ring).unwrap())
    });
}

fn bench_reduce(c: &mut Criterion) {
    let ring = CoefficientRing::Integers;
    let full = build_ce_complex(Arc::new(LieAlgebra::sol(4)), &ring).unwrap();
    c.bench_function("normalization reduce sol4 over Z", |b| {
        b.iter(|| normalization_reduce(&full).unwrap())
    });
    let z2 = CoefficientRing::modular(2).unwrap();
    c.bench_function("direct critical complex sol5 over Z/2", |b| {
        b.iter(|| {
            normalized_complex_direct(
                Arc::new(LieAlgebra::sol(5)),
                &z2,
                BuildOptions::default(),
            )
            .unwrap()
        })
    });
}

fn bench_homology(c: &mut Criterion) {
    let ring = CoefficientRing::Integers;
    let full = build_ce_complex(Arc::new(LieAlgebra::sol(4)), &ring).unwrap();
    let reduced = normalization_reduce(&full).unwrap();
    c.bench_function("integral homology of reduced sol4", |b| {
        b.iter(|| homology_over_Z(&reduced).unwrap())
    });
    let z2 = CoefficientRing::modular(2).unwrap();
    let critical =
        normalized_complex_direct(Arc::new(LieAlgebra::sol(5)), &z2, BuildOptions::default())
            .unwrap();
    c.bench_function("mod-2 homology of critical sol5", |b| {
        b.iter(|| homology_over_field(&critical).unwrap())
    });
}

criterion_group!(benches, bench_build, bench_reduce, bench_homology);
criterion_main!(benches);
