use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tubealg::algebra::{associativity_check, star_iso_check};
use tubealg::annular_bh::tube_cutdown;
use tubealg::rep::decompose_regular;
use tubealg::{fixtures, AnnularAlgebra, Coverage, TubeAlgebra, VerifyConfig};

fn tube(c: &mut Criterion) {
    let s3 = TubeAlgebra::new(fixtures::s3_inflated_semion()).unwrap();
    let cfg = VerifyConfig::default();
    c.bench_function("tube/s3/associativity", |b| {
        b.iter(|| associativity_check(black_box(&s3), Coverage::Exhaustive, &cfg).unwrap())
    });
    c.bench_function("tube/s3/star_iso", |b| b.iter(|| star_iso_check(black_box(&s3)).unwrap()));
    c.bench_function("tube/s3/simple_count", |b| b.iter(|| black_box(&s3).simple_count()));
    c.bench_function("tube/s3/decompose_regular", |b| b.iter(|| decompose_regular(black_box(&s3), 0).unwrap()));
    c.bench_function("tube/s4/build", |b| b.iter(|| TubeAlgebra::new(fixtures::s4_inflated_semion()).unwrap()));
}

fn annular(c: &mut Criterion) {
    let setup = fixtures::bh_s3();
    c.bench_function("bh/s3/build", |b| b.iter(|| AnnularAlgebra::new(black_box(setup.clone())).unwrap()));
    let a = AnnularAlgebra::new(setup.clone()).unwrap();
    c.bench_function("bh/s3/star_iso", |b| b.iter(|| star_iso_check(black_box(&a)).unwrap()));
    let mut g = c.benchmark_group("bh/s3/slow");
    g.sample_size(10);
    g.bench_function("tube_cutdown", |b| b.iter(|| tube_cutdown(black_box(&setup), 0).unwrap()));
    g.finish();
}

criterion_group!(benches, tube, annular);
criterion_main!(benches);
