//! Criterion benchmarks for the computational kernels: exact Hecke
//! multiplication, Specht-module ranks, rewriting, and the commutant solve.

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

use heckelab_core::coxeter::FinitePermutation;
use heckelab_core::fqsl2::{self, RelationMode, RepVariant};
use heckelab_core::hecke;
use heckelab_core::laurent::LaurentPoly;
use heckelab_core::specht::{self, Partition};

fn bench_hecke_mul(c: &mut Criterion) {
    let a = hecke::sample_element::<FinitePermutation>(4, 5, 6, 1);
    let b = hecke::sample_element::<FinitePermutation>(4, 5, 6, 2);
    c.bench_function("hecke_mul_s4_sparse", |bench| {
        bench.iter(|| black_box(a.mul(&b).unwrap()))
    });
}

fn bench_laurent_mul(c: &mut Criterion) {
    let p = LaurentPoly::from_terms((-12..=12).map(|k| {
        (k, num_rational_coeff(k))
    }));
    c.bench_function("laurent_mul_dense25", |bench| {
        bench.iter(|| black_box(&p * &p))
    });
}

fn num_rational_coeff(k: i64) -> heckelab_core::laurent::Coeff {
    use num_bigint::BigInt;
    num_rational::BigRational::new(BigInt::from(2 * k + 1), BigInt::from(3))
}

fn bench_specht_d_dimension(c: &mut Criterion) {
    let lambda: Partition = "2,2".parse().unwrap();
    c.bench_function("specht_d_dimension_n4_l2", |bench| {
        bench.iter(|| black_box(specht::d_dimension(&lambda, 2).unwrap()))
    });
}

fn bench_commutant(c: &mut Criterion) {
    let rep = fqsl2::rep_pi(Complex64::new(1.0, 0.0), 0.5, 12, RepVariant::Corrected).unwrap();
    c.bench_function("fq_commutant_n12", |bench| {
        bench.iter(|| black_box(fqsl2::commutant_dim(&rep)))
    });
}

fn bench_normal_form(c: &mut Criterion) {
    let set = fqsl2::relation_set(RelationMode::Corrected);
    let p: fqsl2::NCPoly = "t22*t21*t12*t11*t22*t11".parse().unwrap();
    c.bench_function("fq_normal_form_degree6", |bench| {
        bench.iter(|| black_box(fqsl2::normal_form(&p, &set, fqsl2::DEFAULT_BUDGET).unwrap()))
    });
}

criterion_group!(
    kernels,
    bench_hecke_mul,
    bench_laurent_mul,
    bench_specht_d_dimension,
    bench_commutant,
    bench_normal_form
);
criterion_main!(kernels);
