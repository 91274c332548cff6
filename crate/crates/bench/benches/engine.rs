use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use isotypic::branching::{reciprocity_check, restrict_gl_to_so};
use isotypic::characters::{dim, so_character};
use isotypic::fock::{harmonic_project_rank1, verify_sp2n};
use isotypic::lr::{lr_coefficient, tensor_multi};
use isotypic::stable::stable_tensor;
use isotypic::{Group, Signature};
use isotypic_bench::{dense_homogeneous, remark_factors};

fn lr(c: &mut Criterion) {
    let lambda = Signature::new(vec![3, 2, 1]);
    let nu = Signature::new(vec![4, 3, 2, 2, 1]);
    c.bench_function("lr_coefficient 321 x 321", |b| b.iter(|| lr_coefficient(black_box(&lambda), &lambda, &nu)));
    let factors = remark_factors();
    let mut group = c.benchmark_group("tensor_multi remark");
    for k in [2, 3, 4, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| b.iter(|| tensor_multi(&factors, k)));
    }
    group.finish();
    c.bench_function("stable_tensor remark", |b| b.iter(|| stable_tensor(black_box(&factors))));
}

fn characters(c: &mut Criterion) {
    let mu = Signature::new(vec![3, 1]);
    c.bench_function("dim SO(9) (3,1)", |b| b.iter(|| dim(&Group::so(9), black_box(&mu))));
    c.bench_function("so_character (3,1) k=7", |b| b.iter(|| so_character(black_box(&mu), 7)));
    let lambda = Signature::new(vec![3, 2]);
    c.bench_function("restrict (3,2) to SO(7)", |b| b.iter(|| restrict_gl_to_so(black_box(&lambda), 7)));
    c.bench_function("reciprocity (2,2) n=2 k=5", |b| {
        b.iter(|| reciprocity_check(black_box(&Signature::new(vec![2, 2])), 2, 5))
    });
}

fn fock(c: &mut Criterion) {
    let mut group = c.benchmark_group("fock");
    group.sample_size(10);
    group.bench_function("verify_sp2n n=2 k=5", |b| b.iter(|| verify_sp2n(2, 5)));
    let f = dense_homogeneous(4, 6);
    group.bench_function("harmonic_project degree 6 k=4", |b| b.iter(|| harmonic_project_rank1(black_box(&f), 4)));
    group.finish();
}

criterion_group!(benches, lr, characters, fock);
criterion_main!(benches);
