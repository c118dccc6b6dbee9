use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use minfact_core::{
    build_series, count_arbitrary_factorizations, count_balanced, count_transposition_factorizations,
    h_alpha, solve_fixed_point, verify, IdentityId, Kernel, Orientation, OracleBudget, Partition,
    SeriesTag, TreeBudget,
};

fn closed_forms(c: &mut Criterion) {
    let alpha = Partition::new(vec![5, 4, 3, 2, 2, 1, 1]).unwrap();
    c.bench_function("h_alpha 18 boxes", |b| {
        b.iter(|| h_alpha(black_box(&alpha)))
    });
}

fn transposition_search(c: &mut Criterion) {
    let alpha = Partition::new(vec![2, 2, 1]).unwrap();
    let budget = OracleBudget::default();
    c.bench_function("transposition search (2,2,1)", |b| {
        b.iter(|| count_transposition_factorizations(black_box(&alpha), &budget).unwrap())
    });
}

fn arbitrary_search(c: &mut Criterion) {
    let alpha = Partition::new(vec![2, 2]).unwrap();
    let budget = OracleBudget::default();
    c.bench_function("arbitrary search (2,2) m=3", |b| {
        b.iter(|| count_arbitrary_factorizations(black_box(&alpha), 3, &budget).unwrap())
    });
}

fn series_construction(c: &mut Criterion) {
    c.bench_function("G series m=2 order 6", |b| {
        b.iter(|| build_series(SeriesTag::G, Some(2), black_box(6)).unwrap())
    });
    c.bench_function("H series order 8", |b| {
        b.iter(|| build_series(SeriesTag::H, None, black_box(8)).unwrap())
    });
}

fn identity_verification(c: &mut Criterion) {
    c.bench_function("verify MAIN1 m=3 order 6", |b| {
        b.iter(|| verify(IdentityId::Main1, Some(3), black_box(6)).unwrap())
    });
    c.bench_function("verify KDV order 8", |b| {
        b.iter(|| verify(IdentityId::Kdv, None, black_box(8)).unwrap())
    });
}

fn tree_enumeration(c: &mut Criterion) {
    let alpha = Partition::new(vec![3, 1]).unwrap();
    let budget = TreeBudget::default();
    c.bench_function("balanced trees (3,1) m=2", |b| {
        b.iter_batched(
            || alpha.clone(),
            |a| count_balanced(&a, 2, Orientation::default(), &budget).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn lagrange_solve(c: &mut Criterion) {
    let kernel = Kernel::power(3);
    c.bench_function("fixed point power kernel m=3 order 6", |b| {
        b.iter(|| solve_fixed_point(black_box(&kernel), 6))
    });
}

criterion_group!(
    benches,
    closed_forms,
    transposition_search,
    arbitrary_search,
    series_construction,
    identity_verification,
    tree_enumeration,
    lagrange_solve
);
criterion_main!(benches);
