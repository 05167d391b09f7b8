use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hopfcat::chartab::CharacterTable;
use hopfcat::cyclotomic::Cyclo;
use hopfcat::fusion::{centralizer, Category, Lattice, Method};
use hopfcat::group::parse_group_spec;
use hopfcat::hopf::{build_double, DEFAULT_MAX_ALGEBRA_DIM};

fn bench_cyclotomic(c: &mut Criterion) {
    let a = &Cyclo::root_of_unity(24, 5) + &Cyclo::from_fraction(3, 7);
    let b = &Cyclo::root_of_unity(24, 11) - &Cyclo::root_of_unity(8, 1);
    c.bench_function("cyclo mul z24", |bn| bn.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("cyclo inverse z24", |bn| bn.iter(|| black_box(&a).inverse()));
}

fn bench_chartab(c: &mut Criterion) {
    let mut group = c.benchmark_group("character table");
    for name in ["S3", "Q8", "A4", "S4", "D6"] {
        let g = parse_group_spec(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| CharacterTable::new(g).unwrap())
        });
    }
    group.finish();
}

fn bench_double(c: &mut Criterion) {
    let mut group = c.benchmark_group("double");
    group.sample_size(10);
    for name in ["S3", "Z2xZ2", "Q8"] {
        let g = parse_group_spec(name).unwrap();
        group.bench_with_input(BenchmarkId::new("build", name), &g, |b, g| {
            b.iter(|| build_double(g, DEFAULT_MAX_ALGEBRA_DIM).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("category", name), &g, |b, g| {
            b.iter(|| Category::new(build_double(g, DEFAULT_MAX_ALGEBRA_DIM).unwrap()).unwrap())
        });
    }
    group.finish();
}

fn bench_centralizers(c: &mut Criterion) {
    let g = parse_group_spec("S3").unwrap();
    let cat = Category::new(build_double(&g, DEFAULT_MAX_ALGEBRA_DIM).unwrap()).unwrap();
    let lat = Lattice::build(&cat, 64).unwrap();
    let mut group = c.benchmark_group("S3 centralizers");
    group.sample_size(10);
    for m in Method::ALL {
        group.bench_function(m.name(), |b| {
            b.iter(|| {
                for (d, l) in lat.subcats.iter().zip(&lat.coideals) {
                    black_box(centralizer(&cat, d, m, Some(l)).unwrap());
                }
            })
        });
    }
    group.bench_function("lattice", |b| b.iter(|| Lattice::build(&cat, 64).unwrap()));
    group.finish();
}

criterion_group!(
    name = benches;
    config = Criterion::default().measurement_time(Duration::from_secs(5));
    targets = bench_cyclotomic, bench_chartab, bench_double, bench_centralizers
);
criterion_main!(benches);
