use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use g2crystal::rmatrix::r_apply;
use g2crystal::sca::{scatter, DEFAULT_STEP_CAP};
use g2crystal::{Automaton, CrystalElement, Letter};
use g2crystal_bench::{letter_pairs, two_soliton_state};

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for l in [1, 3, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(l), &l, |b, &l| {
            b.iter(|| CrystalElement::enumerate(black_box(l)).unwrap())
        });
    }
    g.finish();
}

fn r_matrix(c: &mut Criterion) {
    c.bench_function("r_apply B_1 ⊗ B_1", |b| {
        let pairs = letter_pairs();
        b.iter(|| {
            for &(x, y) in &pairs {
                black_box(r_apply(&x.element(), y).unwrap());
            }
        })
    });
    let elements = CrystalElement::enumerate(3).unwrap();
    c.bench_function("r_apply B_3 ⊗ B_1", |b| {
        b.iter(|| {
            for e in &elements {
                for y in Letter::ALL {
                    black_box(r_apply(e, y).unwrap());
                }
            }
        })
    });
}

fn evolve(c: &mut Criterion) {
    let p = two_soliton_state();
    c.bench_function("evolve 55 cells, carrier 10, memo warm", |b| {
        let mut auto = Automaton::new(10).unwrap();
        b.iter(|| auto.evolve(black_box(&p)).unwrap())
    });
    c.bench_function("scatter two solitons to separation", |b| {
        b.iter(|| scatter(black_box(&p), 10, DEFAULT_STEP_CAP).unwrap())
    });
}

criterion_group!(benches, enumerate, r_matrix, evolve);
criterion_main!(benches);
