use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use tnnflag::algebra::int;
use tnnflag::membership::{decide_tnn, decide_trop, propagate_three_term, psi};
use tnnflag::plucker::{check_relation, generate_relations};
use tnnflag::Cell;
use tnnflag_bench::{point, top_cell, trop_point, weights};

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("cell");
    for n in [3, 4, 5] {
        let (v, w) = (tnnflag::Permutation::identity(n), tnnflag::Permutation::longest(n));
        g.bench_with_input(BenchmarkId::new("new", n), &n, |b, _| {
            b.iter(|| Cell::new(black_box(&v), black_box(&w)))
        });
    }
    g.finish();
}

fn parameterization(c: &mut Criterion) {
    let mut g = c.benchmark_group("phi");
    for n in [3, 4, 5] {
        let cell = top_cell(n);
        let a = weights(&cell, 1);
        let p = point(&cell, 1);
        g.bench_with_input(BenchmarkId::new("phi", n), &n, |b, _| {
            b.iter(|| cell.phi(black_box(&a)))
        });
        g.bench_with_input(BenchmarkId::new("psi", n), &n, |b, _| {
            b.iter(|| psi(cell.v(), cell.w(), black_box(&p)))
        });
    }
    g.finish();
}

fn decisions(c: &mut Criterion) {
    let mut g = c.benchmark_group("decide");
    for n in [3, 4, 5] {
        let cell = top_cell(n);
        let p = point(&cell, 2);
        let t = trop_point(&cell, 2);
        g.bench_with_input(BenchmarkId::new("classical", n), &n, |b, _| {
            b.iter(|| decide_tnn(black_box(&p)))
        });
        g.bench_with_input(BenchmarkId::new("tropical", n), &n, |b, _| {
            b.iter(|| decide_trop(black_box(&t)))
        });
        g.bench_with_input(BenchmarkId::new("propagate", n), &n, |b, _| {
            b.iter(|| propagate_three_term(black_box(&p), cell.v(), cell.w()))
        });
    }
    g.finish();
}

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations");
    for n in [4, 5, 6] {
        g.bench_with_input(BenchmarkId::new("generate", n), &n, |b, &n| {
            b.iter(|| generate_relations(n, false))
        });
    }
    let p = point(&top_cell(5), 3);
    let rels = generate_relations(5, false);
    g.bench_function("check_all_5", |b| {
        b.iter(|| rels.iter().all(|r| check_relation(r, black_box(&p)) == int(0)))
    });
    g.finish();
}

criterion_group!(benches, construction, parameterization, decisions, relations);
criterion_main!(benches);
