use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use zfdom_bench::fixtures;
use zfdom_core::domination::{total_domination_number, upper_total_domination_number};
use zfdom_core::forcing::{z_grundy_number, zero_forcing_number};
use zfdom_core::graph::parse_graph6;
use zfdom_core::harness::{analyze, Check};
use zfdom_core::powerdom::power_domination_number;
use zfdom_core::Deadline;

fn invariants(c: &mut Criterion) {
    let fixtures = fixtures();
    let mut group = c.benchmark_group("invariants");
    for (name, g) in &fixtures {
        group.bench_with_input(BenchmarkId::new("Z", name), g, |b, g| b.iter(|| zero_forcing_number(black_box(g))));
        group.bench_with_input(BenchmarkId::new("zgrundy", name), g, |b, g| b.iter(|| z_grundy_number(black_box(g))));
        group.bench_with_input(BenchmarkId::new("gammat", name), g, |b, g| {
            b.iter(|| total_domination_number(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("gammat_upper", name), g, |b, g| {
            b.iter(|| upper_total_domination_number(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("powerdom", name), g, |b, g| {
            b.iter(|| power_domination_number(black_box(g)))
        });
    }
    group.finish();
}

fn report(c: &mut Criterion) {
    let corpus: Vec<_> = include_str!("../../core/tests/data/graphs_n1_7.g6")
        .lines()
        .filter(|l| l.starts_with('F'))
        .take(100)
        .map(|l| (l, parse_graph6(l).unwrap()))
        .collect();
    c.bench_function("analyze/100 seven-vertex graphs", |b| {
        b.iter(|| {
            for (s, g) in &corpus {
                black_box(analyze(g, s, 0, &Check::ALL, &Deadline::NONE));
            }
        })
    });
}

criterion_group!(benches, invariants, report);
criterion_main!(benches);
