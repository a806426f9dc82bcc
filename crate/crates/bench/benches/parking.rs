use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use naples_core::characterize::{complete_membership_rtl, decide_knaples_structural};
use naples_core::enumerate::{Counter, TableKind};
use naples_core::simulate::is_k_naples;
use naples_core::strategize::{min_ones_strategy, min_step_strategy};
use naples_core::{park, Census, Preference, RuleVector};

fn simulation(c: &mut Criterion) {
    let a = Preference::full((1..=200).map(|i| 200 - (i * 37) % 150).collect()).unwrap();
    let rho = RuleVector::constant(3, a.len());
    c.bench_function("park 200 cars k=3", |b| b.iter(|| park(black_box(&a), black_box(&rho)).unwrap()));
    c.bench_function("structural 200 cars k=3", |b| b.iter(|| decide_knaples_structural(black_box(&a), 3).unwrap()));
    let complete = Preference::full(vec![7, 8, 7, 5, 8, 4, 5, 2]).unwrap();
    c.bench_function("rtl membership n=8", |b| b.iter(|| complete_membership_rtl(black_box(&complete), 4).unwrap()));
}

fn strategies(c: &mut Criterion) {
    let a = Preference::full(vec![5, 10, 11, 1, 5, 11, 10, 4, 3, 9, 10, 8, 3]).unwrap();
    c.bench_function("min-step strategy n=13", |b| b.iter(|| min_step_strategy(black_box(&a)).unwrap()));
    c.bench_function("min-ones strategy n=13", |b| b.iter(|| min_ones_strategy(black_box(&a)).unwrap()));
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("1-Naples n=6", |b| b.iter(|| Census::new(6).count(|a| is_k_naples(a, 1)).unwrap()));
    g.bench_function("1-Naples n=7", |b| b.iter(|| Census::new(7).count(|a| is_k_naples(a, 1)).unwrap()));
    g.finish();
}

fn tables(c: &mut Criterion) {
    for kind in [TableKind::ThetaEq, TableKind::BigT, TableKind::Upsilon0, TableKind::Knap] {
        c.bench_function(&format!("table {kind} n<=16"), |b| b.iter(|| Counter::new().table(kind, 16).unwrap()));
    }
}

criterion_group!(benches, simulation, strategies, census, tables);
criterion_main!(benches);
