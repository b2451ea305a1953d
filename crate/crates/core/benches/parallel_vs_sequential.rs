use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use itype::check::{check_many, CheckConfig};
use itype::enumerate::{enumerate_solutions, enumerate_solutions_with};
use itype::Execution;

const STRATEGIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_n4");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| enumerate_solutions_with(black_box(4), true, exec).unwrap())
        });
    }
    group.finish();
}

fn census_check(c: &mut Criterion) {
    let census = enumerate_solutions(3, false).unwrap().solutions;
    let cfg = CheckConfig {
        word_length: 4,
        ..CheckConfig::default()
    };
    let mut group = c.benchmark_group("check_census_n3");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| check_many(black_box(&census), &cfg, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, census_check);
criterion_main!(benches);
