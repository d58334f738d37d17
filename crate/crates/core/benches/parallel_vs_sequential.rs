use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use gdq::classify::{classification_sweep, SweepConfig};
use gdq::enumerate::enumerate_with;
use gdq::Execution;

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, 6), &6, |b, &n| {
            b.iter(|| enumerate_with(black_box(n), exec).unwrap().len())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for max in [3, 5] {
        let config = SweepConfig::new(max);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, max), &config, |b, config| {
                b.iter(|| classification_sweep(black_box(config), exec).unwrap().instances)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration, sweep);
criterion_main!(benches);
