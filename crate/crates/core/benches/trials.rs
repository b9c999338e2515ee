use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use secant_core::exec::ExecMode;
use secant_core::suite::run_suite;
use secant_core::varieties::catalog;
use secant_core::{dimension_table, ComputeCfg};

fn modes() -> Vec<(&'static str, ExecMode)> {
    let mut v = vec![("sequential", ExecMode::Sequential)];
    #[cfg(feature = "parallel")]
    v.push(("parallel", ExecMode::Parallel));
    v
}

fn catalog_tables(c: &mut Criterion) {
    let entries = catalog();
    let mut group = c.benchmark_group("catalog_tables_k3");
    group.sample_size(10);
    for (name, exec) in modes() {
        let cfg = ComputeCfg {
            exec,
            ..ComputeCfg::default()
        };
        group.bench_function(name, |b| {
            b.iter(|| {
                for x in &entries {
                    black_box(dimension_table(x, 3, &cfg).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn verification_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("verification_suite");
    group.sample_size(10);
    for (name, exec) in modes() {
        let cfg = ComputeCfg {
            exec,
            trials: 8,
            ..ComputeCfg::default()
        };
        group.bench_function(name, |b| {
            b.iter(|| black_box(run_suite(&cfg, &[]).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, catalog_tables, verification_suite);
criterion_main!(benches);
