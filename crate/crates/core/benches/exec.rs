//! Sequential vs. rayon execution for the three data-parallel hot spots:
//! the `3^n` sign-vector sweep, subset enumeration in the builders, and
//! Möbius table rows.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dissect_core::builders::{build_hyperplane_with, build_toric_with, BuildOptions};
use dissect_core::corpus::{generic_hyperplanes, random_toric_2d};
use dissect_core::oracle::enumerate_faces_with;
use dissect_core::poset::mobius_table_with;
use dissect_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn face_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_faces");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(10));
    for n in [6, 8, 9] {
        let spec = generic_hyperplanes(n as u64, 3, n);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &spec, |b, spec| {
                b.iter(|| enumerate_faces_with(black_box(spec), 12, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn builders(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for n in [8, 12, 16] {
        let spec = generic_hyperplanes(100 + n as u64, 3, n);
        for (name, exec) in MODES {
            let opts = BuildOptions { exec, ..BuildOptions::default() };
            group.bench_with_input(BenchmarkId::new(format!("hyperplane/{name}"), n), &spec, |b, spec| {
                b.iter(|| build_hyperplane_with(black_box(spec), &opts).unwrap())
            });
        }
    }
    let torus = random_toric_2d(4);
    for (name, exec) in MODES {
        let opts = BuildOptions { exec, ..BuildOptions::default() };
        group.bench_function(BenchmarkId::new("toric", name), |b| b.iter(|| build_toric_with(black_box(&torus), &opts).unwrap()));
    }
    group.finish();
}

fn mobius(c: &mut Criterion) {
    let mut group = c.benchmark_group("mobius_table");
    group.sample_size(10);
    for n in [10, 14] {
        let model = build_hyperplane_with(&generic_hyperplanes(200 + n as u64, 3, n), &BuildOptions::default()).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, model.flats().len()), model.poset(), |b, p| {
                b.iter(|| mobius_table_with(black_box(p), exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, face_sweep, builders, mobius);
criterion_main!(benches);
