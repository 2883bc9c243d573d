use criterion::{black_box, criterion_group, criterion_main, Criterion};

use slopekit::orbits::{default_mixed_torus_table, feasible_buildings, Action};
use slopekit::{count_tight_solid_torus, farey_path, meridian_table, Slope, Vec2};

fn bench_farey_path(c: &mut Criterion) {
    let a: Slope = "355/113".parse().unwrap();
    let b: Slope = "-89/55".parse().unwrap();
    c.bench_function("farey_path 355/113 to -89/55", |bench| {
        bench.iter(|| farey_path(black_box(&a), black_box(&b)).unwrap())
    });
}

fn bench_count_tight(c: &mut Criterion) {
    let s: Slope = "-377/233".parse().unwrap();
    c.bench_function("count_tight_solid_torus -377/233", |bench| {
        bench.iter(|| count_tight_solid_torus(black_box(&s)).unwrap())
    });
}

fn bench_feasible_buildings(c: &mut Criterion) {
    let table = default_mixed_torus_table();
    let pool = ["e3", "e4", "h5", "e5", "h2"];
    c.bench_function("feasible_buildings budget 12", |bench| {
        bench.iter(|| {
            feasible_buildings(
                black_box(Vec2::new(0, 1)),
                Action::from_integer(12),
                &pool,
                &table,
            )
            .unwrap()
        })
    });
}

fn bench_meridian_table(c: &mut Criterion) {
    c.bench_function("meridian_table -50..=50", |bench| {
        bench.iter(|| meridian_table(black_box(-50), black_box(50)))
    });
}

criterion_group!(
    benches,
    bench_farey_path,
    bench_count_tight,
    bench_feasible_buildings,
    bench_meridian_table
);
criterion_main!(benches);
