use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oddchar_bench::{gl_inputs, odd_inputs};
use oddchar_core::oracle::{degree, restriction_multiplicities, sylow2_subgroup};
use oddchar_core::{alpha_sn, alpha_sn_inverse, sharp_glu, sharp_glu_inverse, sharp_sn, star_sn};

fn symmetric(c: &mut Criterion) {
    let mut group = c.benchmark_group("symmetric");
    for n in [8usize, 16, 24] {
        let inputs = odd_inputs(n);
        group.bench_with_input(BenchmarkId::new("star", n), &inputs, |b, xs| {
            b.iter(|| xs.iter().map(|l| star_sn(black_box(l)).unwrap()).collect::<Vec<_>>())
        });
        group.bench_with_input(BenchmarkId::new("alpha_round_trip", n), &inputs, |b, xs| {
            b.iter(|| {
                xs.iter().map(|l| alpha_sn_inverse(&alpha_sn(black_box(l)).unwrap()).unwrap()).collect::<Vec<_>>()
            })
        });
        group.bench_with_input(BenchmarkId::new("sharp", n), &inputs, |b, xs| {
            b.iter(|| xs.iter().map(|l| sharp_sn(black_box(l)).unwrap()).collect::<Vec<_>>())
        });
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    group.sample_size(10);
    let lambda = odd_inputs(20).pop().unwrap();
    group.bench_function("hook_length_degree_20", |b| b.iter(|| degree(black_box(&lambda))));
    let p8 = sylow2_subgroup(8);
    let lambda = odd_inputs(8)[3].clone();
    group.bench_function("sylow_restriction_8", |b| {
        b.iter(|| restriction_multiplicities(black_box(&lambda), &p8).unwrap())
    });
    group.finish();
}

fn linear(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear");
    for n in [3usize, 5, 7] {
        let inputs = gl_inputs(n, 5);
        group.bench_with_input(BenchmarkId::new("sharp_glu_round_trip", n), &inputs, |b, xs| {
            b.iter(|| {
                xs.iter().map(|l| sharp_glu_inverse(&sharp_glu(black_box(l)).unwrap()).unwrap()).collect::<Vec<_>>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, symmetric, oracles, linear);
criterion_main!(benches);
