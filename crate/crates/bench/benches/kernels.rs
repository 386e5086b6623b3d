use std::f64::consts::PI;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyperwave::relativity::{trace_table, Convention, FourVector};
use hyperwave::scattering::{amplitude_terms, evaluate_mott, Recoil};
use hyperwave::waves::{discrete_group_check, mat_exp, quaternion_wave};
use hyperwave_bench as fx;

fn kernels(c: &mut Criterion) {
    c.bench_function("trace_table", |b| {
        b.iter(|| trace_table(black_box(Convention::New)))
    });

    let a = fx::exponent();
    c.bench_function("mat_exp", |b| b.iter(|| mat_exp(black_box(&a))));

    let k = fx::kinematics();
    c.bench_function("amplitude_terms", |b| {
        b.iter(|| amplitude_terms(black_box(&k)))
    });

    c.bench_function("mott_point", |b| {
        b.iter(|| evaluate_mott(1.0, 1e4, 1.0, black_box(PI / 2.0), Recoil::Exact))
    });

    let spec = fx::wave_spec(2);
    let x = FourVector::new(0.4, -0.3, 0.8, 0.1);
    c.bench_function("quaternion_wave", |b| {
        b.iter(|| quaternion_wave(black_box(&x), &spec))
    });

    let p = fx::momentum();
    c.bench_function("discrete_group_check", |b| {
        b.iter(|| discrete_group_check(black_box(&x), &p))
    });
}

criterion_group!(benches, kernels);
criterion_main!(benches);
