use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use wbrauer::rational::rat;
use wbrauer::suites;
use wbrauer::tensor::endomorphism_dimension;
use wbrauer::tower::{omega_extract, y_elem};
use wbrauer::word::Gen;
use wbrauer_bench::{b33, generic_delta, space_2211};

fn diagram_products(c: &mut Criterion) {
    let alg = b33();
    let basis = alg.basis().unwrap();
    c.bench_function("compose_all_pairs_b33_sample", |b| {
        b.iter(|| {
            let mut acc = 0u32;
            for d1 in basis.iter().step_by(37) {
                for d2 in basis.iter().step_by(41) {
                    let (circles, d3) = wbrauer::diagram::compose(d1, d2).unwrap();
                    acc = acc.wrapping_add(circles).wrapping_add(d3.r() as u32);
                }
            }
            black_box(acc)
        })
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_3_3", |b| {
        b.iter(|| black_box(wbrauer::diagram::enumerate(3, 3).unwrap().len()))
    });
}

fn tower_products(c: &mut Criterion) {
    let alg = b33();
    let (_, delta1) = generic_delta();
    c.bench_function("y3_pow4_b33", |b| {
        b.iter(|| {
            let y = y_elem(&alg, &delta1, 3).unwrap();
            black_box(alg.pow(&y, 4).len())
        })
    });
    let (delta, delta1) = generic_delta();
    c.bench_function("omega_extract_a3_k3", |b| {
        b.iter(|| black_box(omega_extract(&delta, &delta1, 3, 3).unwrap().len()))
    });
}

fn tensor_ops(c: &mut Criterion) {
    let space = space_2211();
    let e1 = space.gen_mat(Gen::E1).unwrap();
    let x1 = space.gen_mat(Gen::X1).unwrap();
    c.bench_function("matmul_e1_x1_dim256", |b| {
        b.iter(|| black_box(space.mat_mul(e1, x1).len()))
    });
    c.bench_function("endomorphism_dimension_2211", |b| {
        b.iter(|| black_box(endomorphism_dimension(&space).unwrap()))
    });
}

fn suite_end_to_end(c: &mut Criterion) {
    c.bench_function("diagram_suite_2_2", |b| {
        b.iter(|| black_box(suites::diagram_suite(2, 2, &rat(5), None).unwrap().passed()))
    });
}

criterion_group!(
    benches,
    diagram_products,
    enumeration,
    tower_products,
    tensor_ops,
    suite_end_to_end
);
criterion_main!(benches);
