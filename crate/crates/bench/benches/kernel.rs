use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use plrk_core::coeffring::{int, Poly, Ring, VectorField};
use plrk_core::cohomology::{cohomology_dims_field, prelie_coboundary, ComplexKind, RepRef, Representation};
use plrk_core::freeprelie::{enumerate_trees, free_prelie_rinehart, TreePoly};
use plrk_core::gen;
use plrk_core::rmatrix::{cybe_residual, omega1_prelie, RMatrix};
use plrk_core::structures::{dn, sl2_action};

fn rmatrix(c: &mut Criterion) {
    let r = RMatrix::sl2(int(1), int(1), int(2));
    let act = sl2_action();
    c.bench_function("cybe_residual_sl2", |b| b.iter(|| cybe_residual(black_box(&r))));
    c.bench_function("omega1_verify_sl2", |b| {
        b.iter(|| {
            let (alg, _) = omega1_prelie(black_box(&r), &act).unwrap();
            alg.verify()
        })
    });
}

fn cohomology(c: &mut Criterion) {
    let ring = Ring::polynomial(&["x1", "x2", "x3"]);
    let rep = Representation::regular(&dn(&ring));
    let mut rng = gen::rng(1);
    for degree in [1, 2, 3] {
        let phi = gen::random_cochain(&mut rng, ComplexKind::Prelie, degree, &ring, 3, 3, 2);
        c.bench_function(&format!("prelie_coboundary_d3_degree{degree}"), |b| {
            b.iter(|| prelie_coboundary(black_box(&phi), &rep).unwrap())
        });
    }
    let mut rng = gen::rng(2);
    let alg = gen::random_field_prelie(&mut rng);
    let rep = Representation::regular(&alg);
    c.bench_function("cohomology_dims_field", |b| {
        b.iter(|| cohomology_dims_field(RepRef::Prelie(black_box(&rep)), 3).unwrap())
    });
}

fn free_prelie(c: &mut Criterion) {
    c.bench_function("enumerate_trees_2_6", |b| b.iter(|| enumerate_trees(2, black_box(6))));
    let trees = enumerate_trees(2, 4);
    let (x, y) = (TreePoly::tree(trees[3].clone(), 9), TreePoly::tree(trees[7].clone(), 9));
    c.bench_function("graft_size8", |b| b.iter(|| black_box(&x).graft(black_box(&y))));
    let ring = Ring::polynomial(&["x"]);
    let phi = [VectorField::new(&ring, vec![Poly::var(&ring, 0)]).unwrap()];
    c.bench_function("free_prelie_rinehart_bound4_verify", |b| {
        b.iter(|| free_prelie_rinehart(&ring, black_box(&phi), 4).unwrap().verify())
    });
}

criterion_group!(benches, rmatrix, cohomology, free_prelie);
criterion_main!(benches);
