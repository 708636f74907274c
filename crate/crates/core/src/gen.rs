//! Seeded random generators for polynomials, elements and verified structures.

use rand::seq::SliceRandom;
use rand::Rng;

use std::collections::BTreeMap;

use crate::coeffring::{
    int, rat, Element, FreeModule, LinearMap, Monomial, Poly, Rational, Ring, RingRef, VectorField,
};
use crate::cohomology::{cocycle_basis_field, prelie_coboundary, Cochain, ComplexKind, RepRef, Representation};
use crate::crossed::{CrossedExtensionData, CrossedModuleData};
use crate::extensions::{build_extension, ExtensionData};
use crate::linalg;
use crate::structures::{derivation_prelie, dn, transformation_algebra, ActionData, PreLieAlgebraFD, PreLieRinehart};

pub use rand_chacha::ChaCha8Rng as SeededRng;

pub fn rng(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    SeededRng::seed_from_u64(seed)
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-3i64..=3);
    let d = *[1i64, 1, 1, 2, 3].choose(rng).unwrap();
    rat(n, d)
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != int(0) {
            return r;
        }
    }
}

/// A random monomial of total degree at most `max_deg` (nonnegative exponents).
pub fn random_monomial<R: Rng>(rng: &mut R, ring: &RingRef, max_deg: u32) -> Poly {
    let mut e = vec![0i32; ring.nvars()];
    if ring.nvars() > 0 {
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            e[rng.gen_range(0..ring.nvars())] += 1;
        }
    }
    Poly::term(ring, e, int(1)).expect("nonnegative exponents")
}

/// A random polynomial with up to `max_terms` terms of degree at most `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &RingRef, max_deg: u32, max_terms: usize) -> Poly {
    let mut p = Poly::zero(ring);
    for _ in 0..rng.gen_range(0..=max_terms) {
        p += &random_monomial(rng, ring, max_deg).scale(&small_rational(rng));
    }
    p
}

pub fn random_element<R: Rng>(rng: &mut R, ring: &RingRef, rank: usize, max_deg: u32) -> Element {
    Element::from_coeffs((0..rank).map(|_| random_poly(rng, ring, max_deg, 2)).collect())
}

pub fn random_vector_field<R: Rng>(rng: &mut R, ring: &RingRef, max_deg: u32) -> VectorField {
    let comps = (0..ring.nvars()).map(|_| random_poly(rng, ring, max_deg, 2)).collect();
    VectorField::new(ring, comps).expect("component count matches")
}

pub fn random_linear_map<R: Rng>(rng: &mut R, ring: &RingRef, rows: usize, cols: usize, max_deg: u32) -> LinearMap {
    let entries = (0..rows).map(|_| (0..cols).map(|_| random_poly(rng, ring, max_deg, 2)).collect()).collect();
    LinearMap::from_rows(ring, rows, cols, entries).expect("shapes agree")
}

/// `X·Y = Σₖ X(Yₖ) ∂ₖ`, the flat connection on vector fields.
pub fn flat_product(x: &VectorField, y: &VectorField) -> VectorField {
    let comps = y.components().iter().map(|c| x.apply(c)).collect();
    VectorField::new(x.ring(), comps).expect("same ring")
}

fn coordinates(v: &VectorField, index: &mut BTreeMap<(usize, Monomial), usize>) -> Vec<(usize, Rational)> {
    let mut out = Vec::new();
    for (k, c) in v.components().iter().enumerate() {
        for (m, q) in c.terms() {
            let next = index.len();
            let slot = *index.entry((k, m.clone())).or_insert(next);
            out.push((slot, q.clone()));
        }
    }
    out
}

/// The pre-Lie algebra spanned by `fields` under the flat product, acting by inclusion.
/// Returns `None` if the span is not closed or the fields are dependent.
pub fn vector_field_prelie(fields: Vec<VectorField>) -> Option<ActionData<PreLieAlgebraFD>> {
    let d = fields.len();
    let mut index = BTreeMap::new();
    let cols: Vec<_> = fields.iter().map(|f| coordinates(f, &mut index)).collect();
    let prods: Vec<Vec<_>> =
        fields.iter().map(|x| fields.iter().map(|y| coordinates(&flat_product(x, y), &mut index)).collect()).collect();
    let rows = index.len();
    let dense = |sparse: &[(usize, Rational)]| {
        let mut v = vec![int(0); rows];
        for (i, q) in sparse {
            v[*i] = q.clone();
        }
        v
    };
    let mut m = vec![vec![int(0); d]; rows];
    for (j, col) in cols.iter().enumerate() {
        for (i, q) in dense(col).into_iter().enumerate() {
            m[i][j] = q;
        }
    }
    if linalg::rank(&m) != d {
        return None;
    }
    let mut product = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            product[i][j] = linalg::solve(&m, &dense(&prods[i][j]))?;
        }
    }
    let g = PreLieAlgebraFD::new(d, product).ok()?;
    ActionData::new(g, fields).ok()
}

/// Closed families of polynomial vector fields on `ℚ[x1, x2]`.
pub fn flat_families() -> Vec<Vec<VectorField>> {
    let ring = Ring::polynomial(&["x1", "x2"]);
    let vf = |a: &str, b: &str| {
        VectorField::new(&ring, vec![Poly::parse(&ring, a).unwrap(), Poly::parse(&ring, b).unwrap()]).unwrap()
    };
    vec![
        vec![vf("1", "0"), vf("x1", "0")],
        vec![vf("1", "0"), vf("0", "1"), vf("0", "x1")],
        vec![vf("1", "0"), vf("x1", "0"), vf("0", "1")],
        vec![vf("x1", "0"), vf("0", "x2")],
        vec![vf("0", "1"), vf("0", "x2"), vf("x1", "0")],
        vec![vf("1", "0"), vf("x1", "x2")],
        vec![vf("1", "0"), vf("0", "1"), vf("x1", "x2")],
    ]
}

/// Rewrites `alg` in the basis given by the columns of `p`, whose inverse is `p_inv`.
pub fn transport(alg: &PreLieRinehart, p: &LinearMap, p_inv: &LinearMap) -> PreLieRinehart {
    let n = alg.rank();
    let f: Vec<Element> = (0..n).map(|i| p.column(i)).collect();
    let product = (0..n).map(|i| (0..n).map(|j| p_inv.apply(&alg.mul(&f[i], &f[j]))).collect()).collect();
    let anchor = f.iter().map(|x| alg.anchor_of(x)).collect();
    PreLieRinehart::new(alg.module.clone(), product, anchor).expect("shapes preserved")
}

/// A random invertible basis change built from elementary operations, with its inverse.
pub fn random_unimodular<R: Rng>(
    rng: &mut R,
    ring: &RingRef,
    n: usize,
    steps: usize,
    max_deg: u32,
) -> (LinearMap, LinearMap) {
    let mut p = LinearMap::identity(ring, n);
    let mut p_inv = LinearMap::identity(ring, n);
    if n < 2 {
        return (p, p_inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let f = random_poly(rng, ring, max_deg, 1);
        let mut e = LinearMap::identity(ring, n);
        e.set(i, j, f.clone());
        let mut e_inv = LinearMap::identity(ring, n);
        e_inv.set(i, j, -&f);
        p = p.compose(&e);
        p_inv = e_inv.compose(&p_inv);
    }
    (p, p_inv)
}

/// A random pre-Lie-Rinehart algebra of rank ≤ 3 over `ℚ[x1, x2]` that passes verification.
pub fn random_prelie_rinehart<R: Rng>(rng: &mut R) -> PreLieRinehart {
    let ring = Ring::polynomial(&["x1", "x2"]);
    let families = flat_families();
    let alg = match rng.gen_range(0..4) {
        0 => dn(&ring),
        1 => {
            let v = random_vector_field(rng, &ring, 1);
            derivation_prelie(&ring, v).expect("same ring")
        }
        2 => {
            let act = vector_field_prelie(families.choose(rng).unwrap().clone()).expect("closed family");
            let zero = vec![VectorField::zero(&ring); act.algebra.dim];
            transformation_algebra(&ActionData::new(act.algebra, zero).unwrap()).expect("valid")
        }
        _ => {
            let act = vector_field_prelie(families.choose(rng).unwrap().clone()).expect("closed family");
            transformation_algebra(&act).expect("valid")
        }
    };
    let steps = rng.gen_range(0..=2);
    let (p, p_inv) = random_unimodular(rng, &ring, alg.rank(), steps, 1);
    transport(&alg, &p, &p_inv)
}

/// A pre-Lie algebra over ℚ viewed as a pre-Lie-Rinehart algebra over the field.
pub fn field_algebra(g: &PreLieAlgebraFD) -> PreLieRinehart {
    let ring = Ring::field();
    let zero = vec![VectorField::zero(&ring); g.dim];
    transformation_algebra(&ActionData::new(g.clone(), zero).expect("shapes")).expect("pre-Lie table")
}

/// A random field-case pre-Lie algebra of dimension 1 to 3.
pub fn random_field_prelie<R: Rng>(rng: &mut R) -> PreLieRinehart {
    let families = flat_families();
    let alg = if rng.gen_bool(0.2) {
        let mut g = PreLieAlgebraFD::zero(1);
        g.product[0][0] = vec![small_rational(rng)];
        field_algebra(&g)
    } else {
        let act = vector_field_prelie(families.choose(rng).unwrap().clone()).expect("closed family");
        field_algebra(&act.algebra)
    };
    let steps = rng.gen_range(0..=3);
    let (p, p_inv) = random_unimodular(rng, alg.ring(), alg.rank(), steps, 0);
    transport(&alg, &p, &p_inv)
}

/// One of the standard representations `(L,R)`, `(L,0)` or the anchor representation,
/// always one that passes `check`. `(L, R)` is only offered when `R` happens to be
/// `A`-linear in its index on this algebra.
pub fn random_representation<R: Rng>(rng: &mut R, alg: &PreLieRinehart) -> Representation {
    match rng.gen_range(0..3) {
        0 => {
            let reg = Representation::regular(alg);
            if reg.check().passed() {
                reg
            } else {
                Representation::left_regular(alg)
            }
        }
        1 => Representation::left_regular(alg),
        _ => Representation::anchor(alg, rng.gen_range(1..=2)),
    }
}

pub fn random_cochain<R: Rng>(
    rng: &mut R,
    kind: ComplexKind,
    degree: usize,
    ring: &RingRef,
    rank: usize,
    target_rank: usize,
    max_deg: u32,
) -> Cochain {
    Cochain::from_fn(kind, degree, ring, rank, target_rank, |_| random_element(rng, ring, target_rank, max_deg))
        .expect("valid degree")
}

/// A random closed cochain over a field-case representation.
pub fn random_cocycle_field<R: Rng>(rng: &mut R, rep: &Representation, degree: usize) -> Cochain {
    let basis = cocycle_basis_field(RepRef::Prelie(rep), degree).expect("field case");
    let mut out =
        Cochain::zero(ComplexKind::Prelie, degree, rep.ring(), rep.rank(), rep.target_rank()).expect("degree ≥ 1");
    for b in basis {
        out = out.add(&b.scale(&Poly::constant(rep.ring(), small_rational(rng))));
    }
    out
}

fn constant_kernel(ring: &RingRef, g: &PreLieAlgebraFD) -> PreLieRinehart {
    let zero = vec![VectorField::zero(ring); g.dim];
    let names = (1..=g.dim).map(|i| format!("u{i}")).collect();
    let module = FreeModule::new(ring, names).expect("distinct");
    let product = (0..g.dim)
        .map(|i| {
            (0..g.dim)
                .map(|j| {
                    Element::from_coeffs(g.product[i][j].iter().map(|c| Poly::constant(ring, c.clone())).collect())
                })
                .collect()
        })
        .collect();
    PreLieRinehart::new(module, product, zero).expect("shapes")
}

fn symbol_rep(alg: &PreLieRinehart, kernel: &PreLieRinehart) -> Representation {
    Representation::anchor(alg, kernel.rank()).retarget(kernel.module.clone())
}

/// Extension data that satisfies every compatibility condition, or, with `violate = Some(c)`,
/// data that breaks exactly the condition `CONDITIONS[c]`.
pub fn random_extension<R: Rng>(rng: &mut R, violate: Option<usize>) -> ExtensionData {
    let c = nonzero_rational(rng);
    match violate {
        None => {
            if rng.gen_bool(0.3) {
                // Constant-coefficient non-abelian kernel acted on through the anchor only.
                let alg = random_prelie_rinehart(rng);
                let mut g = PreLieAlgebraFD::zero(1);
                g.product[0][0] = vec![c];
                let kernel = constant_kernel(alg.ring(), &g);
                let rep = symbol_rep(&alg, &kernel);
                let omega = Cochain::zero(ComplexKind::Prelie, 2, alg.ring(), alg.rank(), 1).expect("degree 2");
                return ExtensionData::new(kernel, rep, omega).expect("shapes");
            }
            let alg = if rng.gen_bool(0.5) { random_field_prelie(rng) } else { random_prelie_rinehart(rng) };
            let rep = random_representation(rng, &alg);
            let max_deg = if alg.ring().is_field() { 0 } else { 1 };
            let phi = random_cochain(rng, ComplexKind::Prelie, 1, alg.ring(), alg.rank(), rep.target_rank(), max_deg);
            let omega = prelie_coboundary(&phi, &rep).expect("degree 1");
            ExtensionData::semidirect(&rep).with_omega(omega).expect("shapes")
        }
        Some(0) => {
            // [ρ(∂₁), ρ(∂₂)] = −c on a rank-1 abelian kernel.
            let ring = Ring::polynomial(&["x1", "x2"]);
            let alg = dn(&ring);
            let mut rep = Representation::anchor(&alg, 1);
            rep.rho[0].linear.set(0, 0, Poly::var(&ring, 1).scale(&c));
            ExtensionData::semidirect(&rep)
        }
        Some(1) => {
            // μ(e) = c with e·e = e: ρμ − μρ − μ(e·e) + μμ = c² − c.
            let mut g = PreLieAlgebraFD::zero(1);
            g.product[0][0] = vec![int(1)];
            let alg = field_algebra(&g);
            let c = if c == int(1) { int(2) } else { c };
            let mut rep = Representation::anchor(&alg, 1);
            rep.mu[0].set(0, 0, Poly::constant(alg.ring(), c));
            ExtensionData::semidirect(&rep)
        }
        Some(2) => {
            // ρ(∂ᵢ) = ∂ᵢ + c on the kernel u·u = u is not a derivation of it.
            let ring = Ring::polynomial(&["x1", "x2"]);
            let alg = dn(&ring);
            let mut g = PreLieAlgebraFD::zero(1);
            g.product[0][0] = vec![int(1)];
            let kernel = constant_kernel(&ring, &g);
            let mut rep = symbol_rep(&alg, &kernel);
            for r in &mut rep.rho {
                r.linear.set(0, 0, Poly::constant(&ring, c.clone()));
            }
            let omega = Cochain::zero(ComplexKind::Prelie, 2, &ring, 2, 1).expect("degree 2");
            ExtensionData::new(kernel, rep, omega).expect("shapes")
        }
        Some(3) => {
            // Kernel u₂·u₁ = u₁ on ⟨u₁,u₂,u₃⟩ and μ(e)(u₁) = c u₃.
            let alg = field_algebra(&PreLieAlgebraFD::zero(1));
            let mut g = PreLieAlgebraFD::zero(3);
            g.product[1][0] = vec![int(1), int(0), int(0)];
            let kernel = constant_kernel(alg.ring(), &g);
            let mut rep = symbol_rep(&alg, &kernel);
            rep.mu[0].set(2, 0, Poly::constant(alg.ring(), c));
            let omega = Cochain::zero(ComplexKind::Prelie, 2, alg.ring(), 1, 3).expect("degree 2");
            ExtensionData::new(kernel, rep, omega).expect("shapes")
        }
        Some(4) => {
            // A random 2-cochain that is not closed, over a field algebra of rank ≥ 2.
            loop {
                let alg = random_field_prelie(rng);
                if alg.rank() < 2 {
                    continue;
                }
                let rep = random_representation(rng, &alg);
                let omega = random_cochain(rng, ComplexKind::Prelie, 2, alg.ring(), alg.rank(), rep.target_rank(), 0);
                if !prelie_coboundary(&omega, &rep).expect("degree 2").is_zero() {
                    return ExtensionData::semidirect(&rep).with_omega(omega).expect("shapes");
                }
            }
        }
        Some(v) => panic!("no compatibility condition {v}"),
    }
}

/// A random ring among ℚ and ℚ[x1,x2].
fn random_ring<R: Rng>(rng: &mut R) -> RingRef {
    if rng.gen_bool(0.5) {
        Ring::field()
    } else {
        Ring::polynomial(&["x1", "x2"])
    }
}

/// A crossed module of one of three shapes: `∂ = 0`, the inclusion of the kernel of an
/// extension, or the truncated free algebra realizing a random 3-cocycle.
pub fn random_crossed_module<R: Rng>(rng: &mut R) -> CrossedModuleData {
    random_crossed_extension(rng).cm
}

pub fn random_crossed_extension<R: Rng>(rng: &mut R) -> CrossedExtensionData {
    match rng.gen_range(0..3) {
        0 => {
            let alg = random_prelie_rinehart(rng);
            let rep = random_representation(rng, &alg);
            CrossedExtensionData::split(&rep)
        }
        1 => {
            let x = random_extension(rng, None);
            CrossedExtensionData::from_extension(&x).expect("verified extension")
        }
        _ => {
            let ring = random_ring(rng);
            let n = rng.gen_range(1..=3);
            let r = rng.gen_range(1..=2);
            let deg = if ring.is_field() { 0 } else { 1 };
            let f0 = random_cochain(rng, ComplexKind::Prelie, 3, &ring, n, r, deg);
            CrossedExtensionData::realizing(&f0).expect("degree-3 cochain")
        }
    }
}

/// The inclusion of the kernel of a random extension, so `∂ ≠ 0` and `ℰ` may be non-abelian.
pub fn random_ideal_crossed_module<R: Rng>(rng: &mut R) -> CrossedModuleData {
    let x = random_extension(rng, None);
    let ext = build_extension(&x);
    CrossedModuleData::ideal(&ext.total, &ext.kernel_indices()).expect("kernel is an ideal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_closed() {
        for f in flat_families() {
            let act = vector_field_prelie(f).expect("closed");
            assert!(act.check().passed());
        }
    }

    #[test]
    fn random_structures_verify() {
        let mut r = rng(7);
        for _ in 0..40 {
            assert!(random_prelie_rinehart(&mut r).verify().passed());
        }
    }
}
