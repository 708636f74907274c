//! Pre-Lie-Rinehart and Lie-Rinehart 2-algebras on two-term complexes `P₁ → P₀`,
//! the sub-adjacent functor, and the skeletal and strict correspondences.
//!
//! A pre-Lie 2-algebra is stored as a representation container: `rep.algebra`
//! holds `m₂` on `P₀⊗P₀` and the anchor, `rep.rho[i]` is `m₂(eᵢ, -)` on `P₁` and
//! `rep.mu[i]` is `m₂(-, eᵢ)` on `P₁`. Nothing in the container is assumed to satisfy
//! the one-level axioms; `m₃` measures their failure.

use crate::coeffring::{DerivationPair, Element, LinearMap, RingRef};
use crate::cohomology::{Cochain, ComplexKind, LieRepresentation, Representation};
use crate::crossed::{verify_crossed_module, verify_lie_crossed_module, CrossedModuleData, LieCrossedModule};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::structures::{pairs, LieRinehart, PreLieRinehart};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLie2Data {
    pub rep: Representation,
    /// `m₁: P₁ → P₀`.
    pub m1: LinearMap,
    /// `m₃: ∧²P₀ ⊗ P₀ → P₁` as a degree-3 pre-Lie cochain.
    pub m3: Cochain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lie2Data {
    /// `rep.algebra` holds `l₂` on `P₀∧P₀` and the anchor; `rep.rho[i] = l₂(eᵢ, -)` on `P₁`.
    pub rep: LieRepresentation,
    pub l1: LinearMap,
    /// `l₃: ∧³P₀ → P₁` as a degree-3 Lie cochain.
    pub l3: Cochain,
}

fn check_shape(ring: &RingRef, n: usize, m: usize, d: &LinearMap, c: &Cochain, kind: ComplexKind) -> Result<()> {
    if d.rows() != n || d.cols() != m || d.ring() != ring {
        return Err(Error::Malformed(format!("m₁ must be a {n}x{m} matrix over the base ring")));
    }
    if c.kind != kind || c.degree != 3 || c.rank != n || c.target_rank != m {
        return Err(Error::Malformed("the 3-map has the wrong shape".into()));
    }
    Ok(())
}

fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::cohomology::canonical_tuples(ComplexKind::Lie, k, n)
}

impl PreLie2Data {
    pub fn new(rep: Representation, m1: LinearMap, m3: Cochain) -> Result<Self> {
        check_shape(rep.ring(), rep.rank(), rep.target_rank(), &m1, &m3, ComplexKind::Prelie)?;
        Ok(PreLie2Data { rep, m1, m3 })
    }

    pub fn base(&self) -> &PreLieRinehart {
        &self.rep.algebra
    }

    pub fn ring(&self) -> &RingRef {
        self.rep.ring()
    }

    pub fn is_strict(&self) -> bool {
        self.m3.is_zero()
    }

    pub fn is_skeletal(&self) -> bool {
        self.m1.is_zero()
    }

    fn m2_0(&self, x: &Element, y: &Element) -> Element {
        self.base().mul(x, y)
    }

    /// `m₂(x, u)` for `x ∈ P₀`, `u ∈ P₁`.
    fn m2_01(&self, x: &Element, u: &Element) -> Element {
        self.rep.rho_of(x).apply(u)
    }

    /// `m₂(u, x)` for `u ∈ P₁`, `x ∈ P₀`.
    fn m2_10(&self, u: &Element, x: &Element) -> Element {
        self.rep.mu_of(x).apply(u)
    }

    fn m3(&self, x: &Element, y: &Element, z: &Element) -> Element {
        self.m3.eval(&[x.clone(), y.clone(), z.clone()])
    }
}

impl Lie2Data {
    pub fn new(rep: LieRepresentation, l1: LinearMap, l3: Cochain) -> Result<Self> {
        check_shape(rep.ring(), rep.rank(), rep.target_rank(), &l1, &l3, ComplexKind::Lie)?;
        Ok(Lie2Data { rep, l1, l3 })
    }

    pub fn base(&self) -> &LieRinehart {
        &self.rep.algebra
    }

    pub fn ring(&self) -> &RingRef {
        self.rep.ring()
    }

    fn l2_01(&self, x: &Element, u: &Element) -> Element {
        self.rep.rho_of(x).apply(u)
    }

    fn l3(&self, x: &Element, y: &Element, z: &Element) -> Element {
        self.l3.eval(&[x.clone(), y.clone(), z.clone()])
    }
}

/// Conditions (a)–(f) of a pre-Lie 2-algebra and (i)–(v) of the Rinehart structure, on basis tuples.
///
/// (ii) and (iii) hold by construction of the tables: `μ`, `m₁` and `m₃` are stored as
/// `A`-linear data and `m₂(aX¹, Y) = a m₂(X¹, Y)` is how the tables are extended.
pub fn verify_prelie2(x: &PreLie2Data) -> Report {
    let base = x.base();
    let rep = &x.rep;
    let (n, m) = (rep.rank(), rep.target_rank());
    let e = |i: usize| base.basis(i);
    let u = |a: usize| rep.target.basis_element(a);
    let d = &x.m1;
    let mut report = Report::new();

    report.check(
        "a",
        (0..n)
            .flat_map(|i| (0..m).map(move |a| (i, a)))
            .map(|(i, a)| (vec![i, a], d.apply(&x.m2_01(&e(i), &u(a))).sub(&x.m2_0(&e(i), &d.column(a))))),
    );
    report.check(
        "b",
        (0..m)
            .flat_map(|a| (0..n).map(move |i| (a, i)))
            .map(|(a, i)| (vec![a, i], d.apply(&x.m2_10(&u(a), &e(i))).sub(&x.m2_0(&d.column(a), &e(i))))),
    );
    report.check(
        "c",
        pairs(m).map(|(a, b)| (vec![a, b], x.m2_01(&d.column(a), &u(b)).sub(&x.m2_10(&u(a), &d.column(b))))),
    );
    report.check(
        "e1",
        pairs(n).filter(|(i, j)| i < j).flat_map(|(i, j)| (0..n).map(move |k| (i, j, k))).map(|(i, j, k)| {
            let (a, b, c) = (e(i), e(j), e(k));
            let rhs = base.associator(&a, &b, &c).sub(&base.associator(&b, &a, &c));
            (vec![i, j, k], d.apply(&x.m3(&a, &b, &c)).sub(&rhs))
        }),
    );
    report.check(
        "e2",
        pairs(n).filter(|(i, j)| i < j).flat_map(|(i, j)| (0..m).map(move |k| (i, j, k))).map(|(i, j, k)| {
            let (a, b, v) = (e(i), e(j), u(k));
            let rhs = x
                .m2_01(&a, &x.m2_01(&b, &v))
                .sub(&x.m2_01(&x.m2_0(&a, &b), &v))
                .sub(&x.m2_01(&b, &x.m2_01(&a, &v)))
                .add(&x.m2_01(&x.m2_0(&b, &a), &v));
            (vec![i, j, k], x.m3(&a, &b, &d.column(k)).sub(&rhs))
        }),
    );
    report.check(
        "e3",
        (0..m).flat_map(|k| pairs(n).map(move |(i, j)| (k, i, j))).map(|(k, i, j)| {
            let (v, a, b) = (u(k), e(i), e(j));
            let rhs = x
                .m2_10(&v, &x.m2_0(&a, &b))
                .sub(&x.m2_10(&x.m2_10(&v, &a), &b))
                .sub(&x.m2_01(&a, &x.m2_10(&v, &b)))
                .add(&x.m2_10(&x.m2_01(&a, &v), &b));
            (vec![k, i, j], x.m3(&d.column(k), &a, &b).sub(&rhs))
        }),
    );
    report.check(
        "f",
        increasing(n, 3).into_iter().flat_map(|t| (0..n).map(move |l| (t.clone(), l))).map(|(t, l)| {
            let (w, a, b, z) = (e(t[0]), e(t[1]), e(t[2]), e(l));
            let br = |p: &Element, q: &Element| base.commutator(p, q);
            let v = x
                .m2_01(&w, &x.m3(&a, &b, &z))
                .sub(&x.m2_01(&a, &x.m3(&w, &b, &z)))
                .add(&x.m2_01(&b, &x.m3(&w, &a, &z)))
                .add(&x.m2_10(&x.m3(&a, &b, &w), &z))
                .sub(&x.m2_10(&x.m3(&w, &b, &a), &z))
                .add(&x.m2_10(&x.m3(&w, &a, &b), &z))
                .sub(&x.m3(&a, &b, &x.m2_0(&w, &z)))
                .add(&x.m3(&w, &b, &x.m2_0(&a, &z)))
                .sub(&x.m3(&w, &a, &x.m2_0(&b, &z)))
                .sub(&x.m3(&br(&w, &a), &b, &z))
                .add(&x.m3(&br(&w, &b), &a, &z))
                .sub(&x.m3(&br(&a, &b), &w, &z));
            (vec![t[0], t[1], t[2], l], v)
        }),
    );
    report.check("i", rep.rho.iter().enumerate().map(|(i, r)| (vec![i], r.symbol.sub(&base.anchor[i]))));
    report.pass("ii");
    report.note_last("μ is stored as A-linear endomorphisms");
    report.pass("iii");
    report.note_last("m₁ and m₃ are stored as A-linear tables");
    let anchor = base.verify();
    report.items.push({
        let mut item = anchor.item("anchor_morphism").expect("present").clone();
        item.id = "iv".into();
        item
    });
    report.check("v", (0..m).map(|a| (vec![a], base.anchor_of(&d.column(a)))));
    report
}

/// Conditions (a)–(d) of a Lie 2-algebra and (i)–(iv) of the Rinehart structure, on basis tuples.
///
/// The Jacobiator identity (d) is checked with the sign `(−1)^{i+j}` on the `l₃(l₂(xᵢ,xⱼ),…)` terms.
pub fn verify_lie2(x: &Lie2Data) -> Report {
    let base = x.base();
    let rep = &x.rep;
    let (n, m) = (rep.rank(), rep.target_rank());
    let e = |i: usize| base.basis(i);
    let u = |a: usize| rep.target.basis_element(a);
    let d = &x.l1;
    let mut report = Report::new();
    report.check(
        "antisymmetry",
        pairs(n).filter(|(i, j)| i <= j).map(|(i, j)| (vec![i, j], base.bracket[i][j].add(&base.bracket[j][i]))),
    );
    report.check(
        "a",
        (0..n)
            .flat_map(|i| (0..m).map(move |a| (i, a)))
            .map(|(i, a)| (vec![i, a], d.apply(&x.l2_01(&e(i), &u(a))).sub(&base.bracket(&e(i), &d.column(a)))))
            .chain(pairs(m).map(|(a, b)| {
                // l₂(l₁u, v) = l₂(u, l₁v) = −l₂(l₁v, u)
                (vec![a, b], x.l2_01(&d.column(a), &u(b)).add(&x.l2_01(&d.column(b), &u(a))))
            })),
    );
    report.check(
        "b",
        increasing(n, 3).into_iter().map(|t| {
            let (a, b, c) = (e(t[0]), e(t[1]), e(t[2]));
            let jac = base
                .bracket(&a, &base.bracket(&b, &c))
                .add(&base.bracket(&c, &base.bracket(&a, &b)))
                .add(&base.bracket(&b, &base.bracket(&c, &a)));
            (t.clone(), d.apply(&x.l3(&a, &b, &c)).sub(&jac))
        }),
    );
    report.check(
        "c",
        increasing(n, 2).into_iter().flat_map(|t| (0..m).map(move |k| (t.clone(), k))).map(|(t, k)| {
            let (a, b, v) = (e(t[0]), e(t[1]), u(k));
            let rhs = x
                .l2_01(&a, &x.l2_01(&b, &v))
                .sub(&x.l2_01(&base.bracket(&a, &b), &v))
                .sub(&x.l2_01(&b, &x.l2_01(&a, &v)));
            (vec![t[0], t[1], k], x.l3(&a, &b, &d.column(k)).sub(&rhs))
        }),
    );
    report.check(
        "d",
        increasing(n, 4).into_iter().map(|t| {
            let xs: Vec<Element> = t.iter().map(|&i| e(i)).collect();
            let mut acc = Element::zero(x.ring(), m);
            for i in 0..4 {
                let rest: Vec<&Element> = (0..4).filter(|&k| k != i).map(|k| &xs[k]).collect();
                let term = x.l2_01(&xs[i], &x.l3(rest[0], rest[1], rest[2]));
                acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    let rest: Vec<&Element> = (0..4).filter(|&k| k != i && k != j).map(|k| &xs[k]).collect();
                    let term = x.l3(&base.bracket(&xs[i], &xs[j]), rest[0], rest[1]);
                    acc = if (i + j) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            (t.clone(), acc)
        }),
    );
    report.check("i", rep.rho.iter().enumerate().map(|(i, r)| (vec![i], r.symbol.sub(&base.anchor[i]))));
    report.pass("ii");
    report.note_last("l₁ and l₃ are stored as A-linear tables");
    let anchor = base.verify();
    report.items.push({
        let mut item = anchor.item("anchor_morphism").expect("present").clone();
        item.id = "iii".into();
        item
    });
    report.check("iv", (0..m).map(|a| (vec![a], base.anchor_of(&d.column(a)))));
    report
}

fn require(report: Report, what: &str) -> Result<()> {
    match report.first_failure() {
        Some(item) => Err(Error::Precondition(format!("{what} fails condition {}", item.id))),
        None => Ok(()),
    }
}

/// `l₂ = m₂ − m₂∘swap` in every degree, `l₃` the cyclic sum of `m₃`.
pub fn sub_adjacent_2(x: &PreLie2Data) -> Result<Lie2Data> {
    require(verify_prelie2(x), "the pre-Lie 2-algebra")?;
    Ok(sub_adjacent_2_unchecked(x))
}

pub fn sub_adjacent_2_unchecked(x: &PreLie2Data) -> Lie2Data {
    let n = x.rep.rank();
    let rho = x
        .rep
        .rho
        .iter()
        .zip(&x.rep.mu)
        .map(|(r, m)| DerivationPair { linear: r.linear.sub(m), symbol: r.symbol.clone() })
        .collect();
    let rep = LieRepresentation { algebra: x.base().sub_adjacent(), target: x.rep.target.clone(), rho };
    let l3 = Cochain::from_fn(ComplexKind::Lie, 3, x.ring(), n, x.rep.target_rank(), |t| {
        let p = &x.m3;
        p.on_basis(&[t[0], t[1], t[2]]).add(&p.on_basis(&[t[2], t[0], t[1]])).add(&p.on_basis(&[t[1], t[2], t[0]]))
    })
    .expect("degree 3");
    Lie2Data { rep, l1: x.m1.clone(), l3 }
}

/// `P₁` with `X¹·Y¹ = m₂(m₁X¹, Y¹)`, `ρ`, `μ` from the mixed `m₂` and `∂ = m₁`.
pub fn strict_to_crossed(x: &PreLie2Data) -> Result<CrossedModuleData> {
    if !x.is_strict() {
        return Err(Error::Precondition("m₃ ≠ 0, not a strict 2-algebra".into()));
    }
    require(verify_prelie2(x), "the strict 2-algebra")?;
    let m = x.rep.target_rank();
    let mut top = PreLieRinehart::zero(x.rep.target.clone());
    for a in 0..m {
        for b in 0..m {
            top.product[a][b] = x.m2_01(&x.m1.column(a), &x.rep.target.basis_element(b));
        }
    }
    CrossedModuleData::new(x.base().clone(), top, x.m1.clone(), x.rep.clone())
}

/// `m₁ = ∂`, `m₂` from the product, `ρ` and `μ`, and `m₃ = 0`.
pub fn crossed_to_strict(cm: &CrossedModuleData) -> Result<PreLie2Data> {
    require(verify_crossed_module(cm), "the crossed module")?;
    let m3 = Cochain::zero(ComplexKind::Prelie, 3, cm.ring(), cm.base.rank(), cm.top.rank())?;
    PreLie2Data::new(cm.rep.clone(), cm.boundary.clone(), m3)
}

pub fn lie_strict_to_crossed(x: &Lie2Data) -> Result<LieCrossedModule> {
    if !x.l3.is_zero() {
        return Err(Error::Precondition("l₃ ≠ 0, not a strict 2-algebra".into()));
    }
    require(verify_lie2(x), "the strict Lie 2-algebra")?;
    let m = x.rep.target_rank();
    let bracket =
        (0..m).map(|a| (0..m).map(|b| x.l2_01(&x.l1.column(a), &x.rep.target.basis_element(b))).collect()).collect();
    let top = LieRinehart::new(x.rep.target.clone(), bracket, vec![crate::coeffring::VectorField::zero(x.ring()); m])?;
    Ok(LieCrossedModule { base: x.base().clone(), top, boundary: x.l1.clone(), rep: x.rep.clone() })
}

pub fn lie_crossed_to_strict(cm: &LieCrossedModule) -> Result<Lie2Data> {
    require(verify_lie_crossed_module(cm), "the crossed module")?;
    let l3 = Cochain::zero(ComplexKind::Lie, 3, cm.base.ring(), cm.base.rank(), cm.top.rank())?;
    Lie2Data::new(cm.rep.clone(), cm.boundary.clone(), l3)
}

/// `((P₀, m₂, θ), (P₁; ρ, μ), m₃)` from a skeletal 2-algebra.
pub fn skeletal_to_triple(x: &PreLie2Data) -> Result<(PreLieRinehart, Representation, Cochain)> {
    if !x.is_skeletal() {
        return Err(Error::Precondition("m₁ ≠ 0, not a skeletal 2-algebra".into()));
    }
    require(verify_prelie2(x), "the skeletal 2-algebra")?;
    Ok((x.base().clone(), x.rep.clone(), x.m3.clone()))
}

/// The skeletal 2-algebra of a pre-Lie-Rinehart algebra, a representation and a 3-cocycle.
pub fn triple_to_skeletal(rep: &Representation, m3: &Cochain) -> Result<PreLie2Data> {
    require(rep.algebra.verify(), "the algebra")?;
    require(rep.check(), "the representation")?;
    let m1 = LinearMap::zero(rep.ring(), rep.rank(), rep.target_rank());
    PreLie2Data::new(rep.clone(), m1, m3.clone())
}
