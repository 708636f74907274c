use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::coeffring::Ring;
use crate::gen;
use crate::structures::dn;

fn t(s: &str) -> Tree {
    Tree::parse(s).unwrap()
}

fn poly(pairs: &[(&str, i64)]) -> TreePoly {
    poly_in(pairs, usize::MAX)
}

fn poly_in(pairs: &[(&str, i64)], bound: usize) -> TreePoly {
    let mut p = TreePoly::zero(bound);
    for (s, c) in pairs {
        p.add_term(t(s), Rational::from_integer((*c).into()));
    }
    p
}

/// Every tree on `n` nodes from parent arrays `parent[i] < i` and all labellings.
fn brute_force(g: usize, n: usize) -> BTreeSet<Tree> {
    fn build(v: usize, parent: &[usize], labels: &[usize]) -> Tree {
        let kids = (1..parent.len() + 1).filter(|&w| parent[w - 1] == v).map(|w| build(w, parent, labels)).collect();
        Tree::new(labels[v], kids)
    }
    let mut out = BTreeSet::new();
    let mut parent = vec![0; n.saturating_sub(1)];
    loop {
        let mut labels = vec![0; n];
        loop {
            out.insert(build(0, &parent, &labels));
            let Some(k) = (0..n).find(|&k| labels[k] + 1 < g) else { break };
            labels[k] += 1;
            labels[..k].iter_mut().for_each(|l| *l = 0);
        }
        // parent[w - 1] ranges over 0..w
        let Some(k) = (0..parent.len()).find(|&k| parent[k] < k) else { break };
        parent[k] += 1;
        parent[..k].iter_mut().for_each(|p| *p = 0);
    }
    out
}

#[test]
fn parse_and_display() {
    assert_eq!(t("a(b,a(b))").to_string(), "a(a(b),b)");
    assert_eq!(t(" a ( a(b) , b ) "), t("a(b,a(b))"));
    assert_eq!(t("c(a,b)").size(), 3);
    for bad in ["", "A", "a(", "a()", "a(b", "a)b", "ab", "a(b,)"] {
        assert!(Tree::parse(bad).is_err(), "{bad}");
    }
}

#[test]
fn graft_examples() {
    assert_eq!(graft(&t("a"), &t("a"), 5), poly_in(&[("a(a)", 1)], 5));
    assert_eq!(graft(&t("a"), &t("a(a)"), 5), poly_in(&[("a(a,a)", 1), ("a(a(a))", 1)], 5));
    assert_eq!(graft(&t("a"), &t("b(a)"), 5), poly_in(&[("b(a,a)", 1), ("b(a(a))", 1)], 5));
    // two identical attachment points give a coefficient
    assert_eq!(graft(&t("b"), &t("a(a,a)"), 5), poly_in(&[("a(a,a,b)", 1), ("a(a,a(b))", 2)], 5));

    let p = graft(&t("a(b)"), &t("a(a)"), 3);
    assert!(p.is_zero() && p.overflow);
    let p = TreePoly::tree(t("a"), 2).graft(&poly(&[("a", 1), ("a(a)", 1)]));
    assert_eq!(p.terms, poly(&[("a(a)", 1)]).terms);
    assert!(p.overflow);
    assert_eq!(TreePoly::tree(t("a(a,a)"), 2), TreePoly { terms: Default::default(), bound: 2, overflow: true });
}

#[test]
fn counts_match_enumeration() {
    let a000081 = [1u128, 1, 2, 4, 9, 20, 48, 115, 286];
    for (n, &c) in a000081.iter().enumerate() {
        assert_eq!(basis_count(1, n + 1), c);
    }
    for g in 1..=4 {
        assert_eq!(basis_count(g, 1), g as u128);
    }
    assert_eq!(basis_count(2, 2), 4);
    assert_eq!(basis_count(3, 0), 0);
    for (g, max_n) in [(1, 6), (2, 5), (3, 4)] {
        for n in 1..=max_n {
            let oracle = brute_force(g, n);
            let listed = enumerate_trees(g, n);
            assert_eq!(basis_count(g, n), oracle.len() as u128, "g={g} n={n}");
            assert_eq!(listed, oracle.into_iter().collect::<Vec<_>>());
        }
    }
}

#[test]
fn associator_symmetry_up_to_five_nodes() {
    let trees: Vec<Tree> = (1..=3).flat_map(|n| enumerate_trees(2, n)).collect();
    let mut checked = 0;
    for x in &trees {
        for y in &trees {
            for z in &trees {
                if x.size() + y.size() + z.size() > 5 {
                    continue;
                }
                let (x, y, z) =
                    (TreePoly::tree(x.clone(), 5), TreePoly::tree(y.clone(), 5), TreePoly::tree(z.clone(), 5));
                let assoc = |a: &TreePoly, b: &TreePoly| a.graft(&b.graft(&z)).sub(&a.graft(b).graft(&z));
                let (l, r) = (assoc(&x, &y), assoc(&y, &x));
                assert!(!l.overflow);
                assert_eq!(l, r);
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
    // the product is not associative
    let (a, b) = (TreePoly::tree(t("a"), 5), TreePoly::tree(t("b"), 5));
    assert_ne!(a.graft(&b.graft(&a)), a.graft(&b).graft(&a));
}

#[test]
fn star_action_composes() {
    let y = poly(&[("c", 1)]);
    assert_eq!(star_action(&[], &y), y);
    let a = poly(&[("a", 1)]);
    let b = poly(&[("b", 1)]);
    assert_eq!(star_action(std::slice::from_ref(&a), &a), graft(&t("a"), &t("a"), usize::MAX));
    assert_eq!(star_action(&[a.clone(), a.clone()], &a), a.graft(&a.graft(&a)));
    assert_eq!(star_action(&[a.clone(), b.clone()], &y), poly(&[("c(a,b)", 1), ("c(b(a))", 1)]));
    let w1 = [a.clone(), poly(&[("a(b)", 2), ("b", -1)])];
    let w2 = [b.clone(), a];
    let joined: Vec<TreePoly> = w1.iter().chain(&w2).cloned().collect();
    assert_eq!(star_action(&joined, &y), star_action(&w1, &star_action(&w2, &y)));
}

/// `F(B(r; c₁…cₖ))ʲ = Σ F(c₁)^{i₁}⋯F(cₖ)^{iₖ} ∂_{i₁}⋯∂_{iₖ} φ(r)ʲ`.
fn elementary_differential(t: &Tree, phi: &[VectorField]) -> VectorField {
    let ring = phi[0].ring();
    let nv = ring.nvars();
    let cs: Vec<VectorField> = t.children().iter().map(|c| elementary_differential(c, phi)).collect();
    let comps = phi[t.label()]
        .components()
        .iter()
        .map(|f| {
            let mut total = Poly::zero(ring);
            let mut idx = vec![0; cs.len()];
            loop {
                let mut term = idx.iter().fold(f.clone(), |p, &i| p.derivative(i));
                for (c, &i) in cs.iter().zip(&idx) {
                    term = &term * &c.components()[i];
                }
                total += &term;
                let Some(k) = (0..idx.len()).find(|&k| idx[k] + 1 < nv) else { break };
                idx[k] += 1;
                idx[..k].iter_mut().for_each(|i| *i = 0);
            }
            total
        })
        .collect();
    VectorField::new(ring, comps).unwrap()
}

fn sample_fields(seed: u64, ring: &RingRef, g: usize) -> Vec<VectorField> {
    let mut rng = gen::rng(seed);
    let m = gen::random_linear_map(&mut rng, ring, g, ring.nvars(), 2);
    m.entries().iter().map(|row| VectorField::new(ring, row.clone()).unwrap()).collect()
}

#[test]
fn anchor_is_the_elementary_differential() {
    let ring = Ring::polynomial(&["x", "y"]);
    for seed in 0..3 {
        let phi = sample_fields(seed, &ring, 2);
        let free = free_prelie_rinehart(&ring, &phi, 4).unwrap();
        assert_eq!(free.trees.len(), 2 + 4 + 14 + 52);
        for (i, tree) in free.trees.iter().enumerate() {
            assert_eq!(free.algebra.anchor[i], elementary_differential(tree, &phi), "{tree}");
        }
    }
}

#[test]
fn truncated_algebras_verify() {
    let r1 = Ring::polynomial(&["x1"]);
    let free = free_prelie_rinehart(&r1, &[VectorField::partial(&r1, 0)], 3).unwrap();
    let report = free.verify();
    assert!(report.passed(), "{report}");
    assert!(report.item("associator_symmetry").unwrap().note.as_deref().unwrap().contains("leave the bound"));
    assert_eq!(free.algebra.module.basis, ["a", "a(a)", "a(a,a)", "a(a(a))"]);

    let zero = free_prelie_rinehart(&r1, &[VectorField::zero(&r1)], 4).unwrap();
    assert!(zero.verify().passed());
    assert!(zero.algebra.anchor.iter().all(VectorField::is_zero));

    let ring = Ring::polynomial(&["x", "y"]);
    let free = free_prelie_rinehart(&ring, &sample_fields(7, &ring, 2), 4).unwrap();
    assert!(free.verify().passed(), "{}", free.verify());

    let field = Ring::field();
    assert!(free_prelie_rinehart(&field, &vec![VectorField::zero(&field); 3], 3).unwrap().verify().passed());
    assert!(free_prelie_rinehart(&field, &[], 3).is_err());
    assert!(free_prelie_rinehart(&field, &[VectorField::partial(&r1, 0)], 3).is_err());
}

#[test]
fn projections_onto_dn() {
    let r1 = Ring::polynomial(&["x1"]);
    let d1 = dn(&r1);
    let free = free_prelie_rinehart(&r1, &[VectorField::partial(&r1, 0)], 2).unwrap();
    let gens = [d1.basis(0)];
    assert!(check_projection(&free, &d1, &gens).unwrap().passed());
    let pi = projection(&free, &d1, &gens).unwrap();
    assert_eq!(pi.column(0), d1.basis(0));

    let ring = Ring::polynomial(&["x", "y"]);
    let d2 = dn(&ring);
    for seed in 0..3 {
        let phi = sample_fields(20 + seed, &ring, 3);
        let free = free_prelie_rinehart(&ring, &phi, 4).unwrap();
        let gens: Vec<Element> = phi.iter().map(|v| Element::from_coeffs(v.components().to_vec())).collect();
        let report = check_projection(&free, &d2, &gens).unwrap();
        assert!(report.passed(), "{report}");
        assert!(projection(&free, &d2, &gens[..2]).is_err());
    }
}

#[test]
fn free_on_an_algebra() {
    let mut rng = gen::rng(31);
    for _ in 0..4 {
        let e = gen::random_prelie_rinehart(&mut rng);
        let free = free_on_algebra(&e, 3).unwrap();
        assert!(free.verify().passed(), "{}", free.verify());
        let gens: Vec<Element> = (0..e.rank()).map(|i| e.basis(i)).collect();
        let report = check_projection(&free, &e, &gens).unwrap();
        assert!(report.passed(), "{report}");
    }
}

fn arb_tree() -> impl Strategy<Value = Tree> {
    let leaf = (0usize..3).prop_map(Tree::leaf);
    leaf.prop_recursive(3, 8, 3, |inner| {
        ((0usize..3), prop::collection::vec(inner, 1..=3)).prop_map(|(l, c)| Tree::new(l, c))
    })
}

/// Prints `t` with the children of every node rotated by `shift`.
fn scrambled(t: &Tree, shift: usize) -> String {
    let label = (b'a' + t.label() as u8) as char;
    if t.children().is_empty() {
        return label.to_string();
    }
    let k = t.children().len();
    let parts: Vec<String> = (0..k).map(|i| scrambled(&t.children()[(i + shift) % k], shift + 1)).collect();
    format!("{label}({})", parts.join(","))
}

proptest! {
    #[test]
    fn canonical_form_ignores_child_order(x in arb_tree(), y in arb_tree(), shift in 0usize..4) {
        let (x2, y2) = (Tree::parse(&scrambled(&x, shift)).unwrap(), Tree::parse(&scrambled(&y, shift + 1)).unwrap());
        prop_assert_eq!(&x2, &x);
        prop_assert_eq!(Tree::parse(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(graft(&x2, &y2, 20), graft(&x, &y, 20));
        let total: Rational = graft(&x, &y, 20).terms.values().sum();
        prop_assert_eq!(total, Rational::from_integer(y.size().into()));
    }
}
