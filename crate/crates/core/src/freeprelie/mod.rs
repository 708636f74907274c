//! Free pre-Lie algebras on rooted trees, truncated by node count, and the
//! free pre-Lie-Rinehart algebras built from them.
//!
//! `t1·t2` grafts the root of `t1` as a new child of each node of `t2` in turn.
//! The associator `(x,y,z) = x·(y·z) − (x·y)·z` is then symmetric in `x, y`: it is the sum
//! over attaching `x` and `y` at two nodes of `z`, both of which are counted by `x·(y·z)`
//! together with `x` below `y`, and the latter terms are exactly `(x·y)·z`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::coeffring::{Element, FreeModule, LinearMap, Poly, Rational, RingRef, VectorField};
use crate::error::{Error, Result};
use crate::gen::flat_product;
use crate::report::Report;
use crate::structures::{pairs, PreLieRinehart};

/// A rooted tree with generator labels; children are kept sorted, so equal trees compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    label: usize,
    children: Vec<Tree>,
}

impl Tree {
    pub fn leaf(label: usize) -> Tree {
        Tree { label, children: vec![] }
    }

    pub fn new(label: usize, mut children: Vec<Tree>) -> Tree {
        children.sort();
        Tree { label, children }
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    pub fn max_label(&self) -> usize {
        self.children.iter().map(Tree::max_label).fold(self.label, usize::max)
    }

    /// Parses `a(b,a(b))`: one lowercase letter per node, children in parentheses.
    pub fn parse(s: &str) -> Result<Tree> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in tree {s:?}")));
        }
        Ok(t)
    }

    /// Every tree obtained by attaching `self` as a new child of one node of `other`,
    /// listed once per node.
    pub fn graft_onto(&self, other: &Tree) -> Vec<Tree> {
        let mut out = vec![];
        let mut children = other.children.clone();
        children.push(self.clone());
        out.push(Tree::new(other.label, children));
        for (i, c) in other.children.iter().enumerate() {
            for g in self.graft_onto(c) {
                let mut children = other.children.clone();
                children[i] = g;
                out.push(Tree::new(other.label, children));
            }
        }
        out
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<Tree> {
    let c = *chars.get(*pos).ok_or_else(|| Error::Parse("unexpected end of tree".into()))?;
    if !c.is_ascii_lowercase() {
        return Err(Error::Parse(format!("expected a label a-z, found {c:?}")));
    }
    *pos += 1;
    let label = (c as u8 - b'a') as usize;
    let mut children = vec![];
    if chars.get(*pos) == Some(&'(') {
        *pos += 1;
        loop {
            children.push(parse_tree(chars, pos)?);
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(')') => {
                    *pos += 1;
                    break;
                }
                _ => return Err(Error::Parse("expected ',' or ')' in tree".into())),
            }
        }
    }
    Ok(Tree::new(label, children))
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", (b'a' + self.label as u8) as char)?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Basis order: by node count, then canonical order.
fn basis_order(a: &Tree, b: &Tree) -> std::cmp::Ordering {
    a.size().cmp(&b.size()).then_with(|| a.cmp(b))
}

/// A linear combination of trees with at most `bound` nodes. Products that leave the
/// bound are dropped and `overflow` is set.
#[derive(Clone, PartialEq, Eq)]
pub struct TreePoly {
    pub terms: BTreeMap<Tree, Rational>,
    pub bound: usize,
    pub overflow: bool,
}

impl TreePoly {
    pub fn zero(bound: usize) -> Self {
        TreePoly { terms: BTreeMap::new(), bound, overflow: false }
    }

    pub fn tree(t: Tree, bound: usize) -> Self {
        let mut p = TreePoly::zero(bound);
        p.add_term(t, Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: Tree, c: Rational) {
        if t.size() > self.bound {
            self.overflow = true;
            return;
        }
        let v = self.terms.remove(&t).unwrap_or_else(Rational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(t, v);
        }
    }

    pub fn add(&self, other: &TreePoly) -> TreePoly {
        let mut out = self.clone();
        out.bound = self.bound.min(other.bound);
        out.overflow |= other.overflow;
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TreePoly {
        let mut out = TreePoly::zero(self.bound);
        out.overflow = self.overflow;
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, other: &TreePoly) -> TreePoly {
        self.add(&other.scale(&-Rational::one()))
    }

    /// The grafting product, extended bilinearly.
    pub fn graft(&self, other: &TreePoly) -> TreePoly {
        let mut out = TreePoly::zero(self.bound.min(other.bound));
        out.overflow = self.overflow || other.overflow;
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                if s.size() + t.size() > out.bound {
                    out.overflow = true;
                    continue;
                }
                let ab = a * b;
                for g in s.graft_onto(t) {
                    out.add_term(g, ab.clone());
                }
            }
        }
        out
    }
}

impl fmt::Display for TreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Tree> = self.terms.keys().collect();
        keys.sort_by(|a, b| basis_order(a, b));
        for (i, t) in keys.into_iter().enumerate() {
            let c = &self.terms[t];
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{c}*{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn graft(t1: &Tree, t2: &Tree, bound: usize) -> TreePoly {
    TreePoly::tree(t1.clone(), bound).graft(&TreePoly::tree(t2.clone(), bound))
}

/// `(x₁ ⊗ ⋯ ⊗ xₙ) ⋆ y = L_{x₁} ∘ ⋯ ∘ L_{xₙ} y`.
pub fn star_action(word: &[TreePoly], y: &TreePoly) -> TreePoly {
    word.iter().rev().fold(y.clone(), |acc, x| x.graft(&acc))
}

/// All trees with exactly `n` nodes over `g` labels, in canonical order.
pub fn enumerate_trees(g: usize, n: usize) -> Vec<Tree> {
    let mut by_size: Vec<Vec<Tree>> = vec![vec![]];
    for size in 1..=n {
        let mut trees = vec![];
        for forest in forests(&by_size, size - 1) {
            for label in 0..g {
                trees.push(Tree::new(label, forest.clone()));
            }
        }
        trees.sort();
        by_size.push(trees);
    }
    by_size.pop().unwrap_or_default()
}

/// Multisets of trees (taken from `by_size`) with `m` nodes in total.
fn forests(by_size: &[Vec<Tree>], m: usize) -> Vec<Vec<Tree>> {
    let pool: Vec<&Tree> = by_size.iter().flatten().collect();
    let mut out = vec![];
    fn go(pool: &[&Tree], start: usize, left: usize, cur: &mut Vec<Tree>, out: &mut Vec<Vec<Tree>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            let s = pool[i].size();
            if s <= left {
                cur.push(pool[i].clone());
                go(pool, i, left - s, cur, out);
                cur.pop();
            }
        }
    }
    go(&pool, 0, m, &mut vec![], &mut out);
    out
}

/// Number of rooted trees with `n` nodes and `g` labels, by the Euler transform
/// `t(n+1) = g · f(n)`, where `f` counts forests.
pub fn basis_count(g: usize, n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut t = vec![0u128; n + 1];
    let mut f = vec![0u128; n + 1];
    f[0] = 1;
    for k in 1..=n {
        t[k] = g as u128 * f[k - 1];
        // k f(k) = Σ_{j=1..k} c(j) f(k−j), c(j) = Σ_{d | j} d t(d)
        let mut acc = 0u128;
        for j in 1..=k {
            let c: u128 = (1..=j).filter(|d| j % d == 0).map(|d| d as u128 * t[d]).sum();
            acc += c * f[k - j];
        }
        f[k] = acc / k as u128;
    }
    t[n]
}

type BinOp<'a, T> = Box<dyn Fn(&T, &T) -> T + 'a>;

/// The unique pre-Lie morphism from trees into an algebra with product `mul` sending
/// the leaf labelled `i` to `gen(i)`.
///
/// Uses `B(r; c₁,…,cₖ) = c₁ · B(r; c₂,…,cₖ) − Σ c₁ grafted below a non-root node`.
pub struct Evaluator<'a, T> {
    gen: Box<dyn Fn(usize) -> T + 'a>,
    mul: BinOp<'a, T>,
    sub: BinOp<'a, T>,
    memo: HashMap<Tree, T>,
}

impl<'a, T: Clone> Evaluator<'a, T> {
    pub fn new(gen: impl Fn(usize) -> T + 'a, mul: impl Fn(&T, &T) -> T + 'a, sub: impl Fn(&T, &T) -> T + 'a) -> Self {
        Evaluator { gen: Box::new(gen), mul: Box::new(mul), sub: Box::new(sub), memo: HashMap::new() }
    }

    pub fn eval(&mut self, t: &Tree) -> T {
        if let Some(v) = self.memo.get(t) {
            return v.clone();
        }
        let v = if t.children.is_empty() {
            (self.gen)(t.label)
        } else {
            let first = t.children[0].clone();
            let rest = Tree::new(t.label, t.children[1..].to_vec());
            let (a, b) = (self.eval(&first), self.eval(&rest));
            let mut v = (self.mul)(&a, &b);
            // the first graft lists attachment at the root, which is `t` itself
            for g in first.graft_onto(&rest).into_iter().skip(1) {
                let w = self.eval(&g);
                v = (self.sub)(&v, &w);
            }
            v
        };
        self.memo.insert(t.clone(), v.clone());
        v
    }
}

/// `A ⊗ 𝔤_{≤bound}` on the trees of at most `bound` nodes over `g` labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreePreLieRinehart {
    pub trees: Vec<Tree>,
    pub bound: usize,
    pub algebra: PreLieRinehart,
}

fn all_trees(g: usize, bound: usize) -> Vec<Tree> {
    (1..=bound).flat_map(|n| enumerate_trees(g, n)).collect()
}

fn product_table(ring: &RingRef, trees: &[Tree], bound: usize) -> Vec<Vec<Element>> {
    let index: HashMap<&Tree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let n = trees.len();
    trees
        .iter()
        .map(|s| {
            trees
                .iter()
                .map(|t| {
                    let mut e = Element::zero(ring, n);
                    for (tree, c) in graft(s, t, bound).terms {
                        let k = index[&tree];
                        let v = e.component(k) + &Poly::constant(ring, c);
                        e.set(k, v);
                    }
                    e
                })
                .collect()
        })
        .collect()
}

impl FreePreLieRinehart {
    fn build(ring: &RingRef, g: usize, bound: usize, mut anchor: impl FnMut(&Tree) -> VectorField) -> Result<Self> {
        if g == 0 || g > 26 {
            return Err(Error::Malformed("between 1 and 26 generators are supported".into()));
        }
        let trees = all_trees(g, bound);
        let module = FreeModule::new(ring, trees.iter().map(Tree::to_string).collect())?;
        let product = product_table(ring, &trees, bound);
        let anchor = trees.iter().map(&mut anchor).collect();
        let algebra = PreLieRinehart::new(module, product, anchor)?;
        Ok(FreePreLieRinehart { trees, bound, algebra })
    }

    pub fn index_of(&self, t: &Tree) -> Option<usize> {
        self.trees.iter().position(|s| s == t)
    }

    /// Anchor law and associator symmetry on every basis tuple whose products stay
    /// within the bound; the remaining tuples are counted in a note.
    pub fn verify(&self) -> Report {
        let alg = &self.algebra;
        let n = self.trees.len();
        let size = |i: usize| self.trees[i].size();
        let mut report = Report::new();
        let mut skipped = 0usize;
        let anchor_cases: Vec<_> = pairs(n)
            .filter(|&(i, j)| {
                let ok = size(i) + size(j) <= self.bound;
                skipped += usize::from(!ok);
                ok
            })
            .collect();
        report.check(
            "anchor_morphism",
            anchor_cases.into_iter().map(|(i, j)| {
                let lhs = alg.anchor_of(&alg.commutator(&alg.basis(i), &alg.basis(j)));
                (vec![i, j], lhs.sub(&alg.anchor[i].commutator(&alg.anchor[j])))
            }),
        );
        report.note_last(format!("{skipped} pairs leave the bound"));
        let mut skipped = 0usize;
        let mut triples = vec![];
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if size(i) + size(j) + size(k) <= self.bound {
                        triples.push((i, j, k));
                    } else {
                        skipped += 1;
                    }
                }
            }
        }
        report.check(
            "associator_symmetry",
            triples.into_iter().map(|(i, j, k)| {
                let (x, y, z) = (alg.basis(i), alg.basis(j), alg.basis(k));
                (vec![i, j, k], alg.associator(&x, &y, &z).sub(&alg.associator(&y, &x, &z)))
            }),
        );
        report.note_last(format!("{skipped} triples leave the bound"));
        report
    }
}

/// The free pre-Lie-Rinehart algebra generated by `φ: V → Der(A)`, truncated at `bound` nodes.
///
/// The anchor of a tree is its image under the pre-Lie morphism into vector fields with
/// the flat product `X·Y = Σₖ X(Yₖ)∂ₖ` that extends `φ`.
pub fn free_prelie_rinehart(ring: &RingRef, phi: &[VectorField], bound: usize) -> Result<FreePreLieRinehart> {
    for v in phi {
        if v.ring() != ring {
            return Err(Error::RingMismatch("φ must take values in Der(A) of the given ring".into()));
        }
    }
    let mut ev = Evaluator::new(|i| phi[i].clone(), flat_product, |a: &VectorField, b| a.sub(b));
    FreePreLieRinehart::build(ring, phi.len(), bound, |t| ev.eval(t))
}

/// The free pre-Lie-Rinehart algebra on the generators of `e`, with anchor `θ_E ∘ π`.
pub fn free_on_algebra(e: &PreLieRinehart, bound: usize) -> Result<FreePreLieRinehart> {
    let gens: Vec<Element> = (0..e.rank()).map(|i| e.basis(i)).collect();
    let mut ev = evaluator(e, &gens);
    FreePreLieRinehart::build(e.ring(), e.rank(), bound, |t| e.anchor_of(&ev.eval(t)))
}

fn evaluator<'a>(e: &'a PreLieRinehart, gens: &'a [Element]) -> Evaluator<'a, Element> {
    Evaluator::new(move |i| gens[i].clone(), move |a, b| e.mul(a, b), |a: &Element, b| a.sub(b))
}

/// `π(a ⊗ t) = a · t(gens)`, the tree evaluated in `e` with leaf `i` sent to `gens[i]`.
pub fn projection(free: &FreePreLieRinehart, e: &PreLieRinehart, gens: &[Element]) -> Result<LinearMap> {
    let g = free.trees.iter().map(Tree::max_label).max().map_or(0, |m| m + 1);
    if gens.len() != g || gens.iter().any(|x| x.rank() != e.rank()) {
        return Err(Error::Malformed(format!("need {g} generator images in a module of rank {}", e.rank())));
    }
    let mut ev = evaluator(e, gens);
    let cols: Vec<Element> = free.trees.iter().map(|t| ev.eval(t)).collect();
    LinearMap::from_columns(e.ring(), e.rank(), &cols)
}

/// `π` respects anchors and in-bound products, and sends the leaves to `gens`.
pub fn check_projection(free: &FreePreLieRinehart, e: &PreLieRinehart, gens: &[Element]) -> Result<Report> {
    let pi = projection(free, e, gens)?;
    let alg = &free.algebra;
    let n = free.trees.len();
    let mut report = Report::new();
    report.check("anchor", (0..n).map(|i| (vec![i], e.anchor_of(&pi.column(i)).sub(&alg.anchor[i]))));
    report.check(
        "product",
        pairs(n)
            .filter(|&(i, j)| free.trees[i].size() + free.trees[j].size() <= free.bound)
            .map(|(i, j)| (vec![i, j], pi.apply(&alg.product[i][j]).sub(&e.mul(&pi.column(i), &pi.column(j))))),
    );
    report.check(
        "generators",
        gens.iter().enumerate().map(|(i, x)| {
            let k = free.index_of(&Tree::leaf(i)).expect("leaves are within any bound");
            (vec![i], pi.column(k).sub(x))
        }),
    );
    Ok(report)
}

#[cfg(test)]
mod tests;
