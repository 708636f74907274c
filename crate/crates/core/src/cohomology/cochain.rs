use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeffring::{Element, Poly, RingRef};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// `Cⁿ = Hom_A(∧ⁿ⁻¹E ⊗ E, ℰ)`, `n ≥ 1`.
    Prelie,
    /// `Ωᵏ = Hom_A(∧ᵏE, ℰ)`, `k ≥ 0`.
    Lie,
}

/// An `A`-multilinear cochain stored by its values on canonical basis tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub kind: ComplexKind,
    pub degree: usize,
    pub ring: RingRef,
    /// Rank of the algebra `E`.
    pub rank: usize,
    /// Rank of the value module `ℰ`.
    pub target_rank: usize,
    pub values: BTreeMap<Vec<usize>, Element>,
}

fn increasing(rank: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, rank: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..rank {
            cur.push(i);
            go(i + 1, rank, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, rank, len, &mut Vec::new(), &mut out);
    out
}

/// Canonical index tuples of a cochain space, in a fixed order.
pub fn canonical_tuples(kind: ComplexKind, degree: usize, rank: usize) -> Vec<Vec<usize>> {
    match kind {
        ComplexKind::Lie => increasing(rank, degree),
        ComplexKind::Prelie => {
            let mut out = Vec::new();
            for head in increasing(rank, degree - 1) {
                for j in 0..rank {
                    let mut t = head.clone();
                    t.push(j);
                    out.push(t);
                }
            }
            out
        }
    }
}

/// Sorts `idx` and returns the permutation sign, or `None` if an index repeats.
fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut negative = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, negative))
    }
}

impl Cochain {
    pub fn zero(kind: ComplexKind, degree: usize, ring: &RingRef, rank: usize, target_rank: usize) -> Result<Self> {
        if kind == ComplexKind::Prelie && degree == 0 {
            return Err(Error::Degree(0));
        }
        let values =
            canonical_tuples(kind, degree, rank).into_iter().map(|t| (t, Element::zero(ring, target_rank))).collect();
        Ok(Cochain { kind, degree, ring: ring.clone(), rank, target_rank, values })
    }

    /// Builds a cochain from its values on the canonical tuples.
    pub fn from_fn(
        kind: ComplexKind,
        degree: usize,
        ring: &RingRef,
        rank: usize,
        target_rank: usize,
        mut f: impl FnMut(&[usize]) -> Element,
    ) -> Result<Self> {
        let mut c = Cochain::zero(kind, degree, ring, rank, target_rank)?;
        for (t, v) in c.values.iter_mut() {
            *v = f(t);
        }
        Ok(c)
    }

    /// Builds a cochain from explicit values; tuples must be canonical and each at most once.
    pub fn from_values(
        kind: ComplexKind,
        degree: usize,
        ring: &RingRef,
        rank: usize,
        target_rank: usize,
        entries: Vec<(Vec<usize>, Element)>,
    ) -> Result<Self> {
        let mut c = Cochain::zero(kind, degree, ring, rank, target_rank)?;
        for (t, v) in entries {
            if v.rank() != target_rank {
                return Err(Error::ModuleMismatch(format!(
                    "value of rank {} in a cochain valued in rank {target_rank}",
                    v.rank()
                )));
            }
            match c.values.get_mut(&t) {
                Some(slot) => *slot = v,
                None => return Err(Error::Malformed(format!("{t:?} is not a canonical tuple"))),
            }
        }
        Ok(c)
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Element::is_zero)
    }

    /// Value on basis elements with arbitrary (not necessarily canonical) indices.
    pub fn on_basis(&self, idx: &[usize]) -> Element {
        assert_eq!(idx.len(), self.degree, "wrong number of arguments");
        let zero = || Element::zero(&self.ring, self.target_rank);
        let wedge = match self.kind {
            ComplexKind::Lie => idx.len(),
            ComplexKind::Prelie => idx.len() - 1,
        };
        let Some((mut sorted, negative)) = sort_sign(&idx[..wedge]) else { return zero() };
        sorted.extend_from_slice(&idx[wedge..]);
        let v = &self.values[&sorted];
        if negative {
            v.neg()
        } else {
            v.clone()
        }
    }

    /// Value on arbitrary elements, by `A`-multilinearity.
    pub fn eval(&self, args: &[Element]) -> Element {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut out = Element::zero(&self.ring, self.target_rank);
        let mut idx = vec![0; self.degree];
        self.eval_rec(args, 0, &mut idx, &Poly::one(&self.ring), &mut out);
        out
    }

    fn eval_rec(&self, args: &[Element], pos: usize, idx: &mut Vec<usize>, coeff: &Poly, out: &mut Element) {
        if pos == args.len() {
            out.add_scaled(coeff, &self.on_basis(idx));
            return;
        }
        for (i, a) in args[pos].coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            idx[pos] = i;
            self.eval_rec(args, pos + 1, idx, &(coeff * a), out);
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn scale(&self, a: &Poly) -> Cochain {
        let mut c = self.clone();
        for v in c.values.values_mut() {
            *v = v.scale(a);
        }
        c
    }

    fn zip(&self, other: &Cochain, f: impl Fn(&Element, &Element) -> Element) -> Cochain {
        assert!(
            self.kind == other.kind
                && self.degree == other.degree
                && self.rank == other.rank
                && self.target_rank == other.target_rank,
            "cochain shapes differ"
        );
        let mut c = self.clone();
        for (t, v) in c.values.iter_mut() {
            *v = f(v, &other.values[t]);
        }
        c
    }

    pub fn same_shape(&self, other: &Cochain) -> bool {
        self.kind == other.kind
            && self.degree == other.degree
            && self.rank == other.rank
            && self.target_rank == other.target_rank
    }
}
