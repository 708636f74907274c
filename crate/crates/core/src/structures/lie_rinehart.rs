use crate::coeffring::{ensure_same_ring, Element, FreeModule, RingRef, VectorField};
use crate::error::{Error, Result};
use crate::report::Report;

use super::prelie_rinehart::pairs;

/// A Lie-Rinehart algebra on a free module, given on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRinehart {
    pub module: FreeModule,
    /// `bracket[i][j] = [eᵢ, eⱼ]`.
    pub bracket: Vec<Vec<Element>>,
    pub anchor: Vec<VectorField>,
}

impl LieRinehart {
    pub fn new(module: FreeModule, bracket: Vec<Vec<Element>>, anchor: Vec<VectorField>) -> Result<Self> {
        let n = module.rank();
        if bracket.len() != n || bracket.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("bracket table must be {n}x{n}")));
        }
        for e in bracket.iter().flatten() {
            module.check(e)?;
        }
        if anchor.len() != n {
            return Err(Error::Malformed(format!("anchor needs {n} vector fields, got {}", anchor.len())));
        }
        for v in &anchor {
            ensure_same_ring(&module.ring, v.ring())?;
        }
        Ok(LieRinehart { module, bracket, anchor })
    }

    pub fn ring(&self) -> &RingRef {
        &self.module.ring
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn basis(&self, i: usize) -> Element {
        self.module.basis_element(i)
    }

    /// `[Σaᵢeᵢ, Σbⱼeⱼ] = Σ aᵢbⱼ[eᵢ,eⱼ] + aᵢθ(eᵢ)(bⱼ)eⱼ − bⱼθ(eⱼ)(aᵢ)eᵢ`.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = self.module.zero();
        for (i, a) in x.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.add_scaled(&(a * b), &self.bracket[i][j]);
                let t = &self.anchor[i].apply(b) * a;
                let s = &self.anchor[j].apply(a) * b;
                let vj = out.component(j) + &t;
                out.set(j, vj);
                let vi = out.component(i) - &s;
                out.set(i, vi);
            }
        }
        out
    }

    pub fn anchor_of(&self, x: &Element) -> VectorField {
        let mut out = VectorField::zero(self.ring());
        for (a, v) in x.coeffs().iter().zip(&self.anchor) {
            if !a.is_zero() {
                out = out.add(&v.scale(a));
            }
        }
        out
    }

    pub fn verify(&self) -> Report {
        let n = self.rank();
        let mut report = Report::new();
        report.check(
            "antisymmetry",
            pairs(n).filter(|(i, j)| i <= j).map(|(i, j)| (vec![i, j], self.bracket[i][j].add(&self.bracket[j][i]))),
        );
        report.check(
            "anchor_morphism",
            pairs(n).filter(|(i, j)| i < j).map(|(i, j)| {
                let lhs = self.anchor_of(&self.bracket[i][j]);
                (vec![i, j], lhs.sub(&self.anchor[i].commutator(&self.anchor[j])))
            }),
        );
        // The Jacobiator is A-trilinear once the anchor is a morphism.
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    triples.push((i, j, k));
                }
            }
        }
        report.check(
            "jacobi",
            triples.into_iter().map(|(i, j, k)| {
                let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                let s = self
                    .bracket(&x, &self.bracket(&y, &z))
                    .add(&self.bracket(&y, &self.bracket(&z, &x)))
                    .add(&self.bracket(&z, &self.bracket(&x, &y)));
                (vec![i, j, k], s)
            }),
        );
        report
    }
}
