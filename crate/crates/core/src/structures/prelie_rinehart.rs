use crate::coeffring::{ensure_same_ring, DerivationPair, Element, FreeModule, LinearMap, Poly, RingRef, VectorField};
use crate::error::{Error, Result};
use crate::report::Report;

use super::lie_rinehart::LieRinehart;

/// A pre-Lie-Rinehart algebra on a free module, given by the products of
/// basis elements and the anchor on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieRinehart {
    pub module: FreeModule,
    /// `product[i][j] = eᵢ · eⱼ`.
    pub product: Vec<Vec<Element>>,
    pub anchor: Vec<VectorField>,
}

impl PreLieRinehart {
    pub fn new(module: FreeModule, product: Vec<Vec<Element>>, anchor: Vec<VectorField>) -> Result<Self> {
        let n = module.rank();
        if product.len() != n || product.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("product table must be {n}x{n}")));
        }
        for e in product.iter().flatten() {
            module.check(e)?;
        }
        if anchor.len() != n {
            return Err(Error::Malformed(format!("anchor needs {n} vector fields, got {}", anchor.len())));
        }
        for v in &anchor {
            ensure_same_ring(&module.ring, v.ring())?;
        }
        Ok(PreLieRinehart { module, product, anchor })
    }

    pub fn zero(module: FreeModule) -> Self {
        let n = module.rank();
        let product = vec![vec![module.zero(); n]; n];
        let anchor = vec![VectorField::zero(&module.ring); n];
        PreLieRinehart { module, product, anchor }
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

    /// `X · Y` extended from the table by `(aX)·Y = a(X·Y)` and `X·(aY) = a X·Y + θ(X)(a) Y`.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let n = self.rank();
        let mut out = self.module.zero();
        for i in 0..n {
            let a = x.component(i);
            if a.is_zero() {
                continue;
            }
            let mut inner = self.module.zero();
            for j in 0..n {
                let b = y.component(j);
                if b.is_zero() {
                    continue;
                }
                inner.add_scaled(b, &self.product[i][j]);
                let t = self.anchor[i].apply(b);
                if !t.is_zero() {
                    let v = inner.component(j) + &t;
                    inner.set(j, v);
                }
            }
            out.add_scaled(a, &inner);
        }
        out
    }

    pub fn checked_mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.module.check(x)?;
        self.module.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        self.mul(x, y).sub(&self.mul(y, x))
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

    /// `(X,Y,Z) = X·(Y·Z) − (X·Y)·Z`.
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Element {
        self.mul(x, &self.mul(y, z)).sub(&self.mul(&self.mul(x, y), z))
    }

    /// Left multiplication by `eᵢ` as a derivation pair with symbol `θ(eᵢ)`.
    pub fn left_mul(&self, i: usize) -> DerivationPair {
        let linear = LinearMap::from_columns(self.ring(), self.rank(), &self.product[i]).expect("table shapes");
        DerivationPair { linear, symbol: self.anchor[i].clone() }
    }

    /// Right multiplication by `eⱼ`, which is `A`-linear.
    pub fn right_mul(&self, j: usize) -> LinearMap {
        let cols: Vec<Element> = (0..self.rank()).map(|i| self.product[i][j].clone()).collect();
        LinearMap::from_columns(self.ring(), self.rank(), &cols).expect("table shapes")
    }

    /// Checks the anchor law on basis pairs, then associator symmetry on basis triples.
    ///
    /// Once the anchor law holds, `(X,Y,Z) − (Y,X,Z)` is `A`-trilinear, so the
    /// generators suffice.
    pub fn verify(&self) -> Report {
        let n = self.rank();
        let mut report = Report::new();
        report.check(
            "anchor_morphism",
            pairs(n).map(|(i, j)| {
                let lhs = self.anchor_of(&self.commutator(&self.basis(i), &self.basis(j)));
                let rhs = self.anchor[i].commutator(&self.anchor[j]);
                (vec![i, j], lhs.sub(&rhs))
            }),
        );
        report.check(
            "associator_symmetry",
            triples(n).filter(|(i, j, _)| i < j).map(|(i, j, k)| {
                let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                (vec![i, j, k], self.associator(&x, &y, &z).sub(&self.associator(&y, &x, &z)))
            }),
        );
        report
    }

    /// Bracket `[X,Y] = X·Y − Y·X` with the same anchor.
    pub fn sub_adjacent(&self) -> LieRinehart {
        let n = self.rank();
        let bracket =
            (0..n).map(|i| (0..n).map(|j| self.commutator(&self.basis(i), &self.basis(j))).collect()).collect();
        LieRinehart { module: self.module.clone(), bracket, anchor: self.anchor.clone() }
    }

    pub fn checked_sub_adjacent(&self) -> Result<LieRinehart> {
        let report = self.verify();
        if !report.passed() {
            return Err(Error::Precondition(format!(
                "input fails verification: {}",
                report.first_failure().unwrap().id
            )));
        }
        Ok(self.sub_adjacent())
    }

    /// An element with the given polynomial coordinates.
    pub fn element(&self, coeffs: &[&str]) -> Result<Element> {
        if coeffs.len() != self.rank() {
            return Err(Error::ModuleMismatch(format!("{} coordinates for rank {}", coeffs.len(), self.rank())));
        }
        let c = coeffs.iter().map(|s| Poly::parse(self.ring(), s)).collect::<Result<Vec<_>>>()?;
        Ok(Element::from_coeffs(c))
    }
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

pub(crate) fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

/// Checks that `phi` (columns = images of the source basis) is a morphism:
/// it preserves products on basis pairs and intertwines the anchors.
pub fn check_homomorphism(src: &PreLieRinehart, dst: &PreLieRinehart, phi: &LinearMap) -> Report {
    let mut report = Report::new();
    if phi.cols() != src.rank() || phi.rows() != dst.rank() {
        report.fail("shape", vec![phi.rows(), phi.cols()], "map does not match the algebras");
        return report;
    }
    report.check(
        "product",
        pairs(src.rank()).map(|(i, j)| {
            let lhs = phi.apply(&src.product[i][j]);
            let rhs = dst.mul(&phi.column(i), &phi.column(j));
            (vec![i, j], lhs.sub(&rhs))
        }),
    );
    report.check("anchor", (0..src.rank()).map(|i| (vec![i], dst.anchor_of(&phi.column(i)).sub(&src.anchor[i]))));
    report
}
