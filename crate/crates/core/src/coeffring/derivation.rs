use super::module::{Element, LinearMap};
use super::poly::Poly;
use super::ring::RingRef;
use super::vector_field::VectorField;
use crate::error::{Error, Result};

/// A derivation `(D, σ_D)` of a free module: `D(a u) = a D(u) + σ_D(a) u`.
///
/// `linear` holds `D` on the basis; on a general element `Σ aⱼ eⱼ` the pair
/// acts by `Σ aⱼ D(eⱼ) + σ_D(aⱼ) eⱼ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationPair {
    pub linear: LinearMap,
    pub symbol: VectorField,
}

impl DerivationPair {
    pub fn new(linear: LinearMap, symbol: VectorField) -> Result<Self> {
        if linear.rows() != linear.cols() {
            return Err(Error::ModuleMismatch("linear part must be an endomorphism".into()));
        }
        super::ring::ensure_same_ring(linear.ring(), symbol.ring())?;
        Ok(DerivationPair { linear, symbol })
    }

    pub fn zero(ring: &RingRef, rank: usize) -> Self {
        DerivationPair { linear: LinearMap::zero(ring, rank, rank), symbol: VectorField::zero(ring) }
    }

    /// An `A`-linear endomorphism viewed as a derivation with zero symbol.
    pub fn from_linear(linear: LinearMap) -> Self {
        let symbol = VectorField::zero(linear.ring());
        DerivationPair { linear, symbol }
    }

    pub fn rank(&self) -> usize {
        self.linear.rows()
    }

    pub fn ring(&self) -> &RingRef {
        self.linear.ring()
    }

    pub fn apply(&self, u: &Element) -> Element {
        let mut out = self.linear.apply(u);
        for (j, c) in u.coeffs().iter().enumerate() {
            let s = self.symbol.apply(c);
            if !s.is_zero() {
                let v = out.component(j) + &s;
                out.set(j, v);
            }
        }
        out
    }

    pub fn checked_apply(&self, u: &Element) -> Result<Element> {
        self.linear.checked_apply(u)?;
        Ok(self.apply(u))
    }

    /// `D(a·u) = a D(u) + σ_D(a) u`.
    pub fn apply_scaled(&self, a: &Poly, u: &Element) -> Element {
        let mut out = self.apply(u).scale(a);
        out.add_scaled(&self.symbol.apply(a), u);
        out
    }

    pub fn commutator(&self, other: &DerivationPair) -> DerivationPair {
        let n = self.rank();
        let cols: Vec<Element> = (0..n)
            .map(|j| {
                let e = Element::basis(self.ring(), n, j);
                self.apply(&other.apply(&e)).sub(&other.apply(&self.apply(&e)))
            })
            .collect();
        DerivationPair {
            linear: LinearMap::from_columns(self.ring(), n, &cols).expect("shapes agree"),
            symbol: self.symbol.commutator(&other.symbol),
        }
    }

    pub fn add(&self, other: &DerivationPair) -> DerivationPair {
        DerivationPair { linear: self.linear.add(&other.linear), symbol: self.symbol.add(&other.symbol) }
    }

    pub fn sub(&self, other: &DerivationPair) -> DerivationPair {
        DerivationPair { linear: self.linear.sub(&other.linear), symbol: self.symbol.sub(&other.symbol) }
    }

    /// `a·(D, σ) = (aD, aσ)`.
    pub fn scale(&self, a: &Poly) -> DerivationPair {
        DerivationPair { linear: self.linear.scale(a), symbol: self.symbol.scale(a) }
    }

    pub fn is_zero(&self) -> bool {
        self.linear.is_zero() && self.symbol.is_zero()
    }
}
