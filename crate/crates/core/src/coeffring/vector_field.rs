use std::fmt;

use super::poly::Poly;
use super::ring::{ensure_same_ring, RingRef};
use crate::error::{Error, Result};

/// A derivation `Σ fᵢ ∂ᵢ` of the coefficient ring.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    ring: RingRef,
    comps: Vec<Poly>,
}

impl VectorField {
    pub fn zero(ring: &RingRef) -> Self {
        VectorField { ring: ring.clone(), comps: vec![Poly::zero(ring); ring.nvars()] }
    }

    pub fn partial(ring: &RingRef, i: usize) -> Self {
        let mut v = VectorField::zero(ring);
        v.comps[i] = Poly::one(ring);
        v
    }

    pub fn new(ring: &RingRef, comps: Vec<Poly>) -> Result<Self> {
        if comps.len() != ring.nvars() {
            return Err(Error::Malformed(format!(
                "vector field with {} components in a ring with {} variables",
                comps.len(),
                ring.nvars()
            )));
        }
        for c in &comps {
            ensure_same_ring(ring, c.ring())?;
        }
        Ok(VectorField { ring: ring.clone(), comps })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (i, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                out += &(c * &f.derivative(i));
            }
        }
        out
    }

    pub fn checked_apply(&self, f: &Poly) -> Result<Poly> {
        ensure_same_ring(&self.ring, f.ring())?;
        Ok(self.apply(f))
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &VectorField) -> VectorField {
        let comps = (0..self.comps.len()).map(|i| self.apply(&other.comps[i]) - other.apply(&self.comps[i])).collect();
        VectorField { ring: self.ring.clone(), comps }
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        VectorField { ring: self.ring.clone(), comps }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect();
        VectorField { ring: self.ring.clone(), comps }
    }

    pub fn scale(&self, a: &Poly) -> VectorField {
        VectorField { ring: self.ring.clone(), comps: self.comps.iter().map(|c| a * c).collect() }
    }

    /// Reinterprets the field in a larger ring through a variable map.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> Result<VectorField> {
        let mut comps = vec![Poly::zero(target); target.nvars()];
        for (i, c) in self.comps.iter().enumerate() {
            comps[map[i]] = c.embed(target, map)?;
        }
        Ok(VectorField { ring: target.clone(), comps })
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .zip(&self.ring.vars)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| if c.nterms() > 1 { format!("({c})*d_{v}") } else { format!("{c}*d_{v}") })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::Ring;

    fn vf(r: &RingRef, comps: &[&str]) -> VectorField {
        VectorField::new(r, comps.iter().map(|s| Poly::parse(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn sl2_like_commutator() {
        let r = Ring::polynomial(&["x1", "x2"]);
        let a = vf(&r, &["0", "x1"]);
        let b = vf(&r, &["x2", "0"]);
        assert_eq!(a.commutator(&b), vf(&r, &["x1", "-x2"]));
    }

    #[test]
    fn apply_is_a_derivation() {
        let r = Ring::polynomial(&["x", "y"]);
        let v = vf(&r, &["y^2", "x + 1"]);
        let f = Poly::parse(&r, "x^2*y + y").unwrap();
        let g = Poly::parse(&r, "x - 3*y^3").unwrap();
        let lhs = v.apply(&(&f * &g));
        let rhs = &v.apply(&f) * &g + &f * &v.apply(&g);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_acts_as_commutator() {
        let r = Ring::polynomial(&["x", "y"]);
        let a = vf(&r, &["x*y", "1"]);
        let b = vf(&r, &["y", "x^2"]);
        let f = Poly::parse(&r, "x^3 + x*y^2").unwrap();
        let lhs = a.commutator(&b).apply(&f);
        let rhs = a.apply(&b.apply(&f)) - b.apply(&a.apply(&f));
        assert_eq!(lhs, rhs);
    }
}
