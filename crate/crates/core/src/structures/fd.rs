//! Finite-dimensional pre-Lie and Lie algebras over ℚ and their actions by vector fields.

use num_traits::Zero;

use crate::coeffring::{int, Poly, Rational, RingRef, VectorField};
use crate::error::{Error, Result};
use crate::report::Report;

use super::prelie_rinehart::{pairs, triples};

type Table = Vec<Vec<Vec<Rational>>>;

fn check_table(dim: usize, t: &Table) -> Result<()> {
    if t.len() != dim || t.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
        return Err(Error::Malformed(format!("structure constants must be {dim}x{dim}x{dim}")));
    }
    Ok(())
}

fn bilinear(t: &Table, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let dim = x.len();
    let mut out = vec![Rational::zero(); dim];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (o, c) in out.iter_mut().zip(&t[i][j]) {
                *o += &ab * c;
            }
        }
    }
    out
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = int(1);
    v
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(crate::coeffring::rational::format_rational).collect();
    format!("[{}]", parts.join(", "))
}

/// Anything with a bracket on a finite basis: Lie algebras, or pre-Lie algebras via the commutator.
pub trait FdBracket {
    fn dim(&self) -> usize;
    fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational>;
    fn verify_algebra(&self) -> Report;

    fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let d = self.dim();
        self.bracket_vec(&unit(d, i), &unit(d, j))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieAlgebraFD {
    pub dim: usize,
    /// `product[i][j]` = coordinates of `eᵢ·eⱼ`.
    pub product: Table,
}

impl PreLieAlgebraFD {
    pub fn new(dim: usize, product: Table) -> Result<Self> {
        check_table(dim, &product)?;
        Ok(PreLieAlgebraFD { dim, product })
    }

    pub fn zero(dim: usize) -> Self {
        PreLieAlgebraFD { dim, product: vec![vec![vec![Rational::zero(); dim]; dim]; dim] }
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        bilinear(&self.product, x, y)
    }

    pub fn associator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        sub(&self.mul(x, &self.mul(y, z)), &self.mul(&self.mul(x, y), z))
    }

    pub fn verify(&self) -> Report {
        let d = self.dim;
        let mut r = Report::new();
        let mut first = None;
        for (i, j, k) in triples(d).filter(|(i, j, _)| i < j) {
            let (x, y, z) = (unit(d, i), unit(d, j), unit(d, k));
            let diff = sub(&self.associator(&x, &y, &z), &self.associator(&y, &x, &z));
            if !is_zero(&diff) {
                first = Some((vec![i, j, k], fmt_vec(&diff)));
                break;
            }
        }
        match first {
            None => r.pass("associator_symmetry"),
            Some((t, v)) => r.fail("associator_symmetry", t, v),
        }
        r
    }

    pub fn sub_adjacent(&self) -> LieAlgebraFD {
        let d = self.dim;
        let bracket = (0..d).map(|i| (0..d).map(|j| self.bracket_basis(i, j)).collect()).collect();
        LieAlgebraFD { dim: d, bracket }
    }
}

impl FdBracket for PreLieAlgebraFD {
    fn dim(&self) -> usize {
        self.dim
    }
    fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        sub(&self.mul(x, y), &self.mul(y, x))
    }
    fn verify_algebra(&self) -> Report {
        self.verify()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraFD {
    pub dim: usize,
    pub bracket: Table,
}

impl LieAlgebraFD {
    pub fn new(dim: usize, bracket: Table) -> Result<Self> {
        check_table(dim, &bracket)?;
        Ok(LieAlgebraFD { dim, bracket })
    }

    /// sl(2) on the basis (h, e, f): `[h,e]=2e, [h,f]=−2f, [e,f]=h`.
    pub fn sl2() -> Self {
        let z = || vec![Rational::zero(); 3];
        let mut b = vec![vec![z(); 3]; 3];
        b[0][1] = vec![int(0), int(2), int(0)];
        b[1][0] = vec![int(0), int(-2), int(0)];
        b[0][2] = vec![int(0), int(0), int(-2)];
        b[2][0] = vec![int(0), int(0), int(2)];
        b[1][2] = vec![int(1), int(0), int(0)];
        b[2][1] = vec![int(-1), int(0), int(0)];
        LieAlgebraFD { dim: 3, bracket: b }
    }

    pub fn verify(&self) -> Report {
        let d = self.dim;
        let mut r = Report::new();
        let anti = pairs(d).filter(|(i, j)| i <= j).find_map(|(i, j)| {
            let s: Vec<Rational> = self.bracket[i][j].iter().zip(&self.bracket[j][i]).map(|(a, b)| a + b).collect();
            (!is_zero(&s)).then(|| (vec![i, j], fmt_vec(&s)))
        });
        match anti {
            None => r.pass("antisymmetry"),
            Some((t, v)) => r.fail("antisymmetry", t, v),
        }
        let jac = triples(d).filter(|(i, j, k)| i < j && j < k).find_map(|(i, j, k)| {
            let (x, y, z) = (unit(d, i), unit(d, j), unit(d, k));
            let b = |u: &[Rational], v: &[Rational]| bilinear(&self.bracket, u, v);
            let s: Vec<Rational> = b(&x, &b(&y, &z))
                .iter()
                .zip(b(&y, &b(&z, &x)))
                .zip(b(&z, &b(&x, &y)))
                .map(|((p, q), r)| p + q + r)
                .collect();
            (!is_zero(&s)).then(|| (vec![i, j, k], fmt_vec(&s)))
        });
        match jac {
            None => r.pass("jacobi"),
            Some((t, v)) => r.fail("jacobi", t, v),
        }
        r
    }
}

impl FdBracket for LieAlgebraFD {
    fn dim(&self) -> usize {
        self.dim
    }
    fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        bilinear(&self.bracket, x, y)
    }
    fn verify_algebra(&self) -> Report {
        self.verify()
    }
}

/// An action `λ: 𝔤 → Der(A)` given by the images of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionData<G> {
    pub algebra: G,
    pub images: Vec<VectorField>,
}

impl<G: FdBracket> ActionData<G> {
    pub fn new(algebra: G, images: Vec<VectorField>) -> Result<Self> {
        if images.len() != algebra.dim() {
            return Err(Error::Malformed(format!(
                "action needs {} vector fields, got {}",
                algebra.dim(),
                images.len()
            )));
        }
        if images.is_empty() {
            return Err(Error::Malformed("an action needs a nonzero algebra".into()));
        }
        for v in &images[1..] {
            crate::coeffring::ensure_same_ring(images[0].ring(), v.ring())?;
        }
        Ok(ActionData { algebra, images })
    }

    pub fn ring(&self) -> &RingRef {
        self.images[0].ring()
    }

    /// `λ(x)` for `x` given by rational coordinates.
    pub fn image(&self, x: &[Rational]) -> VectorField {
        let mut out = VectorField::zero(self.ring());
        for (c, v) in x.iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&v.scale(&Poly::constant(self.ring(), c.clone())));
            }
        }
        out
    }

    /// The algebra axioms, then `λ([eᵢ,eⱼ]) = [λ(eᵢ), λ(eⱼ)]`.
    pub fn check(&self) -> Report {
        let mut r = self.algebra.verify_algebra();
        let d = self.algebra.dim();
        r.check(
            "action_morphism",
            pairs(d).filter(|(i, j)| i < j).map(|(i, j)| {
                let lhs = self.image(&self.algebra.bracket_basis(i, j));
                (vec![i, j], lhs.sub(&self.images[i].commutator(&self.images[j])))
            }),
        );
        r
    }
}

/// The standard action of sl(2) on `ℚ[x1, x2]`: `λ(h)=x1∂1−x2∂2, λ(e)=x1∂2, λ(f)=x2∂1`.
pub fn sl2_action() -> ActionData<LieAlgebraFD> {
    let ring = crate::coeffring::Ring::polynomial(&["x1", "x2"]);
    let p = |s: &str| Poly::parse(&ring, s).expect("literal");
    let vf = |a: &str, b: &str| VectorField::new(&ring, vec![p(a), p(b)]).expect("two components");
    ActionData::new(LieAlgebraFD::sl2(), vec![vf("x1", "-x2"), vf("0", "x1"), vf("x2", "0")]).expect("valid action")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_is_lie_and_acts() {
        assert!(LieAlgebraFD::sl2().verify().passed());
        assert!(sl2_action().check().passed());
    }

    #[test]
    fn broken_action_is_caught() {
        let mut act = sl2_action();
        act.images[2] = act.images[2].scale(&Poly::from_int(act.ring(), 2));
        let r = act.check();
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().id, "action_morphism");
    }
}
