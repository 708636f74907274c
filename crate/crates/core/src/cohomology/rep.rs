use crate::coeffring::{DerivationPair, Element, FreeModule, LinearMap, RingRef};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::structures::{pairs, LieRinehart, PreLieRinehart};

/// A representation `(ρ, μ)` of a pre-Lie-Rinehart algebra on a free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub algebra: PreLieRinehart,
    pub target: FreeModule,
    /// `ρ(eᵢ)`, a derivation pair whose symbol should be `θ(eᵢ)`.
    pub rho: Vec<DerivationPair>,
    /// `μ(eᵢ)`.
    pub mu: Vec<LinearMap>,
}

/// A representation `ρ` of a Lie-Rinehart algebra on a free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRepresentation {
    pub algebra: LieRinehart,
    pub target: FreeModule,
    pub rho: Vec<DerivationPair>,
}

fn combine_pairs(ring: &RingRef, rank: usize, x: &Element, ops: &[DerivationPair]) -> DerivationPair {
    let mut out = DerivationPair::zero(ring, rank);
    for (a, d) in x.coeffs().iter().zip(ops) {
        if !a.is_zero() {
            out = out.add(&d.scale(a));
        }
    }
    out
}

fn check_shapes(algebra_rank: usize, target: &FreeModule, rho: &[DerivationPair]) -> Result<()> {
    if rho.len() != algebra_rank {
        return Err(Error::Malformed(format!("need {algebra_rank} operators ρ(eᵢ), got {}", rho.len())));
    }
    for d in rho {
        if d.rank() != target.rank() {
            return Err(Error::ModuleMismatch("ρ(eᵢ) does not act on the target module".into()));
        }
    }
    Ok(())
}

impl Representation {
    pub fn new(
        algebra: PreLieRinehart,
        target: FreeModule,
        rho: Vec<DerivationPair>,
        mu: Vec<LinearMap>,
    ) -> Result<Self> {
        check_shapes(algebra.rank(), &target, &rho)?;
        if mu.len() != algebra.rank() || mu.iter().any(|m| m.rows() != target.rank() || m.cols() != target.rank()) {
            return Err(Error::Malformed("μ must give one endomorphism of the target per generator".into()));
        }
        Ok(Representation { algebra, target, rho, mu })
    }

    /// `(L, R)` on the algebra itself.
    pub fn regular(algebra: &PreLieRinehart) -> Self {
        let n = algebra.rank();
        Representation {
            target: algebra.module.clone(),
            rho: (0..n).map(|i| algebra.left_mul(i)).collect(),
            mu: (0..n).map(|j| algebra.right_mul(j)).collect(),
            algebra: algebra.clone(),
        }
    }

    /// `(L, 0)` on the algebra itself.
    pub fn left_regular(algebra: &PreLieRinehart) -> Self {
        let mut r = Representation::regular(algebra);
        let n = algebra.rank();
        r.mu = vec![LinearMap::zero(algebra.ring(), n, n); n];
        r
    }

    /// `A^m` with `ρ(X) = θ(X)` coefficientwise and `μ = 0`.
    pub fn anchor(algebra: &PreLieRinehart, m: usize) -> Self {
        let ring = algebra.ring();
        let names = (1..=m).map(|i| format!("u{i}")).collect();
        Representation {
            target: FreeModule::new(ring, names).expect("distinct names"),
            rho: algebra
                .anchor
                .iter()
                .map(|v| DerivationPair { linear: LinearMap::zero(ring, m, m), symbol: v.clone() })
                .collect(),
            mu: vec![LinearMap::zero(ring, m, m); algebra.rank()],
            algebra: algebra.clone(),
        }
    }

    /// The same operators on a module of equal rank with other basis names.
    pub fn retarget(mut self, target: FreeModule) -> Self {
        assert_eq!(target.rank(), self.target.rank(), "retarget needs equal rank");
        self.target = target;
        self
    }

    pub fn ring(&self) -> &RingRef {
        self.algebra.ring()
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn target_rank(&self) -> usize {
        self.target.rank()
    }

    pub fn rho_of(&self, x: &Element) -> DerivationPair {
        combine_pairs(self.ring(), self.target_rank(), x, &self.rho)
    }

    pub fn mu_of(&self, x: &Element) -> LinearMap {
        let m = self.target_rank();
        let mut out = LinearMap::zero(self.ring(), m, m);
        for (a, op) in x.coeffs().iter().zip(&self.mu) {
            if !a.is_zero() {
                out = out.add(&op.scale(a));
            }
        }
        out
    }

    /// `(ρ; ℰ)` as a representation of the sub-adjacent Lie-Rinehart algebra.
    pub fn lie_part(&self) -> LieRepresentation {
        LieRepresentation { algebra: self.algebra.sub_adjacent(), target: self.target.clone(), rho: self.rho.clone() }
    }

    pub fn check(&self) -> Report {
        let mut report = self.lie_part().check();
        let n = self.rank();
        let m = self.target_rank();
        report.check(
            "mu_condition",
            pairs(n).map(|(i, j)| {
                let lhs_cols: Vec<Element> = (0..m)
                    .map(|k| {
                        let u = self.target.basis_element(k);
                        self.rho[i].apply(&self.mu[j].apply(&u)).sub(&self.mu[j].apply(&self.rho[i].apply(&u)))
                    })
                    .collect();
                let lhs = LinearMap::from_columns(self.ring(), m, &lhs_cols).expect("shapes");
                let rhs = self.mu_of(&self.algebra.product[i][j]).sub(&self.mu[j].compose(&self.mu[i]));
                (vec![i, j], lhs.sub(&rhs))
            }),
        );
        report
    }
}

impl LieRepresentation {
    pub fn new(algebra: LieRinehart, target: FreeModule, rho: Vec<DerivationPair>) -> Result<Self> {
        check_shapes(algebra.rank(), &target, &rho)?;
        Ok(LieRepresentation { algebra, target, rho })
    }

    pub fn ring(&self) -> &RingRef {
        self.algebra.ring()
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn target_rank(&self) -> usize {
        self.target.rank()
    }

    pub fn rho_of(&self, x: &Element) -> DerivationPair {
        combine_pairs(self.ring(), self.target_rank(), x, &self.rho)
    }

    /// Symbols match the anchor and `ρ` is a bracket morphism into the gauge algebra.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        report.check(
            "rho_symbol",
            self.rho.iter().enumerate().map(|(i, d)| (vec![i], d.symbol.sub(&self.algebra.anchor[i]))),
        );
        let n = self.rank();
        report.check(
            "rho_morphism",
            pairs(n).filter(|(i, j)| i < j).map(|(i, j)| {
                let lhs = self.rho_of(&self.algebra.bracket[i][j]);
                (vec![i, j], lhs.sub(&self.rho[i].commutator(&self.rho[j])))
            }),
        );
        report
    }
}
