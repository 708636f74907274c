//! Abelian (and split non-abelian) extensions of pre-Lie-Rinehart algebras in split coordinates.

use crate::coeffring::{DerivationPair, Element, FreeModule, LinearMap, Poly, RingRef, VectorField};
use crate::cohomology::{coboundary_solve_field, Cochain, ComplexKind, RepRef, Representation};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::structures::{check_homomorphism, pairs, PreLieRinehart};

/// `E″` (the algebra of `rep`), a kernel `E′` with zero anchor, `(ρ, μ)` and `ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionData {
    pub kernel: PreLieRinehart,
    /// `ρ` and `μ` of the quotient on the kernel module.
    pub rep: Representation,
    /// Degree-2 cochain of the pre-Lie complex valued in the kernel.
    pub omega: Cochain,
}

/// A pre-Lie-Rinehart algebra on `E″ ⊕ E′` (quotient coordinates first) with a section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExtension {
    pub total: PreLieRinehart,
    pub quotient_rank: usize,
    pub kernel_rank: usize,
    /// `σ: E″ → total`, one column per quotient generator.
    pub split: LinearMap,
}

impl ExtensionData {
    pub fn new(kernel: PreLieRinehart, rep: Representation, omega: Cochain) -> Result<Self> {
        if kernel.anchor.iter().any(|v| !v.is_zero()) {
            return Err(Error::Precondition("the kernel must have zero anchor".into()));
        }
        if kernel.module != rep.target {
            return Err(Error::ModuleMismatch("representation target is not the kernel module".into()));
        }
        if omega.kind != ComplexKind::Prelie
            || omega.degree != 2
            || omega.rank != rep.rank()
            || omega.target_rank != kernel.rank()
        {
            return Err(Error::Malformed(
                "ω must be a degree-2 pre-Lie cochain on the quotient valued in the kernel".into(),
            ));
        }
        Ok(ExtensionData { kernel, rep, omega })
    }

    /// `ω = 0` with an abelian kernel on the target of `rep`.
    pub fn semidirect(rep: &Representation) -> Self {
        let kernel = PreLieRinehart::zero(rep.target.clone());
        let omega = Cochain::zero(ComplexKind::Prelie, 2, rep.ring(), rep.rank(), rep.target_rank()).expect("degree 2");
        ExtensionData { kernel, rep: rep.clone(), omega }
    }

    pub fn quotient(&self) -> &PreLieRinehart {
        &self.rep.algebra
    }

    pub fn ring(&self) -> &RingRef {
        self.rep.ring()
    }

    pub fn kernel_is_abelian(&self) -> bool {
        self.kernel.product.iter().flatten().all(Element::is_zero)
    }

    pub fn with_omega(&self, omega: Cochain) -> Result<Self> {
        ExtensionData::new(self.kernel.clone(), self.rep.clone(), omega)
    }
}

impl SplitExtension {
    pub fn kernel_indices(&self) -> Vec<usize> {
        (self.quotient_rank..self.quotient_rank + self.kernel_rank).collect()
    }

    /// `p`, dropping kernel coordinates.
    pub fn projection(&self) -> LinearMap {
        let ring = self.total.ring();
        let cols: Vec<Element> = (0..self.total.rank())
            .map(|i| {
                if i < self.quotient_rank {
                    Element::basis(ring, self.quotient_rank, i)
                } else {
                    Element::zero(ring, self.quotient_rank)
                }
            })
            .collect();
        LinearMap::from_columns(ring, self.quotient_rank, &cols).expect("shapes")
    }

    /// `ı`, the kernel coordinates.
    pub fn inclusion(&self) -> LinearMap {
        let ring = self.total.ring();
        let cols: Vec<Element> =
            self.kernel_indices().into_iter().map(|i| Element::basis(ring, self.total.rank(), i)).collect();
        LinearMap::from_columns(ring, self.total.rank(), &cols).expect("shapes")
    }
}

fn total_names(quotient: &FreeModule, kernel: &FreeModule) -> Vec<String> {
    let mut names = quotient.basis.clone();
    for b in &kernel.basis {
        let mut name = b.clone();
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    names
}

/// `(X+u)∗(Y+v) = X·Y + ω(X,Y) + ρ(X)v + μ(Y)u + u·v` and `θ(X+u) = θ(X)`.
pub fn build_extension(x: &ExtensionData) -> SplitExtension {
    let quotient = x.quotient();
    let ring = x.ring();
    let (q, k) = (quotient.rank(), x.kernel.rank());
    let upper = |e: &Element| e.concat(&Element::zero(ring, k));
    let lower = |e: &Element| Element::zero(ring, q).concat(e);
    let mut product = vec![vec![Element::zero(ring, q + k); q + k]; q + k];
    for i in 0..q {
        for j in 0..q {
            product[i][j] = upper(&quotient.product[i][j]).add(&lower(&x.omega.on_basis(&[i, j])));
        }
        for a in 0..k {
            let u = x.kernel.basis(a);
            product[i][q + a] = lower(&x.rep.rho[i].apply(&u));
            product[q + a][i] = lower(&x.rep.mu[i].apply(&u));
        }
    }
    for a in 0..k {
        for b in 0..k {
            product[q + a][q + b] = lower(&x.kernel.product[a][b]);
        }
    }
    let mut anchor = quotient.anchor.clone();
    anchor.extend(std::iter::repeat_n(VectorField::zero(ring), k));
    let module = FreeModule::new(ring, total_names(&quotient.module, &x.kernel.module)).expect("names made distinct");
    let split =
        LinearMap::from_columns(ring, q + k, &(0..q).map(|i| Element::basis(ring, q + k, i)).collect::<Vec<_>>())
            .expect("shapes");
    SplitExtension { total: PreLieRinehart { module, product, anchor }, quotient_rank: q, kernel_rank: k, split }
}

/// The five compatibility conditions for `(ρ, μ, ω)`, evaluated on basis tuples.
///
/// `rho_bracket`: `[ρ(X),ρ(Y)] − ρ([X,Y]) = L′_{ω(X,Y)−ω(Y,X)}`;
/// `rho_mu`: `ρ(X)μ(Y) − μ(Y)ρ(X) − μ(X·Y) + μ(Y)μ(X) = R′_{ω(X,Y)}`;
/// `kernel_left`: `(ρ−μ)(X)(u)·v + u·ρ(X)v − ρ(X)(u·v) = 0`;
/// `kernel_right`: `u·μ(X)v − v·μ(X)u − μ(X)[u,v] = 0`;
/// `omega_closed`: the cocycle-type identity for `ω`, which is `δω = 0` when the kernel is abelian.
pub fn check_extension_conditions(x: &ExtensionData) -> Report {
    let alg = x.quotient();
    let ker = &x.kernel;
    let rep = &x.rep;
    let (q, k) = (alg.rank(), ker.rank());
    let w = |i: usize, j: usize| x.omega.on_basis(&[i, j]);
    let mut report = Report::new();

    report.check(
        "rho_bracket",
        pairs(q).filter(|(i, j)| i < j).flat_map(|(i, j)| {
            let curvature =
                rep.rho[i].commutator(&rep.rho[j]).sub(&rep.rho_of(&alg.commutator(&alg.basis(i), &alg.basis(j))));
            let skew = w(i, j).sub(&w(j, i));
            (0..k).map(move |a| {
                let u = ker.basis(a);
                (vec![i, j, a], curvature.apply(&u).sub(&ker.mul(&skew, &u)))
            })
        }),
    );

    report.check(
        "rho_mu",
        pairs(q).flat_map(|(i, j)| {
            let mu_xy = rep.mu_of(&alg.product[i][j]);
            let wij = w(i, j);
            (0..k).map(move |a| {
                let u = ker.basis(a);
                let lhs = rep.rho[i]
                    .apply(&rep.mu[j].apply(&u))
                    .sub(&rep.mu[j].apply(&rep.rho[i].apply(&u)))
                    .sub(&mu_xy.apply(&u))
                    .add(&rep.mu[j].apply(&rep.mu[i].apply(&u)));
                (vec![i, j, a], lhs.sub(&ker.mul(&u, &wij)))
            })
        }),
    );

    report.check(
        "kernel_left",
        (0..q).flat_map(|i| {
            pairs(k).map(move |(a, b)| {
                let (u, v) = (ker.basis(a), ker.basis(b));
                let shifted = rep.rho[i].apply(&u).sub(&rep.mu[i].apply(&u));
                let r = ker
                    .mul(&shifted, &v)
                    .add(&ker.mul(&u, &rep.rho[i].apply(&v)))
                    .sub(&rep.rho[i].apply(&ker.mul(&u, &v)));
                (vec![i, a, b], r)
            })
        }),
    );

    report.check(
        "kernel_right",
        (0..q).flat_map(|i| {
            pairs(k).filter(|(a, b)| a < b).map(move |(a, b)| {
                let (u, v) = (ker.basis(a), ker.basis(b));
                let r = ker
                    .mul(&u, &rep.mu[i].apply(&v))
                    .sub(&ker.mul(&v, &rep.mu[i].apply(&u)))
                    .sub(&rep.mu[i].apply(&ker.commutator(&u, &v)));
                (vec![i, a, b], r)
            })
        }),
    );

    report.check(
        "omega_closed",
        pairs(q).filter(|(i, j)| i < j).flat_map(|(i, j)| {
            (0..q).map(move |l| {
                let (xi, yj, zl) = (alg.basis(i), alg.basis(j), alg.basis(l));
                let om = |a: &Element, b: &Element| x.omega.eval(&[a.clone(), b.clone()]);
                let lhs = om(&yj, &alg.mul(&xi, &zl))
                    .sub(&om(&xi, &alg.mul(&yj, &zl)))
                    .add(&om(&alg.commutator(&xi, &yj), &zl));
                let mu_z = &rep.mu[l];
                let rhs = rep.rho[i]
                    .apply(&w(j, l))
                    .sub(&rep.rho[j].apply(&w(i, l)))
                    .sub(&mu_z.apply(&w(i, j)))
                    .add(&mu_z.apply(&w(j, i)));
                (vec![i, j, l], lhs.sub(&rhs))
            })
        }),
    );
    report
}

fn restrict(e: &Element, idx: &[usize]) -> Element {
    Element::from_coeffs(idx.iter().map(|&i| e.component(i).clone()).collect())
}

/// Recovers `(E″, E′, ρ, μ, ω)` from an algebra, the coordinates of an ideal `E′` with zero
/// anchor, and an `A`-linear section `σ` of the projection onto the remaining coordinates.
pub fn extract_from_split(
    total: &PreLieRinehart,
    kernel_indices: &[usize],
    split: &LinearMap,
) -> Result<ExtensionData> {
    let n = total.rank();
    let ring = total.ring();
    let mut kidx = kernel_indices.to_vec();
    kidx.sort_unstable();
    kidx.dedup();
    if kidx.len() != kernel_indices.len() || kidx.iter().any(|&i| i >= n) {
        return Err(Error::Malformed("kernel indices must be distinct basis positions".into()));
    }
    let qidx: Vec<usize> = (0..n).filter(|i| !kidx.contains(i)).collect();
    let (q, k) = (qidx.len(), kidx.len());
    if split.rows() != n || split.cols() != q {
        return Err(Error::Malformed(format!("σ must be a {n}x{q} matrix")));
    }
    for c in 0..q {
        let col = split.column(c);
        for (r, &i) in qidx.iter().enumerate() {
            let expect = if r == c { Poly::one(ring) } else { Poly::zero(ring) };
            if col.component(i) != &expect {
                return Err(Error::Precondition(format!(
                    "σ is not a section: p∘σ differs from the identity in column {c}"
                )));
            }
        }
    }
    let in_kernel = |e: &Element| qidx.iter().all(|&i| e.component(i).is_zero());
    for &a in &kidx {
        if !total.anchor[a].is_zero() {
            return Err(Error::Precondition(format!("kernel generator {a} has nonzero anchor")));
        }
        for b in 0..n {
            if !in_kernel(&total.product[a][b]) || !in_kernel(&total.product[b][a]) {
                return Err(Error::Precondition(format!("kernel is not an ideal at ({a}, {b})")));
            }
        }
    }

    let sigma: Vec<Element> = (0..q).map(|c| split.column(c)).collect();
    let qnames = qidx.iter().map(|&i| total.module.basis[i].clone()).collect();
    let knames = kidx.iter().map(|&i| total.module.basis[i].clone()).collect();
    let kernel_module = FreeModule::new(ring, knames)?;
    let quotient_module = FreeModule::new(ring, qnames)?;

    let kernel = PreLieRinehart {
        product: kidx.iter().map(|&a| kidx.iter().map(|&b| restrict(&total.product[a][b], &kidx)).collect()).collect(),
        anchor: vec![VectorField::zero(ring); k],
        module: kernel_module.clone(),
    };
    let quotient = PreLieRinehart {
        product: (0..q).map(|i| (0..q).map(|j| restrict(&total.mul(&sigma[i], &sigma[j]), &qidx)).collect()).collect(),
        anchor: sigma.iter().map(|s| total.anchor_of(s)).collect(),
        module: quotient_module,
    };
    let kbasis: Vec<Element> = kidx.iter().map(|&a| total.basis(a)).collect();
    let rho = (0..q)
        .map(|i| {
            let cols: Vec<Element> = kbasis.iter().map(|u| restrict(&total.mul(&sigma[i], u), &kidx)).collect();
            DerivationPair {
                linear: LinearMap::from_columns(ring, k, &cols).expect("shapes"),
                symbol: total.anchor_of(&sigma[i]),
            }
        })
        .collect();
    let mu = (0..q)
        .map(|j| {
            let cols: Vec<Element> = kbasis.iter().map(|u| restrict(&total.mul(u, &sigma[j]), &kidx)).collect();
            LinearMap::from_columns(ring, k, &cols).expect("shapes")
        })
        .collect();
    let omega = Cochain::from_fn(ComplexKind::Prelie, 2, ring, q, k, |t| {
        let (i, j) = (t[0], t[1]);
        let w = total.mul(&sigma[i], &sigma[j]).sub(&split.apply(&quotient.product[i][j]));
        restrict(&w, &kidx)
    })?;
    let rep = Representation::new(quotient, kernel_module, rho, mu)?;
    ExtensionData::new(kernel, rep, omega)
}

/// `X + u ↦ σ(X) + u` from a built extension back to the algebra it was extracted from.
pub fn split_isomorphism(total: &PreLieRinehart, kernel_indices: &[usize], split: &LinearMap) -> LinearMap {
    let mut cols: Vec<Element> = (0..split.cols()).map(|c| split.column(c)).collect();
    let mut kidx = kernel_indices.to_vec();
    kidx.sort_unstable();
    cols.extend(kidx.iter().map(|&a| total.basis(a)));
    LinearMap::from_columns(total.ring(), total.rank(), &cols).expect("shapes")
}

/// `τ(X + u) = X + u + φ(X)` on `E″ ⊕ E′`.
pub fn shear(ring: &RingRef, phi: &LinearMap) -> LinearMap {
    let (k, q) = (phi.rows(), phi.cols());
    let mut tau = LinearMap::identity(ring, q + k);
    for r in 0..k {
        for c in 0..q {
            tau.set(q + r, c, phi.entry(r, c).clone());
        }
    }
    tau
}

fn ensure_comparable(x1: &ExtensionData, x2: &ExtensionData) -> Result<()> {
    if x1.rep != x2.rep || x1.kernel != x2.kernel {
        return Err(Error::Precondition("extensions must share quotient, kernel and representation".into()));
    }
    if !x1.kernel_is_abelian() {
        return Err(Error::Precondition("equivalence is only classified for abelian kernels".into()));
    }
    Ok(())
}

/// Checks that `τ = shear(φ)` is a morphism `E₂ → E₁` compatible with `ı` and `p`.
pub fn verify_equivalence(x1: &ExtensionData, x2: &ExtensionData, phi: &LinearMap) -> Result<Report> {
    ensure_comparable(x1, x2)?;
    if phi.rows() != x1.kernel.rank() || phi.cols() != x1.quotient().rank() {
        return Err(Error::Malformed("φ must map the quotient into the kernel".into()));
    }
    let (e1, e2) = (build_extension(x1), build_extension(x2));
    let tau = shear(x1.ring(), phi);
    let mut report = check_homomorphism(&e2.total, &e1.total, &tau);
    report.check("diagram_kernel", std::iter::once((vec![], tau.compose(&e2.inclusion()).sub(&e1.inclusion()))));
    report.check("diagram_quotient", std::iter::once((vec![], e1.projection().compose(&tau).sub(&e2.projection()))));
    Ok(report)
}

/// Over `ℚ`, a `τ: E₂ → E₁` realizing an equivalence, or `None` when `ω₂ − ω₁` is not a coboundary.
pub fn equivalence_decide_field(x1: &ExtensionData, x2: &ExtensionData) -> Result<Option<LinearMap>> {
    ensure_comparable(x1, x2)?;
    if !x1.ring().is_field() {
        return Err(Error::NotFieldCase("equivalence is decided only over ℚ".into()));
    }
    let diff = x2.omega.sub(&x1.omega);
    let Some(phi) = coboundary_solve_field(&diff, RepRef::Prelie(&x1.rep))? else { return Ok(None) };
    let q = x1.quotient().rank();
    let cols: Vec<Element> = (0..q).map(|i| phi.on_basis(&[i])).collect();
    let phi = LinearMap::from_columns(x1.ring(), x1.kernel.rank(), &cols)?;
    let report = verify_equivalence(x1, x2, &phi)?;
    if !report.passed() {
        return Err(Error::Precondition(format!("solved φ does not give a morphism: {report}")));
    }
    Ok(Some(shear(x1.ring(), &phi)))
}
