//! Crossed modules for pre-Lie-Rinehart and Lie-Rinehart algebras, crossed extensions
//! and the 3-cocycle attached to a crossed extension.

use crate::coeffring::{DerivationPair, Element, FreeModule, LinearMap, RingRef};
use crate::cohomology::{prelie_coboundary, Cochain, ComplexKind, LieRepresentation, Representation};
use crate::error::{Error, Result};
use crate::extensions::{build_extension, ExtensionData};
use crate::linalg;
use crate::report::Report;
use crate::structures::{check_homomorphism, pairs, LieRinehart, PreLieRinehart};

/// `∂: ℰ → E` with a representation `(ρ, μ)` of `E` on `ℰ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModuleData {
    pub base: PreLieRinehart,
    /// `ℰ` with an `A`-bilinear pre-Lie product; its anchor is zero.
    pub top: PreLieRinehart,
    /// `∂`, one column per generator of `ℰ`.
    pub boundary: LinearMap,
    pub rep: Representation,
}

/// The Lie-Rinehart counterpart `(E^c, ℰ^c, ∂, ρ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCrossedModule {
    pub base: LieRinehart,
    pub top: LieRinehart,
    pub boundary: LinearMap,
    pub rep: LieRepresentation,
}

/// `0 → ℱ → ℰ → E → F → 0` with sections `s` of `p` and `σ` of `∂` onto its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedExtensionData {
    pub cm: CrossedModuleData,
    pub quotient: PreLieRinehart,
    /// `ℱ`, identified with `ker ∂` through `iota`.
    pub kernel_module: FreeModule,
    /// `ı: ℱ → ℰ`.
    pub iota: LinearMap,
    /// `p: E → F`.
    pub p: LinearMap,
    /// `s: F → E`.
    pub s: LinearMap,
    /// Coordinates of `E` spanning `N = im ∂`.
    pub image: Vec<usize>,
    /// `σ: N → ℰ`, one column per entry of `image`.
    pub sigma: LinearMap,
}

impl CrossedModuleData {
    pub fn new(base: PreLieRinehart, top: PreLieRinehart, boundary: LinearMap, rep: Representation) -> Result<Self> {
        if top.anchor.iter().any(|v| !v.is_zero()) {
            return Err(Error::Precondition("ℰ carries no anchor".into()));
        }
        if boundary.rows() != base.rank() || boundary.cols() != top.rank() {
            return Err(Error::Malformed(format!("∂ must be a {}x{} matrix", base.rank(), top.rank())));
        }
        if rep.algebra != base || rep.target != top.module {
            return Err(Error::ModuleMismatch("representation must be of the base on ℰ".into()));
        }
        Ok(CrossedModuleData { base, top, boundary, rep })
    }

    /// `∂ = 0` on an abelian `ℰ`.
    pub fn trivial(rep: &Representation) -> Self {
        let top = PreLieRinehart::zero(rep.target.clone());
        let boundary = LinearMap::zero(rep.ring(), rep.rank(), rep.target_rank());
        CrossedModuleData { base: rep.algebra.clone(), top, boundary, rep: rep.clone() }
    }

    /// The inclusion of the ideal spanned by the coordinates `ideal`, with `ρ = L`, `μ = R`.
    pub fn ideal(base: &PreLieRinehart, ideal: &[usize]) -> Result<Self> {
        let ring = base.ring();
        let k = ideal.len();
        let restrict = |e: &Element| -> Result<Element> {
            for i in 0..base.rank() {
                if !ideal.contains(&i) && !e.component(i).is_zero() {
                    return Err(Error::Precondition("the coordinates do not span an ideal".into()));
                }
            }
            Ok(Element::from_coeffs(ideal.iter().map(|&i| e.component(i).clone()).collect()))
        };
        let names = ideal.iter().map(|&i| base.module.basis[i].clone()).collect();
        let module = FreeModule::new(ring, names)?;
        let mut top = PreLieRinehart::zero(module.clone());
        for (a, &i) in ideal.iter().enumerate() {
            if !base.anchor[i].is_zero() {
                return Err(Error::Precondition("an ideal has zero anchor".into()));
            }
            for (b, &j) in ideal.iter().enumerate() {
                top.product[a][b] = restrict(&base.product[i][j])?;
            }
        }
        let mut rho = Vec::new();
        let mut mu = Vec::new();
        for x in 0..base.rank() {
            let left: Vec<Element> = ideal.iter().map(|&i| restrict(&base.product[x][i])).collect::<Result<_>>()?;
            let right: Vec<Element> = ideal.iter().map(|&i| restrict(&base.product[i][x])).collect::<Result<_>>()?;
            rho.push(DerivationPair {
                linear: LinearMap::from_columns(ring, k, &left)?,
                symbol: base.anchor[x].clone(),
            });
            mu.push(LinearMap::from_columns(ring, k, &right)?);
        }
        let cols: Vec<Element> = ideal.iter().map(|&i| base.basis(i)).collect();
        let boundary = LinearMap::from_columns(ring, base.rank(), &cols)?;
        let rep = Representation::new(base.clone(), module, rho, mu)?;
        CrossedModuleData::new(base.clone(), top, boundary, rep)
    }

    pub fn ring(&self) -> &RingRef {
        self.base.ring()
    }
}

/// Checks the crossed-module axioms on generators, plus the two derived Leibniz identities.
pub fn verify_crossed_module(cm: &CrossedModuleData) -> Report {
    let (base, top, rep, d) = (&cm.base, &cm.top, &cm.rep, &cm.boundary);
    let (n, m) = (base.rank(), top.rank());
    let mut report = Report::new();
    report.absorb("base.", base.verify());
    report.absorb("rep.", rep.check());
    report.absorb("top.", top.verify());
    report.check("top_anchor", top.anchor.iter().enumerate().map(|(a, v)| (vec![a], v.clone())));
    report.check(
        "boundary_homomorphism",
        pairs(m).map(|(a, b)| {
            let lhs = d.apply(&top.product[a][b]);
            (vec![a, b], lhs.sub(&base.mul(&d.column(a), &d.column(b))))
        }),
    );
    report.check("anchor_boundary", (0..m).map(|a| (vec![a], base.anchor_of(&d.column(a)))));
    report.check(
        "equivariance_rho",
        (0..n).flat_map(|i| {
            (0..m).map(move |a| {
                let u = top.basis(a);
                (vec![i, a], d.apply(&rep.rho[i].apply(&u)).sub(&base.mul(&base.basis(i), &d.column(a))))
            })
        }),
    );
    report.check(
        "equivariance_mu",
        (0..n).flat_map(|i| {
            (0..m).map(move |a| {
                let u = top.basis(a);
                (vec![i, a], d.apply(&rep.mu[i].apply(&u)).sub(&base.mul(&d.column(a), &base.basis(i))))
            })
        }),
    );
    report.check(
        "peiffer_rho",
        pairs(m).map(|(a, b)| {
            let lhs = rep.rho_of(&d.column(a)).apply(&top.basis(b));
            (vec![a, b], lhs.sub(&top.product[a][b]))
        }),
    );
    report.check(
        "peiffer_mu",
        pairs(m).map(|(a, b)| {
            let lhs = rep.mu_of(&d.column(b)).apply(&top.basis(a));
            (vec![a, b], lhs.sub(&top.product[a][b]))
        }),
    );
    report.check(
        "derived_rho",
        (0..n).flat_map(|i| {
            pairs(m).map(move |(a, b)| {
                let (u, v) = (top.basis(a), top.basis(b));
                let lhs = rep.rho[i].apply(&top.mul(&u, &v));
                let rhs = top
                    .mul(&rep.rho[i].apply(&u), &v)
                    .add(&top.mul(&u, &rep.rho[i].apply(&v)))
                    .sub(&top.mul(&rep.mu[i].apply(&u), &v));
                (vec![i, a, b], lhs.sub(&rhs))
            })
        }),
    );
    report.check(
        "derived_mu",
        (0..n).flat_map(|i| {
            pairs(m).map(move |(a, b)| {
                let (u, v) = (top.basis(a), top.basis(b));
                let lhs = rep.mu[i].apply(&top.mul(&u, &v));
                let rhs = rep.mu[i]
                    .apply(&top.mul(&v, &u))
                    .add(&top.mul(&u, &rep.mu[i].apply(&v)))
                    .sub(&top.mul(&v, &rep.mu[i].apply(&u)));
                (vec![i, a, b], lhs.sub(&rhs))
            })
        }),
    );
    report
}

/// `(X+u)∗(Y+v) = X·Y + ρ(X)v + μ(Y)u + u·v` on `E ⊕ ℰ`.
pub fn total_algebra(cm: &CrossedModuleData) -> Result<PreLieRinehart> {
    let report = verify_crossed_module(cm);
    if !report.passed() {
        return Err(Error::Precondition(format!("not a crossed module: {}", report.first_failure().unwrap().id)));
    }
    Ok(total_algebra_unchecked(cm))
}

pub fn total_algebra_unchecked(cm: &CrossedModuleData) -> PreLieRinehart {
    let omega = Cochain::zero(ComplexKind::Prelie, 2, cm.ring(), cm.base.rank(), cm.top.rank()).expect("degree 2");
    let x = ExtensionData { kernel: cm.top.clone(), rep: cm.rep.clone(), omega };
    build_extension(&x).total
}

/// `(E^c, ℰ^c, ∂, ρ − μ)` together with its verification.
pub fn sub_adjacent_crossed(cm: &CrossedModuleData) -> (LieCrossedModule, Report) {
    let rho = cm
        .rep
        .rho
        .iter()
        .zip(&cm.rep.mu)
        .map(|(r, m)| DerivationPair { linear: r.linear.sub(m), symbol: r.symbol.clone() })
        .collect();
    let base = cm.base.sub_adjacent();
    let top = cm.top.sub_adjacent();
    let rep = LieRepresentation { algebra: base.clone(), target: cm.top.module.clone(), rho };
    let lcm = LieCrossedModule { base, top, boundary: cm.boundary.clone(), rep };
    let report = verify_lie_crossed_module(&lcm);
    (lcm, report)
}

pub fn verify_lie_crossed_module(cm: &LieCrossedModule) -> Report {
    let (base, top, rep, d) = (&cm.base, &cm.top, &cm.rep, &cm.boundary);
    let (n, m) = (base.rank(), top.rank());
    let mut report = Report::new();
    report.absorb("base.", base.verify());
    report.absorb("rep.", rep.check());
    report.absorb("top.", top.verify());
    report.check(
        "boundary_homomorphism",
        pairs(m).filter(|(a, b)| a < b).map(|(a, b)| {
            let lhs = d.apply(&top.bracket[a][b]);
            (vec![a, b], lhs.sub(&base.bracket(&d.column(a), &d.column(b))))
        }),
    );
    report.check(
        "equivariance",
        (0..n).flat_map(|i| {
            (0..m).map(move |a| {
                let lhs = d.apply(&rep.rho[i].apply(&top.basis(a)));
                (vec![i, a], lhs.sub(&base.bracket(&base.basis(i), &d.column(a))))
            })
        }),
    );
    report.check(
        "peiffer",
        pairs(m).map(|(a, b)| {
            let lhs = rep.rho_of(&d.column(a)).apply(&top.basis(b));
            (vec![a, b], lhs.sub(&top.bracket[a][b]))
        }),
    );
    report.check("anchor_boundary", (0..m).map(|a| (vec![a], base.anchor_of(&d.column(a)))));
    report.check(
        "derivation",
        (0..n).flat_map(|i| {
            pairs(m).filter(|(a, b)| a < b).map(move |(a, b)| {
                let (u, v) = (top.basis(a), top.basis(b));
                let lhs = rep.rho[i].apply(&top.bracket(&u, &v));
                let rhs = top.bracket(&rep.rho[i].apply(&u), &v).add(&top.bracket(&u, &rep.rho[i].apply(&v)));
                (vec![i, a, b], lhs.sub(&rhs))
            })
        }),
    );
    report
}

impl CrossedExtensionData {
    pub fn ring(&self) -> &RingRef {
        self.cm.ring()
    }

    /// `0 → ℰ → ℰ → E → E → 0` with `∂ = 0` and identity maps.
    pub fn split(rep: &Representation) -> Self {
        let ring = rep.ring();
        let (n, m) = (rep.rank(), rep.target_rank());
        CrossedExtensionData {
            cm: CrossedModuleData::trivial(rep),
            quotient: rep.algebra.clone(),
            kernel_module: rep.target.clone(),
            iota: LinearMap::identity(ring, m),
            p: LinearMap::identity(ring, n),
            s: LinearMap::identity(ring, n),
            image: vec![],
            sigma: LinearMap::zero(ring, m, 0),
        }
    }

    /// `0 → 0 → ℰ → E″ ⋉_ω ℰ → E″ → 0`, the kernel of an extension seen as a crossed module.
    pub fn from_extension(x: &ExtensionData) -> Result<Self> {
        let ring = x.ring().clone();
        let ext = build_extension(x);
        let image = ext.kernel_indices();
        let cm = CrossedModuleData::ideal(&ext.total, &image)?;
        let k = image.len();
        Ok(CrossedExtensionData {
            cm,
            quotient: x.quotient().clone(),
            kernel_module: FreeModule::new(&ring, vec![])?,
            iota: LinearMap::zero(&ring, k, 0),
            p: ext.projection(),
            s: ext.split.clone(),
            image,
            sigma: LinearMap::identity(&ring, k),
        })
    }

    /// A crossed extension of the abelian algebra on `e1..en` by the trivial representation
    /// on `z1..zr` whose 3-cocycle is `f0`.
    ///
    /// `E` is the free pre-Lie algebra on `e1..en` cut off above degree two, `ℰ = E₂ ⊕ ℱ`
    /// with zero product, `∂` kills `ℱ`, `μ = 0` and `ρ(eᵢ)(eⱼeₖ) = f0(eᵢ,eⱼ,eₖ)` for `i < j`.
    pub fn realizing(f0: &Cochain) -> Result<Self> {
        if f0.kind != ComplexKind::Prelie || f0.degree != 3 {
            return Err(Error::Malformed("expected a degree-3 pre-Lie cochain".into()));
        }
        let ring = f0.ring.clone();
        let (n, r) = (f0.rank, f0.target_rank);
        let (big, top_rank) = (n + n * n, n * n + r);
        let gens: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
        let squares: Vec<String> = (1..=n).flat_map(|i| (1..=n).map(move |j| format!("e{i}e{j}"))).collect();
        let zs: Vec<String> = (1..=r).map(|i| format!("z{i}")).collect();
        let quotient = PreLieRinehart::zero(FreeModule::new(&ring, gens.clone())?);
        let kernel_module = FreeModule::new(&ring, zs.clone())?;
        let mut base = PreLieRinehart::zero(FreeModule::new(&ring, [gens, squares.clone()].concat())?);
        for i in 0..n {
            for j in 0..n {
                base.product[i][j] = Element::basis(&ring, big, n + i * n + j);
            }
        }
        let top = PreLieRinehart::zero(FreeModule::new(&ring, [squares, zs].concat())?);
        let col = |rows: usize, i: usize| Element::basis(&ring, rows, i);
        let boundary = LinearMap::from_columns(
            &ring,
            big,
            &(0..top_rank)
                .map(|c| if c < n * n { col(big, n + c) } else { Element::zero(&ring, big) })
                .collect::<Vec<_>>(),
        )?;
        let mut rho = Vec::new();
        for y in 0..big {
            let mut lin = LinearMap::zero(&ring, top_rank, top_rank);
            if y < n {
                for j in y + 1..n {
                    for k in 0..n {
                        let v = f0.on_basis(&[y, j, k]);
                        for z in 0..r {
                            lin.set(n * n + z, j * n + k, v.component(z).clone());
                        }
                    }
                }
            }
            rho.push(DerivationPair { linear: lin, symbol: base.anchor[y].clone() });
        }
        let mu = vec![LinearMap::zero(&ring, top_rank, top_rank); big];
        let rep = Representation::new(base.clone(), top.module.clone(), rho, mu)?;
        let cm = CrossedModuleData::new(base, top, boundary, rep)?;
        let p = LinearMap::from_columns(
            &ring,
            n,
            &(0..big).map(|c| if c < n { col(n, c) } else { Element::zero(&ring, n) }).collect::<Vec<_>>(),
        )?;
        let s = LinearMap::from_columns(&ring, big, &(0..n).map(|c| col(big, c)).collect::<Vec<_>>())?;
        let sigma =
            LinearMap::from_columns(&ring, top_rank, &(0..n * n).map(|c| col(top_rank, c)).collect::<Vec<_>>())?;
        let iota =
            LinearMap::from_columns(&ring, top_rank, &(0..r).map(|z| col(top_rank, n * n + z)).collect::<Vec<_>>())?;
        Ok(CrossedExtensionData { cm, quotient, kernel_module, iota, p, s, image: (n..big).collect(), sigma })
    }

    /// Coordinates in `ℱ` of an element of `ker ∂`.
    fn kernel_coords(&self, left: &LinearMap, v: &Element) -> Result<Element> {
        let w = left.apply(v);
        if self.iota.apply(&w) != *v {
            return Err(Error::Precondition(format!("{v} is not in the image of ℱ")));
        }
        Ok(w)
    }

    fn iota_left_inverse(&self) -> Result<LinearMap> {
        self.iota.left_inverse().ok_or_else(|| {
            Error::Precondition("ı has no unit maximal minor, so ℱ coordinates cannot be recovered".into())
        })
    }

    /// `σ` applied to an element of `N`, given in `E` coordinates.
    fn sigma_of(&self, n_elem: &Element) -> Result<Element> {
        for i in 0..n_elem.rank() {
            if !self.image.contains(&i) && !n_elem.component(i).is_zero() {
                return Err(Error::Precondition(format!("{n_elem} is not in im ∂")));
            }
        }
        let coords = Element::from_coeffs(self.image.iter().map(|&i| n_elem.component(i).clone()).collect());
        Ok(self.sigma.apply(&coords))
    }

    /// Checks the sequence data on generators.
    pub fn check(&self) -> Report {
        let ring = self.ring();
        let (e, top) = (&self.cm.base, &self.cm.top);
        let d = &self.cm.boundary;
        let mut report = Report::new();
        report.absorb("crossed.", verify_crossed_module(&self.cm));
        report.absorb("quotient.", self.quotient.verify());
        report.absorb("p.", check_homomorphism(e, &self.quotient, &self.p));
        report.check(
            "p_section",
            std::iter::once((vec![], self.p.compose(&self.s).sub(&LinearMap::identity(ring, self.quotient.rank())))),
        );
        report.check("exact_at_base", self.image.iter().map(|&i| (vec![i], self.p.apply(&e.basis(i)))));
        report.check("exact_rank", std::iter::once((vec![], self.image.len() + self.quotient.rank() == e.rank())));
        report.check(
            "image_of_boundary",
            (0..top.rank()).map(|a| {
                let col = d.column(a);
                let outside: Vec<_> =
                    (0..e.rank()).filter(|i| !self.image.contains(i)).map(|i| col.component(i).clone()).collect();
                (vec![a], Element::from_coeffs(outside))
            }),
        );
        report.check(
            "boundary_section",
            self.image.iter().enumerate().map(|(c, &i)| (vec![i], d.apply(&self.sigma.column(c)).sub(&e.basis(i)))),
        );
        report.check("kernel", std::iter::once((vec![], d.compose(&self.iota))));
        report.check("kernel_coordinates", std::iter::once((vec![], self.iota.left_inverse().is_some())));
        if ring.is_field() {
            let rank_of = |m: &LinearMap| {
                let rows: Vec<Vec<_>> = m
                    .entries()
                    .iter()
                    .map(|r| r.iter().map(|p| p.constant_value().expect("field entries")).collect())
                    .collect();
                linalg::rank(&rows)
            };
            report.check("exact_at_top", std::iter::once((vec![], rank_of(d) + rank_of(&self.iota) == top.rank())));
        } else {
            report.pass("exact_at_top");
            report.note_last("only ∂∘ı = 0 and injectivity of ı are checked over a polynomial ring");
        }
        report
    }

    /// `(ρ_F, μ_F)` on `ℱ` through `s`: `ρ_F(X)u = ρ_E(s(X))u`, `μ_F(X)u = μ_E(s(X))u`.
    pub fn induced_representation(&self) -> Result<Representation> {
        let left = self.iota_left_inverse()?;
        let ring = self.ring();
        let k = self.kernel_module.rank();
        let mut rho = Vec::new();
        let mut mu = Vec::new();
        for x in 0..self.quotient.rank() {
            let sx = self.s.column(x);
            let r = self.cm.rep.rho_of(&sx);
            let m_ = self.cm.rep.mu_of(&sx);
            let mut rc = Vec::new();
            let mut mc = Vec::new();
            for a in 0..k {
                let u = self.iota.column(a);
                rc.push(self.kernel_coords(&left, &r.apply(&u))?);
                mc.push(self.kernel_coords(&left, &m_.apply(&u))?);
            }
            rho.push(DerivationPair {
                linear: LinearMap::from_columns(ring, k, &rc)?,
                symbol: self.quotient.anchor[x].clone(),
            });
            mu.push(LinearMap::from_columns(ring, k, &mc)?);
        }
        Representation::new(self.quotient.clone(), self.kernel_module.clone(), rho, mu)
    }

    /// `g(X,Y) = σ(s(X)·s(Y) − s(X·Y))`, valued in `ℰ`.
    pub fn g_cochain(&self) -> Result<Cochain> {
        let (f, e) = (&self.quotient, &self.cm.base);
        let mut err = None;
        let g = Cochain::from_fn(ComplexKind::Prelie, 2, self.ring(), f.rank(), self.cm.top.rank(), |t| {
            let (sx, sy) = (self.s.column(t[0]), self.s.column(t[1]));
            let n_elem = e.mul(&sx, &sy).sub(&self.s.apply(&f.product[t[0]][t[1]]));
            self.sigma_of(&n_elem).unwrap_or_else(|er| {
                err.get_or_insert(er);
                Element::zero(self.ring(), self.cm.top.rank())
            })
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(g),
        }
    }

    /// `f(X,Y,Z)` with values in `ℰ`, before passing to `ℱ` coordinates.
    pub fn f_raw(&self, g: &Cochain, x: &Element, y: &Element, z: &Element) -> Element {
        let f = &self.quotient;
        let rep = &self.cm.rep;
        let gv = |a: &Element, b: &Element| g.eval(&[a.clone(), b.clone()]);
        let (sx, sy, sz) = (self.s.apply(x), self.s.apply(y), self.s.apply(z));
        let mu_z = rep.mu_of(&sz);
        rep.rho_of(&sx)
            .apply(&gv(y, z))
            .sub(&rep.rho_of(&sy).apply(&gv(x, z)))
            .sub(&mu_z.apply(&gv(x, y)))
            .add(&mu_z.apply(&gv(y, x)))
            .sub(&gv(&f.commutator(x, y), z))
            .add(&gv(x, &f.mul(y, z)))
            .sub(&gv(y, &f.mul(x, z)))
    }
}

/// The 3-cocycle `f` in `ℱ` coordinates, with a report on its defining properties:
/// alternation in the first two slots, values in `ker ∂`, and `δf = 0`.
pub fn three_cocycle_from_extension(xd: &CrossedExtensionData) -> Result<(Cochain, Report)> {
    let rep_f = xd.induced_representation()?;
    let rep_report = rep_f.check();
    if !rep_report.passed() {
        return Err(Error::Precondition(format!(
            "induced representation on ℱ fails: {}",
            rep_report.first_failure().unwrap().id
        )));
    }
    let g = xd.g_cochain()?;
    let left = xd.iota_left_inverse()?;
    let q = xd.quotient.rank();
    let b = |i: usize| xd.quotient.basis(i);
    let mut report = Report::new();
    report.check(
        "alternating",
        (0..q)
            .flat_map(|i| (0..q).map(move |k| (i, k)))
            .map(|(i, k)| (vec![i, i, k], xd.f_raw(&g, &b(i), &b(i), &b(k)))),
    );
    report.check(
        "in_kernel",
        pairs(q)
            .flat_map(|(i, j)| (0..q).map(move |k| (i, j, k)))
            .map(|(i, j, k)| (vec![i, j, k], xd.cm.boundary.apply(&xd.f_raw(&g, &b(i), &b(j), &b(k))))),
    );
    let mut err = None;
    let f = Cochain::from_fn(ComplexKind::Prelie, 3, xd.ring(), q, xd.kernel_module.rank(), |t| {
        let raw = xd.f_raw(&g, &b(t[0]), &b(t[1]), &b(t[2]));
        xd.kernel_coords(&left, &raw).unwrap_or_else(|e| {
            err.get_or_insert(e);
            Element::zero(xd.ring(), xd.kernel_module.rank())
        })
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let df = prelie_coboundary(&f, &rep_f)?;
    report.check("cocycle", df.values.iter().map(|(t, v)| (t.clone(), v.clone())));
    Ok((f, report))
}

/// Moves the section to `s̃ = s + ∂∘φ` and returns the new data with the 2-cochain
/// `g̃ − g − ω̂` in `ℱ` coordinates, where
/// `ω̂(X,Y) = ρ(s̃X)φ(Y) + μ(s̃Y)φ(X) − φ(X·Y) − φ(X)·φ(Y)`.
pub fn change_section(xd: &CrossedExtensionData, phi: &LinearMap) -> Result<(CrossedExtensionData, Cochain)> {
    let top = &xd.cm.top;
    if phi.rows() != top.rank() || phi.cols() != xd.quotient.rank() {
        return Err(Error::Malformed("φ must map F into ℰ".into()));
    }
    let mut moved = xd.clone();
    moved.s = xd.s.add(&xd.cm.boundary.compose(phi));
    let (g, g_new) = (xd.g_cochain()?, moved.g_cochain()?);
    let left = xd.iota_left_inverse()?;
    let rep = &xd.cm.rep;
    let f = &xd.quotient;
    let mut err = None;
    let w = Cochain::from_fn(ComplexKind::Prelie, 2, xd.ring(), f.rank(), xd.kernel_module.rank(), |t| {
        let (x, y) = (t[0], t[1]);
        let (px, py) = (phi.column(x), phi.column(y));
        let omega_hat = rep
            .rho_of(&moved.s.column(x))
            .apply(&py)
            .add(&rep.mu_of(&moved.s.column(y)).apply(&px))
            .sub(&phi.apply(&f.product[x][y]))
            .sub(&top.mul(&px, &py));
        let diff = g_new.on_basis(t).sub(&g.on_basis(t)).sub(&omega_hat);
        xd.kernel_coords(&left, &diff).unwrap_or_else(|e| {
            err.get_or_insert(e);
            Element::zero(xd.ring(), xd.kernel_module.rank())
        })
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok((moved, w)),
    }
}
