use crate::coeffring::{DerivationPair, Element, FreeModule, LinearMap};
use crate::error::{Error, Result};
use crate::report::Report;

use super::cochain::{Cochain, ComplexKind};
use super::rep::{LieRepresentation, Representation};

fn sign(i: usize) -> bool {
    // (−1)^{i+1} with 1-based i is positive for odd i, i.e. even 0-based positions.
    i.is_multiple_of(2)
}

fn without(args: &[Element], skip: &[usize]) -> Vec<Element> {
    args.iter().enumerate().filter(|(k, _)| !skip.contains(k)).map(|(_, e)| e.clone()).collect()
}

fn check_prelie(phi: &Cochain, rep: &Representation) -> Result<()> {
    if phi.kind != ComplexKind::Prelie {
        return Err(Error::Malformed("expected a cochain of the pre-Lie complex".into()));
    }
    if phi.degree == 0 {
        return Err(Error::Degree(0));
    }
    if phi.rank != rep.rank() || phi.target_rank != rep.target_rank() {
        return Err(Error::ModuleMismatch("cochain does not match the representation".into()));
    }
    Ok(())
}

/// `δφ(X₁..Xₙ₊₁)` evaluated directly on arbitrary elements.
pub fn prelie_coboundary_eval(phi: &Cochain, rep: &Representation, args: &[Element]) -> Element {
    let n = phi.degree;
    assert_eq!(args.len(), n + 1, "δφ takes n+1 arguments");
    let alg = &rep.algebra;
    let last = &args[n];
    let mut out = Element::zero(rep.ring(), rep.target_rank());
    let acc = |out: &mut Element, positive: bool, v: Element| {
        if positive {
            out.add_assign(&v);
        } else {
            out.add_assign(&v.neg());
        }
    };
    let mu_last = rep.mu_of(last);
    for i in 0..n {
        let s = sign(i);
        acc(&mut out, s, rep.rho_of(&args[i]).apply(&phi.eval(&without(args, &[i]))));
        let mut moved = without(&args[..n], &[i]);
        moved.push(args[i].clone());
        acc(&mut out, s, mu_last.apply(&phi.eval(&moved)));
        let mut prod = without(&args[..n], &[i]);
        prod.push(alg.mul(&args[i], last));
        acc(&mut out, !s, phi.eval(&prod));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut rest = vec![alg.commutator(&args[i], &args[j])];
            rest.extend(without(args, &[i, j]));
            acc(&mut out, (i + j) % 2 == 0, phi.eval(&rest));
        }
    }
    out
}

/// The pre-Lie coboundary `δ: Cⁿ → Cⁿ⁺¹`, tabulated on canonical tuples.
pub fn prelie_coboundary(phi: &Cochain, rep: &Representation) -> Result<Cochain> {
    check_prelie(phi, rep)?;
    let alg = &rep.algebra;
    Cochain::from_fn(ComplexKind::Prelie, phi.degree + 1, rep.ring(), phi.rank, phi.target_rank, |t| {
        let args: Vec<Element> = t.iter().map(|&i| alg.basis(i)).collect();
        prelie_coboundary_eval(phi, rep, &args)
    })
}

/// `dϖ(X₁..Xₖ₊₁)` evaluated directly on arbitrary elements.
pub fn lie_coboundary_eval(w: &Cochain, rep: &LieRepresentation, args: &[Element]) -> Element {
    let k = w.degree;
    assert_eq!(args.len(), k + 1, "dϖ takes k+1 arguments");
    let mut out = Element::zero(rep.ring(), rep.target_rank());
    for i in 0..=k {
        let v = rep.rho_of(&args[i]).apply(&w.eval(&without(args, &[i])));
        out.add_assign(&if sign(i) { v } else { v.neg() });
    }
    for i in 0..=k {
        for j in i + 1..=k {
            let mut rest = vec![rep.algebra.bracket(&args[i], &args[j])];
            rest.extend(without(args, &[i, j]));
            let v = w.eval(&rest);
            out.add_assign(&if (i + j) % 2 == 0 { v } else { v.neg() });
        }
    }
    out
}

/// The Chevalley-Eilenberg-Rinehart coboundary `d: Ωᵏ → Ωᵏ⁺¹`.
pub fn lie_coboundary(w: &Cochain, rep: &LieRepresentation) -> Result<Cochain> {
    if w.kind != ComplexKind::Lie {
        return Err(Error::Malformed("expected a cochain of the Lie complex".into()));
    }
    if w.rank != rep.rank() || w.target_rank != rep.target_rank() {
        return Err(Error::ModuleMismatch("cochain does not match the representation".into()));
    }
    Cochain::from_fn(ComplexKind::Lie, w.degree + 1, rep.ring(), w.rank, w.target_rank, |t| {
        let args: Vec<Element> = t.iter().map(|&i| rep.algebra.basis(i)).collect();
        lie_coboundary_eval(w, rep, &args)
    })
}

/// `C¹(E,ℰ) = Hom_A(E,ℰ)` as a free module; coordinate `j·m + k` is the `k`-th
/// component of `ψ(eⱼ)`.
pub fn c1_module(rep: &Representation) -> FreeModule {
    let m = rep.target_rank();
    let names = (0..rep.rank() * m)
        .map(|idx| format!("{}>{}", rep.algebra.module.basis[idx / m], rep.target.basis[idx % m]))
        .collect();
    FreeModule::new(rep.ring(), names).expect("distinct names")
}

/// The `A`-linear map `E → ℰ` with coordinates `psi` in `C¹`.
pub fn c1_to_map(rep: &Representation, psi: &Element) -> LinearMap {
    let (n, m) = (rep.rank(), rep.target_rank());
    let cols: Vec<Element> = (0..n).map(|j| psi.slice(j * m, (j + 1) * m)).collect();
    LinearMap::from_columns(rep.ring(), m, &cols).expect("shapes")
}

pub fn map_to_c1(map: &LinearMap) -> Element {
    let mut out = Element::from_coeffs(Vec::new());
    for j in 0..map.cols() {
        out = out.concat(&map.column(j));
    }
    out
}

/// `ϱ(X)(ψ)(Y) = ρ(X)ψ(Y) + μ(Y)ψ(X) − ψ(X·Y)` on `C¹(E,ℰ)`.
pub fn induced_rep_on_c1(rep: &Representation) -> Result<LieRepresentation> {
    let report = rep.check();
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "input is not a representation: {}",
            report.first_failure().unwrap().id
        )));
    }
    Ok(induced_rep_on_c1_unchecked(rep))
}

pub fn induced_rep_on_c1_unchecked(rep: &Representation) -> LieRepresentation {
    let alg = &rep.algebra;
    let n = rep.rank();
    let module = c1_module(rep);
    let big = module.rank();
    let rho = (0..n)
        .map(|i| {
            let x = alg.basis(i);
            let cols: Vec<Element> = (0..big)
                .map(|b| {
                    let psi = c1_to_map(rep, &module.basis_element(b));
                    let image = LinearMap::from_columns(
                        rep.ring(),
                        rep.target_rank(),
                        &(0..n)
                            .map(|l| {
                                let y = alg.basis(l);
                                rep.rho[i]
                                    .apply(&psi.column(l))
                                    .add(&rep.mu[l].apply(&psi.apply(&x)))
                                    .sub(&psi.apply(&alg.mul(&x, &y)))
                            })
                            .collect::<Vec<_>>(),
                    )
                    .expect("shapes");
                    map_to_c1(&image)
                })
                .collect();
            DerivationPair {
                linear: LinearMap::from_columns(rep.ring(), big, &cols).expect("shapes"),
                symbol: alg.anchor[i].clone(),
            }
        })
        .collect();
    LieRepresentation { algebra: alg.sub_adjacent(), target: module, rho }
}

/// `H(ψ)(X₁..Xₙ₊₁) = ψ(X₁..Xₙ)(Xₙ₊₁)` for `ψ ∈ Ωⁿ(E, C¹(E,ℰ))`.
pub fn complex_iso_h(psi: &Cochain, rep: &Representation) -> Result<Cochain> {
    let m = rep.target_rank();
    if psi.kind != ComplexKind::Lie || psi.rank != rep.rank() || psi.target_rank != rep.rank() * m {
        return Err(Error::ModuleMismatch("ψ must be a Lie cochain valued in C¹(E,ℰ)".into()));
    }
    Cochain::from_fn(ComplexKind::Prelie, psi.degree + 1, rep.ring(), psi.rank, m, |t| {
        let (head, j) = t.split_at(t.len() - 1);
        psi.values[head].slice(j[0] * m, (j[0] + 1) * m)
    })
}

/// The inverse of [`complex_iso_h`].
pub fn complex_iso_h_inverse(phi: &Cochain, rep: &Representation) -> Result<Cochain> {
    check_prelie(phi, rep)?;
    let (n, m) = (rep.rank(), rep.target_rank());
    Cochain::from_fn(ComplexKind::Lie, phi.degree - 1, rep.ring(), n, n * m, |head| {
        let mut out = Element::from_coeffs(Vec::new());
        for j in 0..n {
            let mut t = head.to_vec();
            t.push(j);
            out = out.concat(&phi.values[&t]);
        }
        out
    })
}

/// Which representation a cochain is checked against.
pub enum RepRef<'a> {
    Prelie(&'a Representation),
    Lie(&'a LieRepresentation),
}

pub fn coboundary(c: &Cochain, rep: RepRef<'_>) -> Result<Cochain> {
    match rep {
        RepRef::Prelie(r) => prelie_coboundary(c, r),
        RepRef::Lie(r) => lie_coboundary(c, r),
    }
}

/// PASS iff the coboundary of `c` vanishes.
pub fn cocycle_check(c: &Cochain, rep: RepRef<'_>) -> Result<Report> {
    let d = coboundary(c, rep)?;
    let mut report = Report::new();
    report.check("cocycle", d.values);
    Ok(report)
}
