//! Standard examples of pre-Lie-Rinehart and Lie-Rinehart algebras.

use crate::coeffring::{DerivationPair, Element, FreeModule, Poly, Ring, RingRef, VectorField};
use crate::error::{Error, Result};
use crate::report::Report;

use super::fd::{ActionData, FdBracket, LieAlgebraFD, PreLieAlgebraFD};
use super::lie_rinehart::LieRinehart;
use super::prelie_rinehart::{pairs, PreLieRinehart};

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn rational_element(ring: &RingRef, v: &[crate::coeffring::Rational]) -> Element {
    Element::from_coeffs(v.iter().map(|c| Poly::constant(ring, c.clone())).collect())
}

/// `(a Xᵢ)·(b Xⱼ) = a Xᵢ(b) Xⱼ` for pairwise commuting vector fields `Xᵢ`, anchor `eᵢ ↦ Xᵢ`.
pub fn coordinate_algebra(ring: &RingRef, fields: Vec<VectorField>) -> Result<PreLieRinehart> {
    for (i, j) in pairs(fields.len()).filter(|(i, j)| i < j) {
        if !fields[i].commutator(&fields[j]).is_zero() {
            return Err(Error::Precondition(format!("fields {i} and {j} do not commute")));
        }
    }
    let basis = if fields.len() == ring.nvars()
        && fields.iter().enumerate().all(|(i, f)| *f == VectorField::partial(ring, i))
    {
        ring.vars.iter().map(|v| format!("d_{v}")).collect()
    } else {
        names("e", fields.len())
    };
    let module = FreeModule::new(ring, basis)?;
    let mut alg = PreLieRinehart::zero(module);
    alg.anchor = fields;
    Ok(alg)
}

/// The coordinate algebra of all partial derivatives of `ring`.
pub fn dn(ring: &RingRef) -> PreLieRinehart {
    let fields = (0..ring.nvars()).map(|i| VectorField::partial(ring, i)).collect();
    coordinate_algebra(ring, fields).expect("partials commute")
}

/// `A` itself with `x ∗ y = x d(y)` and anchor `θ(x) = x d`.
pub fn derivation_prelie(ring: &RingRef, d: VectorField) -> Result<PreLieRinehart> {
    crate::coeffring::ensure_same_ring(ring, d.ring())?;
    let module = FreeModule::new(ring, vec!["1".into()])?;
    let mut alg = PreLieRinehart::zero(module);
    alg.anchor = vec![d];
    Ok(alg)
}

/// `A ⊗ 𝔤` with `(a⊗x)·(b⊗y) = ab⊗x·y + aλ(x)(b)⊗y` and anchor `a λ(x)`.
pub fn transformation_algebra(action: &ActionData<PreLieAlgebraFD>) -> Result<PreLieRinehart> {
    let report = action.check();
    if !report.passed() {
        return Err(Error::Precondition(format!("action check fails: {}", first(&report))));
    }
    let ring = action.ring().clone();
    let g = &action.algebra;
    let module = FreeModule::new(&ring, names("e", g.dim))?;
    let product = (0..g.dim).map(|i| (0..g.dim).map(|j| rational_element(&ring, &g.product[i][j])).collect()).collect();
    PreLieRinehart::new(module, product, action.images.clone())
}

/// `A ⊗ 𝔤` with `[a⊗x, b⊗y] = ab⊗[x,y] + aλ(x)(b)⊗y − bλ(y)(a)⊗x`.
pub fn transformation_lie_rinehart(action: &ActionData<LieAlgebraFD>) -> Result<LieRinehart> {
    let report = action.check();
    if !report.passed() {
        return Err(Error::Precondition(format!("action check fails: {}", first(&report))));
    }
    let ring = action.ring().clone();
    let g = &action.algebra;
    let module = FreeModule::new(&ring, names("e", g.dim))?;
    let bracket =
        (0..g.dim).map(|i| (0..g.dim).map(|j| rational_element(&ring, &g.bracket_basis(i, j))).collect()).collect();
    LieRinehart::new(module, bracket, action.images.clone())
}

/// The derivation law `D(eᵢ·eⱼ) = D(eᵢ)·eⱼ + eᵢ·D(eⱼ)` for a pre-Lie `A`-algebra.
pub fn check_derivation(alg: &PreLieRinehart, d: &DerivationPair) -> Report {
    let mut r = Report::new();
    if d.rank() != alg.rank() {
        r.fail("shape", vec![d.rank(), alg.rank()], "derivation rank mismatch");
        return r;
    }
    r.check("zero_anchor", alg.anchor.iter().enumerate().map(|(i, v)| (vec![i], v.clone())));
    r.check(
        "derivation_law",
        pairs(alg.rank()).map(|(i, j)| {
            let (x, y) = (alg.basis(i), alg.basis(j));
            let lhs = d.apply(&alg.product[i][j]);
            let rhs = alg.mul(&d.apply(&x), &y).add(&alg.mul(&x, &d.apply(&y)));
            (vec![i, j], lhs.sub(&rhs))
        }),
    );
    r
}

/// `A ⊕ E` with `(a,X)∗(b,Y) = (aδ(b), X·Y + aD(Y))` and anchor `θ(a,X) = aδ`.
pub fn derivation_extension(alg: &PreLieRinehart, d: &DerivationPair) -> Result<PreLieRinehart> {
    let report = check_derivation(alg, d);
    if !report.passed() {
        return Err(Error::Precondition(format!("not a derivation: {}", first(&report))));
    }
    let ring = alg.ring().clone();
    let n = alg.rank();
    let mut basis = vec![unique_name("1", &alg.module.basis)];
    basis.extend(alg.module.basis.iter().cloned());
    let module = FreeModule::new(&ring, basis)?;
    let lift = |e: &Element| Element::zero(&ring, 1).concat(e);
    let mut product = vec![vec![module.zero(); n + 1]; n + 1];
    for j in 0..n {
        product[0][j + 1] = lift(&d.linear.column(j));
        for i in 0..n {
            product[i + 1][j + 1] = lift(&alg.product[i][j]);
        }
    }
    let mut anchor = vec![d.symbol.clone()];
    anchor.extend(std::iter::repeat_n(VectorField::zero(&ring), n));
    PreLieRinehart::new(module, product, anchor)
}

fn unique_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// `E₁⊗A₂ ⊕ A₁⊗E₂` over the polynomial ring on the union of both variable sets.
pub fn tensor_product_algebra(e1: &PreLieRinehart, e2: &PreLieRinehart) -> Result<PreLieRinehart> {
    let (r1, r2) = (e1.ring(), e2.ring());
    if r1.laurent != r2.laurent {
        return Err(Error::RingMismatch("cannot mix Laurent and polynomial factors".into()));
    }
    if let Some(v) = r1.vars.iter().find(|v| r2.vars.contains(v)) {
        return Err(Error::RingMismatch(format!("variable {v:?} occurs in both rings")));
    }
    let mut vars = r1.vars.clone();
    vars.extend(r2.vars.iter().cloned());
    let ring = Ring::new(&vars, r1.laurent)?;
    let m1: Vec<usize> = (0..r1.nvars()).collect();
    let m2: Vec<usize> = (r1.nvars()..ring.nvars()).collect();
    let (n1, n2) = (e1.rank(), e2.rank());
    let mut basis: Vec<String> = e1.module.basis.iter().map(|b| format!("{b}.1")).collect();
    basis.extend(e2.module.basis.iter().map(|b| format!("{b}.2")));
    let module = FreeModule::new(&ring, basis)?;
    let embed = |e: &Element, map: &[usize], offset: usize| -> Result<Element> {
        let mut out = module.zero();
        for (k, c) in e.coeffs().iter().enumerate() {
            out.set(offset + k, c.embed(&ring, map)?);
        }
        Ok(out)
    };
    let mut product = vec![vec![module.zero(); n1 + n2]; n1 + n2];
    for (i, j) in pairs(n1) {
        product[i][j] = embed(&e1.product[i][j], &m1, 0)?;
    }
    for (i, j) in pairs(n2) {
        product[n1 + i][n1 + j] = embed(&e2.product[i][j], &m2, n1)?;
    }
    let mut anchor = Vec::with_capacity(n1 + n2);
    for v in &e1.anchor {
        anchor.push(v.embed(&ring, &m1)?);
    }
    for v in &e2.anchor {
        anchor.push(v.embed(&ring, &m2)?);
    }
    PreLieRinehart::new(module, product, anchor)
}

fn first(r: &Report) -> String {
    match r.first_failure() {
        Some(item) => match &item.witness {
            Some(w) => format!("{} at {:?}: {}", item.id, w.tuple, w.value),
            None => item.id.clone(),
        },
        None => String::new(),
    }
}
