//! r-matrices, the Poisson bracket they induce through an action, and the
//! pre-Lie-Rinehart structure on Kähler differentials.

use num_traits::Zero;

use crate::coeffring::{int, rat, Element, FreeModule, Poly, Rational, RingRef, VectorField};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::structures::{ActionData, FdBracket, LieAlgebraFD, PreLieRinehart};

pub use crate::structures::{sl2_action, LieAlgebraFD as LieAlgebra};

/// `r = Σ_{i<j} r_ij eᵢ∧eⱼ`, stored as a full antisymmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    pub algebra: LieAlgebraFD,
    pub coeffs: Vec<Vec<Rational>>,
}

/// A trivector with coefficients on `eᵢ∧eⱼ∧eₖ`, `i<j<k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge3 {
    pub dim: usize,
    pub coeffs: Vec<((usize, usize, usize), Rational)>,
}

impl Wedge3 {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|(_, c)| c.is_zero())
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Rational {
        self.coeffs.iter().find(|(t, _)| *t == (i, j, k)).map_or_else(Rational::zero, |(_, c)| c.clone())
    }
}

impl RMatrix {
    pub fn new(algebra: LieAlgebraFD, coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        let d = algebra.dim;
        if coeffs.len() != d || coeffs.iter().any(|r| r.len() != d) {
            return Err(Error::Malformed(format!("r needs a {d}x{d} coefficient array")));
        }
        for i in 0..d {
            for j in 0..d {
                if coeffs[i][j] != -coeffs[j][i].clone() {
                    return Err(Error::Malformed("r coefficients must be antisymmetric".into()));
                }
            }
        }
        Ok(RMatrix { algebra, coeffs })
    }

    /// From the upper-triangle coefficients `r_ij`, `i<j`, in row order.
    pub fn from_upper(algebra: LieAlgebraFD, upper: &[Rational]) -> Result<Self> {
        let d = algebra.dim;
        if upper.len() != d * (d - 1) / 2 {
            return Err(Error::Malformed(format!("expected {} coefficients", d * (d - 1) / 2)));
        }
        let mut c = vec![vec![Rational::zero(); d]; d];
        let mut it = upper.iter();
        for i in 0..d {
            for j in i + 1..d {
                let v = it.next().unwrap().clone();
                c[j][i] = -v.clone();
                c[i][j] = v;
            }
        }
        Ok(RMatrix { algebra, coeffs: c })
    }

    /// `r = r₁ h∧e + r₂ h∧f + r₃ e∧f` in sl(2).
    pub fn sl2(r1: Rational, r2: Rational, r3: Rational) -> Self {
        RMatrix::from_upper(LieAlgebraFD::sl2(), &[r1, r2, r3]).expect("three coefficients")
    }

    /// The decomposition `r = Σ xₖ∧yₖ` with `(xₖ, yₖ) = (eᵢ, r_ij eⱼ)`.
    pub fn decomposition(&self) -> Vec<(Vec<Rational>, Vec<Rational>)> {
        let d = self.algebra.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if !self.coeffs[i][j].is_zero() {
                    let mut y = vec![Rational::zero(); d];
                    y[j] = self.coeffs[i][j].clone();
                    out.push((unit(d, i), y));
                }
            }
        }
        out
    }

    /// The same `r` written as `Σ eⱼ ∧ (−r_ij eᵢ)`.
    pub fn transposed_decomposition(&self) -> Vec<(Vec<Rational>, Vec<Rational>)> {
        let d = self.algebra.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if !self.coeffs[i][j].is_zero() {
                    let mut y = vec![Rational::zero(); d];
                    y[i] = -self.coeffs[i][j].clone();
                    out.push((unit(d, j), y));
                }
            }
        }
        out
    }
}

fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[i] = int(1);
    v
}

fn wedge3_into(acc: &mut [Rational], d: usize, x: &[Rational], y: &[Rational], z: &[Rational], scale: &Rational) {
    let mut slot = 0;
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let det = &x[i] * (&y[j] * &z[k] - &y[k] * &z[j]) - &x[j] * (&y[i] * &z[k] - &y[k] * &z[i])
                    + &x[k] * (&y[i] * &z[j] - &y[j] * &z[i]);
                acc[slot] += scale * det;
                slot += 1;
            }
        }
    }
}

/// `⟦r,r⟧ = Σ_{k,l} [xₖ,xₗ]∧yₖ∧yₗ + 2xₖ∧[yₖ,xₗ]∧yₗ + xₖ∧xₗ∧[yₖ,yₗ]` over a decomposition.
pub fn cybe_residual_with(algebra: &LieAlgebraFD, decomposition: &[(Vec<Rational>, Vec<Rational>)]) -> Wedge3 {
    let d = algebra.dim;
    let mut triples = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                triples.push((i, j, k));
            }
        }
    }
    let mut acc = vec![Rational::zero(); triples.len()];
    let (one, two) = (int(1), int(2));
    for (xk, yk) in decomposition {
        for (xl, yl) in decomposition {
            wedge3_into(&mut acc, d, &algebra.bracket_vec(xk, xl), yk, yl, &one);
            wedge3_into(&mut acc, d, xk, &algebra.bracket_vec(yk, xl), yl, &two);
            wedge3_into(&mut acc, d, xk, xl, &algebra.bracket_vec(yk, yl), &one);
        }
    }
    Wedge3 { dim: d, coeffs: triples.into_iter().zip(acc).collect() }
}

pub fn cybe_residual(r: &RMatrix) -> Wedge3 {
    cybe_residual_with(&r.algebra, &r.decomposition())
}

/// A Poisson-type bracket on a polynomial ring, given on the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonData {
    pub ring: RingRef,
    /// `table[i][j] = {xᵢ, xⱼ}`, antisymmetric.
    pub table: Vec<Vec<Poly>>,
}

impl PoissonData {
    /// `{a,b} = Σ_{i,j} ∂ᵢa ∂ⱼb {xᵢ,xⱼ}`.
    pub fn bracket(&self, a: &Poly, b: &Poly) -> Poly {
        let n = self.ring.nvars();
        let da: Vec<Poly> = (0..n).map(|i| a.derivative(i)).collect();
        let db: Vec<Poly> = (0..n).map(|i| b.derivative(i)).collect();
        let mut out = Poly::zero(&self.ring);
        for i in 0..n {
            if da[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !db[j].is_zero() && !self.table[i][j].is_zero() {
                    out += &(&(&da[i] * &db[j]) * &self.table[i][j]);
                }
            }
        }
        out
    }

    /// The Hamiltonian field `{u, −}`.
    pub fn hamiltonian(&self, u: &Poly) -> VectorField {
        let n = self.ring.nvars();
        let comps = (0..n).map(|j| self.bracket(u, &Poly::var(&self.ring, j))).collect();
        VectorField::new(&self.ring, comps).expect("component count")
    }
}

fn checked_action(action: &ActionData<LieAlgebraFD>, r: &RMatrix) -> Result<()> {
    if action.algebra != r.algebra {
        return Err(Error::Precondition("r and the action live on different Lie algebras".into()));
    }
    let rep = action.check();
    if !rep.passed() {
        return Err(Error::Precondition(format!("not a Lie algebra action: {}", rep.first_failure().unwrap().id)));
    }
    Ok(())
}

/// `{a,b} = Σₖ λ(xₖ)(a)λ(yₖ)(b) − λ(xₖ)(b)λ(yₖ)(a)` over a decomposition.
pub fn induced_bracket_with(
    action: &ActionData<LieAlgebraFD>,
    decomposition: &[(Vec<Rational>, Vec<Rational>)],
    a: &Poly,
    b: &Poly,
) -> Poly {
    let mut out = Poly::zero(action.ring());
    for (x, y) in decomposition {
        let (lx, ly) = (action.image(x), action.image(y));
        out += &(&lx.apply(a) * &ly.apply(b));
        out -= &(&lx.apply(b) * &ly.apply(a));
    }
    out
}

pub fn induced_poisson(r: &RMatrix, action: &ActionData<LieAlgebraFD>) -> Result<PoissonData> {
    checked_action(action, r)?;
    let ring = action.ring().clone();
    let n = ring.nvars();
    let dec = r.decomposition();
    let table = (0..n)
        .map(|i| {
            (0..n).map(|j| induced_bracket_with(action, &dec, &Poly::var(&ring, i), &Poly::var(&ring, j))).collect()
        })
        .collect();
    Ok(PoissonData { ring, table })
}

/// `{a,{b,c}} + {c,{a,b}} + {b,{c,a}}`.
pub fn jacobi_residual(p: &PoissonData, a: &Poly, b: &Poly, c: &Poly) -> Poly {
    p.bracket(a, &p.bracket(b, c)) + p.bracket(c, &p.bracket(a, b)) + p.bracket(b, &p.bracket(c, a))
}

/// `λ(w)(a,b,c) = Σ_{i<j<k} w_ijk det[λ(e_·)(a), λ(e_·)(b), λ(e_·)(c)]`.
pub fn evaluate_trivector(w: &Wedge3, action: &ActionData<LieAlgebraFD>, a: &Poly, b: &Poly, c: &Poly) -> Poly {
    let ring = action.ring();
    let mut out = Poly::zero(ring);
    for ((i, j, k), coeff) in &w.coeffs {
        if coeff.is_zero() {
            continue;
        }
        let row = |t: usize| {
            let l = &action.images[t];
            [l.apply(a), l.apply(b), l.apply(c)]
        };
        let (x, y, z) = (row(*i), row(*j), row(*k));
        let det = &x[0] * &(&y[1] * &z[2] - &y[2] * &z[1]) - &x[1] * &(&y[0] * &z[2] - &y[2] * &z[0])
            + &x[2] * &(&y[0] * &z[1] - &y[1] * &z[0]);
        out += &det.scale(coeff);
    }
    out
}

/// `½ λ(⟦r,r⟧)(a,b,c)`.
pub fn half_lambda_residual(r: &RMatrix, action: &ActionData<LieAlgebraFD>, a: &Poly, b: &Poly, c: &Poly) -> Poly {
    evaluate_trivector(&cybe_residual(r), action, a, b, c).scale(&rat(1, 2))
}

pub fn residual_identity_check(
    r: &RMatrix,
    action: &ActionData<LieAlgebraFD>,
    a: &Poly,
    b: &Poly,
    c: &Poly,
) -> Result<Report> {
    let p = induced_poisson(r, action)?;
    let lhs = jacobi_residual(&p, a, b, c);
    let rhs = half_lambda_residual(r, action, a, b, c);
    let mut rep = Report::new();
    rep.check("jacobi_residual_identity", [(vec![], lhs - rhs)]);
    Ok(rep)
}

/// The Kähler module `Ω¹` of a polynomial ring: free on `dx₁..dxₙ`.
pub fn kaehler_module(ring: &RingRef) -> FreeModule {
    FreeModule::new(ring, ring.vars.iter().map(|v| format!("d{v}")).collect()).expect("distinct names")
}

/// `d p = Σ ∂ᵢp dxᵢ`.
pub fn differential(p: &Poly) -> Element {
    Element::from_coeffs((0..p.ring().nvars()).map(|i| p.derivative(i)).collect())
}

/// `[a du, b dv] = a{u,b}dv + b{a,v}du + ab d{u,v}`.
pub fn omega1_bracket(p: &PoissonData, a: &Poly, u: &Poly, b: &Poly, v: &Poly) -> Element {
    let mut out = differential(v).scale(&(a * &p.bracket(u, b)));
    out.add_scaled(&(b * &p.bracket(a, v)), &differential(u));
    out.add_scaled(&(a * b), &differential(&p.bracket(u, v)));
    out
}

/// `(a du)·(b dv) = ab Σₖ (λ(xₖ)(u) dλ(yₖ)(v) − λ(yₖ)(u) dλ(xₖ)(v)) + a{u,b} dv`.
pub fn omega1_product(
    action: &ActionData<LieAlgebraFD>,
    decomposition: &[(Vec<Rational>, Vec<Rational>)],
    p: &PoissonData,
    a: &Poly,
    u: &Poly,
    b: &Poly,
    v: &Poly,
) -> Element {
    let n = action.ring().nvars();
    let mut sum = Element::zero(action.ring(), n);
    for (x, y) in decomposition {
        let (lx, ly) = (action.image(x), action.image(y));
        sum.add_scaled(&lx.apply(u), &differential(&ly.apply(v)));
        sum.add_scaled(&-&ly.apply(u), &differential(&lx.apply(v)));
    }
    let mut out = sum.scale(&(a * b));
    out.add_scaled(&(a * &p.bracket(u, b)), &differential(v));
    out
}

/// The pre-Lie-Rinehart algebra on `Ω¹` with anchor `π♯(dxᵢ) = Σⱼ {xᵢ,xⱼ} ∂ⱼ`,
/// together with its verification report (which fails when `r` violates the CYBE).
pub fn omega1_prelie(r: &RMatrix, action: &ActionData<LieAlgebraFD>) -> Result<(PreLieRinehart, Report)> {
    let p = induced_poisson(r, action)?;
    let ring = action.ring().clone();
    let n = ring.nvars();
    let dec = r.decomposition();
    let one = Poly::one(&ring);
    let xs: Vec<Poly> = (0..n).map(|i| Poly::var(&ring, i)).collect();
    let product = (0..n)
        .map(|i| (0..n).map(|j| omega1_product(action, &dec, &p, &one, &xs[i], &one, &xs[j])).collect())
        .collect();
    let anchor = xs.iter().map(|x| p.hamiltonian(x)).collect();
    let alg = PreLieRinehart::new(kaehler_module(&ring), product, anchor)?;
    let report = alg.verify();
    Ok((alg, report))
}

/// The sl(2) action on two copies of the standard representation, on `ℚ[x1,x2,y1,y2]`.
pub fn sl2_double_action() -> ActionData<LieAlgebraFD> {
    let ring = crate::coeffring::Ring::polynomial(&["x1", "x2", "y1", "y2"]);
    let p = |s: &str| Poly::parse(&ring, s).expect("literal");
    let vf = |c: [&str; 4]| VectorField::new(&ring, c.iter().map(|s| p(s)).collect()).expect("four components");
    ActionData::new(
        LieAlgebraFD::sl2(),
        vec![vf(["x1", "-x2", "y1", "-y2"]), vf(["0", "x1", "0", "y1"]), vf(["x2", "0", "y2", "0"])],
    )
    .expect("valid action")
}
