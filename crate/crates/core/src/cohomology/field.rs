//! Exact cohomology computations when the base ring is ℚ itself.

use num_traits::Zero;

use crate::coeffring::{Element, Poly, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

use super::cochain::{canonical_tuples, Cochain, ComplexKind};
use super::complex::{coboundary, RepRef};

struct Shape {
    kind: ComplexKind,
    ring: crate::coeffring::RingRef,
    rank: usize,
    target_rank: usize,
}

fn shape(rep: &RepRef<'_>) -> Result<Shape> {
    let (kind, ring, rank, target_rank) = match rep {
        RepRef::Prelie(r) => (ComplexKind::Prelie, r.ring().clone(), r.rank(), r.target_rank()),
        RepRef::Lie(r) => (ComplexKind::Lie, r.ring().clone(), r.rank(), r.target_rank()),
    };
    if !ring.is_field() {
        return Err(Error::NotFieldCase(format!("ring has variables {:?}", ring.vars)));
    }
    Ok(Shape { kind, ring, rank, target_rank })
}

fn reborrow<'a>(rep: &'a RepRef<'_>) -> RepRef<'a> {
    match rep {
        RepRef::Prelie(r) => RepRef::Prelie(r),
        RepRef::Lie(r) => RepRef::Lie(r),
    }
}

/// Coordinates of a field-case cochain: tuples in canonical order, components inside.
pub fn to_vector(c: &Cochain) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for t in canonical_tuples(c.kind, c.degree, c.rank) {
        for p in c.values[&t].coeffs() {
            out.push(p.constant_value().ok_or_else(|| Error::NotFieldCase(format!("non-constant value {p}")))?);
        }
    }
    Ok(out)
}

fn from_vector(s: &Shape, degree: usize, v: &[Rational]) -> Result<Cochain> {
    let m = s.target_rank;
    let mut it = v.iter();
    Cochain::from_fn(s.kind, degree, &s.ring, s.rank, m, |_| {
        Element::from_coeffs((0..m).map(|_| Poly::constant(&s.ring, it.next().unwrap().clone())).collect())
    })
}

fn dim(s: &Shape, degree: usize) -> usize {
    if s.kind == ComplexKind::Prelie && degree == 0 {
        0
    } else {
        canonical_tuples(s.kind, degree, s.rank).len() * s.target_rank
    }
}

/// Matrix of the coboundary out of `degree`, columns indexed by basis cochains.
fn differential_matrix(rep: &RepRef<'_>, s: &Shape, degree: usize) -> Result<Matrix> {
    let cols = dim(s, degree);
    let rows = dim(s, degree + 1);
    let mut m = vec![vec![Rational::zero(); cols]; rows];
    for c in 0..cols {
        let mut unit = vec![Rational::zero(); cols];
        unit[c] = Rational::from_integer(1.into());
        let image = coboundary(&from_vector(s, degree, &unit)?, reborrow(rep))?;
        for (r, x) in to_vector(&image)?.into_iter().enumerate() {
            m[r][c] = x;
        }
    }
    Ok(m)
}

pub fn coboundary_matrix(rep: RepRef<'_>, degree: usize) -> Result<Matrix> {
    let s = shape(&rep)?;
    if s.kind == ComplexKind::Prelie && degree == 0 {
        return Err(Error::Degree(0));
    }
    differential_matrix(&rep, &s, degree)
}

/// The field-case cochain with the given coordinates (inverse of `to_vector`).
pub fn cochain_from_vector(rep: RepRef<'_>, degree: usize, v: &[Rational]) -> Result<Cochain> {
    let s = shape(&rep)?;
    if v.len() != dim(&s, degree) {
        return Err(Error::Malformed(format!("expected {} coordinates, got {}", dim(&s, degree), v.len())));
    }
    from_vector(&s, degree, v)
}

/// A basis of the closed cochains of the given degree.
pub fn cocycle_basis_field(rep: RepRef<'_>, degree: usize) -> Result<Vec<Cochain>> {
    let s = shape(&rep)?;
    let m = coboundary_matrix(reborrow(&rep), degree)?;
    linalg::nullspace(&m, dim(&s, degree)).iter().map(|v| from_vector(&s, degree, v)).collect()
}

/// Some `b` with `δb = c`, or `None` when `c` is not a coboundary.
pub fn coboundary_solve_field(c: &Cochain, rep: RepRef<'_>) -> Result<Option<Cochain>> {
    let s = shape(&rep)?;
    if c.kind != s.kind || c.rank != s.rank || c.target_rank != s.target_rank {
        return Err(Error::ModuleMismatch("cochain does not match the representation".into()));
    }
    if c.degree == 0 || (s.kind == ComplexKind::Prelie && c.degree == 1) {
        return Err(Error::Degree(c.degree - 1));
    }
    let m = differential_matrix(&rep, &s, c.degree - 1)?;
    let target = to_vector(c)?;
    if m.is_empty() {
        return Ok(target.iter().all(Zero::is_zero).then(|| from_vector(&s, c.degree - 1, &[]).unwrap()));
    }
    match linalg::solve(&m, &target) {
        Some(x) => Ok(Some(from_vector(&s, c.degree - 1, &x)?)),
        None => Ok(None),
    }
}

/// `dim Hⁿ = nullity(δₙ) − rank(δₙ₋₁)` for `1 ≤ n ≤ n_max`.
pub fn cohomology_dims_field(rep: RepRef<'_>, n_max: usize) -> Result<Vec<usize>> {
    let s = shape(&rep)?;
    let mut ranks = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if s.kind == ComplexKind::Prelie && n == 0 {
            ranks.push(0);
        } else {
            ranks.push(linalg::rank(&differential_matrix(&rep, &s, n)?));
        }
    }
    Ok((1..=n_max).map(|n| dim(&s, n) - ranks[n] - ranks[n - 1]).collect())
}
