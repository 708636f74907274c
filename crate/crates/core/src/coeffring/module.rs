use std::fmt;

use super::poly::Poly;
use super::ring::{ensure_same_ring, RingRef};
use crate::error::{Error, Result};

/// A free module `A^n` with named basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub ring: RingRef,
    pub basis: Vec<String>,
}

impl FreeModule {
    pub fn new(ring: &RingRef, basis: Vec<String>) -> Result<Self> {
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(Error::Malformed(format!("duplicate basis name {b:?}")));
            }
        }
        Ok(FreeModule { ring: ring.clone(), basis })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn zero(&self) -> Element {
        Element::zero(&self.ring, self.rank())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(&self.ring, self.rank(), i)
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        if e.rank() != self.rank() {
            return Err(Error::ModuleMismatch(format!(
                "element of rank {} in a module of rank {}",
                e.rank(),
                self.rank()
            )));
        }
        for c in e.coeffs() {
            ensure_same_ring(&self.ring, c.ring())?;
        }
        Ok(())
    }
}

/// Coordinates of a module element in the standard basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    coeffs: Vec<Poly>,
}

impl Element {
    pub fn zero(ring: &RingRef, rank: usize) -> Self {
        Element { coeffs: vec![Poly::zero(ring); rank] }
    }

    pub fn basis(ring: &RingRef, rank: usize, i: usize) -> Self {
        let mut e = Element::zero(ring, rank);
        e.coeffs[i] = Poly::one(ring);
        e
    }

    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        Element { coeffs }
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    pub fn set(&mut self, i: usize, p: Poly) {
        self.coeffs[i] = p;
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.rank(), other.rank(), "module mismatch");
        Element { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.rank(), other.rank(), "module mismatch");
        Element { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Element {
        Element { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn add_assign(&mut self, other: &Element) {
        assert_eq!(self.rank(), other.rank(), "module mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn add_scaled(&mut self, a: &Poly, other: &Element) {
        assert_eq!(self.rank(), other.rank(), "module mismatch");
        if a.is_zero() {
            return;
        }
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !y.is_zero() {
                *x += &(a * y);
            }
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        if self.rank() != other.rank() {
            return Err(Error::ModuleMismatch(format!("rank {} vs {}", self.rank(), other.rank())));
        }
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            ensure_same_ring(a.ring(), b.ring())?;
        }
        Ok(self.add(other))
    }

    pub fn scale(&self, a: &Poly) -> Element {
        Element { coeffs: self.coeffs.iter().map(|c| a * c).collect() }
    }

    /// Concatenates coordinates, as in a direct sum.
    pub fn concat(&self, other: &Element) -> Element {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(other.coeffs.iter().cloned());
        Element { coeffs }
    }

    pub fn slice(&self, start: usize, end: usize) -> Element {
        Element { coeffs: self.coeffs[start..end].to_vec() }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(Poly::to_string).collect()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(", "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{self}")
    }
}

/// An `A`-linear map `A^cols → A^rows`; `entries[r][c]` is the `r`-th
/// coordinate of the image of basis vector `c`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Poly>>,
}

impl LinearMap {
    pub fn zero(ring: &RingRef, rows: usize, cols: usize) -> Self {
        LinearMap { ring: ring.clone(), rows, cols, entries: vec![vec![Poly::zero(ring); cols]; rows] }
    }

    pub fn identity(ring: &RingRef, n: usize) -> Self {
        let mut m = LinearMap::zero(ring, n, n);
        for i in 0..n {
            m.entries[i][i] = Poly::one(ring);
        }
        m
    }

    pub fn from_rows(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Vec<Poly>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed(format!("matrix is not {rows}x{cols}")));
        }
        for row in &entries {
            for p in row {
                ensure_same_ring(ring, p.ring())?;
            }
        }
        Ok(LinearMap { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_columns(ring: &RingRef, rows: usize, columns: &[Element]) -> Result<Self> {
        let cols = columns.len();
        let mut m = LinearMap::zero(ring, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            if col.rank() != rows {
                return Err(Error::ModuleMismatch(format!("column of rank {} but {rows} rows", col.rank())));
            }
            for r in 0..rows {
                ensure_same_ring(ring, col.component(r).ring())?;
                m.entries[r][c] = col.component(r).clone();
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.entries[r][c] = p;
    }

    pub fn entries(&self) -> &[Vec<Poly>] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Element {
        Element::from_coeffs((0..self.rows).map(|r| self.entries[r][c].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    pub fn apply(&self, u: &Element) -> Element {
        assert_eq!(u.rank(), self.cols, "module mismatch");
        let mut out = Element::zero(&self.ring, self.rows);
        for c in 0..self.cols {
            let x = u.component(c);
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let e = &self.entries[r][c];
                if !e.is_zero() {
                    let v = out.component(r) + &(e * x);
                    out.set(r, v);
                }
            }
        }
        out
    }

    pub fn checked_apply(&self, u: &Element) -> Result<Element> {
        if u.rank() != self.cols {
            return Err(Error::ModuleMismatch(format!(
                "map with {} columns applied to element of rank {}",
                self.cols,
                u.rank()
            )));
        }
        for c in u.coeffs() {
            ensure_same_ring(&self.ring, c.ring())?;
        }
        Ok(self.apply(u))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows, "module mismatch");
        let cols: Vec<Element> = (0..other.cols).map(|c| self.apply(&other.column(c))).collect();
        LinearMap::from_columns(&self.ring, self.rows, &cols).expect("shapes agree")
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, a: &Poly) -> LinearMap {
        let entries = self.entries.iter().map(|r| r.iter().map(|p| a * p).collect()).collect();
        LinearMap { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    /// `self∘other − other∘self` for endomorphisms.
    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        self.compose(other).sub(&other.compose(self))
    }

    fn zip(&self, other: &LinearMap, f: impl Fn(&Poly, &Poly) -> Poly) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "module mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| f(a, b)).collect())
            .collect();
        LinearMap { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(Poly::to_string).collect()).collect()
    }

    /// Determinant of a square map, by cofactor expansion along the first column.
    pub fn determinant(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square map");
        let rows: Vec<usize> = (0..self.rows).collect();
        minor_det(&self.entries, &rows, 0, &self.ring)
    }

    /// A map `L` with `L∘self = id`, built from a square block of rows whose
    /// determinant is a unit of `A`. `None` if no such block exists.
    pub fn left_inverse(&self) -> Option<LinearMap> {
        let k = self.cols;
        for rows in combinations(self.rows, k) {
            let det = minor_det(&self.entries, &rows, 0, &self.ring);
            let Ok(inv_det) = det.inverse_term() else { continue };
            // inverse of the block by the adjugate, spread back over the chosen rows
            let mut left = LinearMap::zero(&self.ring, k, self.rows);
            for (bi, &r) in rows.iter().enumerate() {
                let others: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
                for c in 0..k {
                    let cols: Vec<usize> = (0..k).filter(|&x| x != c).collect();
                    let sub: Vec<Vec<Poly>> =
                        others.iter().map(|&o| cols.iter().map(|&cc| self.entries[o][cc].clone()).collect()).collect();
                    let idx: Vec<usize> = (0..others.len()).collect();
                    let mut cof = minor_det(&sub, &idx, 0, &self.ring);
                    if (bi + c) % 2 == 1 {
                        cof = -cof;
                    }
                    left.entries[c][r] = &cof * &inv_det;
                }
            }
            return Some(left);
        }
        None
    }
}

fn minor_det(m: &[Vec<Poly>], rows: &[usize], col: usize, ring: &RingRef) -> Poly {
    if rows.is_empty() {
        return Poly::one(ring);
    }
    let mut out = Poly::zero(ring);
    for (k, &r) in rows.iter().enumerate() {
        let e = &m[r][col];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = e * &minor_det(m, &rest, col + 1, ring);
        if k % 2 == 0 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap{:?}", self.to_strings())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::Ring;

    #[test]
    fn compose_matches_sequential_apply() {
        let r = Ring::polynomial(&["x"]);
        let p = |s: &str| Poly::parse(&r, s).unwrap();
        let a = LinearMap::from_rows(&r, 2, 2, vec![vec![p("x"), p("1")], vec![p("0"), p("x^2")]]).unwrap();
        let b = LinearMap::from_rows(&r, 2, 2, vec![vec![p("1"), p("-1")], vec![p("x"), p("2")]]).unwrap();
        let u = Element::from_coeffs(vec![p("x + 1"), p("3")]);
        assert_eq!(a.compose(&b).apply(&u), a.apply(&b.apply(&u)));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let r = Ring::polynomial(&["x"]);
        let m = LinearMap::identity(&r, 2);
        assert!(matches!(m.checked_apply(&Element::zero(&r, 3)), Err(Error::ModuleMismatch(_))));
    }

    #[test]
    fn determinant_and_left_inverse() {
        let r = Ring::polynomial(&["x"]);
        let p = |s: &str| Poly::parse(&r, s).unwrap();
        let a = LinearMap::from_rows(&r, 2, 2, vec![vec![p("x"), p("1")], vec![p("x^2 - 1"), p("x")]]).unwrap();
        assert_eq!(a.determinant(), p("1"));
        let l = a.left_inverse().unwrap();
        assert_eq!(l.compose(&a), LinearMap::identity(&r, 2));
        // rows 0 and 1 give determinant x, which is not a unit; rows 0 and 2 work
        let b = LinearMap::from_rows(&r, 3, 2, vec![vec![p("1"), p("0")], vec![p("0"), p("x")], vec![p("x"), p("3")]])
            .unwrap();
        assert_eq!(b.left_inverse().unwrap().compose(&b), LinearMap::identity(&r, 2));
        let c = LinearMap::from_rows(&r, 2, 1, vec![vec![p("x")], vec![p("x^2")]]).unwrap();
        assert!(c.left_inverse().is_none());
        let lr = Ring::laurent(&["x"]);
        let d = LinearMap::from_rows(&lr, 1, 1, vec![vec![Poly::parse(&lr, "2*x").unwrap()]]).unwrap();
        assert_eq!(d.left_inverse().unwrap().entry(0, 0), &Poly::parse(&lr, "1/2*x^-1").unwrap());
        assert_eq!(LinearMap::zero(&r, 3, 0).left_inverse().unwrap().rows(), 0);
    }
}
