use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::rational::{format_rational, int, is_minus_one, Rational};
use super::ring::{ensure_same_ring, same_ring, RingRef};
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial has an empty
/// term map and equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: RingRef,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Poly::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn from_int(ring: &RingRef, c: i64) -> Self {
        Poly::constant(ring, int(c))
    }

    /// The `i`-th variable. Panics if `i` is out of range.
    pub fn var(ring: &RingRef, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index {i} out of range");
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Poly::term(ring, e, Rational::one()).expect("nonnegative exponent")
    }

    pub fn term(ring: &RingRef, exponents: Vec<i32>, coeff: Rational) -> Result<Self> {
        if exponents.len() != ring.nvars() {
            return Err(Error::Malformed(format!(
                "exponent vector of length {} in a ring with {} variables",
                exponents.len(),
                ring.nvars()
            )));
        }
        if !ring.laurent && exponents.iter().any(|&e| e < 0) {
            return Err(Error::NegativeExponent(format!("{exponents:?}")));
        }
        let mut p = Poly::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exponents), coeff);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Largest total degree among the terms, `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Coefficient of the given monomial.
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        ensure_same_ring(&self.ring, &other.ring)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        ensure_same_ring(&self.ring, &other.ring)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        ensure_same_ring(&self.ring, &other.ring)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse of a single term; only units of the ring have one.
    pub fn inverse_term(&self) -> Result<Poly> {
        if self.terms.len() != 1 {
            return Err(Error::Parse(format!("{self} is not invertible")));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if !m.is_one() && !self.ring.laurent {
            return Err(Error::NegativeExponent(format!("inverse of {self}")));
        }
        let inv = Monomial(m.0.iter().map(|e| -e).collect());
        Poly::term(&self.ring, inv.0, c.recip())
    }

    /// Partial derivative with respect to variable `i` (integer power rule).
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * int(e as i64));
        }
        out
    }

    /// Reinterprets `self` in `target`, sending variable `i` to `target` variable `map[i]`.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> Result<Poly> {
        if map.len() != self.ring.nvars() || map.iter().any(|&j| j >= target.nvars()) {
            return Err(Error::RingMismatch("invalid variable map".into()));
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &j) in map.iter().enumerate() {
                e[j] += m.0[i];
            }
            if !target.laurent && e.iter().any(|&x| x < 0) {
                return Err(Error::NegativeExponent(format!("{self}")));
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Canonical text form, terms in descending graded-lex order joined by `" + "`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn parse(ring: &RingRef, s: &str) -> Result<Poly> {
        super::parse::parse_poly(ring, s)
    }
}

fn format_term(vars: &[String], m: &Monomial, c: &Rational) -> String {
    if m.is_one() {
        return format_rational(c);
    }
    let factors: Vec<String> =
        m.0.iter()
            .zip(vars)
            .filter(|(e, _)| **e != 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
    let body = factors.join("*");
    if c.is_one() {
        body
    } else if is_minus_one(c) {
        format!("-{body}")
    } else {
        format!("{}*{body}", format_rational(c))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(m, c)| format_term(&self.ring.vars, m, c)).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn assert_ring(a: &Poly, b: &Poly) {
    assert!(same_ring(&a.ring, &b.ring), "ring mismatch: {:?} vs {:?}", a.ring.vars, b.ring.vars);
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_ring(self, rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert_ring(self, rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        assert_ring(self, rhs);
        let mut out = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &'a Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
