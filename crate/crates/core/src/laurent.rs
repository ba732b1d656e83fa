//! Sparse Laurent polynomials over ℤⁿ with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::{ExponentVector, IntegerMatrix};
use crate::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer power of a rational, negative exponents allowed for nonzero bases.
pub fn rational_pow(base: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        k >>= 1;
        if k > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Formats a rational as `num/den` (denominator always present).
pub fn rational_to_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parses `"n"`, `"n/d"` or a decimal-free integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational number {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The unit `scalar·χ^exponent` factored out of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialShift {
    pub scalar: Rational,
    pub exponent: ExponentVector,
}

impl MonomialShift {
    /// Multiplies `q` by this unit.
    pub fn apply(&self, q: &LaurentPolynomial) -> LaurentPolynomial {
        q.mul_monomial(&self.scalar, &self.exponent)
    }
}

/// A Laurent polynomial `Σ c_m χ^m` on ℤ^rank. No zero coefficients are
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Rational::one())
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        Self::monomial(c, ExponentVector::zeros(rank))
    }

    pub fn monomial(c: Rational, e: ExponentVector) -> Self {
        let mut p = Self::zero(e.len());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable `x_i` of ℤ^rank.
    pub fn variable(rank: usize, i: usize) -> Self {
        Self::monomial(Rational::one(), ExponentVector::unit(rank, i))
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            if e.len() != rank {
                return Err(Error::RankMismatch { expected: rank, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Convenience constructor from `(exponents, integer coefficient)` pairs.
    pub fn from_int_terms(rank: usize, terms: &[(&[i64], i64)]) -> Result<Self> {
        Self::from_terms(rank, terms.iter().map(|(e, c)| (ExponentVector::from(*e), rat(*c))))
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exponents in lexicographic order.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn leading_lex(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let c = c1 * c2;
                *acc.entry(e).or_insert_with(Rational::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { rank: self.rank, terms: acc })
    }

    /// `self^k` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self { rank: self.rank, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiplies by `c·χ^m`.
    pub fn mul_monomial(&self, c: &Rational, m: &ExponentVector) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self { rank: self.rank, terms: self.terms.iter().map(|(e, x)| (e + m, x * c)).collect() }
    }

    /// Multiplies by `χ^m`.
    pub fn shift(&self, m: &ExponentVector) -> Self {
        Self { rank: self.rank, terms: self.terms.iter().map(|(e, x)| (e + m, x.clone())).collect() }
    }

    /// Terms whose exponent satisfies `keep` (`p|_S`).
    pub fn restrict<F: Fn(&ExponentVector) -> bool>(&self, keep: F) -> Self {
        Self {
            rank: self.rank,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn restrict_to(&self, set: &BTreeSet<ExponentVector>) -> Self {
        self.restrict(|e| set.contains(e))
    }

    /// Componentwise minimum of the exponents.
    pub fn min_exponent(&self) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.component_min(e)))
    }

    /// Writes `p = χ^m·q` with `q` having nonnegative exponents and a zero
    /// in each coordinate.
    pub fn monomial_normalize(&self) -> Result<(Self, MonomialShift)> {
        let m = self.min_exponent().ok_or(Error::ZeroPolynomial)?;
        let q = self.shift(&-&m);
        Ok((q, MonomialShift { scalar: Rational::one(), exponent: m }))
    }

    /// Maximal total degree of the terms (None for zero).
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.as_slice().iter().sum()).max()
    }

    /// `x_l ∂/∂x_l` applied termwise.
    pub fn log_derivative(&self, l: usize) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[l] != 0)
                .map(|(e, c)| (e.clone(), c * rat(e[l])))
                .collect(),
        }
    }

    /// Value at a point; `None` if a zero coordinate meets a negative exponent.
    pub fn evaluate(&self, point: &[Rational]) -> Option<Rational> {
        if point.len() != self.rank {
            return None;
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k < 0 && x.is_zero() {
                    return None;
                }
                t *= rational_pow(x, k);
            }
            total += t;
        }
        Some(total)
    }

    /// Replaces each variable `x_i` by `scalars[i]·u^{column i of map}`.
    /// `map` has shape (new rank) × (old rank).
    pub fn substitute_monomial(&self, map: &IntegerMatrix, scalars: &[Rational]) -> Result<Self> {
        if map.cols() != self.rank || scalars.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "substitution for rank {} needs {} columns and scalars, got {} and {}",
                self.rank,
                self.rank,
                map.cols(),
                scalars.len()
            )));
        }
        if scalars.iter().any(Zero::is_zero) {
            return Err(Error::ZeroScalar);
        }
        let cols: Vec<ExponentVector> =
            map.transpose().to_rows().iter().map(|r| to_exponents(r)).collect::<Result<_>>()?;
        let mut out = Self::zero(map.rows());
        for (e, c) in &self.terms {
            let mut ne = ExponentVector::zeros(map.rows());
            let mut nc = c.clone();
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                for j in 0..ne.len() {
                    ne[j] += k * cols[i][j];
                }
                nc *= rational_pow(&scalars[i], k);
            }
            out.add_term(ne, nc);
        }
        Ok(out)
    }

    /// Reinterprets the polynomial in a larger lattice by padding exponents.
    pub fn embed_rank(&self, rank: usize, offset: usize) -> Self {
        Self {
            rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = vec![0; rank];
                    v[offset..offset + e.len()].copy_from_slice(e.as_slice());
                    (ExponentVector::new(v), c.clone())
                })
                .collect(),
        }
    }
}

fn to_exponents(row: &[BigInt]) -> Result<ExponentVector> {
    row.iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow("exponent")))
        .collect::<Result<Vec<_>>>()
        .map(ExponentVector::new)
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    /// Panics on rank mismatch; use `try_add` for a checked version.
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_add(rhs).expect("rank mismatch in polynomial addition")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_sub(rhs).expect("rank mismatch in polynomial subtraction")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_mul(rhs).expect("rank mismatch in polynomial multiplication")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { rank: self.rank, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

/// Graded lexicographic key: total degree first, then lexicographic.
#[derive(Clone, PartialEq, Eq)]
struct Grlex(i64, ExponentVector);

impl Ord for Grlex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0).then_with(|| self.1.cmp(&other.1))
    }
}

impl PartialOrd for Grlex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn grlex(e: &ExponentVector) -> Grlex {
    Grlex(e.as_slice().iter().sum(), e.clone())
}

/// Division of `f` by the single divisor `g` (both with nonnegative
/// exponents) under graded lexicographic order. Returns the quotient when the
/// remainder is zero; stops at the first term that would enter the
/// remainder, since remainder terms never cancel later.
fn divide_polynomial(f: &LaurentPolynomial, g: &LaurentPolynomial) -> Option<LaurentPolynomial> {
    let (lt_key, lt_coeff) = g.terms.iter().map(|(e, c)| (grlex(e), c)).max_by(|a, b| a.0.cmp(&b.0))?;
    let lt = lt_key.1.clone();
    let mut work: BTreeMap<Grlex, Rational> = f.terms.iter().map(|(e, c)| (grlex(e), c.clone())).collect();
    let mut quotient = LaurentPolynomial::zero(f.rank);
    while let Some((key, c)) = work.pop_last() {
        let e = key.1;
        if e.as_slice().iter().zip(lt.as_slice()).any(|(a, b)| a < b) {
            return None;
        }
        let qe = &e - &lt;
        let qc = &c / lt_coeff;
        for (ge, gc) in &g.terms {
            if *ge == lt {
                continue;
            }
            let delta = &qc * gc;
            match work.entry(grlex(&(ge + &qe))) {
                Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        quotient.add_term(qe, qc);
    }
    Some(quotient)
}

/// `Some(h)` with `f = g·h` in the Laurent ring, `None` if `g` does not
/// divide `f`.
pub fn div_exact(f: &LaurentPolynomial, g: &LaurentPolynomial) -> Result<Option<LaurentPolynomial>> {
    f.check_rank(g)?;
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_zero() {
        return Ok(Some(LaurentPolynomial::zero(f.rank)));
    }
    let (fq, fs) = f.monomial_normalize()?;
    let (gq, gs) = g.monomial_normalize()?;
    Ok(divide_polynomial(&fq, &gq).map(|h| h.shift(&(&fs.exponent - &gs.exponent))))
}

/// Whether `g` divides `f` in the Laurent polynomial ring.
pub fn divides(g: &LaurentPolynomial, f: &LaurentPolynomial) -> Result<bool> {
    Ok(div_exact(f, g)?.is_some())
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<i64>,
    c: CoeffJson,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffJson {
    Text(String),
    Int(i64),
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    rank: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { e: e.as_slice().to_vec(), c: CoeffJson::Text(rational_to_string(c)) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let c = match t.c {
                    CoeffJson::Text(s) => parse_rational(&s).map_err(D::Error::custom)?,
                    CoeffJson::Int(n) => rat(n),
                };
                Ok((ExponentVector::new(t.e), c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        LaurentPolynomial::from_terms(raw.rank, terms).map_err(D::Error::custom)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_polynomial(self))
    }
}

/// Serde adapter writing rationals as `"num/den"` strings.
pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(c: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational_to_string(c).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        match CoeffJson::deserialize(d)? {
            CoeffJson::Text(s) => parse_rational(&s).map_err(D::Error::custom),
            CoeffJson::Int(n) => Ok(rat(n)),
        }
    }

    /// The same for `Option<Rational>`.
    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(c: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
            c.as_ref().map(rational_to_string).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
            match Option::<CoeffJson>::deserialize(d)? {
                Some(CoeffJson::Text(s)) => parse_rational(&s).map(Some).map_err(D::Error::custom),
                Some(CoeffJson::Int(n)) => Ok(Some(rat(n))),
                None => Ok(None),
            }
        }
    }
}
