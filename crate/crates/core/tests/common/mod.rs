//! Test-only oracles. Everything here avoids the library's arithmetic so
//! that agreement with it means something.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toric_gec::polytope::{is_unimodular_support, LatticePolytope};
use toric_gec::{ExponentVector, LaurentPolynomial, Rational};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::from(v)
}

/// Sparse polynomial as a plain exponent-to-coefficient map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Sparse(pub BTreeMap<Vec<i64>, Q>);

impl Sparse {
    pub fn from_lib(p: &LaurentPolynomial) -> Self {
        Sparse(p.terms().map(|(e, c)| (e.as_slice().to_vec(), c.clone())).collect())
    }

    pub fn to_lib(&self, rank: usize) -> LaurentPolynomial {
        let terms: Vec<(ExponentVector, Rational)> =
            self.0.iter().map(|(e, c)| (ExponentVector::new(e.clone()), c.clone())).collect();
        LaurentPolynomial::from_terms(rank, terms).unwrap()
    }

    fn insert(&mut self, e: Vec<i64>, c: Q) {
        let entry = self.0.entry(e.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.0 {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.0 {
            out.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Sparse::default();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                let e: Vec<i64> = a.iter().zip(b).map(|(s, t)| s + t).collect();
                out.insert(e, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32, rank: usize) -> Self {
        let mut out = Sparse(BTreeMap::from([(vec![0; rank], Q::one())]));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `x_k ∂/∂x_k`.
    pub fn log_derivative(&self, k: usize) -> Self {
        let mut out = Sparse::default();
        for (e, c) in &self.0 {
            out.insert(e.clone(), c * q(e[k]));
        }
        out
    }
}

/// Leibniz expansion of a small determinant.
fn det(m: &[Vec<Sparse>], rank: usize) -> Sparse {
    let n = m.len();
    if n == 0 {
        return Sparse(BTreeMap::from([(vec![0; rank], Q::one())]));
    }
    let mut total = Sparse::default();
    for j in 0..n {
        let minor: Vec<Vec<Sparse>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][j].mul(&det(&minor, rank));
        total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// `det(p·D_kD_l p − D_k p·D_l p)`, which equals `μ(p)·p^{n−1}` when the
/// support of `p` spans a full-rank lattice in rank `n`.
pub fn hessian_numerator(p: &LaurentPolynomial) -> Sparse {
    let n = p.rank();
    let s = Sparse::from_lib(p);
    let d: Vec<Sparse> = (0..n).map(|k| s.log_derivative(k)).collect();
    let h: Vec<Vec<Sparse>> = (0..n)
        .map(|k| (0..n).map(|l| s.mul(&d[k].log_derivative(l)).sub(&d[k].mul(&d[l]))).collect())
        .collect();
    det(&h, n)
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
pub fn univariate(p: &LaurentPolynomial) -> (i64, Vec<Q>) {
    let lo = p.terms().map(|(e, _)| e[0]).min().unwrap();
    let hi = p.terms().map(|(e, _)| e[0]).max().unwrap();
    let mut c = vec![Q::zero(); (hi - lo + 1) as usize];
    for (e, x) in p.terms() {
        c[(e[0] - lo) as usize] = x.clone();
    }
    (lo, c)
}

pub fn uni_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Whether `g` divides `f` in `ℚ[x]` (long division).
pub fn uni_divides(g: &[Q], f: &[Q]) -> bool {
    let mut r = f.to_vec();
    let lead = g.last().unwrap().clone();
    while r.len() >= g.len() {
        let top = r.last().unwrap().clone();
        if !top.is_zero() {
            let factor = &top / &lead;
            let shift = r.len() - g.len();
            for (i, x) in g.iter().enumerate() {
                r[shift + i] -= &factor * x;
            }
        }
        r.pop();
    }
    r.iter().all(|x| x.is_zero())
}

pub fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> Q {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return q(v);
        }
    }
}

pub fn positive(rng: &mut ChaCha8Rng, bound: i64) -> Q {
    let num = rng.gen_range(1..=bound);
    let den = rng.gen_range(1..=3);
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Random polynomial on a subset of the lattice points of `poly` that keeps
/// every vertex and the first lattice point along each edge, so the
/// support is unimodular whenever the polygon is smooth.
pub fn random_on_polytope(rng: &mut ChaCha8Rng, poly: &LatticePolytope, keep: f64, signed: bool) -> LaurentPolynomial {
    let points = poly.lattice_points();
    let mut required: Vec<ExponentVector> = poly.vertices().to_vec();
    for edge in poly.faces(1).unwrap() {
        let (a, b) = (&edge.vertices[0], &edge.vertices[1]);
        let diff = b - a;
        let step = diff.primitive();
        required.push(a + &step);
        required.push(b - &step);
    }
    loop {
        let mut terms: Vec<(ExponentVector, Rational)> = Vec::new();
        for pt in &points {
            if required.contains(pt) || rng.gen_bool(keep) {
                let c = if signed { nonzero(rng, 9) } else { positive(rng, 9) };
                terms.push((pt.clone(), c));
            }
        }
        let p = LaurentPolynomial::from_terms(poly.rank(), terms).unwrap();
        if is_unimodular_support(&p.support()).unwrap() {
            return p;
        }
    }
}

/// Up to `max_terms` random terms with exponents in `[-2, 2]^rank`.
pub fn random_sparse(rng: &mut ChaCha8Rng, rank: usize, max_terms: usize) -> LaurentPolynomial {
    let count = rng.gen_range(2..=max_terms);
    let mut terms = Vec::new();
    for _ in 0..count {
        let e: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
        terms.push((ExponentVector::new(e), nonzero(rng, 5)));
    }
    LaurentPolynomial::from_terms(rank, terms).unwrap()
}

pub fn hexagon() -> LatticePolytope {
    LatticePolytope::hull(&[ev(&[0, -1]), ev(&[1, -1]), ev(&[1, 0]), ev(&[0, 1]), ev(&[-1, 1]), ev(&[-1, 0])]).unwrap()
}

pub fn trapezoid() -> LatticePolytope {
    LatticePolytope::hull(&[ev(&[-1, -1]), ev(&[2, -1]), ev(&[0, 1]), ev(&[-1, 1])]).unwrap()
}

/// Smooth 3-polytopes small enough for quick μ computations.
pub fn smooth_3d() -> Vec<LatticePolytope> {
    let cube: Vec<ExponentVector> =
        (0..8).map(|i| ev(&[i & 1, (i >> 1) & 1, (i >> 2) & 1])).collect();
    let simplex = vec![ev(&[0, 0, 0]), ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[0, 0, 2])];
    let prism = vec![ev(&[0, 0, 0]), ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[0, 0, 1]), ev(&[1, 0, 1]), ev(&[0, 1, 1])];
    [cube, simplex, prism].iter().map(|v| LatticePolytope::hull(v).unwrap()).collect()
}

pub fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).unwrap()
}
