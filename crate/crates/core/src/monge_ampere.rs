//! The algebraic Monge-Ampère operator μ and its structural companions:
//! the univariate closed form, Newton polytope predictions and initial-part
//! factorizations.
//!
//! For `p = Σ c_j χ^{m_j}` whose support spans an affine lattice of rank `r`,
//!
//! ```text
//! μ(p) = Σ_J (r!·vol(conv{m_j : j ∈ J}))² ∏_{j∈J} c_j χ^{m_j}
//! ```
//!
//! over the `(r+1)`-subsets `J`, with volumes measured in the saturated
//! difference lattice of the support.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::lattice::{bareiss_determinant, bareiss_determinant_i128, ExponentVector, LatticeChart};
use crate::laurent::{rat, LaurentPolynomial, Rational};
use crate::polytope::{min_weight_subset, newton_polytope, unimodular_support, Facet, LatticePolytope, UnimodularSupport};
use crate::{Error, Result};

/// μ(p) together with the rank and chart of the difference lattice used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuResult {
    pub mu: LaurentPolynomial,
    pub rank_r: usize,
    pub chart: LatticeChart,
}

/// Fraction-free echelon basis used to reject affinely dependent subsets
/// as soon as they appear.
#[derive(Clone, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    /// Adds `v` if it is independent of the current rows.
    fn push(&mut self, v: &[i64]) -> Result<bool> {
        let mut r: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, b) in &self.rows {
            if r[*p] == 0 {
                continue;
            }
            let (f, g) = (b[*p], r[*p]);
            for j in 0..r.len() {
                r[j] = r[j]
                    .checked_mul(f)
                    .and_then(|x| x.checked_sub(b[j].checked_mul(g)?))
                    .ok_or(Error::Overflow("independence test"))?;
            }
            let c = r.iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
            if c > 1 {
                r.iter_mut().for_each(|x| *x /= c);
            }
        }
        match r.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push((p, r));
                Ok(true)
            }
            None => Ok(false),
        }
    }
}

struct Enumeration<'a> {
    coords: &'a [Vec<i64>],
    exps: &'a [ExponentVector],
    coeffs: &'a [Rational],
    r: usize,
}

impl Enumeration<'_> {
    fn run(&self, first: usize) -> Result<BTreeMap<ExponentVector, Rational>> {
        let mut out = BTreeMap::new();
        let mut chosen = vec![first];
        self.dfs(&mut chosen, &Echelon::default(), &self.coeffs[first], &self.exps[first], &mut out)?;
        Ok(out)
    }

    fn dfs(
        &self,
        chosen: &mut Vec<usize>,
        echelon: &Echelon,
        coeff: &Rational,
        exp: &ExponentVector,
        out: &mut BTreeMap<ExponentVector, Rational>,
    ) -> Result<()> {
        if chosen.len() == self.r + 1 {
            let w = self.volume(chosen);
            let term = coeff * Rational::from_integer(&w * &w);
            let entry = out.entry(exp.clone()).or_insert_with(Rational::zero);
            *entry += term;
            return Ok(());
        }
        let last = *chosen.last().expect("nonempty");
        let needed = self.r + 1 - chosen.len();
        let base = &self.coords[chosen[0]];
        for k in last + 1..self.coords.len() {
            if self.coords.len() - k < needed {
                break;
            }
            let diff: Vec<i64> = self.coords[k].iter().zip(base).map(|(a, b)| a - b).collect();
            let mut next = echelon.clone();
            if !next.push(&diff)? {
                continue;
            }
            chosen.push(k);
            let c = coeff * &self.coeffs[k];
            let e = exp + &self.exps[k];
            self.dfs(chosen, &next, &c, &e, out)?;
            chosen.pop();
        }
        Ok(())
    }

    /// `r!·vol` of the chosen simplex, i.e. `|det|` of its edge vectors.
    fn volume(&self, chosen: &[usize]) -> BigInt {
        let base = &self.coords[chosen[0]];
        let rows: Vec<Vec<i128>> = chosen[1..]
            .iter()
            .map(|&k| self.coords[k].iter().zip(base).map(|(a, b)| (a - b) as i128).collect())
            .collect();
        match bareiss_determinant_i128(rows.clone()) {
            Some(d) => BigInt::from(d.abs()),
            None => {
                let big = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
                num_traits::Signed::abs(&bareiss_determinant(big))
            }
        }
    }
}

/// μ(p) by summing over affinely independent `(r+1)`-subsets of the support.
pub fn mu(p: &LaurentPolynomial) -> Result<MuResult> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let exps = p.support();
    let coeffs: Vec<Rational> = exps.iter().map(|e| p.coefficient(e)).collect();
    let chart = LatticeChart::spanning(&exps)?;
    let r = chart.rank();
    let coords: Vec<Vec<i64>> = exps
        .iter()
        .map(|e| chart.coordinates(e).expect("support lies on its own chart").into_vec())
        .collect();
    let job = Enumeration { coords: &coords, exps: &exps, coeffs: &coeffs, r };
    let partials = (0..exps.len()).into_par_iter().map(|i| job.run(i)).collect::<Result<Vec<_>>>()?;
    let mut total: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for part in partials {
        for (e, c) in part {
            *total.entry(e).or_insert_with(Rational::zero) += c;
        }
    }
    let mu = LaurentPolynomial::from_terms(p.rank(), total)?;
    Ok(MuResult { mu, rank_r: r, chart })
}

/// μ of `c·x^m·∏(x + ξ_k)^{e_k}` by the univariate closed form
/// `c²x^{2m+1} Σ_k e_k ξ_k (x+ξ_k)^{2e_k−2} ∏_{l≠k} (x+ξ_l)^{2e_l}`.
pub fn mu_univariate_factored(c: &Rational, m: i64, factors: &[(Rational, u32)]) -> Result<LaurentPolynomial> {
    if c.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if factors.is_empty() {
        return Err(Error::InvalidFactorization("no linear factors (the polynomial is a monomial)".into()));
    }
    let mut seen = BTreeSet::new();
    for (xi, e) in factors {
        if xi.is_zero() {
            return Err(Error::InvalidFactorization("zero root".into()));
        }
        if *e == 0 {
            return Err(Error::InvalidFactorization("zero multiplicity".into()));
        }
        if !seen.insert(xi.clone()) {
            return Err(Error::InvalidFactorization(format!("repeated root {xi}")));
        }
    }
    let x = LaurentPolynomial::variable(1, 0);
    let linear = |xi: &Rational| &x + &LaurentPolynomial::constant(1, xi.clone());
    let mut sum = LaurentPolynomial::zero(1);
    for (k, (xi, e)) in factors.iter().enumerate() {
        let mut term = linear(xi).pow(2 * e - 2).scale(&(rat(*e as i64) * xi));
        for (l, (xl, el)) in factors.iter().enumerate() {
            if l != k {
                term = &term * &linear(xl).pow(2 * el);
            }
        }
        sum = &sum + &term;
    }
    Ok(sum.mul_monomial(&(c * c), &ExponentVector::new(vec![2 * m + 1])))
}

/// The polytope with the normals of `Δ` and offsets `(n+1)·a − 1`, which is
/// the Newton polytope of μ(p) whenever `NP(p) = Δ` has unimodular support.
/// The formula is translation-equivariant, so any integer offsets are fine.
pub fn predicted_np_of_mu(delta: &LatticePolytope) -> Result<LatticePolytope> {
    if !delta.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: delta.dim(), rank: delta.rank() });
    }
    let n = delta.rank() as i64;
    let facets: Vec<Facet> = delta.facets().iter().map(|f| Facet { u: f.u.clone(), a: (n + 1) * f.a - 1 }).collect();
    LatticePolytope::from_inequalities(delta.rank(), &facets)
}

/// Predicted vertices `(r+1)·v + Σ_{b∈B_v} b` of `NP(μ(p))`, sorted and
/// deduplicated (distinct vertices of `NP(p)` may share an image).
pub fn predicted_mu_vertices(support: &UnimodularSupport) -> Result<Vec<ExponentVector>> {
    let bases = match (&support.ok, &support.vertex_bases) {
        (true, Some(b)) => b,
        _ => return Err(Error::NonUnimodularSupport),
    };
    let mut out: Vec<ExponentVector> = bases
        .iter()
        .map(|(v, b)| {
            let r = b.len() as i64;
            b.iter().fold(v.scale(r + 1), |acc, s| &acc + s)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `init_σ(p)`: the terms of `p` of minimal weight for every ray of σ.
pub fn initial_part(p: &LaurentPolynomial, rays: &[ExponentVector]) -> LaurentPolynomial {
    let keep: BTreeSet<ExponentVector> = min_weight_subset(&p.support(), rays).into_iter().collect();
    p.restrict_to(&keep)
}

/// Both sides of the initial-part factorization of μ(p) along a cone of
/// the normal fan, computed independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialFactorization {
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
    pub equal: bool,
}

/// Checks `init_τ(μ(p)) = μ(init_τ(p))·p|_{F'_τ}` for a facet normal τ of
/// `NP(p)`.
pub fn check_initial_factorization(p: &LaurentPolynomial, ray: &ExponentVector) -> Result<InitialFactorization> {
    check_initial_factorization_cone(p, std::slice::from_ref(ray))
}

/// Checks `init_σ(μ(p)) = μ(init_σ(p))·∏_i p|_{F^{(i)}}` for the cone σ
/// spanned by the given facet normals, where `F^{(i)}` is the adjacent
/// polytope of the face `F_σ` inside the `i`-th face of one dimension more
/// containing it.
pub fn check_initial_factorization_cone(p: &LaurentPolynomial, rays: &[ExponentVector]) -> Result<InitialFactorization> {
    let np = newton_polytope(p)?;
    if !np.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: np.dim(), rank: np.rank() });
    }
    if !unimodular_support(&p.support())?.ok {
        return Err(Error::NonUnimodularSupport);
    }
    if rays.is_empty() {
        return Err(Error::InvalidArgument("empty cone".into()));
    }
    let active = rays
        .iter()
        .map(|u| np.facet_index(u).ok_or_else(|| Error::NotAFacet(format!("{u} is not a facet normal of NP(p)"))))
        .collect::<Result<Vec<_>>>()?;
    let face = np.face_of_facets(&active)?;
    let r = rays.len();
    if face.dim + r != np.dim() {
        return Err(Error::InvalidArgument("rays do not span a cone of the normal fan".into()));
    }

    let lhs = initial_part(&mu(p)?.mu, rays);

    let mut rhs = mu(&initial_part(p, rays))?.mu;
    let support = p.support();
    for g in np.faces(face.dim + 1)? {
        if !face.vertices.iter().all(|v| g.vertices.contains(v)) {
            continue;
        }
        let gp = &g.polytope;
        let inner = gp
            .facets()
            .iter()
            .find(|f| face.vertices.iter().all(|v| gp.chart().coordinates(v).is_some_and(|c| f.height(&c) == 0)))
            .ok_or_else(|| Error::NotAFacet("face is not a facet of the larger face".into()))?;
        let adjacent: BTreeSet<ExponentVector> = support
            .iter()
            .filter(|e| g.contains(e) && gp.chart().coordinates(e).is_some_and(|c| inner.height(&c) == 1))
            .cloned()
            .collect();
        rhs = &rhs * &p.restrict_to(&adjacent);
    }
    let equal = lhs == rhs;
    Ok(InitialFactorization { lhs, rhs, equal })
}

/// Default chart-free helper: `μ(p)` only.
pub fn mu_poly(p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    Ok(mu(p)?.mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::poly;
    use crate::laurent::ratio;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn golden_values() {
        let r = mu(&poly("1+x+y")).unwrap();
        assert_eq!(r.mu, poly("x*y"));
        assert_eq!(r.rank_r, 2);
        assert_eq!(mu_poly(&poly("2+3x+x^2")).unwrap(), poly("6x+8x^2+3x^3"));
        let m = poly("5x^3*y^-2");
        let r = mu(&m).unwrap();
        assert_eq!((r.mu, r.rank_r), (m, 0));
        assert!(mu(&LaurentPolynomial::zero(2)).is_err());
    }

    #[test]
    fn hexagon_q() {
        let q = poly("hexagon-q");
        let expected = poly("x^-2*y^-2*(x^2*y+x*y^2+x^2+6x*y+y^2+x+y)*(x+y)*(x+1)*(y+1)");
        let got = mu_poly(&q).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 19);
    }

    #[test]
    fn rank_deficient_support() {
        // support on the line y = 2x + 1 inside ℤ²: same as a univariate
        // polynomial in t = x y^2, shifted by y
        let p = poly("y + 3x*y^3 + 2x^2*y^5");
        let t = poly("1 + 3x + 2x^2");
        let mu_t = mu_poly(&t).unwrap();
        // μ(χ^m·q) = χ^{2m}·μ(q) with r = 1, and x ↦ x y² on exponents
        let expected = LaurentPolynomial::from_terms(
            2,
            mu_t.terms().map(|(e, c)| (ev(&[e[0], 2 * e[0] + 2]), c.clone())),
        )
        .unwrap();
        assert_eq!(mu_poly(&p).unwrap(), expected);
    }

    #[test]
    fn univariate_closed_form() {
        let one = rat(1);
        assert_eq!(mu_univariate_factored(&one, 0, &[(rat(1), 1)]).unwrap(), poly("x"));
        assert_eq!(
            mu_univariate_factored(&one, 0, &[(rat(1), 1), (rat(2), 1)]).unwrap(),
            mu_poly(&poly("2+3x+x^2")).unwrap()
        );
        let xi = ratio(3, 2);
        let nu = 4;
        let closed = mu_univariate_factored(&one, 0, &[(xi.clone(), nu)]).unwrap();
        let expected = poly("(x+3/2)^6*x").scale(&(rat(nu as i64) * &xi));
        assert_eq!(closed, expected);
        assert!(mu_univariate_factored(&one, 0, &[(rat(0), 1)]).is_err());
        assert!(mu_univariate_factored(&one, 0, &[(rat(1), 1), (rat(1), 2)]).is_err());
        assert!(mu_univariate_factored(&one, 0, &[]).is_err());
    }

    #[test]
    fn np_predictions() {
        let hex = newton_polytope(&poly("hexagon-q")).unwrap();
        assert_eq!(predicted_np_of_mu(&hex).unwrap(), hex.dilate(2).unwrap());
        let tri = newton_polytope(&poly("1+x+y")).unwrap();
        let pred = predicted_np_of_mu(&tri).unwrap();
        assert_eq!(pred.vertices(), &[ev(&[1, 1])]);
        let seg = newton_polytope(&poly("1+x+x^2")).unwrap();
        assert!(predicted_np_of_mu(&newton_polytope(&poly("1+x*y")).unwrap()).is_err());
        assert_eq!(predicted_np_of_mu(&seg).unwrap().vertices(), &[ev(&[1]), ev(&[3])]);
    }

    #[test]
    fn vertex_predictions() {
        let s = unimodular_support(&poly("1+x+y").support()).unwrap();
        assert_eq!(predicted_mu_vertices(&s).unwrap(), vec![ev(&[1, 1])]);
        let q = poly("hexagon-q");
        let s = unimodular_support(&q.support()).unwrap();
        let pred = predicted_mu_vertices(&s).unwrap();
        assert!(pred.contains(&ev(&[2, 0])));
        assert_eq!(pred, newton_polytope(&mu_poly(&q).unwrap()).unwrap().vertices());
        // 1-D: endpoints m, m' go to 2m+1 and 2m'-1
        let s = unimodular_support(&poly("x^-2+x^-1+x^3+x^4").support()).unwrap();
        assert_eq!(predicted_mu_vertices(&s).unwrap(), vec![ev(&[-3]), ev(&[7])]);
        let bad = unimodular_support(&poly("1+x^2").support()).unwrap();
        assert!(predicted_mu_vertices(&bad).is_err());
    }

    #[test]
    fn initial_parts() {
        let p = poly("1+x+y");
        assert_eq!(initial_part(&p, &[]), p);
        assert_eq!(initial_part(&p, &[ev(&[1, 1])]), LaurentPolynomial::one(2));
        let q = poly("hexagon-q");
        assert_eq!(initial_part(&q, &[ev(&[0, 1])]), poly("y^-1 + x*y^-1"));
    }

    #[test]
    fn initial_factorization() {
        let p = poly("1+x+y");
        let r = check_initial_factorization(&p, &ev(&[0, 1])).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, poly("x*y"));
        let q = poly("hexagon-q");
        for u in [[0, 1], [1, 0], [1, 1], [-1, 0], [0, -1], [-1, -1]] {
            assert!(check_initial_factorization(&q, &ev(&u)).unwrap().equal, "{u:?}");
        }
        assert!(check_initial_factorization_cone(&q, &[ev(&[0, 1]), ev(&[1, 1])]).unwrap().equal);
        assert!(check_initial_factorization(&q, &ev(&[2, 1])).is_err());
        assert!(check_initial_factorization_cone(&q, &[ev(&[0, 1]), ev(&[0, -1])]).is_err());
        assert!(check_initial_factorization(&poly("1+x^2+y"), &ev(&[0, 1])).is_err());
    }
}
