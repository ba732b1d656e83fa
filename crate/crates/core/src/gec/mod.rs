//! The generalized Einstein condition `μ(p) | p^κ`: exact decision,
//! Einstein-equation checks and the obstruction tests on edges, polygons and
//! hexagons, together with the face-descent driver.

mod descent;
mod hexagon;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lattice::ExponentVector;
use crate::laurent::{divides, rat, rational_pow, rational_serde, LaurentPolynomial, Rational};
use crate::monge_ampere::mu;
use crate::polytope::{lattice_length, newton_polytope, unimodular_support, Face, FaceSummary, LatticePolytope};
use crate::{Error, Result};

pub use descent::{decide, face_descent, face_descent_with_priority, TraceEntry};
pub use hexagon::{
    hexagon_obstruction, hexagon_polytope_certificate, standard_hexagon, HexagonCertificate, HexagonStage,
    OverlapViolation, Rho,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    GecHolds,
    GecFails,
    Inconclusive,
}

/// Evidence attached to a verdict. `face` is the face of the input polytope
/// on which the test ran (absent when the test ran on the input itself).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "test", rename_all = "kebab-case")]
pub enum Witness {
    Divisibility {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<FaceSummary>,
        kappa: u32,
        polynomial: LaurentPolynomial,
        mu: LaurentPolynomial,
        divides: bool,
    },
    OneDim {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<FaceSummary>,
        polynomial: LaurentPolynomial,
        classification: OneDimClassification,
    },
    EdgeShape {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<FaceSummary>,
        polynomial: LaurentPolynomial,
        shape: EdgeShape,
    },
    EdgeRatio {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<FaceSummary>,
        ratios: EdgeRatios,
    },
    Hexagon {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<FaceSummary>,
        certificate: Box<HexagonCertificate>,
    },
    Einstein {
        result: EinsteinResult,
    },
}

impl Witness {
    pub fn test_name(&self) -> &'static str {
        match self {
            Witness::Divisibility { .. } => "divisibility",
            Witness::OneDim { .. } => "one-dim",
            Witness::EdgeShape { .. } => "edge-shape",
            Witness::EdgeRatio { .. } => "edge-ratio",
            Witness::Hexagon { .. } => "hexagon",
            Witness::Einstein { .. } => "einstein",
        }
    }

    pub fn face(&self) -> Option<&FaceSummary> {
        match self {
            Witness::Divisibility { face, .. }
            | Witness::OneDim { face, .. }
            | Witness::EdgeShape { face, .. }
            | Witness::EdgeRatio { face, .. }
            | Witness::Hexagon { face, .. } => face.as_ref(),
            Witness::Einstein { .. } => None,
        }
    }

    fn with_face(mut self, summary: FaceSummary) -> Self {
        match &mut self {
            Witness::Divisibility { face, .. }
            | Witness::OneDim { face, .. }
            | Witness::EdgeShape { face, .. }
            | Witness::EdgeRatio { face, .. }
            | Witness::Hexagon { face, .. } => *face = Some(summary),
            Witness::Einstein { .. } => {}
        }
        self
    }
}

/// Verdict with its certificate. A `gec-fails` verdict always carries a
/// witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default)]
    pub trace: Vec<TraceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa_star: Option<u32>,
}

impl ObstructionReport {
    pub fn fails(&self) -> bool {
        self.verdict == Verdict::GecFails
    }
}

fn require_unimodular(p: &LaurentPolynomial) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !unimodular_support(&p.support())?.ok {
        return Err(Error::NonUnimodularSupport);
    }
    Ok(())
}

/// Divisibility bound: the total degree of `μ` after clearing the monomial
/// factor, at least 1.
pub fn kappa_star(mu: &LaurentPolynomial) -> Result<u32> {
    let (q, _) = mu.monomial_normalize()?;
    let d = q.total_degree().unwrap_or(0).max(1);
    u32::try_from(d).map_err(|_| Error::Overflow("divisibility bound"))
}

/// Decides GEC by the single test `μ(p) | p^κ*`.
pub fn gec_check(p: &LaurentPolynomial) -> Result<ObstructionReport> {
    require_unimodular(p)?;
    let mu = mu(p)?.mu;
    let kappa = kappa_star(&mu)?;
    let holds = divides(&mu, &p.pow(kappa))?;
    Ok(ObstructionReport {
        verdict: if holds { Verdict::GecHolds } else { Verdict::GecFails },
        witness: Some(Witness::Divisibility { face: None, kappa, polynomial: p.clone(), mu, divides: holds }),
        trace: Vec::new(),
        kappa_star: Some(kappa),
    })
}

/// Smallest `κ ≤ max` with `μ(p) | p^κ`, by linear search.
pub fn minimal_kappa(p: &LaurentPolynomial, max: u32) -> Result<Option<u32>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mu = mu(p)?.mu;
    let mut power = p.clone();
    for k in 1..=max {
        if divides(&mu, &power)? {
            return Ok(Some(k));
        }
        power = &power * p;
    }
    Ok(None)
}

/// Outcome of comparing `μ(p)` with a power of `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EinsteinResult {
    pub holds: bool,
    /// Rank of the difference lattice of the support.
    pub n: usize,
    #[serde(default, with = "rational_serde::option", skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    /// `μ(p)·p^mu_side = c·χ^m·p^p_side` was tested.
    pub mu_side: u32,
    pub p_side: u32,
    #[serde(default, with = "rational_serde::option", skip_serializing_if = "Option::is_none")]
    pub c: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<ExponentVector>,
}

/// Without `lambda`: tests `μ(p) = p^n`. With an integer `lambda`: tests
/// `μ(p) = c·χ^m·p^{n+1−λ}` by cross-multiplying so both exponents are
/// nonnegative, reporting `c` and `m` on success.
pub fn einstein_check(p: &LaurentPolynomial, lambda: Option<&Rational>) -> Result<EinsteinResult> {
    require_unimodular(p)?;
    let result = mu(p)?;
    let n = result.rank_r;
    let mu = result.mu;
    let Some(lambda) = lambda else {
        let power = u32::try_from(n).map_err(|_| Error::Overflow("rank"))?;
        let holds = mu == p.pow(power);
        return Ok(EinsteinResult {
            holds,
            n,
            lambda: None,
            mu_side: 0,
            p_side: power,
            c: holds.then(Rational::one),
            m: holds.then(|| ExponentVector::zeros(p.rank())),
        });
    };
    if !lambda.is_integer() {
        return Err(Error::InvalidArgument(format!("λ = {lambda} is not an integer, so p^(n+1−λ) is not a polynomial")));
    }
    let e: BigInt = BigInt::from(n + 1) - lambda.to_integer();
    let e = e.to_i64().ok_or(Error::Overflow("einstein exponent"))?;
    let mu_side = u32::try_from(e.min(0).unsigned_abs()).map_err(|_| Error::Overflow("einstein exponent"))?;
    let p_side = u32::try_from(e.max(0)).map_err(|_| Error::Overflow("einstein exponent"))?;
    let lhs = &mu * &p.pow(mu_side);
    let rhs = p.pow(p_side);
    let (le, lc) = lhs.leading_lex().ok_or(Error::ZeroPolynomial)?;
    let (re, rc) = rhs.leading_lex().ok_or(Error::ZeroPolynomial)?;
    let m = le - re;
    let c = lc / rc;
    let holds = lhs == rhs.mul_monomial(&c, &m);
    Ok(EinsteinResult {
        holds,
        n,
        lambda: Some(lambda.clone()),
        mu_side,
        p_side,
        c: holds.then_some(c),
        m: holds.then_some(m),
    })
}

/// The shape `c·x^m·(x + ξ)^ν`; `xi` is absent for monomials (`ν = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneDimForm {
    #[serde(with = "rational_serde")]
    pub c: Rational,
    pub m: i64,
    #[serde(default, with = "rational_serde::option", skip_serializing_if = "Option::is_none")]
    pub xi: Option<Rational>,
    pub nu: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneDimClassification {
    pub is_gec: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<OneDimForm>,
}

fn binomial(n: i64, k: i64) -> Rational {
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// Coefficients `c_0..c_ℓ` of a binomial power `c·(t + ξ)^ℓ` given `c`, `ξ`.
fn binomial_power(c: &Rational, xi: &Rational, l: i64) -> Vec<Rational> {
    (0..=l).map(|i| c * binomial(l, i) * rational_pow(xi, l - i)).collect()
}

/// ξ read off the top two coefficients of `c·(t + ξ)^ℓ`.
fn binomial_root(coeffs: &[Rational]) -> Option<Rational> {
    let l = coeffs.len() as i64 - 1;
    let top = coeffs.last()?;
    if l < 1 || top.is_zero() {
        return None;
    }
    Some(&coeffs[coeffs.len() - 2] / (top * rat(l)))
}

/// Decides whether a univariate `p` is `c·x^m·(x + ξ)^ν`, which for
/// unimodular support is equivalent to GEC. Requires nonzero coefficients
/// next to both ends of the support.
pub fn classify_1d(p: &LaurentPolynomial) -> Result<OneDimClassification> {
    if p.rank() != 1 {
        return Err(Error::DimensionMismatch(format!("expected a univariate polynomial, got rank {}", p.rank())));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support = p.support();
    let m = support.first().expect("nonzero")[0];
    let top = support.last().expect("nonzero")[0];
    let nu = top - m;
    let coeffs: Vec<Rational> = (m..=top).map(|i| p.coefficient(&ExponentVector::new(vec![i]))).collect();
    let c = coeffs.last().expect("nonempty").clone();
    let nu_u32 = u32::try_from(nu).map_err(|_| Error::Overflow("degree"))?;
    if nu == 0 {
        return Ok(OneDimClassification {
            is_gec: true,
            normal_form: Some(OneDimForm { c, m, xi: None, nu: 0 }),
        });
    }
    if coeffs[1].is_zero() || coeffs[coeffs.len() - 2].is_zero() {
        return Err(Error::NonUnimodularSupport);
    }
    let xi = binomial_root(&coeffs).expect("top coefficient is nonzero");
    let is_gec = binomial_power(&c, &xi, nu) == coeffs;
    Ok(OneDimClassification { is_gec, normal_form: is_gec.then_some(OneDimForm { c, m, xi: Some(xi), nu: nu_u32 }) })
}

/// Result of the edge-shape test on one edge `E` of a polygon and its
/// adjacent segment `E'`. Both are oriented by the primitive step from the
/// smaller endpoint of `E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeShape {
    pub ok: bool,
    #[serde(default, with = "rational_serde::option", skip_serializing_if = "Option::is_none")]
    pub xi: Option<Rational>,
    pub edge: Vec<ExponentVector>,
    pub edge_length: i64,
    pub adjacent: Vec<ExponentVector>,
    pub adjacent_length: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Checks `p|_E = c·χ^v·(χ^a + ξ)^{ℓ(E)}` and
/// `p|_{E'} = c'·χ^{v+b}·(χ^a + ξ)^{ℓ(E')}` with a common ξ, for a bivariate
/// `p` with full-dimensional Newton polygon. `edge` may be any face whose
/// vertices are the two endpoints of an edge of `NP(p)`.
pub fn edge_shape_test(p: &LaurentPolynomial, edge: &Face) -> Result<EdgeShape> {
    if p.rank() != 2 {
        return Err(Error::DimensionMismatch(format!("expected a bivariate polynomial, got rank {}", p.rank())));
    }
    let np = newton_polytope(p)?;
    if np.dim() != 2 {
        return Err(Error::NotFullDimensional { dim: np.dim(), rank: 2 });
    }
    if edge.vertices.len() != 2 {
        return Err(Error::NotAFace("an edge has two vertices".into()));
    }
    let (v, w) = (&edge.vertices[0], &edge.vertices[1]);
    let facet = np
        .facets()
        .iter()
        .position(|f| f.height(v) == 0 && f.height(w) == 0)
        .ok_or_else(|| Error::NotAFace(format!("[{v}, {w}] is not an edge of NP(p)")))?;
    let step = (w - v).primitive();
    let l = (w - v).content();
    let along = |base: &ExponentVector, len: i64| -> Vec<Rational> {
        (0..=len).map(|i| p.coefficient(&(base + &step.scale(i)))).collect()
    };

    let e_coeffs = along(v, l);
    let mut adjacent = np.adjacent_polytope(facet)?;
    adjacent.sort_by_key(|x| step.dot(x));
    let (adjacent_ends, l_adj) = match (adjacent.first(), adjacent.last()) {
        (Some(a), Some(b)) => (vec![a.clone(), b.clone()], lattice_length(&adjacent)?),
        _ => (Vec::new(), 0),
    };
    let mut shape = EdgeShape {
        ok: false,
        xi: None,
        edge: vec![v.clone(), w.clone()],
        edge_length: l,
        adjacent: adjacent_ends.clone(),
        adjacent_length: l_adj,
        reason: None,
    };
    if e_coeffs[0].is_zero() || e_coeffs[l as usize].is_zero() {
        return Err(Error::NotAFace("edge endpoints are not in the support".into()));
    }
    if l >= 2 && (e_coeffs[1].is_zero() || e_coeffs[l as usize - 1].is_zero()) {
        return Err(Error::NonUnimodularSupport);
    }
    let xi = binomial_root(&e_coeffs).expect("edge endpoint coefficient is nonzero");
    let c = e_coeffs[l as usize].clone();
    let expected = binomial_power(&c, &xi, l);
    if let Some(i) = (0..=l as usize).find(|&i| expected[i] != e_coeffs[i]) {
        shape.reason = Some(format!(
            "coefficient {} at {} on the edge, binomial power needs {}",
            e_coeffs[i],
            v + &step.scale(i as i64),
            expected[i]
        ));
        return Ok(shape);
    }
    shape.xi = Some(xi.clone());
    if let Some(low) = adjacent_ends.first() {
        let f_coeffs = along(low, l_adj);
        let c2 = f_coeffs[l_adj as usize].clone();
        if c2.is_zero() {
            shape.reason = Some(format!("coefficient at the end {} of the adjacent segment vanishes", adjacent_ends[1]));
            return Ok(shape);
        }
        let expected = binomial_power(&c2, &xi, l_adj);
        if let Some(i) = (0..=l_adj as usize).find(|&i| expected[i] != f_coeffs[i]) {
            shape.reason = Some(format!(
                "coefficient {} at {} on the adjacent segment, ξ = {} from the edge needs {}",
                f_coeffs[i],
                low + &step.scale(i as i64),
                xi,
                expected[i]
            ));
            return Ok(shape);
        }
    }
    shape.ok = true;
    Ok(shape)
}

/// `ℓ(E')/ℓ(E)` for one edge of a polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRatio {
    pub edge: Vec<ExponentVector>,
    pub length: i64,
    pub adjacent_length: i64,
    #[serde(with = "rational_serde")]
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRatios {
    pub ok: bool,
    pub edges: Vec<EdgeRatio>,
    /// A vertex whose two edges have different ratios.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<ExponentVector>,
}

impl EdgeRatios {
    /// The edges through `v`.
    pub fn at_vertex(&self, v: &ExponentVector) -> Vec<&EdgeRatio> {
        self.edges.iter().filter(|e| e.edge.contains(v)).collect()
    }
}

/// Ratio of lattice lengths of each edge and its adjacent segment; passes
/// iff all ratios agree. Works for polygons in any ambient rank.
pub fn edge_ratio_test(polygon: &LatticePolytope) -> Result<EdgeRatios> {
    if polygon.dim() != 2 {
        return Err(Error::InvalidArgument(format!("expected a polygon, got dimension {}", polygon.dim())));
    }
    let mut edges = Vec::new();
    for e in polygon.faces(1)? {
        let &[facet] = e.active_facets.as_slice() else {
            return Err(Error::InvalidArgument("edge lies on several facets".into()));
        };
        let adjacent = polygon.adjacent_polytope(facet)?;
        let adjacent_length = if adjacent.is_empty() { 0 } else { lattice_length(&adjacent)? };
        let length = lattice_length(&e.vertices)?;
        edges.push(EdgeRatio {
            edge: e.vertices.clone(),
            length,
            adjacent_length,
            ratio: Rational::new(BigInt::from(adjacent_length), BigInt::from(length)),
        });
    }
    let ok = edges.windows(2).all(|w| w[0].ratio == w[1].ratio);
    let vertex = if ok {
        None
    } else {
        polygon.vertices().iter().find(|v| {
            let at: Vec<&EdgeRatio> = edges.iter().filter(|e| e.edge.contains(v)).collect();
            at.windows(2).any(|w| w[0].ratio != w[1].ratio)
        })
    }
    .cloned();
    Ok(EdgeRatios { ok, edges, vertex })
}
