//! Toric Fano families given by their ray generators, with anticanonical
//! polytopes `{x : ⟨u, x⟩ ≥ −1}` and the 2-faces that obstruct GEC.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::gec::{face_descent_with_priority, EdgeRatio, ObstructionReport, Witness};
use crate::lattice::ExponentVector;
use crate::laurent::{rat, LaurentPolynomial, Rational};
use crate::polytope::{Face, FaceSummary, Facet, LatticePolytope};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// Del Pezzo `V_k`, dimension `2k`, `k ≥ 1`.
    V { k: i64 },
    /// `S_{m,k}`, dimension `2m+1`, `1 ≤ k ≤ m`.
    S { m: i64, k: i64 },
    /// `X_{m,k}`, dimension `2m+2`, `0 ≤ k ≤ m`, `m ≥ 1`.
    X { m: i64, k: i64 },
    /// `W_m`, dimension `2m`, `m ≥ 1`.
    W { m: i64 },
    /// The 7-dimensional non-symmetric example.
    NP1,
    /// The 8-dimensional non-symmetric example.
    NP2,
    /// Projective space `ℙⁿ`.
    P { n: i64 },
    /// Product of `k` projective lines.
    ProdP1 { k: i64 },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::FamilyParameters(msg.into())
}

impl FamilySpec {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            FamilySpec::V { k } => k >= 1,
            FamilySpec::S { m, k } => 1 <= k && k <= m,
            FamilySpec::X { m, k } => m >= 1 && 0 <= k && k <= m,
            FamilySpec::W { m } => m >= 1,
            FamilySpec::NP1 | FamilySpec::NP2 => true,
            FamilySpec::P { n } => n >= 1,
            FamilySpec::ProdP1 { k } => k >= 1,
        };
        // keep generated dimensions sane
        if ok && self.dimension() <= 64 {
            Ok(self)
        } else {
            Err(bad(format!("parameters out of range for {self}")))
        }
    }

    pub fn dimension(self) -> usize {
        let d = match self {
            FamilySpec::V { k } => 2 * k,
            FamilySpec::S { m, .. } => 2 * m + 1,
            FamilySpec::X { m, .. } => 2 * m + 2,
            FamilySpec::W { m } => 2 * m,
            FamilySpec::NP1 => 7,
            FamilySpec::NP2 => 8,
            FamilySpec::P { n } => n,
            FamilySpec::ProdP1 { k } => k,
        };
        d.max(0) as usize
    }

    /// Whether this is one of the projective-space controls.
    pub fn is_control(self) -> bool {
        matches!(self, FamilySpec::P { .. } | FamilySpec::ProdP1 { .. })
    }

    /// The ray generators of the fan.
    pub fn rays(self) -> Result<Vec<ExponentVector>> {
        let spec = self.validate()?;
        let n = spec.dimension();
        let e = |i: usize| ExponentVector::unit(n, i);
        let sum = |idx: &[usize]| idx.iter().fold(ExponentVector::zeros(n), |acc, &i| &acc + &e(i));
        let neg = |v: ExponentVector| -&v;
        let range = |a: usize, b: usize| (a..b).collect::<Vec<_>>();
        let mut rays = Vec::new();
        match spec {
            FamilySpec::V { .. } => {
                for i in 0..n {
                    rays.push(e(i));
                    rays.push(neg(e(i)));
                }
                rays.push(sum(&range(0, n)));
                rays.push(neg(sum(&range(0, n))));
            }
            FamilySpec::S { m, k } => {
                let m = m as usize;
                let z = 2 * m;
                rays.extend((0..2 * m).map(e));
                rays.push(e(z));
                rays.push(neg(e(z)));
                rays.push(neg(&sum(&range(0, m)) + &e(z).scale(k)));
                rays.push(neg(&sum(&range(m, 2 * m)) - &e(z).scale(k)));
            }
            FamilySpec::X { m, k } => {
                let m = m as usize;
                let (z, w) = (2 * m, 2 * m + 1);
                rays.extend((0..2 * m).map(e));
                for v in [e(z), e(w), &e(z) + &e(w)] {
                    rays.push(v.clone());
                    rays.push(neg(v));
                }
                rays.push(neg(&sum(&range(0, m)) - &e(z).scale(k)));
                rays.push(neg(&sum(&range(m, 2 * m)) + &e(z).scale(k)));
            }
            FamilySpec::W { m } => {
                let m = m as usize;
                rays.extend((0..2 * m).map(e));
                rays.extend((0..m).map(|i| &e(i) + &e(m + i)));
                rays.push(neg(sum(&range(0, m))));
                rays.push(neg(sum(&range(m, 2 * m))));
                rays.push(neg(sum(&range(0, 2 * m))));
            }
            FamilySpec::NP1 => {
                rays.extend((0..6).map(e));
                rays.push(e(6));
                rays.push(neg(e(6)));
                for i in 0..3 {
                    rays.push(neg(&e(i) + &e(6)));
                }
                rays.push(&neg(sum(&[3, 4, 5])) + &e(6).scale(2));
            }
            FamilySpec::NP2 => {
                rays.extend((0..6).map(e));
                for v in [e(6), e(7), &e(6) - &e(7)] {
                    rays.push(v.clone());
                    rays.push(neg(v));
                }
                for i in 0..3 {
                    rays.push(neg(&e(i) + &e(7)));
                }
                rays.push(&neg(sum(&[3, 4, 5])) + &e(7).scale(2));
            }
            FamilySpec::P { .. } => {
                rays.extend((0..n).map(e));
                rays.push(neg(sum(&range(0, n))));
            }
            FamilySpec::ProdP1 { .. } => {
                for i in 0..n {
                    rays.push(e(i));
                    rays.push(neg(e(i)));
                }
            }
        }
        Ok(rays)
    }

    /// `Δ = {x : ⟨u, x⟩ ≥ −1 for every ray u}`.
    pub fn anticanonical_polytope(self) -> Result<LatticePolytope> {
        let rays = self.rays()?;
        let facets: Vec<Facet> = rays.into_iter().map(|u| Facet { u, a: 1 }).collect();
        LatticePolytope::from_inequalities(self.dimension(), &facets)
    }

    /// The 2-face carrying the obstruction, with the coordinate plane it
    /// projects isomorphically onto. `None` for the controls.
    pub fn obstructing_face(self) -> Result<Option<ObstructingFace>> {
        let spec = self.validate()?;
        let n = spec.dimension();
        let e = |i: usize| ExponentVector::unit(n, i);
        let (active, plane, shape, marked): (Vec<ExponentVector>, (usize, usize), FaceShape, Option<[i64; 2]>) =
            match spec {
                FamilySpec::V { .. } => {
                    // x_i = (−1)^i for i = 3..n, counted from 1
                    let active = (2..n).map(|i| if i % 2 == 0 { e(i) } else { -&e(i) }).collect();
                    (active, (0, 1), FaceShape::Hexagon, None)
                }
                FamilySpec::S { m, .. } => {
                    let m = m as usize;
                    ((0..2 * m - 1).map(e).collect(), (2 * m - 1, 2 * m), FaceShape::Trapezoid, Some([-1, 1]))
                }
                FamilySpec::X { m, .. } => {
                    let m = m as usize;
                    ((0..2 * m).map(e).collect(), (2 * m, 2 * m + 1), FaceShape::Hexagon, None)
                }
                FamilySpec::W { m } => {
                    let m = m as usize;
                    let mut active: Vec<ExponentVector> = (0..m - 1).map(e).collect();
                    active.extend((0..m - 1).map(|i| &e(i) + &e(m + i)));
                    let (shape, marked) =
                        if m == 1 { (FaceShape::Hexagon, None) } else { (FaceShape::Polygon, Some([-1, 1])) };
                    (active, (m - 1, 2 * m - 1), shape, marked)
                }
                FamilySpec::NP1 => ((1..6).map(e).collect(), (0, 6), FaceShape::Trapezoid, Some([-1, -1])),
                FamilySpec::NP2 => ((0..6).map(e).collect(), (6, 7), FaceShape::Hexagon, None),
                FamilySpec::P { .. } | FamilySpec::ProdP1 { .. } => return Ok(None),
            };
        let delta = spec.anticanonical_polytope()?;
        let indices = active
            .iter()
            .map(|u| delta.facet_index(u).ok_or_else(|| Error::NotAFacet(format!("{u} for {spec}"))))
            .collect::<Result<Vec<_>>>()?;
        let face = delta.face_of_facets(&indices)?;
        if face.dim != 2 {
            return Err(Error::FaceDimension { requested: 2, dim: face.dim });
        }
        let project = |v: &ExponentVector| ExponentVector::new(vec![v[plane.0], v[plane.1]]);
        let model = LatticePolytope::hull(&face.vertices.iter().map(project).collect::<Vec<_>>())?;
        let marked_vertex = match marked {
            Some(pt) => {
                let target = ExponentVector::new(pt.to_vec());
                let v = face.vertices.iter().find(|v| project(v) == target).cloned();
                Some(v.ok_or_else(|| Error::NotAFace(format!("no vertex over {target} for {spec}")))?)
            }
            None => None,
        };
        Ok(Some(ObstructingFace { face, plane, model, shape, marked_vertex }))
    }

    /// For the controls, a polynomial with the Einstein property and its λ:
    /// `1 + x_1 + … + x_n` with `λ = n+1`, and `∏(1 + x_i)` with `λ = 2`.
    pub fn control_witness(self) -> Result<Option<(LaurentPolynomial, Rational)>> {
        let spec = self.validate()?;
        let n = spec.dimension();
        Ok(match spec {
            FamilySpec::P { .. } => {
                let p = (0..n).fold(LaurentPolynomial::one(n), |acc, i| &acc + &LaurentPolynomial::variable(n, i));
                Some((p, rat(n as i64 + 1)))
            }
            FamilySpec::ProdP1 { .. } => {
                let p = (0..n).fold(LaurentPolynomial::one(n), |acc, i| {
                    &acc * &(&LaurentPolynomial::one(n) + &LaurentPolynomial::variable(n, i))
                });
                Some((p, rat(2)))
            }
            _ => None,
        })
    }

    /// Parses a spec whose parameters may be inclusive ranges `a..b`,
    /// returning every valid member. Fails if none is valid.
    pub fn parse_many(s: &str) -> Result<Vec<FamilySpec>> {
        let s = s.trim();
        let (tag, params) = s.split_once(':').unwrap_or((s, ""));
        let range = |v: &str| -> Result<Vec<i64>> {
            let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad(format!("invalid number {t:?} in {s:?}")));
            match v.split_once("..") {
                Some((a, b)) => {
                    let (a, b) = (num(a)?, num(b)?);
                    if b < a || b - a > 1000 {
                        return Err(bad(format!("invalid range {v:?}")));
                    }
                    Ok((a..=b).collect())
                }
                None => Ok(vec![num(v)?]),
            }
        };
        let mut named: Vec<(String, Vec<i64>)> = Vec::new();
        if tag == "Prod" {
            let k = params.strip_prefix("P1^").ok_or_else(|| bad(format!("expected Prod:P1^k, got {s:?}")))?;
            named.push(("k".into(), range(k)?));
        } else if !params.is_empty() {
            for item in params.split(',') {
                let (name, value) = item.split_once('=').ok_or_else(|| bad(format!("expected name=value in {s:?}")))?;
                named.push((name.trim().to_string(), range(value)?));
            }
        }
        let expected: &[&str] = match tag {
            "V" | "Prod" => &["k"],
            "S" | "X" => &["m", "k"],
            "W" => &["m"],
            "P" => &["n"],
            "NP1" | "NP2" => &[],
            _ => return Err(bad(format!("unknown family {tag:?}"))),
        };
        let mut names: Vec<&str> = named.iter().map(|(n, _)| n.as_str()).collect();
        names.sort_unstable();
        let mut want = expected.to_vec();
        want.sort_unstable();
        if names != want {
            return Err(bad(format!("{tag} takes parameters {expected:?}")));
        }
        let get = |name: &str| named.iter().find(|(n, _)| n == name).map(|(_, v)| v.clone()).unwrap_or_default();
        let mut out = Vec::new();
        match tag {
            "V" => out.extend(get("k").into_iter().map(|k| FamilySpec::V { k })),
            "W" => out.extend(get("m").into_iter().map(|m| FamilySpec::W { m })),
            "P" => out.extend(get("n").into_iter().map(|n| FamilySpec::P { n })),
            "Prod" => out.extend(get("k").into_iter().map(|k| FamilySpec::ProdP1 { k })),
            "NP1" => out.push(FamilySpec::NP1),
            "NP2" => out.push(FamilySpec::NP2),
            _ => {
                for m in get("m") {
                    for k in get("k") {
                        out.push(if tag == "S" { FamilySpec::S { m, k } } else { FamilySpec::X { m, k } });
                    }
                }
            }
        }
        if out.len() == 1 {
            return Ok(vec![out[0].validate()?]);
        }
        let valid: Vec<FamilySpec> = out.into_iter().filter_map(|f| f.validate().ok()).collect();
        if valid.is_empty() {
            return Err(bad(format!("no valid family member in {s:?}")));
        }
        Ok(valid)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = Self::parse_many(s)?;
        match all.as_slice() {
            [one] => Ok(*one),
            _ => Err(bad(format!("{s:?} describes several family members"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::V { k } => write!(f, "V:k={k}"),
            FamilySpec::S { m, k } => write!(f, "S:m={m},k={k}"),
            FamilySpec::X { m, k } => write!(f, "X:m={m},k={k}"),
            FamilySpec::W { m } => write!(f, "W:m={m}"),
            FamilySpec::NP1 => write!(f, "NP1"),
            FamilySpec::NP2 => write!(f, "NP2"),
            FamilySpec::P { n } => write!(f, "P:n={n}"),
            FamilySpec::ProdP1 { k } => write!(f, "Prod:P1^{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceShape {
    Hexagon,
    Trapezoid,
    /// A hexagon not lattice equivalent to the reflexive one.
    Polygon,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructingFace {
    pub face: Face,
    /// Coordinates (0-based) of the plane the face projects onto.
    pub plane: (usize, usize),
    /// The face projected to that plane.
    pub model: LatticePolytope,
    pub shape: FaceShape,
    /// The vertex where the two edge ratios are compared, if the
    /// obstruction is by edge ratios.
    pub marked_vertex: Option<ExponentVector>,
}

/// Outcome of the polytope-only descent for one family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub dimension: usize,
    pub rays: usize,
    pub reflexive: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstructing_face: Option<FaceSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane: Option<(usize, usize)>,
    /// Whether the witness sits on the obstructing face.
    pub witness_on_obstructing_face: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked_vertex: Option<ExponentVector>,
    /// Edge ratios `ℓ(E')/ℓ(E)` at the marked vertex.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ratios_at_marked_vertex: Vec<EdgeRatio>,
    pub report: ObstructionReport,
}

/// Polytope-only face descent on the anticanonical polytope, trying the
/// obstructing face first when `prefer_named` is set.
pub fn family_descent(spec: FamilySpec, d_max: usize, prefer_named: bool) -> Result<FamilyReport> {
    let delta = spec.anticanonical_polytope()?;
    let named = spec.obstructing_face()?;
    let priority: Vec<Face> = match (&named, prefer_named) {
        (Some(o), true) => vec![o.face.clone()],
        _ => Vec::new(),
    };
    let report = face_descent_with_priority(&delta, None, d_max, &priority)?;
    let witness_face = report.witness.as_ref().and_then(Witness::face);
    let witness_on_obstructing_face =
        matches!((&named, witness_face), (Some(o), Some(w)) if o.face.vertices == w.vertices);
    let ratios_at_marked_vertex = match (&named, &report.witness) {
        (Some(ObstructingFace { marked_vertex: Some(v), .. }), Some(Witness::EdgeRatio { ratios, .. }))
            if witness_on_obstructing_face =>
        {
            ratios.at_vertex(v).into_iter().cloned().collect()
        }
        _ => Vec::new(),
    };
    Ok(FamilyReport {
        family: spec.to_string(),
        dimension: spec.dimension(),
        rays: spec.rays()?.len(),
        reflexive: delta.is_reflexive()?,
        obstructing_face: named.as_ref().map(|o| o.face.summary()),
        plane: named.as_ref().map(|o| o.plane),
        witness_on_obstructing_face,
        marked_vertex: named.as_ref().and_then(|o| o.marked_vertex.clone()),
        ratios_at_marked_vertex,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gec::{standard_hexagon, Verdict};

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    fn from_inequalities(rank: usize, rows: &[(&[i64], i64)]) -> LatticePolytope {
        let facets: Vec<Facet> = rows.iter().map(|(u, a)| Facet { u: ev(u), a: *a }).collect();
        LatticePolytope::from_inequalities(rank, &facets).unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["V:k=2", "S:m=3,k=1", "X:m=2,k=0", "W:m=2", "NP1", "NP2", "P:n=3", "Prod:P1^4"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!("S:k=1,m=3".parse::<FamilySpec>().unwrap(), FamilySpec::S { m: 3, k: 1 });
        assert!("S:m=1,k=2".parse::<FamilySpec>().is_err());
        assert!("V:k=0".parse::<FamilySpec>().is_err());
        assert!("Q:k=1".parse::<FamilySpec>().is_err());
        assert!("V:m=1".parse::<FamilySpec>().is_err());
        let many = FamilySpec::parse_many("S:m=1..2,k=1..2").unwrap();
        assert_eq!(many, vec![FamilySpec::S { m: 1, k: 1 }, FamilySpec::S { m: 2, k: 1 }, FamilySpec::S { m: 2, k: 2 }]);
        assert_eq!(FamilySpec::parse_many("V:k=1..3").unwrap().len(), 3);
    }

    #[test]
    fn ray_data() {
        let v1 = FamilySpec::V { k: 1 }.rays().unwrap();
        assert_eq!(v1.len(), 6);
        for r in [[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [-1, -1]] {
            assert!(v1.contains(&ev(&r)));
        }
        let s11 = FamilySpec::S { m: 1, k: 1 }.rays().unwrap();
        let mut want: Vec<ExponentVector> =
            [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, -1], [-1, 0, -1], [0, -1, 1]].iter().map(|r| ev(r)).collect();
        let mut got = s11.clone();
        want.sort();
        got.sort();
        assert_eq!(got, want);
        assert_eq!(FamilySpec::NP1.rays().unwrap().len(), 12);
        assert_eq!(FamilySpec::NP2.rays().unwrap().len(), 16);
        for k in 1..=3 {
            assert_eq!(FamilySpec::V { k }.rays().unwrap().len() as i64, 2 * (2 * k) + 2);
        }
    }

    #[test]
    fn v1_is_the_hexagon() {
        let delta = FamilySpec::V { k: 1 }.anticanonical_polytope().unwrap();
        assert_eq!(delta.vertices(), standard_hexagon().vertices());
    }

    #[test]
    fn s_polytope_matches_inequalities() {
        for (m, k) in [(1, 1), (2, 1), (2, 2)] {
            let spec = FamilySpec::S { m, k };
            let n = spec.dimension();
            // x_i, y_j ≥ −1, −1 ≤ z ≤ 1, Σx ≤ 1 − kz, Σy ≤ 1 + kz
            let mut rows: Vec<(Vec<i64>, i64)> = (0..2 * m as usize)
                .map(|i| {
                    let mut u = vec![0; n];
                    u[i] = 1;
                    (u, 1)
                })
                .collect();
            let mut z = vec![0; n];
            z[n - 1] = 1;
            rows.push((z.clone(), 1));
            rows.push((z.iter().map(|x| -x).collect(), 1));
            let mut sx = vec![0; n];
            let mut sy = vec![0; n];
            for i in 0..m as usize {
                sx[i] = -1;
                sy[m as usize + i] = -1;
            }
            sx[n - 1] = -k;
            sy[n - 1] = k;
            rows.push((sx, 1));
            rows.push((sy, 1));
            let refs: Vec<(&[i64], i64)> = rows.iter().map(|(u, a)| (u.as_slice(), *a)).collect();
            let expected = from_inequalities(n, &refs);
            assert_eq!(spec.anticanonical_polytope().unwrap().vertices(), expected.vertices());
        }
    }

    #[test]
    fn all_reflexive_and_full_dimensional() {
        for s in ["V:k=1..3", "S:m=1..3,k=1..3", "X:m=1..2,k=0..2", "W:m=1..3", "NP1", "NP2", "P:n=1..3", "Prod:P1^1..4"] {
            for spec in FamilySpec::parse_many(s).unwrap() {
                let d = spec.anticanonical_polytope().unwrap();
                assert!(d.is_full_dimensional(), "{spec}");
                assert!(d.is_reflexive().unwrap(), "{spec}");
                assert_eq!(d.facets().len(), spec.rays().unwrap().len(), "{spec}");
            }
        }
    }

    #[test]
    fn obstructing_faces_match_plane_models() {
        let hexagon = standard_hexagon();
        for spec in [FamilySpec::V { k: 2 }, FamilySpec::X { m: 1, k: 1 }, FamilySpec::W { m: 1 }, FamilySpec::NP2] {
            let o = spec.obstructing_face().unwrap().unwrap();
            assert!(o.model.polygon_equivalence(&hexagon).unwrap().is_some(), "{spec}");
            let delta = spec.anticanonical_polytope().unwrap();
            assert!(delta.faces(2).unwrap().iter().any(|f| f.vertices == o.face.vertices));
        }
        for (m, k) in [(1, 1), (2, 1), (3, 2)] {
            let o = FamilySpec::S { m, k }.obstructing_face().unwrap().unwrap();
            // −1 ≤ y ≤ m + kz, −1 ≤ z ≤ 1
            let expected = from_inequalities(2, &[(&[1, 0], 1), (&[-1, k], m), (&[0, 1], 1), (&[0, -1], 1)]);
            assert_eq!(o.model.vertices(), expected.vertices());
        }
        let o = FamilySpec::NP1.obstructing_face().unwrap().unwrap();
        let expected = from_inequalities(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, -1], 1), (&[-1, -1], 1)]);
        assert_eq!(o.model.vertices(), expected.vertices());
        let o = FamilySpec::W { m: 3 }.obstructing_face().unwrap().unwrap();
        // x, y, x+y ≥ −1, x ≤ m, x+y ≤ m, y ≤ 1
        let expected = from_inequalities(
            2,
            &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1), (&[-1, 0], 3), (&[-1, -1], 3), (&[0, -1], 1)],
        );
        assert_eq!(o.model.vertices(), expected.vertices());
        assert!(FamilySpec::P { n: 2 }.obstructing_face().unwrap().is_none());
    }

    #[test]
    fn small_descents() {
        let r = family_descent(FamilySpec::V { k: 1 }, 2, false).unwrap();
        assert_eq!(r.report.verdict, Verdict::GecFails);
        assert!(r.witness_on_obstructing_face);
        let r = family_descent(FamilySpec::S { m: 1, k: 1 }, 2, true).unwrap();
        assert_eq!(r.report.verdict, Verdict::GecFails);
        assert_eq!(r.ratios_at_marked_vertex.len(), 2);
        let r = family_descent(FamilySpec::P { n: 2 }, 2, true).unwrap();
        assert_eq!(r.report.verdict, Verdict::Inconclusive);
    }
}
