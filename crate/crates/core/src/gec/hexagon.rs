//! Certificate that no polynomial with hexagonal Newton polygon and
//! unimodular support satisfies GEC.
//!
//! The polygon is first moved onto the standard hexagon
//! `conv{(0,−1),(1,−1),(1,0),(0,1),(−1,1),(−1,0)}`. Edge and adjacent-segment
//! shapes encode `p` by 12 parameters whose overlaps at the 7 lattice points
//! must agree; when they do, `p` is a rescaling of
//! `q = u⁻¹v⁻¹(u+v)(u+1)(v+1)`, and `μ(q)` has a cubic factor that divides
//! no power of `q`.

use std::sync::OnceLock;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{kappa_star, ObstructionReport, Verdict, Witness};
use crate::expr::{parse_with_rank, poly};
use crate::lattice::{ExponentVector, IntegerMatrix};
use crate::laurent::{divides, rat, rational_serde, LaurentPolynomial, Rational};
use crate::monge_ampere::mu;
use crate::polytope::{newton_polytope, AffineMap2, LatticePolytope};
use crate::{Error, Result};

const VERTICES: [[i64; 2]; 6] = [[0, -1], [1, -1], [1, 0], [0, 1], [-1, 1], [-1, 0]];

pub fn standard_hexagon() -> LatticePolytope {
    let pts: Vec<ExponentVector> = VERTICES.iter().map(|v| ExponentVector::from(&v[..])).collect();
    LatticePolytope::hull(&pts).expect("hexagon vertices")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HexagonStage {
    /// The edge parameters disagree at some lattice point.
    Overlap,
    /// The parameters agree; the reduced form fails divisibility.
    Factor,
}

/// A lattice point where an edge-parameter expression differs from the
/// coefficient of `p` (after moving `p` to the standard hexagon).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapViolation {
    pub point: ExponentVector,
    /// The overlap equation at that point.
    pub equation: String,
    /// The expression that disagrees.
    pub expression: String,
    #[serde(with = "rational_serde")]
    pub coefficient: Rational,
    #[serde(with = "rational_serde")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rho {
    #[serde(with = "rational_serde")]
    pub rho1: Rational,
    #[serde(with = "rational_serde")]
    pub rho2: Rational,
    #[serde(with = "rational_serde")]
    pub rho3: Rational,
}

/// Data of the final step, identical for every hexagon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorArgument {
    pub reduced: LaurentPolynomial,
    pub mu_reduced: LaurentPolynomial,
    /// The cubic factor of `μ(q)`.
    pub factor: LaurentPolynomial,
    /// `μ(q) = u⁻²v⁻²·factor·(u+v)(u+1)(v+1)` holds.
    pub factorization_verified: bool,
    /// Whether the factor is a constant times some `(u+v)^a(u+1)^b(v+1)^c`
    /// with `a+b+c = 3`.
    pub matches_admissible_product: bool,
    pub kappa: u32,
    /// Whether the factor divides `q^κ`.
    pub divides: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexagonCertificate {
    /// Affine lattice map carrying the input polygon onto the standard one.
    pub map: AffineMap2,
    pub stage: HexagonStage,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<OverlapViolation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Rho>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<FactorArgument>,
}

impl HexagonCertificate {
    fn fails(&self) -> bool {
        match self.stage {
            HexagonStage::Overlap => true,
            HexagonStage::Factor => self.factor.as_ref().is_some_and(|f| !f.divides && !f.matches_admissible_product),
        }
    }
}

fn factor_argument() -> &'static FactorArgument {
    static CELL: OnceLock<FactorArgument> = OnceLock::new();
    CELL.get_or_init(|| {
        let q = poly("hexagon-q");
        let mu_q = mu(&q).expect("μ of a nonzero polynomial").mu;
        let factor = poly("x^2*y+x*y^2+x^2+6x*y+y^2+x+y");
        let bivariate = |s: &str| parse_with_rank(s, Some(2)).expect("valid expression");
        let linear = [bivariate("x+y"), bivariate("x+1"), bivariate("y+1")];
        let rest = &(&linear[0] * &linear[1]) * &linear[2];
        let expected = (&factor * &rest).mul_monomial(&Rational::one(), &ExponentVector::new(vec![-2, -2]));
        let (_, lead) = factor.leading_lex().expect("nonzero");
        let mut matches = false;
        for a in 0..=3u32 {
            for b in 0..=3 - a {
                let c = 3 - a - b;
                let product = &(&linear[0].pow(a) * &linear[1].pow(b)) * &linear[2].pow(c);
                let (_, pl) = product.leading_lex().expect("nonzero");
                matches |= factor.scale(pl) == product.scale(lead);
            }
        }
        let kappa = kappa_star(&mu_q).expect("nonzero");
        let divides = divides(&factor, &q.pow(kappa)).expect("nonzero divisor");
        FactorArgument {
            reduced: q,
            factorization_verified: mu_q == expected,
            mu_reduced: mu_q,
            factor,
            matches_admissible_product: matches,
            kappa,
            divides,
        }
    })
}

fn point(x: i64, y: i64) -> ExponentVector {
    ExponentVector::new(vec![x, y])
}

/// Compares each edge-parameter expression with the coefficient of `p` at
/// the 7 hexagon points, in a fixed order.
fn overlap_check(p: &LaurentPolynomial) -> std::result::Result<Rho, OverlapViolation> {
    let a = |x: i64, y: i64| p.coefficient(&point(x, y));
    // Parameters fixed by the vertex coefficients (all nonzero).
    let c1 = a(1, -1);
    let xi1 = a(0, -1) / &c1;
    let c2 = a(1, 0);
    let xi2 = a(1, -1) / &c2;
    let c3 = a(0, 1);
    let xi3 = a(1, 0) / &c3;
    let c4 = a(0, 1);
    let c5 = a(-1, 1);
    let c6 = a(-1, 0);
    let (d1, d2, d3) = (a(1, 0), a(0, 1), a(-1, 1));
    let two = rat(2);
    let sq = |x: &Rational| x * x;

    let checks: [((i64, i64), &str, Vec<(&str, Rational)>); 7] = [
        ((0, -1), "c₁ξ₁=c′₂ξ₂²=c₆ξ₃", vec![("c₁ξ₁", &c1 * &xi1), ("c′₂ξ₂²", &d2 * sq(&xi2)), ("c₆ξ₃", &c6 * &xi3)]),
        ((1, -1), "c₁=c₂ξ₂=c′₃ξ₃²", vec![("c₁", c1.clone()), ("c₂ξ₂", &c2 * &xi2), ("c′₃ξ₃²", &d3 * sq(&xi3))]),
        ((-1, 0), "c′₁ξ₁²=c₅ξ₂=c₆", vec![("c′₁ξ₁²", &d1 * sq(&xi1)), ("c₅ξ₂", &c5 * &xi2), ("c₆", c6.clone())]),
        (
            (0, 0),
            "2c′₁ξ₁=2c′₂ξ₂=2c′₃ξ₃",
            vec![("2c′₁ξ₁", &two * &d1 * &xi1), ("2c′₂ξ₂", &two * &d2 * &xi2), ("2c′₃ξ₃", &two * &d3 * &xi3)],
        ),
        ((1, 0), "c′₁=c₂=c₃ξ₃", vec![("c′₁", d1.clone()), ("c₂", c2.clone()), ("c₃ξ₃", &c3 * &xi3)]),
        ((-1, 1), "c₄ξ₁=c₅=c′₃", vec![("c₄ξ₁", &c4 * &xi1), ("c₅", c5.clone()), ("c′₃", d3.clone())]),
        ((0, 1), "c₄=c′₂=c₃", vec![("c₄", c4.clone()), ("c′₂", d2.clone()), ("c₃", c3.clone())]),
    ];
    for ((x, y), equation, exprs) in checks {
        let coefficient = a(x, y);
        for (expression, value) in exprs {
            if value != coefficient {
                return Err(OverlapViolation {
                    point: point(x, y),
                    equation: equation.to_string(),
                    expression: expression.to_string(),
                    coefficient,
                    value,
                });
            }
        }
    }
    Ok(Rho { rho1: c3, rho2: xi3, rho3: xi2 })
}

fn apply_map(p: &LaurentPolynomial, map: &AffineMap2) -> Result<LaurentPolynomial> {
    LaurentPolynomial::from_terms(2, p.terms().map(|(e, c)| (map.apply(e), c.clone())))
}

/// Runs the hexagon argument on a bivariate `p` whose Newton polygon is a
/// lattice hexagon equivalent to the standard one.
pub fn hexagon_obstruction(p: &LaurentPolynomial) -> Result<ObstructionReport> {
    if p.rank() != 2 {
        return Err(Error::DimensionMismatch(format!("expected a bivariate polynomial, got rank {}", p.rank())));
    }
    let np = newton_polytope(p)?;
    if np.dim() != 2 {
        return Err(Error::WrongSupport("Newton polytope is not a polygon".into()));
    }
    let map = np
        .polygon_equivalence(&standard_hexagon())?
        .ok_or_else(|| Error::WrongSupport("Newton polygon is not the reflexive hexagon".into()))?;
    let moved = apply_map(p, &map)?;
    let certificate = match overlap_check(&moved) {
        Err(violation) => HexagonCertificate {
            map,
            stage: HexagonStage::Overlap,
            violation: Some(violation),
            rho: None,
            factor: None,
        },
        Ok(rho) => {
            // x = ρ₂⁻¹ρ₃·u, y = ρ₃·v, then divide by ρ₁ρ₃
            let scalars = [&rho.rho3 / &rho.rho2, rho.rho3.clone()];
            let reduced =
                moved.substitute_monomial(&IntegerMatrix::identity(2), &scalars)?.scale(&(&rho.rho1 * &rho.rho3).recip());
            let argument = factor_argument();
            if reduced != argument.reduced {
                return Err(Error::WrongSupport(format!("reduction produced {reduced}, expected {}", argument.reduced)));
            }
            HexagonCertificate {
                map,
                stage: HexagonStage::Factor,
                violation: None,
                rho: Some(rho),
                factor: Some(argument.clone()),
            }
        }
    };
    Ok(report(certificate))
}

/// The polytope-only form: every polynomial with this hexagonal Newton
/// polygon and unimodular support fails GEC. Returns `None` when the polygon
/// is not lattice equivalent to the standard hexagon.
pub fn hexagon_polytope_certificate(polygon: &LatticePolytope) -> Result<Option<HexagonCertificate>> {
    if polygon.dim() != 2 || polygon.vertices().len() != 6 {
        return Ok(None);
    }
    let model = LatticePolytope::hull(polygon.vertex_coordinates())?;
    let Some(map) = model.polygon_equivalence(&standard_hexagon())? else {
        return Ok(None);
    };
    Ok(Some(HexagonCertificate {
        map,
        stage: HexagonStage::Factor,
        violation: None,
        rho: None,
        factor: Some(factor_argument().clone()),
    }))
}

fn report(certificate: HexagonCertificate) -> ObstructionReport {
    let verdict = if certificate.fails() { Verdict::GecFails } else { Verdict::Inconclusive };
    let kappa_star = certificate.factor.as_ref().map(|f| f.kappa);
    ObstructionReport {
        verdict,
        witness: Some(Witness::Hexagon { face: None, certificate: Box::new(certificate) }),
        trace: Vec::new(),
        kappa_star,
    }
}

impl HexagonCertificate {
    pub(super) fn into_report(self) -> ObstructionReport {
        report(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ratio;

    fn certificate(r: &ObstructionReport) -> &HexagonCertificate {
        match r.witness.as_ref().unwrap() {
            Witness::Hexagon { certificate, .. } => certificate,
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn standard_q_reaches_the_factor_stage() {
        let r = hexagon_obstruction(&poly("hexagon-q")).unwrap();
        assert_eq!(r.verdict, Verdict::GecFails);
        let c = certificate(&r);
        assert_eq!(c.stage, HexagonStage::Factor);
        assert_eq!(c.rho, Some(Rho { rho1: rat(1), rho2: rat(1), rho3: rat(1) }));
        let f = c.factor.as_ref().unwrap();
        assert!(f.factorization_verified);
        assert!(!f.matches_admissible_product);
        assert!(!f.divides);
        assert_eq!(f.mu_reduced.len(), 19);
    }

    #[test]
    fn rho_form_with_general_parameters() {
        let (r1, r2, r3) = (ratio(3, 2), ratio(-2, 5), rat(7));
        let terms = [
            ([0, -1], &r1 * &r3 * &r3),
            ([1, -1], &r1 * &r2 * &r3),
            ([-1, 0], &r1 / &r2 * &r3 * &r3),
            ([0, 0], rat(2) * &r1 * &r3),
            ([1, 0], &r1 * &r2),
            ([-1, 1], &r1 / &r2 * &r3),
            ([0, 1], r1.clone()),
        ];
        let p = LaurentPolynomial::from_terms(2, terms.iter().map(|(e, c)| (ExponentVector::from(&e[..]), c.clone())))
            .unwrap();
        let r = hexagon_obstruction(&p).unwrap();
        assert_eq!(r.verdict, Verdict::GecFails);
        let c = certificate(&r);
        assert_eq!(c.stage, HexagonStage::Factor);
        assert_eq!(c.rho, Some(Rho { rho1: r1, rho2: r2, rho3: r3 }));
    }

    #[test]
    fn wrong_center_violates_the_center_equation() {
        let p = &poly("hexagon-q") + &LaurentPolynomial::one(2);
        let r = hexagon_obstruction(&p).unwrap();
        assert_eq!(r.verdict, Verdict::GecFails);
        let v = certificate(&r).violation.clone().unwrap();
        assert_eq!(v.point, point(0, 0));
        assert!(v.equation.contains("2c′₁ξ₁=2c′₂ξ₂"));
        assert_eq!((v.coefficient, v.value), (rat(3), rat(2)));

        let no_center = &poly("hexagon-q") - &LaurentPolynomial::constant(2, rat(2));
        let v = certificate(&hexagon_obstruction(&no_center).unwrap()).violation.clone().unwrap();
        assert_eq!(v.point, point(0, 0));
    }

    #[test]
    fn unit_and_lattice_equivariance() {
        let q = poly("hexagon-q");
        let scaled = q.mul_monomial(&rat(5), &point(1, 1));
        let r = hexagon_obstruction(&scaled).unwrap();
        assert_eq!(r.verdict, Verdict::GecFails);
        assert_eq!(certificate(&r).stage, HexagonStage::Factor);

        // (x, y) ↦ (x + 2y, y) moves the hexagon to a sheared copy
        let map = IntegerMatrix::from_rows(&[vec![1i64, 0], vec![2, 1]], 2).unwrap();
        let sheared = q.substitute_monomial(&map, &[rat(1), rat(1)]).unwrap();
        let r = hexagon_obstruction(&sheared).unwrap();
        assert_eq!(certificate(&r).stage, HexagonStage::Factor);
    }

    #[test]
    fn rejects_other_polygons() {
        assert!(matches!(hexagon_obstruction(&poly("1+x+y")), Err(Error::WrongSupport(_))));
        let square = LatticePolytope::hull(&[point(0, 0), point(1, 0), point(0, 1), point(1, 1)]).unwrap();
        assert_eq!(hexagon_polytope_certificate(&square).unwrap(), None);
        assert!(hexagon_polytope_certificate(&standard_hexagon()).unwrap().is_some());
    }
}
