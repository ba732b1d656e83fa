//! Face descent: GEC passes to every translated initial part, so a failing
//! face certifies failure for the whole polynomial.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hexagon::{hexagon_obstruction, hexagon_polytope_certificate};
use super::{classify_1d, edge_ratio_test, edge_shape_test, gec_check, ObstructionReport, Verdict, Witness};
use crate::lattice::ExponentVector;
use crate::laurent::LaurentPolynomial;
use crate::polytope::{chart_polynomial, newton_polytope, unimodular_support, Face, FaceSummary, LatticePolytope};
use crate::{Error, Result};

/// Faces evaluated concurrently per batch; the witness is still the first
/// failing face in order.
const BATCH: usize = 64;

/// One visited face and the tests run on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub face: FaceSummary,
    pub tests: Vec<String>,
    pub passed: bool,
}

struct Outcome {
    tests: Vec<&'static str>,
    witness: Option<Witness>,
    /// GEC decided on the face polynomial, when it was.
    holds: Option<bool>,
    kappa: Option<u32>,
}

fn evaluate_polytope(face: &Face) -> Result<Outcome> {
    let mut out = Outcome { tests: Vec::new(), witness: None, holds: None, kappa: None };
    if face.dim != 2 {
        return Ok(out);
    }
    out.tests.push("edge-ratio");
    let ratios = edge_ratio_test(&face.polytope)?;
    if !ratios.ok {
        out.witness = Some(Witness::EdgeRatio { face: None, ratios });
        return Ok(out);
    }
    out.tests.push("hexagon");
    if let Some(certificate) = hexagon_polytope_certificate(&face.polytope)? {
        out.witness = certificate.into_report().witness;
    }
    Ok(out)
}

fn evaluate_polynomial(face: &Face, p: &LaurentPolynomial) -> Result<Outcome> {
    let mut out = Outcome { tests: Vec::new(), witness: None, holds: None, kappa: None };
    let pf = chart_polynomial(p, face)?;
    if face.dim == 0 {
        return Ok(out);
    }
    if face.dim == 1 {
        out.tests.push("one-dim");
        let classification = classify_1d(&pf)?;
        out.holds = Some(classification.is_gec);
        if !classification.is_gec {
            out.witness = Some(Witness::OneDim { face: None, polynomial: pf, classification });
        }
        return Ok(out);
    }
    if face.dim == 2 {
        let np = newton_polytope(&pf)?;
        out.tests.push("edge-shape");
        for edge in np.faces(1)? {
            let shape = edge_shape_test(&pf, &edge)?;
            if !shape.ok {
                out.witness = Some(Witness::EdgeShape { face: None, polynomial: pf, shape });
                return Ok(out);
            }
        }
        out.tests.push("edge-ratio");
        let ratios = edge_ratio_test(&np)?;
        if !ratios.ok {
            out.witness = Some(Witness::EdgeRatio { face: None, ratios });
            return Ok(out);
        }
        if hexagon_polytope_certificate(&np)?.is_some() {
            out.tests.push("hexagon");
            let report = hexagon_obstruction(&pf)?;
            if report.fails() {
                out.witness = report.witness;
                return Ok(out);
            }
        }
    }
    out.tests.push("divisibility");
    let report = gec_check(&pf)?;
    out.holds = Some(report.verdict == Verdict::GecHolds);
    out.kappa = report.kappa_star;
    if report.fails() {
        out.witness = report.witness;
    }
    Ok(out)
}

struct Walk<'a> {
    p: Option<&'a LaurentPolynomial>,
    top_dim: usize,
    trace: Vec<TraceEntry>,
    top: Option<(bool, Option<u32>)>,
}

impl Walk<'_> {
    fn run(&mut self, faces: &[Face]) -> Result<Option<Witness>> {
        for batch in faces.chunks(BATCH) {
            let outcomes: Vec<Result<Outcome>> = batch
                .par_iter()
                .map(|f| match self.p {
                    Some(p) => evaluate_polynomial(f, p),
                    None => evaluate_polytope(f),
                })
                .collect();
            for (face, outcome) in batch.iter().zip(outcomes) {
                let outcome = outcome?;
                self.trace.push(TraceEntry {
                    face: face.summary(),
                    tests: outcome.tests.iter().map(|t| t.to_string()).collect(),
                    passed: outcome.witness.is_none(),
                });
                if let Some(w) = outcome.witness {
                    return Ok(Some(w.with_face(face.summary())));
                }
                if face.dim == self.top_dim {
                    if let Some(h) = outcome.holds {
                        self.top = Some((h, outcome.kappa));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// [`face_descent_with_priority`] with no priority faces.
pub fn face_descent(delta: &LatticePolytope, p: Option<&LaurentPolynomial>, d_max: usize) -> Result<ObstructionReport> {
    face_descent_with_priority(delta, p, d_max, &[])
}

/// Runs the face tests on the given priority faces, then on all faces of
/// dimension `1..=d_max` in canonical order (by dimension, then by sorted
/// active facet set), stopping at the first failure.
///
/// Without `p` only obstructions valid for every unimodular-support
/// polynomial with Newton polytope `delta` are used: unequal edge ratios and
/// the hexagon. With `p`, each face polynomial is also tested for its edge
/// shapes, its one-dimensional form and by divisibility. The verdict is
/// `gec-holds` only when `p` is given and `delta` itself was reached.
pub fn face_descent_with_priority(
    delta: &LatticePolytope,
    p: Option<&LaurentPolynomial>,
    d_max: usize,
    priority: &[Face],
) -> Result<ObstructionReport> {
    if !delta.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: delta.dim(), rank: delta.rank() });
    }
    if let Some(p) = p {
        if newton_polytope(p)?.vertices() != delta.vertices() {
            return Err(Error::WrongSupport("NP(p) differs from the given polytope".into()));
        }
        if !unimodular_support(&p.support())?.ok {
            return Err(Error::NonUnimodularSupport);
        }
    }
    for f in priority {
        if delta.face_containing(&f.vertices)?.vertices != f.vertices {
            return Err(Error::NotAFace(format!("{:?}", f.vertices)));
        }
    }

    let mut walk = Walk { p, top_dim: delta.dim(), trace: Vec::new(), top: None };
    let fail = |walk: Walk, w: Witness| ObstructionReport {
        verdict: Verdict::GecFails,
        witness: Some(w),
        trace: walk.trace,
        kappa_star: None,
    };
    if let Some(w) = walk.run(priority)? {
        return Ok(fail(walk, w));
    }
    let done: HashSet<&Vec<ExponentVector>> = priority.iter().map(|f| &f.vertices).collect();
    for d in 1..=d_max.min(delta.dim()) {
        let faces: Vec<Face> = delta.faces(d)?.into_iter().filter(|f| !done.contains(&f.vertices)).collect();
        if let Some(w) = walk.run(&faces)? {
            return Ok(fail(walk, w));
        }
    }
    let (verdict, kappa_star) = match walk.top {
        Some((true, k)) => (Verdict::GecHolds, k),
        _ => (Verdict::Inconclusive, None),
    };
    Ok(ObstructionReport { verdict, witness: None, trace: walk.trace, kappa_star })
}

/// Full decision for a concrete polynomial: descent through faces of
/// dimension ≤ 2 for a structural witness, then divisibility on `p` itself.
pub fn decide(p: &LaurentPolynomial) -> Result<ObstructionReport> {
    let np = newton_polytope(p)?;
    if !np.is_full_dimensional() {
        return gec_check(p);
    }
    let descent = face_descent(&np, Some(p), 2)?;
    if descent.verdict != Verdict::Inconclusive {
        return Ok(descent);
    }
    let mut report = gec_check(p)?;
    let mut trace = descent.trace;
    trace.push(TraceEntry {
        face: FaceSummary { dim: np.dim(), vertices: np.vertices().to_vec(), active_facets: Vec::new() },
        tests: vec!["divisibility".into()],
        passed: !report.fails(),
    });
    report.trace = trace;
    if let Some(Witness::Divisibility { face, .. }) = report.witness.as_mut() {
        *face = None;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::poly;
    use crate::gec::standard_hexagon;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn hexagon_polytope_fails() {
        let r = face_descent(&standard_hexagon(), None, 2).unwrap();
        assert_eq!(r.verdict, Verdict::GecFails);
        assert_eq!(r.witness.as_ref().unwrap().test_name(), "hexagon");
        assert_eq!(r.witness.unwrap().face().unwrap().dim, 2);
    }

    #[test]
    fn trapezoid_fails_by_ratio() {
        let t = LatticePolytope::hull(&[ev(&[-1, -1]), ev(&[2, -1]), ev(&[0, 1]), ev(&[-1, 1])]).unwrap();
        let r = face_descent(&t, None, 2).unwrap();
        assert_eq!(r.witness.unwrap().test_name(), "edge-ratio");
    }

    #[test]
    fn projective_plane_is_inconclusive() {
        let t = LatticePolytope::hull(&[ev(&[-1, -1]), ev(&[2, -1]), ev(&[-1, 2])]).unwrap();
        let r = face_descent(&t, None, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert_eq!(r.trace.len(), 4);
    }

    #[test]
    fn concrete_polynomials() {
        assert_eq!(decide(&poly("(1+x)^3")).unwrap().verdict, Verdict::GecHolds);
        assert_eq!(decide(&poly("1+x+y")).unwrap().verdict, Verdict::GecHolds);
        assert_eq!(decide(&poly("(1+x)*(1+y)*(1+z)")).unwrap().verdict, Verdict::GecHolds);
        let r = decide(&poly("hexagon-q")).unwrap();
        assert_eq!(r.witness.unwrap().test_name(), "hexagon");
        let r = decide(&poly("2+3x+x^2")).unwrap();
        assert_eq!(r.witness.unwrap().test_name(), "one-dim");
        // an edge that is not a binomial power
        let r = decide(&poly("2+3x+x^2+y+x*y")).unwrap();
        assert_eq!(r.verdict, Verdict::GecFails);
        assert_eq!(r.witness.unwrap().test_name(), "one-dim");
        // edges are binomial powers, an adjacent segment is not
        let r = decide(&poly("(1+x+y)^3 + x*y")).unwrap();
        assert_eq!(r.verdict, Verdict::GecFails);
        assert_eq!(r.witness.unwrap().test_name(), "edge-shape");
    }

    #[test]
    fn priority_faces_come_first() {
        let h = standard_hexagon();
        let edge = h.faces(1).unwrap().pop().unwrap();
        let r = face_descent_with_priority(&h, None, 2, &[edge]).unwrap();
        assert_eq!(r.trace[0].face.dim, 1);
        assert_eq!(r.trace.len(), 7);
        assert!(r.fails());
    }
}
