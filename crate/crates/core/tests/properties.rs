mod common;

use common::{ev, q};
use num_bigint::BigInt;
use proptest::prelude::*;
use toric_gec::gec::{classify_1d, gec_check, Verdict};
use toric_gec::lattice::smith_normal_form;
use toric_gec::laurent::divides;
use toric_gec::monge_ampere::mu;
use toric_gec::polytope::{chart_polynomial, newton_polytope, LatticePolytope};
use toric_gec::{ExponentVector, IntegerMatrix, LaurentPolynomial, Rational};

fn poly(rank: usize, max_terms: usize) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, rank), -6i64..=6), 1..=max_terms).prop_map(move |terms| {
        let terms: Vec<(ExponentVector, Rational)> = terms.into_iter().map(|(e, c)| (ExponentVector::new(e), q(c))).collect();
        LaurentPolynomial::from_terms(rank, terms).unwrap()
    })
}

fn nonconstant(rank: usize) -> impl Strategy<Value = LaurentPolynomial> {
    poly(rank, 4).prop_filter("needs two terms", |p| p.len() >= 2)
}

/// Products of elementary unimodular matrices.
fn unimodular_2x2() -> impl Strategy<Value = IntegerMatrix> {
    prop::collection::vec((0usize..3, -2i64..=2), 1..5).prop_map(|ops| {
        let mut m = vec![vec![1i64, 0], vec![0, 1]];
        for (kind, k) in ops {
            match kind {
                0 => m = vec![vec![m[0][0] + k * m[1][0], m[0][1] + k * m[1][1]], m[1].clone()],
                1 => m = vec![m[0].clone(), vec![m[1][0] + k * m[0][0], m[1][1] + k * m[0][1]]],
                _ => m = vec![m[1].clone(), m[0].clone()],
            }
        }
        IntegerMatrix::from_rows(&m, 2).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(2, 4), b in poly(2, 4), c in poly(2, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn divides_products(a in poly(2, 3), b in poly(2, 3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert!(divides(&a, &(&a * &b)).unwrap());
        prop_assert!(divides(&b, &(&a * &b)).unwrap());
    }

    #[test]
    fn smith_form_reconstructs(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..=3)) {
        let a = IntegerMatrix::from_rows(&rows, 3).unwrap();
        let (u, d, v) = smith_normal_form(&a);
        prop_assert_eq!(u.mul(&d).unwrap().mul(&v).unwrap(), a);
        prop_assert!(u.is_unimodular() && v.is_unimodular());
        let diag: Vec<BigInt> = (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    prop_assert_eq!(d.get(i, j), &BigInt::from(0));
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(w[0] >= BigInt::from(0));
            if w[0] == BigInt::from(0) {
                prop_assert_eq!(&w[1], &BigInt::from(0));
            } else {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            }
        }
    }

    #[test]
    fn hull_is_idempotent(points in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..12)) {
        let points: Vec<ExponentVector> = points.into_iter().map(ExponentVector::new).collect();
        let h = LatticePolytope::hull(&points).unwrap();
        let again = LatticePolytope::hull(h.vertices()).unwrap();
        prop_assert_eq!(h.vertices(), again.vertices());
        for p in &points {
            prop_assert!(h.contains(p));
        }
    }

    #[test]
    fn scaling_law(p in nonconstant(2), c in 1i64..=4, m in prop::collection::vec(-2i64..=2, 2)) {
        let base = mu(&p).unwrap();
        let r = base.rank_r as i64;
        let m = ExponentVector::new(m);
        let lhs = mu(&p.mul_monomial(&q(c), &m)).unwrap().mu;
        let rhs = base.mu.mul_monomial(&q(c.pow((r + 1) as u32)), &m.scale(r + 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_law(p in nonconstant(2), k in 2u32..=3) {
        let base = mu(&p).unwrap();
        let r = base.rank_r as u32;
        let lhs = mu(&p.pow(k)).unwrap().mu;
        let rhs = (&p.pow((r + 1) * (k - 1)) * &base.mu).scale(&q(i64::from(k.pow(r))));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_law(p in nonconstant(1), s in nonconstant(2)) {
        let (mp, ms) = (mu(&p).unwrap(), mu(&s).unwrap());
        let (pe, se) = (p.embed_rank(3, 0), s.embed_rank(3, 1));
        let lhs = mu(&(&pe * &se)).unwrap().mu;
        let rhs = &(&pe.pow(ms.rank_r as u32) * &se.pow(mp.rank_r as u32))
            * &(&mp.mu.embed_rank(3, 0) * &ms.mu.embed_rank(3, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lattice_equivariance(p in nonconstant(2), a in unimodular_2x2()) {
        let ones = [q(1), q(1)];
        let lhs = mu(&p.substitute_monomial(&a, &ones).unwrap()).unwrap().mu;
        let rhs = mu(&p).unwrap().mu.substitute_monomial(&a, &ones).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// GEC passes to every edge of a product of binomial powers.
    #[test]
    fn heredity_on_edges(a in 1i64..=4, b in 1i64..=4, k in 1u32..=3, l in 1u32..=3) {
        let x = LaurentPolynomial::from_terms(2, [(ev(&[0, 0]), q(a)), (ev(&[1, 0]), q(1))]).unwrap();
        let y = LaurentPolynomial::from_terms(2, [(ev(&[0, 0]), q(b)), (ev(&[0, 1]), q(1))]).unwrap();
        let p = &x.pow(k) * &y.pow(l);
        prop_assert_eq!(gec_check(&p).unwrap().verdict, Verdict::GecHolds);
        let np = newton_polytope(&p).unwrap();
        for edge in np.faces(1).unwrap() {
            let pf = chart_polynomial(&p, &edge).unwrap();
            prop_assert!(classify_1d(&pf).unwrap().is_gec);
        }
    }

    #[test]
    fn json_round_trip(p in poly(3, 6)) {
        let text = serde_json::to_string(&p).unwrap();
        let back: LaurentPolynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }
}
