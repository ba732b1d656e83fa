//! Double description method for pointed polyhedral cones `{y : A·y ≥ 0}`.
//!
//! Rays are kept primitive in `i64` with `i128` intermediates; adjacency is
//! decided combinatorially from zero sets.

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use crate::lattice::bareiss_determinant_i128;
use crate::{Error, Result};

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<i64>,
    zeros: FixedBitSet,
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn primitive_i128(v: Vec<i128>) -> Result<Vec<i64>> {
    let g = v.iter().fold(0i128, |g, x| g.gcd(x));
    v.into_iter()
        .map(|x| {
            let y = if g > 1 { x / g } else { x };
            i64::try_from(y).map_err(|_| Error::Overflow("double description"))
        })
        .collect()
}

/// Greedily picks row indices forming a basis of the row space.
fn independent_rows(a: &[Vec<i64>], d: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    // Row-reduced copies of the chosen rows over i128, kept fraction-free.
    let mut reduced: Vec<(usize, Vec<i128>)> = Vec::new();
    for (i, row) in a.iter().enumerate() {
        if chosen.len() == d {
            break;
        }
        let mut r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
        for (p, b) in &reduced {
            if r[*p] != 0 {
                let (f, g) = (b[*p], r[*p]);
                for j in 0..d {
                    r[j] = r[j] * f - b[j] * g;
                }
                let c = r.iter().fold(0i128, |acc, x| acc.gcd(x));
                if c > 1 {
                    r.iter_mut().for_each(|x| *x /= c);
                }
            }
        }
        if let Some(p) = r.iter().position(|&x| x != 0) {
            chosen.push(i);
            reduced.push((p, r));
        }
    }
    chosen
}

/// Extreme rays of the pointed cone `{y ∈ ℝ^d : A·y ≥ 0}` as primitive
/// integer vectors, sorted. Errors if the cone is not pointed (the rows of
/// `A` do not span ℝ^d).
pub fn extreme_rays(a: &[Vec<i64>], d: usize) -> Result<Vec<Vec<i64>>> {
    if a.iter().any(|r| r.len() != d) {
        return Err(Error::DimensionMismatch("constraint row length".into()));
    }
    let basis = independent_rows(a, d);
    if basis.len() < d {
        return Err(Error::InvalidArgument("cone is not pointed".into()));
    }
    let m = a.len();
    let b: Vec<Vec<i128>> = basis.iter().map(|&i| a[i].iter().map(|&x| x as i128).collect()).collect();

    // Initial simplicial cone: ray j is orthogonal to all basis rows but j,
    // computed by cofactor expansion and oriented so that row j is positive.
    let mut rays = Vec::with_capacity(d);
    for j in 0..d {
        let mut v = Vec::with_capacity(d);
        for k in 0..d {
            let minor: Vec<Vec<i128>> = (0..d)
                .filter(|&i| i != j)
                .map(|i| (0..d).filter(|&c| c != k).map(|c| b[i][c]).collect())
                .collect();
            let det = bareiss_determinant_i128(minor).ok_or(Error::Overflow("double description"))?;
            v.push(if (j + k) % 2 == 0 { det } else { -det });
        }
        let mut v = primitive_i128(v)?;
        if dot(&a[basis[j]], &v) < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        let mut zeros = FixedBitSet::with_capacity(m);
        for (jj, &i) in basis.iter().enumerate() {
            if jj != j {
                zeros.insert(i);
            }
        }
        rays.push(Ray { v, zeros });
    }

    let mut in_basis = FixedBitSet::with_capacity(m);
    basis.iter().for_each(|&i| in_basis.insert(i));
    for i in 0..m {
        if in_basis.contains(i) {
            continue;
        }
        let row = &a[i];
        let s: Vec<i128> = rays.iter().map(|r| dot(row, &r.v)).collect();
        if s.iter().all(|&x| x >= 0) {
            for (r, &x) in rays.iter_mut().zip(&s) {
                if x == 0 {
                    r.zeros.insert(i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| s[k] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| s[k] < 0).collect();
        let mut next: Vec<Ray> = Vec::new();
        for p in &pos {
            for n in &neg {
                let mut z = rays[*p].zeros.clone();
                z.intersect_with(&rays[*n].zeros);
                if z.count_ones(..) + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == *p || k == *n || !z.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let (sp, sn) = (s[*p], s[*n]);
                let v: Vec<i128> = rays[*p]
                    .v
                    .iter()
                    .zip(&rays[*n].v)
                    .map(|(&vp, &vn)| {
                        (sp.checked_mul(vn as i128)?).checked_sub(sn.checked_mul(vp as i128)?)
                    })
                    .collect::<Option<Vec<_>>>()
                    .ok_or(Error::Overflow("double description"))?;
                let mut zeros = z;
                zeros.insert(i);
                next.push(Ray { v: primitive_i128(v)?, zeros });
            }
        }
        for (k, r) in rays.into_iter().enumerate() {
            if s[k] > 0 {
                next.push(r);
            } else if s[k] == 0 {
                let mut r = r;
                r.zeros.insert(i);
                next.push(r);
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<i64>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_orthant() {
        let a = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(extreme_rays(&a, 2).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn square_cone() {
        // homogenized square [0,1]^2: t ≥ 0 implied; rows (1,x,y)·(a,u1,u2) ≥ 0
        let pts = [[0, 0], [1, 0], [0, 1], [1, 1]];
        let a: Vec<Vec<i64>> = pts.iter().map(|p| vec![1, p[0], p[1]]).collect();
        let rays = extreme_rays(&a, 3).unwrap();
        assert_eq!(rays, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, -1, 0], vec![1, 0, -1]]);
    }

    #[test]
    fn redundant_rows_and_not_pointed() {
        let a = vec![vec![1, 0], vec![2, 1], vec![0, 1], vec![1, 1]];
        assert_eq!(extreme_rays(&a, 2).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert!(extreme_rays(&[vec![1, 1]], 2).is_err());
    }

    #[test]
    fn octahedron_facets() {
        let mut pts = Vec::new();
        for i in 0..3 {
            for s in [-1, 1] {
                let mut p = vec![1, 0, 0, 0];
                p[i + 1] = s;
                pts.push(p);
            }
        }
        let rays = extreme_rays(&pts, 4).unwrap();
        assert_eq!(rays.len(), 8);
        assert!(rays.iter().all(|r| r[0] == 1 && r[1..].iter().all(|x| x.abs() == 1)));
    }
}
