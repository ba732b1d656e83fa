//! Integer lattice algebra: exponent vectors, integer matrices, Smith and
//! Hermite normal forms, saturated difference lattices and normalized
//! simplex volumes.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point of the lattice ℤⁿ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn dot(&self, other: &Self) -> i64 {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Greatest common divisor of the entries (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    /// The vector divided by its content; the zero vector is returned as is.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g <= 1 {
            return self.clone();
        }
        Self(self.0.iter().map(|&c| c / g).collect())
    }

    pub fn component_min(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(v: &[i64]) -> Self {
        Self(v.to_vec())
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for ExponentVector {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A dense rectangular matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is needed to describe a
    /// matrix with zero rows.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    pub fn from_vectors(rows: &[ExponentVector], cols: usize) -> Result<Self> {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.as_slice().to_vec()).collect();
        Self::from_rows(&rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row `i` as an exponent vector; fails if an entry does not fit in `i64`.
    pub fn row_vector(&self, i: usize) -> Result<ExponentVector> {
        self.row(i)
            .iter()
            .map(|x| x.to_i64().ok_or(Error::Overflow("matrix entry")))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(bareiss_determinant(self.to_rows()))
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.determinant(), Ok(d) if d.abs().is_one())
    }

    pub fn rank(&self) -> usize {
        hermite_normal_form(&self.to_rows(), self.cols).len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free Gaussian elimination. The empty matrix has determinant 1.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Bareiss elimination on machine integers, `None` on overflow.
pub fn bareiss_determinant_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(i) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Some(0);
            };
            a.swap(i, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    let d = a[n - 1][n - 1];
    Some(if negate { -d } else { d })
}

/// Smith normal form: returns `(U, D, V)` with `A = U·D·V`, `U` and `V`
/// unimodular, and `D` diagonal with nonnegative entries `d_i | d_{i+1}`.
pub fn smith_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    // Every elementary operation applied to D is undone on the outer factor,
    // keeping A = U·D·V invariant.
    let row_add = |d: &mut IntegerMatrix, u: &mut IntegerMatrix, dst: usize, src: usize, k: &BigInt| {
        d.add_row_multiple(dst, src, k);
        u.add_col_multiple(src, dst, &-k);
    };
    let col_add = |d: &mut IntegerMatrix, v: &mut IntegerMatrix, dst: usize, src: usize, k: &BigInt| {
        d.add_col_multiple(dst, src, k);
        v.add_row_multiple(src, dst, &-k);
    };

    for t in 0..m.min(n) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j);
                    if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_rows(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                let q = d.get(i, t).div_floor(d.get(t, t));
                row_add(&mut d, &mut u, i, t, &-q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = d.get(t, j).div_floor(d.get(t, t));
                col_add(&mut d, &mut v, j, t, &-q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the block; otherwise fold an
            // offending row into row t and repeat.
            let piv = d.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&piv)));
            match bad {
                Some(i) => row_add(&mut d, &mut u, t, i, &BigInt::one()),
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_col(t);
        }
    }
    (u, d, v)
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon
/// form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut prow = 0;
    for col in 0..cols {
        if prow == a.len() {
            break;
        }
        loop {
            let pick = (prow..a.len())
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(p) = pick else { break };
            a.swap(prow, p);
            let mut done = true;
            for i in prow + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[prow][col]);
                for j in col..cols {
                    let v = &q * &a[prow][j];
                    a[i][j] -= v;
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[prow][col].is_zero() {
            continue;
        }
        if a[prow][col].is_negative() {
            for x in a[prow].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        for i in 0..prow {
            let q = a[i][col].div_floor(&a[prow][col]);
            if q.is_zero() {
                continue;
            }
            for j in col..cols {
                let v = &q * &a[prow][j];
                a[i][j] -= v;
            }
        }
        prow += 1;
    }
    a.truncate(prow);
    a
}

/// Rank and a basis (as rows, in Hermite normal form) of the saturation of
/// the lattice spanned by the pairwise differences of `points`.
pub fn difference_lattice_basis(points: &[ExponentVector]) -> Result<(usize, IntegerMatrix)> {
    let first = points.first().ok_or(Error::EmptyInput("point list"))?;
    let n = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != n) {
        return Err(Error::RankMismatch { expected: n, found: p.len() });
    }
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| (p - first).as_slice().iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let reduced = hermite_normal_form(&diffs, n);
    let r = reduced.len();
    if r == 0 {
        return Ok((0, IntegerMatrix::zeros(0, n)));
    }
    // With A = U·D·V, the first r rows of V span the saturation of the row
    // lattice of A.
    let a = IntegerMatrix::from_rows(&reduced, n)?;
    let (_, _, v) = smith_normal_form(&a);
    let top: Vec<Vec<BigInt>> = (0..r).map(|i| v.row(i).to_vec()).collect();
    let basis = hermite_normal_form(&top, n);
    Ok((r, IntegerMatrix::from_rows(&basis, n)?))
}

/// An affine lattice chart: `origin + ℤ·basis` with the basis in Hermite
/// normal form, identified with ℤ^rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeChart {
    origin: ExponentVector,
    basis: Vec<ExponentVector>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl LatticeChart {
    /// The identity chart of ℤⁿ.
    pub fn standard(n: usize) -> Self {
        Self {
            origin: ExponentVector::zeros(n),
            basis: (0..n).map(|i| ExponentVector::unit(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    /// The chart of the saturated affine lattice through `points`, based at
    /// the lexicographically smallest point.
    pub fn spanning(points: &[ExponentVector]) -> Result<Self> {
        let origin = points.iter().min().ok_or(Error::EmptyInput("point list"))?.clone();
        let (r, basis) = difference_lattice_basis(points)?;
        let basis = (0..r).map(|i| basis.row_vector(i)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(origin, basis))
    }

    fn from_parts(origin: ExponentVector, basis: Vec<ExponentVector>) -> Self {
        let pivots = basis
            .iter()
            .map(|b| b.as_slice().iter().position(|&c| c != 0).expect("basis rows are nonzero"))
            .collect();
        Self { origin, basis, pivots }
    }

    /// Same lattice, different base point (which must lie on it).
    pub fn with_origin(&self, origin: ExponentVector) -> Result<Self> {
        if self.coordinates(&origin).is_none() {
            return Err(Error::NotInLattice(origin.to_string()));
        }
        Ok(Self::from_parts(origin, self.basis.clone()))
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_rank(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self) -> &ExponentVector {
        &self.origin
    }

    pub fn basis(&self) -> &[ExponentVector] {
        &self.basis
    }

    pub fn is_standard(&self) -> bool {
        self.rank() == self.ambient_rank()
            && self.origin.is_zero()
            && self.basis.iter().enumerate().all(|(i, b)| *b == ExponentVector::unit(b.len(), i))
    }

    /// Coordinates of `point` in the chart, `None` if it is off the lattice.
    pub fn coordinates(&self, point: &ExponentVector) -> Option<ExponentVector> {
        if point.len() != self.ambient_rank() {
            return None;
        }
        let mut d = point - &self.origin;
        let mut c = Vec::with_capacity(self.rank());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if d[p] % b[p] != 0 {
                return None;
            }
            let k = d[p] / b[p];
            for j in p..d.len() {
                d[j] -= k * b[j];
            }
            c.push(k);
        }
        d.is_zero().then_some(ExponentVector(c))
    }

    /// Coordinates of a lattice direction (no origin shift).
    pub fn linear_coordinates(&self, direction: &ExponentVector) -> Option<ExponentVector> {
        self.coordinates(&(&self.origin + direction))
    }

    pub fn embed(&self, coords: &ExponentVector) -> ExponentVector {
        let mut p = self.origin.clone();
        for (b, &k) in self.basis.iter().zip(coords.as_slice()) {
            for j in 0..p.len() {
                p[j] += k * b[j];
            }
        }
        p
    }

    /// Image of a chart direction in the ambient lattice.
    pub fn embed_linear(&self, coords: &ExponentVector) -> ExponentVector {
        &self.embed(coords) - &self.origin
    }
}

/// `r!·vol` of the simplex spanned by `r+1` points, measured in the lattice
/// of `chart` (which has rank `r`). Zero iff the points are affinely
/// dependent.
pub fn simplex_normalized_volume(points: &[ExponentVector], chart: &LatticeChart) -> Result<BigInt> {
    let r = chart.rank();
    if points.len() != r + 1 {
        return Err(Error::ChartRankMismatch { chart: r, points: points.len() });
    }
    let mut rows = Vec::with_capacity(r + 1);
    for p in points {
        let c = chart.coordinates(p).ok_or_else(|| Error::NotInLattice(p.to_string()))?;
        let mut row: Vec<BigInt> = c.as_slice().iter().map(|&x| BigInt::from(x)).collect();
        row.push(BigInt::one());
        rows.push(row);
    }
    Ok(bareiss_determinant(rows).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    fn mat(rows: &[&[i64]], cols: usize) -> IntegerMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntegerMatrix::from_rows(&rows, cols).unwrap()
    }

    fn check_snf(a: &IntegerMatrix) -> IntegerMatrix {
        let (u, d, v) = smith_normal_form(a);
        assert_eq!(u.mul(&d).unwrap().mul(&v).unwrap(), *a);
        assert!(u.is_unimodular());
        assert!(v.is_unimodular());
        let k = d.rows().min(d.cols());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    assert!(d.get(i, j).is_zero());
                }
            }
        }
        for i in 0..k {
            assert!(!d.get(i, i).is_negative());
            if i + 1 < k && !d.get(i, i).is_zero() {
                assert!(d.get(i + 1, i + 1).is_multiple_of(d.get(i, i)));
            }
        }
        d
    }

    #[test]
    fn snf_identity() {
        let i = IntegerMatrix::identity(2);
        let (u, d, v) = smith_normal_form(&i);
        assert_eq!((u, d.clone(), v), (i.clone(), i.clone(), i));
    }

    #[test]
    fn snf_diag_2_3() {
        let d = check_snf(&mat(&[&[2, 0], &[0, 3]], 2));
        assert_eq!(d, mat(&[&[1, 0], &[0, 6]], 2));
    }

    #[test]
    fn snf_single_row() {
        let d = check_snf(&mat(&[&[2, 4]], 2));
        assert_eq!(d, mat(&[&[2, 0]], 2));
    }

    #[test]
    fn snf_zero_and_empty() {
        check_snf(&IntegerMatrix::zeros(2, 3));
        check_snf(&IntegerMatrix::zeros(0, 3));
        check_snf(&IntegerMatrix::zeros(3, 0));
    }

    #[test]
    fn determinants() {
        assert_eq!(IntegerMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
        assert_eq!(mat(&[&[0, 1], &[1, 0]], 2).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(mat(&[&[2, 1, 3], &[0, 0, 1], &[1, 1, 1]], 3).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(bareiss_determinant_i128(vec![vec![0, 2], vec![3, 1]]), Some(-6));
        assert_eq!(bareiss_determinant_i128(vec![vec![0, 2], vec![0, 1]]), Some(0));
        assert!(mat(&[&[1, 2]], 2).determinant().is_err());
    }

    #[test]
    fn hnf_shape() {
        let rows = mat(&[&[2, 4], &[3, 5]], 2).to_rows();
        let h = hermite_normal_form(&rows, 2);
        // lattice has index |det| = 2
        assert_eq!(h, mat(&[&[1, 1], &[0, 2]], 2).to_rows());
    }

    #[test]
    fn difference_lattice_examples() {
        let (r, b) = difference_lattice_basis(&[ev(&[0, 0])]).unwrap();
        assert_eq!((r, b.rows()), (0, 0));

        let (r, b) = difference_lattice_basis(&[ev(&[0, 0]), ev(&[1, 0]), ev(&[0, 1])]).unwrap();
        assert_eq!(r, 2);
        assert_eq!(b, IntegerMatrix::identity(2));

        let (r, b) = difference_lattice_basis(&[ev(&[0, 0]), ev(&[2, 0])]).unwrap();
        assert_eq!(r, 1);
        assert_eq!(b, mat(&[&[1, 0]], 2));

        // span of (2,2),(0,4) saturates to ℤ·(1,1) + ℤ·(0,1)
        let (r, b) = difference_lattice_basis(&[ev(&[0, 0]), ev(&[2, 2]), ev(&[0, 4])]).unwrap();
        assert_eq!(r, 2);
        assert_eq!(b, IntegerMatrix::identity(2));

        // a line of slope 1/2 through 3-space
        let (r, b) = difference_lattice_basis(&[ev(&[1, 1, 1]), ev(&[5, 3, 1])]).unwrap();
        assert_eq!(r, 1);
        assert_eq!(b, mat(&[&[2, 1, 0]], 3));
    }

    #[test]
    fn chart_coordinates_roundtrip() {
        let pts = [ev(&[1, 1, 1]), ev(&[3, 2, 1]), ev(&[1, 1, 4])];
        let chart = LatticeChart::spanning(&pts).unwrap();
        assert_eq!(chart.rank(), 2);
        for p in &pts {
            let c = chart.coordinates(p).unwrap();
            assert_eq!(chart.embed(&c), *p);
        }
        assert!(chart.coordinates(&ev(&[2, 1, 1])).is_none());
        assert!(chart.coordinates(&ev(&[0, 0, 0])).is_none());
    }

    #[test]
    fn simplex_volumes() {
        let std2 = LatticeChart::standard(2);
        assert_eq!(
            simplex_normalized_volume(&[ev(&[0, 0]), ev(&[1, 0]), ev(&[0, 1])], &std2).unwrap(),
            BigInt::from(1)
        );
        let std1 = LatticeChart::standard(1);
        assert_eq!(simplex_normalized_volume(&[ev(&[0]), ev(&[2])], &std1).unwrap(), BigInt::from(2));
        let line = LatticeChart::spanning(&[ev(&[0, 0]), ev(&[1, 0])]).unwrap();
        assert_eq!(
            simplex_normalized_volume(&[ev(&[0, 0]), ev(&[2, 0])], &line).unwrap(),
            BigInt::from(2)
        );
        assert!(simplex_normalized_volume(&[ev(&[0, 0]), ev(&[1, 0])], &std2).is_err());
        // collinear triple in a rank-2 chart
        assert_eq!(
            simplex_normalized_volume(&[ev(&[0, 0]), ev(&[1, 0]), ev(&[2, 0])], &std2).unwrap(),
            BigInt::zero()
        );
    }
}
