//! Sparse matrices over the exact rationals.
//!
//! Representation matrices of U(gl(3)) generators are very sparse (a GT
//! generator touches at most a handful of basis diagrams), so entries live
//! in a map and zero entries are never stored. Determinants go through
//! fraction-free Bareiss elimination over the integers after clearing
//! denominators row by row; rank, kernels, and linear solves use ordinary
//! exact Gaussian elimination, which is plenty fast at the dimensions that
//! occur here (a few dozen up to a couple of hundred).

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::integer::lcm;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: BTreeMap<(usize, usize), Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if v.is_zero() {
            self.data.remove(&(i, j));
        } else {
            self.data.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.data.iter()
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for ((i, j), v) in &other.data {
            out.set(*i, *j, out.get(*i, *j) + v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = RationalMatrix::zero(self.rows, self.cols);
        for ((i, j), v) in &self.data {
            out.set(*i, *j, v * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        // Bucket the right factor by row so we only touch nonzero products.
        let mut rows_of_other: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for ((k, j), v) in &other.data {
            rows_of_other.entry(*k).or_default().push((*j, v));
        }
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for ((i, k), a) in &self.data {
            if let Some(row) = rows_of_other.get(k) {
                for (j, b) in row {
                    out.set(*i, *j, out.get(*i, *j) + a * *b);
                }
            }
        }
        Ok(out)
    }

    /// A·v for a column vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != v.len() {
            return Err(Error::ShapeMismatch(self.rows, self.cols, v.len(), 1));
        }
        let mut out = vec![Rational::zero(); self.rows];
        for ((i, j), a) in &self.data {
            if !v[*j].is_zero() {
                out[*i] += a * &v[*j];
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = RationalMatrix::zero(self.cols, self.rows);
        for ((i, j), v) in &self.data {
            out.set(*j, *i, v.clone());
        }
        out
    }

    pub fn trace(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(self.rows, self.cols, self.cols, self.rows));
        }
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    /// [A, B] = AB - BA.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    fn dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::zero(); self.cols]; self.rows];
        for ((i, j), v) in &self.data {
            d[*i][*j] = v.clone();
        }
        d
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(self.rows, self.cols, self.cols, self.rows));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators row by row; det scales by the product of the
        // clearing factors.
        let dense = self.dense();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut scale = Rational::one();
        for row in &dense {
            let mut l = BigInt::one();
            for v in row {
                l = lcm(l, v.denom().clone());
            }
            scale *= Rational::from_integer(l.clone());
            m.push(row.iter().map(|v| v.numer() * (&l / v.denom())).collect());
        }

        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(Rational::from_integer(sign * m[n - 1][n - 1].clone()) / scale)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m = self.dense();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].clone().recip();
            for j in c..self.cols {
                m[r][j] = &m[r][j] * &inv;
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        m[i][j] = &m[i][j] - &f * &m[r][j];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A x = b, if consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for ((i, j), v) in &self.data {
            aug.set(*i, *j, v.clone());
        }
        for (i, v) in b.iter().enumerate() {
            aug.set(i, self.cols, v.clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = m[row][self.cols].clone();
        }
        Some(x)
    }

    /// Columns assembled from vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let rows = cols.first().map_or(0, |c| c.len());
        let mut m = RationalMatrix::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn from_rows(rows: &[&[i64]]) -> RationalMatrix {
        let mut m = RationalMatrix::zero(rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, rat(*v));
            }
        }
        m
    }

    /// Cofactor expansion along the first row; independent check for `det`.
    fn det_cofactor(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return rat(1);
        }
        if n == 1 {
            return m.get(0, 0);
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let a = m.get(0, j);
            if a.is_zero() {
                continue;
            }
            let mut minor = RationalMatrix::zero(n - 1, n - 1);
            for i in 1..n {
                let mut jj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    minor.set(i - 1, jj, m.get(i, k));
                    jj += 1;
                }
            }
            let s = if j % 2 == 0 { rat(1) } else { rat(-1) };
            acc += s * a * det_cofactor(&minor);
        }
        acc
    }

    #[test]
    fn identity_facts() {
        let i3 = RationalMatrix::identity(3);
        assert_eq!(i3.trace().unwrap(), rat(3));
        assert_eq!(i3.det().unwrap(), rat(1));
        let m = from_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(i3.mul(&m).unwrap_err(), Error::ShapeMismatch(3, 3, 2, 2));
    }

    #[test]
    fn det_two_by_two() {
        let m = from_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det().unwrap(), rat(-2));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn det_with_fractions() {
        let mut m = RationalMatrix::zero(2, 2);
        m.set(0, 0, ratio(1, 2));
        m.set(0, 1, ratio(1, 3));
        m.set(1, 0, ratio(1, 5));
        m.set(1, 1, ratio(1, 7));
        assert_eq!(m.det().unwrap(), ratio(1, 14) - ratio(1, 15));
        assert_eq!(m.det().unwrap(), det_cofactor(&m));
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = from_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = from_rows(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let sing = from_rows(&[&[1, 1], &[2, 2]]);
        assert!(sing.solve(&[rat(1), rat(3)]).is_none());
    }

    #[test]
    fn commutator_of_commuting_is_zero() {
        let a = from_rows(&[&[1, 0], &[0, 2]]);
        let b = from_rows(&[&[3, 0], &[0, 4]]);
        assert!(a.commutator(&b).unwrap().is_zero());
    }

    proptest! {
        // Bareiss agrees with cofactor expansion on small random matrices.
        #[test]
        fn det_matches_cofactor(entries in proptest::collection::vec(-9i64..10, 16)) {
            let mut m = RationalMatrix::zero(4, 4);
            for i in 0..4 {
                for j in 0..4 {
                    m.set(i, j, rat(entries[4 * i + j]));
                }
            }
            prop_assert_eq!(m.det().unwrap(), det_cofactor(&m));
        }

        // rank + kernel dimension = number of columns
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..4, 12)) {
            let mut m = RationalMatrix::zero(3, 4);
            for i in 0..3 {
                for j in 0..4 {
                    m.set(i, j, rat(entries[4 * i + j]));
                }
            }
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), 4);
        }
    }
}
