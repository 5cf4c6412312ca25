//! Exact linear algebra over the rationals.
//!
//! Everything here works with [`Q`] (arbitrary precision rationals). Row
//! reduction is plain Gauss-Jordan elimination; all the systems solved by the
//! rest of the crate are per-weight-space blocks, so they stay small.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses the `p/q` (or bare integer) form produced by [`fmt_q`].
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Dense row-major matrix with rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, x) in row.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let qrows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Self::from_rows(&qrows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Reduces `self` to reduced row echelon form in place and returns the
    /// pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(lead, p);
            let inv = self[(lead, c)].recip();
            for k in c..self.cols {
                let v = &self[(lead, k)] * &inv;
                self[(lead, k)] = v;
            }
            for r in 0..self.rows {
                if r == lead || self[(r, c)].is_zero() {
                    continue;
                }
                let factor = self[(r, c)].clone();
                for k in c..self.cols {
                    if self[(lead, k)].is_zero() {
                        continue;
                    }
                    let v = &self[(lead, k)] * &factor;
                    self[(r, k)] -= v;
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Q::zero(); self.cols];
                x[f] = Q::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -m[(r, f)].clone();
                }
                x
            })
            .collect()
    }

    /// Some solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }
}

/// Indices of a maximal linearly independent subfamily, chosen greedily from
/// the front.
pub fn independent_subset(vectors: &[Vec<Q>]) -> Vec<usize> {
    let Some(len) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    Matrix::from_cols(len, vectors).rref()
}

pub fn rank_of(vectors: &[Vec<Q>]) -> usize {
    independent_subset(vectors).len()
}

/// Echelon basis of the span of `vectors`.
pub fn span_basis(vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_rows(vectors);
    let k = m.rref().len();
    (0..k).map(|r| m.row(r).to_vec()).collect()
}

pub fn in_span(vectors: &[Vec<Q>], v: &[Q]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    Matrix::from_cols(v.len(), vectors).solve(v).is_some()
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect_spans(len: usize, a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve sum x_i a_i - sum y_j b_j = 0; the a-part of each kernel vector
    // spans the intersection.
    let mut cols: Vec<Vec<Q>> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x.clone()).collect::<Vec<_>>()));
    let kernel = Matrix::from_cols(len, &cols).nullspace();
    let images: Vec<Vec<Q>> = kernel
        .iter()
        .map(|x| {
            let mut v = vec![Q::zero(); len];
            for (coef, ai) in x.iter().zip(a) {
                if coef.is_zero() {
                    continue;
                }
                for (vk, ak) in v.iter_mut().zip(ai) {
                    *vk += coef * ak;
                }
            }
            v
        })
        .collect();
    span_basis(&images)
}

/// Returns `Some(t)` when `v = t * w` for a positive rational `t`.
pub fn positive_multiple(v: &[Q], w: &[Q]) -> Option<Q> {
    let mut ratio: Option<Q> = None;
    for (a, b) in v.iter().zip(w) {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => {}
            (false, false) => {
                let t = a / b;
                match &ratio {
                    None => ratio = Some(t),
                    Some(r) if *r == t => {}
                    Some(_) => return None,
                }
            }
            _ => return None,
        }
    }
    ratio.filter(|t| t.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let m = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.nullspace();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_i64(&[vec![1, 1], vec![2, 2]]);
        assert!(m.solve(&[q(1), q(3)]).is_none());
        let x = m.solve(&[q(1), q(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(1), q(2)]);
    }

    #[test]
    fn intersection_of_planes() {
        let a = vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]];
        let b = vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]];
        let i = intersect_spans(3, &a, &b);
        assert_eq!(i.len(), 1);
        assert!(in_span(&[vec![q(0), q(1), q(0)]], &i[0]));
    }

    #[test]
    fn positive_multiples() {
        assert_eq!(positive_multiple(&[q(2), q(0)], &[q(1), q(0)]), Some(q(2)));
        assert_eq!(positive_multiple(&[q(-2), q(0)], &[q(1), q(0)]), None);
        assert_eq!(positive_multiple(&[q(2), q(4)], &[q(1), q(0)]), None);
        assert_eq!(positive_multiple(&[q(0), q(0)], &[q(0), q(0)]), None);
    }

    #[test]
    fn rational_text_roundtrip() {
        let x = q_frac(-3, 6);
        assert_eq!(fmt_q(&x), "-1/2");
        assert_eq!(parse_q("-1/2"), Some(x));
        assert_eq!(parse_q("4"), Some(q(4)));
        assert_eq!(parse_q("1/0"), None);
    }
}
