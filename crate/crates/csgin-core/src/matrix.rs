//! Dense exact linear algebra over a coefficient field.
//!
//! Gaussian elimination with first-nonzero pivoting; everything is
//! deterministic and exact.  Matrices at desk scale are tiny (tens of rows),
//! so no fraction-free or modular tricks are needed.

use crate::field::Field;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    a: Vec<Vec<F::Elem>>,
}

impl<F: Field> Mat<F> {
    pub fn new(field: F, a: Vec<Vec<F::Elem>>) -> Self {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
        Mat { field, rows, cols, a }
    }

    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let a = vec![vec![field.zero(); cols]; rows];
        Mat { field, rows, cols, a }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.a[i][i] = m.field.one();
        }
        m
    }

    pub fn from_i64(field: F, rows: &[&[i64]]) -> Self {
        let a = rows
            .iter()
            .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
            .collect();
        Mat::new(field, a)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn entry(&self, i: usize, j: usize) -> &F::Elem {
        &self.a[i][j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.a[i][j] = v;
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.a[i]
    }
    pub fn into_rows(self) -> Vec<Vec<F::Elem>> {
        self.a
    }

    pub fn transpose(&self) -> Mat<F> {
        let mut t = Mat::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.a[j][i] = self.a[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Mat::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if f.is_zero(&self.a[i][k]) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul(&self.a[i][k], &other.a[k][j]);
                    out.a[i][j] = f.add(&out.a[i][j], &prod);
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref(&self) -> (Mat<F>, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(&m.a[i][c])) else {
                continue;
            };
            m.a.swap(r, pr);
            let inv = f.inv(&m.a[r][c]);
            for j in c..m.cols {
                m.a[r][j] = f.mul(&m.a[r][j], &inv);
            }
            for i in 0..m.rows {
                if i != r && !f.is_zero(&m.a[i][c]) {
                    let factor = m.a[i][c].clone();
                    for j in c..m.cols {
                        let sub = f.mul(&factor, &m.a[r][j]);
                        m.a[i][j] = f.sub(&m.a[i][j], &sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Index of the first row that is linearly dependent on the rows above
    /// it, if any.  Used to report rank-deficiency witnesses.
    pub fn dependent_row(&self) -> Option<usize> {
        for k in 1..=self.rows {
            let head = Mat::new(self.field.clone(), self.a[..k].to_vec());
            if head.rank() < k {
                return Some(k - 1);
            }
        }
        None
    }

    /// Determinant of a square matrix.  Panics if the matrix is not square.
    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols, "determinant of a nonsquare matrix");
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !f.is_zero(&m.a[i][c])) else {
                return f.zero();
            };
            if pr != c {
                m.a.swap(c, pr);
                det = f.neg(&det);
            }
            det = f.mul(&det, &m.a[c][c]);
            let inv = f.inv(&m.a[c][c]);
            for i in c + 1..m.rows {
                if f.is_zero(&m.a[i][c]) {
                    continue;
                }
                let factor = f.mul(&m.a[i][c], &inv);
                for j in c..m.cols {
                    let sub = f.mul(&factor, &m.a[c][j]);
                    m.a[i][j] = f.sub(&m.a[i][j], &sub);
                }
            }
        }
        det
    }

    /// Basis of the right kernel `{v : Av = 0}`, one vector per non-pivot
    /// column, in column order.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&r.a[row][free]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a nonsquare matrix");
        let f = self.field.clone();
        let n = self.rows;
        let mut aug = Mat::zero(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.a[i][j] = self.a[i][j].clone();
            }
            aug.a[i][n + i] = f.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return None;
        }
        let mut inv = Mat::zero(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.a[i][j] = r.a[i][n + j].clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}
