//! Exact linear algebra over the rationals.
//!
//! Ranks and determinants go through fraction-free (Bareiss) elimination on
//! integer matrices obtained by clearing denominators row by row; kernels go
//! through rational reduced row echelon form. The two pipelines are
//! independent, which the tests exploit as a cross-check.

use num::bigint::BigInt;
use num::integer::lcm;
use num::rational::BigRational;
use num::{One, Zero};

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    /// Builds from row vectors.
    ///
    /// # Panics
    ///
    /// Panics if `rows` is empty or ragged.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let nrows = rows.len();
        let cols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have equal length"
        );
        let data = rows.into_iter().flatten().collect();
        RatMatrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-wise integer model: each row is scaled by the least common
    /// multiple of its denominators. Row scaling changes neither rank nor
    /// kernel, and the determinant scale is tracked by the caller.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut m = BigInt::one();
            for c in self.row(i) {
                m = lcm(m, c.denom().clone());
            }
            let ints = self
                .row(i)
                .iter()
                .map(|c| c.numer() * (&m / c.denom()))
                .collect();
            scale *= &m;
            out.push(ints);
        }
        (out, scale)
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let (ints, _) = self.integer_rows();
        bareiss_rank(ints)
    }

    /// Exact determinant of a square matrix.
    ///
    /// # Panics
    ///
    /// Panics if the matrix is not square.
    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let (ints, scale) = self.integer_rows();
        BigRational::new(bareiss_determinant(ints), scale)
    }

    /// Basis of the right kernel, one vector per free column of the reduced
    /// row echelon form, in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (reduced, pivots) = self.rational_rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vector = vec![BigRational::zero(); self.cols];
            vector[free] = BigRational::one();
            for (pivot_row, &pivot_col) in pivots.iter().enumerate() {
                vector[pivot_col] = -reduced[pivot_row][free].clone();
            }
            basis.push(vector);
        }
        basis
    }

    /// Pivot columns of the reduced row echelon form, ascending.
    pub fn rref_pivot_columns(&self) -> Vec<usize> {
        self.rational_rref().1
    }

    fn rational_rref(&self) -> (Vec<Vec<BigRational>>, Vec<usize>) {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].clone();
            for entry in &mut m[row] {
                *entry /= &inv;
            }
            for other in 0..self.rows {
                if other == row || m[other][col].is_zero() {
                    continue;
                }
                let factor = m[other][col].clone();
                for c in col..self.cols {
                    let delta = &factor * &m[row][c];
                    m[other][c] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }
}

/// Rank of an integer matrix by Bareiss elimination. Divisions are exact by
/// Sylvester's determinant identity; pivot columns with no nonzero entry are
/// skipped.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in (rank + 1)..rows {
            for j in (col + 1)..cols {
                let numer = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = numer / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(k, p);
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let numer = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = numer / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}
