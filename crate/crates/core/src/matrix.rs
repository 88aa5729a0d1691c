//! Dense matrices over an exact field, with the three workhorse operations
//! everything else reduces to: rank, kernel basis, and linear solve.
//!
//! Matrices may have zero rows or zero columns; such shapes show up
//! constantly as Hom spaces and vertex components of modules and must behave
//! uniformly (the kernel of a 0 x n matrix is all of k^n, and so on).
//!
//! Row reduction is plain Gauss-Jordan over the field. Entries are exact, so
//! there are no pivoting concerns beyond picking the first nonzero entry,
//! which also keeps results deterministic.

use crate::scalar::{Field, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        Mat { rows: nrows, cols: ncols, field, entries }
    }

    /// Build from integer entries, mapped into the field.
    pub fn from_i64(field: Field, rows: Vec<Vec<i64>>) -> Self {
        Mat::from_rows(
            field,
            rows.into_iter()
                .map(|r| r.into_iter().map(|n| field.from_i64(n)).collect())
                .collect(),
        )
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zero(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.at(i, j).clone());
            }
        }
        out
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn from_columns(field: Field, rows: usize, cols: Vec<Vec<Scalar>>) -> Mat {
        let mut m = Mat::zero(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot_row else { continue };
            m.swap_rows(row, p);
            let inv = m.at(row, col).inverse();
            for j in col..m.cols {
                let v = m.at(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for j in col..m.cols {
                        let v = m.at(r, j).sub(&factor.mul(m.at(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : self * x = 0}, returned as the columns
    /// of a matrix with self.cols rows. The basis is the canonical one read
    /// off the reduced echelon form (one vector per free column), so it is
    /// deterministic.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> =
            (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(self.field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, self.field.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, r.at(prow, fc).neg());
            }
        }
        out
    }

    /// Solve self * x = rhs for all columns of rhs simultaneously. Returns
    /// one particular solution (free variables set to zero) or None if any
    /// column is inconsistent.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "rhs has wrong number of rows");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // A pivot in the rhs block means an inconsistent column.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(self.field, self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.at(prow, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Basis of the column space: the columns of self at the pivot indices
    /// of the reduced form.
    pub fn column_space_basis(&self) -> Mat {
        let (_, pivots) = self.rref();
        let cols: Vec<Vec<Scalar>> = pivots.iter().map(|&c| self.column(c)).collect();
        Mat::from_columns(self.field, self.rows, cols)
    }

    /// Matrix whose rows span the left annihilator {y : y * self = 0};
    /// it has full row rank self.rows - rank(self). Used to present
    /// quotients by a column-span.
    pub fn left_annihilator(&self) -> Mat {
        self.transpose().kernel_basis().transpose()
    }

    /// Square matrix invertibility via rank.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Mat::identity(self.field, self.rows))?;
        // solve() returns some solution; for square full-rank systems it is
        // the unique inverse. Verify rank via pivots implicitly.
        if self.mul(&sol) == Mat::identity(self.field, self.rows) {
            Some(sol)
        } else {
            None
        }
    }

    /// Power of a square matrix.
    pub fn pow(&self, mut n: usize) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut result = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        result
    }

    /// Flatten to a single column, rows concatenated. The fixed convention
    /// for coordinatizing spaces of matrices.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rank_of_dependent_rows() {
        // Second row is twice the first.
        let m = Mat::from_i64(q(), vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_row_vector() {
        let m = Mat::from_i64(q(), vec![vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols, 1);
        // Kernel spanned by a multiple of (1, -1).
        let ratio = k.at(0, 0).div(k.at(1, 0));
        assert_eq!(ratio, q().from_i64(-1));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn kernel_composes_to_zero() {
        let m = Mat::from_i64(
            q(),
            vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
        );
        let k = m.kernel_basis();
        assert_eq!(m.rank() + k.cols, m.cols);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_is_exact() {
        let m = Mat::from_i64(q(), vec![vec![2, 1], vec![1, 3]]);
        let rhs = Mat::from_i64(q(), vec![vec![1], vec![1]]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul(&x), rhs);
        assert_eq!(*x.at(0, 0), q().fraction(2, 5));
        assert_eq!(*x.at(1, 0), q().fraction(1, 5));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Mat::from_i64(q(), vec![vec![1, 2], vec![2, 4]]);
        let rhs = Mat::from_i64(q(), vec![vec![1], vec![3]]);
        assert!(m.solve(&rhs).is_none());
    }

    #[test]
    fn empty_shapes_behave() {
        let m = Mat::zero(q(), 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().cols, 3);
        let n = Mat::zero(q(), 3, 0);
        assert_eq!(n.rank(), 0);
        assert_eq!(n.kernel_basis().cols, 0);
        let x = m.solve(&Mat::zero(q(), 0, 2)).unwrap();
        assert_eq!((x.rows, x.cols), (3, 2));
        assert!(x.is_zero());
    }

    #[test]
    fn rank_invariant_under_row_permutation() {
        let m = Mat::from_i64(q(), vec![vec![1, 2, 3], vec![0, 1, 1], vec![1, 3, 4]]);
        let p = Mat::from_i64(q(), vec![vec![0, 1, 1], vec![1, 3, 4], vec![1, 2, 3]]);
        assert_eq!(m.rank(), p.rank());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat::from_i64(q(), vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(q(), 2));
        let singular = Mat::from_i64(q(), vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn prime_field_rank() {
        // Over F_2 the rows (1,1) and (1,1) coincide.
        let f2 = Field::Prime(2);
        let m = Mat::from_i64(f2, vec![vec![1, 1], vec![3, 5]]);
        assert_eq!(m.rank(), 1);
        // Over Q the same integer matrix has rank 2.
        let mq = Mat::from_i64(q(), vec![vec![1, 1], vec![3, 5]]);
        assert_eq!(mq.rank(), 2);
    }
}
