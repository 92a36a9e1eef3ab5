//! Dense exact matrices over `FieldSpec` with rank, reduced row echelon
//! form, nullspace, solving and inversion.
//!
//! Pivoting always selects the first nonzero entry in column order, so every
//! result is deterministic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldSpec, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Convenience constructor from integer rows, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]], field: FieldSpec) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(r, c, field, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| self.get(i, j).clone() * s.clone())
    }

    /// Rectangular block copy with corner `(r0, c0)` and shape `(h, w)`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Matrix {
        assert!(r0 + h <= self.rows && c0 + w <= self.cols, "block out of range");
        Matrix::from_fn(h, w, self.field, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        assert!(r0 + m.rows <= self.rows && c0 + m.cols <= self.cols, "block out of range");
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.set(r0 + i, c0 + j, m.get(i, j).clone());
            }
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { other.get(i, j - self.cols).clone() }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Matrix::from_fn(self.rows + other.rows, self.cols, self.field, |i, j| {
            if i < self.rows { self.get(i, j).clone() } else { other.get(i - self.rows, j).clone() }
        })
    }

    pub fn column(&self, j: usize) -> Matrix {
        self.block(0, j, self.rows, 1)
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows, self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Row-reduce in place to reduced row echelon form; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // first nonzero entry in this column at or below row r
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inverse();
            for j in c..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j).clone() - factor.clone() * self.get(r, j).clone();
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Columns of the result form a basis of the kernel. The basis is the
    /// standard one read off the RREF, with free variables in column order.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len(), self.field);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, self.field.one());
            for (pi, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -r.get(pi, fc).clone());
            }
        }
        basis
    }

    /// Solves `self * x = rhs` (one column per rhs column); `None` when
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols, self.field);
        for (pi, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(pi, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n, self.field));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    /// Exact determinant by Gaussian elimination.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = -det;
            }
            det *= m.get(c, c).clone();
            let inv = m.get(c, c).inverse();
            for i in c + 1..n {
                if !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone() * inv.clone();
                    for j in c..n {
                        let v = m.get(i, j).clone() - factor.clone() * m.get(c, j).clone();
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// A deterministic basis of the column space: the columns of `self`
    /// whose indices are pivot columns of the RREF.
    pub fn column_space_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        let mut b = Matrix::zeros(self.rows, pivots.len(), self.field);
        for (k, &c) in pivots.iter().enumerate() {
            for i in 0..self.rows {
                b.set(i, k, self.get(i, c).clone());
            }
        }
        b
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "add shape mismatch");
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).clone() + rhs.get(i, j).clone()
        })
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "sub shape mismatch");
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).clone() - rhs.get(i, j).clone()
        })
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| -self.get(i, j).clone())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(3, q()).rank(), 3);
        assert_eq!(Matrix::zeros(4, 2, q()).rank(), 0);
    }

    #[test]
    fn nullspace_dimensions() {
        // identity: empty kernel
        assert_eq!(Matrix::identity(4, q()).nullspace().cols(), 0);
        // zero 1x3: full kernel
        let z = Matrix::zeros(1, 3, q());
        let ns = z.nullspace();
        assert_eq!(ns.cols(), 3);
        // single Jordan cell of size 3: kernel spanned by the first unit vector
        let cell = Matrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]], q());
        let ns = cell.nullspace();
        assert_eq!(ns.cols(), 1);
        assert!(ns.get(0, 0).is_one());
        assert!(ns.get(1, 0).is_zero() && ns.get(2, 0).is_zero());
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]], q());
        assert_eq!(m.rank() + m.nullspace().cols(), 3);
        let prod = &m * &m.nullspace();
        assert!(prod.is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_i64_rows(&[&[2, 1], &[1, 1]], q());
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2, q()));
        let b = Matrix::from_i64_rows(&[&[3], &[2]], q());
        let x = m.solve(&b).unwrap();
        assert_eq!(&m * &x, b);
        // inconsistent system
        let s = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]], q());
        let b = Matrix::from_i64_rows(&[&[0], &[1]], q());
        assert!(s.solve(&b).is_none());
    }

    #[test]
    fn determinant_basic() {
        let m = Matrix::from_i64_rows(&[&[2, 1], &[1, 1]], q());
        assert_eq!(m.determinant(), q().from_i64(1));
        let s = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]], q());
        assert!(s.determinant().is_zero());
        // a row swap flips the sign
        let p = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]], q());
        assert_eq!(p.determinant(), q().from_i64(-1));
        let m3 = Matrix::from_i64_rows(&[&[0, 2, 1], &[1, 0, 0], &[3, 0, 1]], q());
        assert_eq!(m3.determinant(), q().from_i64(-2));
    }

    #[test]
    fn rref_is_deterministic_first_pivot() {
        let m = Matrix::from_i64_rows(&[&[0, 2], &[3, 0]], q());
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, Matrix::identity(2, q()));
    }

    #[test]
    fn finite_field_rank() {
        let f = FieldSpec::prime(5).unwrap();
        // 2x2 matrix singular mod 5 but invertible over Q
        let m = Matrix::from_i64_rows(&[&[1, 2], &[3, 1]], f);
        assert_eq!(m.rank(), 1);
        let mq = Matrix::from_i64_rows(&[&[1, 2], &[3, 1]], q());
        assert_eq!(mq.rank(), 2);
    }
}
