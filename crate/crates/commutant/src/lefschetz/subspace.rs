//! Graded subspaces of an Artinian algebra and their quotients.
//!
//! A subspace is stored degree by degree: one column-basis matrix per
//! graded piece, in the coordinates of the monomial basis of that piece.
//! Sums, intersections and operator kernels/images of graded maps stay
//! graded, so everything here reduces to per-degree exact linear algebra.

use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::partition::Partition;

use super::algebra::{ArtinianAlgebra, LinearForm};

#[derive(Clone, Debug)]
pub struct GradedSubspace {
    field: FieldSpec,
    pieces: Vec<Matrix>, // pieces[d]: h_d x k_d, columns span the degree-d part
}

impl GradedSubspace {
    pub fn zero(a: &ArtinianAlgebra) -> Self {
        let pieces =
            a.hilbert().iter().map(|&h| Matrix::zeros(h, 0, a.field())).collect();
        GradedSubspace { field: a.field(), pieces }
    }

    pub fn full(a: &ArtinianAlgebra) -> Self {
        let pieces = a.hilbert().iter().map(|&h| Matrix::identity(h, a.field())).collect();
        GradedSubspace { field: a.field(), pieces }
    }

    /// Kernel of multiplication by `op^power` as a graded subspace
    /// (`op` must be the matrix of a linear form).
    pub fn kernel_of_power(a: &ArtinianAlgebra, op: &Matrix, power: usize) -> Self {
        let p = op.pow(power);
        let pieces = (0..a.hilbert().len())
            .map(|d| a.degree_block(&p, d, power).nullspace())
            .collect();
        GradedSubspace { field: a.field(), pieces }
    }

    /// Image of multiplication by `op^power` as a graded subspace.
    pub fn image_of_power(a: &ArtinianAlgebra, op: &Matrix, power: usize) -> Self {
        let p = op.pow(power);
        let h = a.hilbert();
        let pieces = (0..h.len())
            .map(|d| {
                if d < power {
                    Matrix::zeros(h[d], 0, a.field())
                } else {
                    a.degree_block(&p, d - power, power).column_space_basis()
                }
            })
            .collect();
        GradedSubspace { field: a.field(), pieces }
    }

    pub fn piece(&self, d: usize) -> &Matrix {
        &self.pieces[d]
    }

    pub fn num_degrees(&self) -> usize {
        self.pieces.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Matrix::cols).collect()
    }

    pub fn dim(&self) -> usize {
        self.pieces.iter().map(Matrix::cols).sum()
    }

    pub fn sum(&self, other: &GradedSubspace) -> GradedSubspace {
        let pieces = self
            .pieces
            .iter()
            .zip(&other.pieces)
            .map(|(u, v)| u.hstack(v).column_space_basis())
            .collect();
        GradedSubspace { field: self.field, pieces }
    }

    pub fn intersect(&self, other: &GradedSubspace) -> GradedSubspace {
        let pieces = self
            .pieces
            .iter()
            .zip(&other.pieces)
            .map(|(u, v)| intersect_columns(u, v))
            .collect();
        GradedSubspace { field: self.field, pieces }
    }

    /// Whether `sub` is contained in `self`, degree by degree.
    pub fn contains(&self, sub: &GradedSubspace) -> bool {
        self.pieces.iter().zip(&sub.pieces).all(|(u, v)| {
            if v.cols() == 0 {
                return true;
            }
            u.hstack(v).rank() == u.rank()
        })
    }
}

/// Basis of the intersection of two column spans (same ambient space).
pub(crate) fn intersect_columns(u: &Matrix, v: &Matrix) -> Matrix {
    if u.cols() == 0 || v.cols() == 0 {
        return Matrix::zeros(u.rows(), 0, u.field());
    }
    // solutions of u x = v y: nullspace of [u | -v]
    let stacked = u.hstack(&-v);
    let ns = stacked.nullspace();
    let x_part = ns.block(0, 0, u.cols(), ns.cols());
    (u * &x_part).column_space_basis()
}

/// A graded subquotient `V / W` with explicit complement representatives.
///
/// Representatives are the columns of `V`'s degree pieces that survive
/// pivoting against `W`'s pieces, lowest index first, so the choice is
/// deterministic.
#[derive(Clone, Debug)]
pub struct GradedModule {
    field: FieldSpec,
    reps: Vec<Matrix>,     // per degree: ambient-coordinate representatives
    w_pieces: Vec<Matrix>, // per degree: basis of the submodule being killed
    hilbert: Vec<usize>,
}

impl GradedModule {
    /// Builds `v / w`; requires `w` to be contained in `v`.
    pub fn quotient(v: &GradedSubspace, w: &GradedSubspace) -> Self {
        assert!(v.contains(w), "quotient requires w inside v");
        let mut reps = Vec::with_capacity(v.num_degrees());
        let mut w_pieces = Vec::with_capacity(v.num_degrees());
        let mut hilbert = Vec::with_capacity(v.num_degrees());
        for d in 0..v.num_degrees() {
            let wp = w.piece(d);
            let vp = v.piece(d);
            // pivots of [W | V] falling in the V part select representatives
            let (_, pivots) = wp.hstack(vp).rref();
            let chosen: Vec<usize> =
                pivots.iter().filter(|&&c| c >= wp.cols()).map(|&c| c - wp.cols()).collect();
            let mut r = Matrix::zeros(vp.rows(), chosen.len(), vp.field());
            for (k, &c) in chosen.iter().enumerate() {
                for i in 0..vp.rows() {
                    r.set(i, k, vp.get(i, c).clone());
                }
            }
            hilbert.push(r.cols());
            reps.push(r);
            w_pieces.push(wp.clone());
        }
        GradedModule { field: v.field, reps, w_pieces, hilbert }
    }

    /// Per-degree dimensions (indexed by ambient degree).
    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    /// Hilbert values from the first nonzero degree through the last.
    pub fn hilbert_window(&self) -> (usize, Vec<usize>) {
        let lo = self.hilbert.iter().position(|&d| d > 0).unwrap_or(0);
        let hi = self.hilbert.iter().rposition(|&d| d > 0).map(|i| i + 1).unwrap_or(lo);
        (lo, self.hilbert[lo..hi].to_vec())
    }

    pub fn dim(&self) -> usize {
        self.hilbert.iter().sum()
    }

    /// Matrix of the action induced by multiplication with `f` on the
    /// quotient, in the chosen representative basis, ordered by degree.
    pub fn induced_action(&self, a: &ArtinianAlgebra, f: &LinearForm) -> Matrix {
        let m = a.mult_matrix(f);
        let n = self.dim();
        let mut out = Matrix::zeros(n, n, self.field);
        let mut col_offset = 0;
        let degree_offset: Vec<usize> = {
            let mut acc = 0;
            self.hilbert
                .iter()
                .map(|&h| {
                    let o = acc;
                    acc += h;
                    o
                })
                .collect()
        };
        for d in 0..self.reps.len() {
            let rd = &self.reps[d];
            if rd.cols() == 0 {
                continue;
            }
            if d + 1 >= self.reps.len() {
                col_offset += rd.cols();
                continue;
            }
            let block = a.degree_block(&m, d, 1);
            let image = &block * rd;
            // express image columns over [reps_{d+1} | w_{d+1}]
            let next_reps = &self.reps[d + 1];
            let basis = next_reps.hstack(&self.w_pieces[d + 1]);
            if basis.cols() == 0 {
                debug_assert!(image.is_zero(), "image must vanish when the next piece is zero");
                col_offset += rd.cols();
                continue;
            }
            let coords = basis
                .solve(&image)
                .expect("multiplication keeps the subspace, so coordinates exist");
            for k in 0..rd.cols() {
                for i in 0..next_reps.cols() {
                    out.set(degree_offset[d + 1] + i, col_offset + k, coords.get(i, k).clone());
                }
            }
            col_offset += rd.cols();
        }
        out
    }

    /// Jordan type of the induced action of `f` (nilpotent because the
    /// action raises degree).
    pub fn induced_jordan_type(&self, a: &ArtinianAlgebra, f: &LinearForm) -> Partition {
        let m = self.induced_action(a, f);
        crate::jordan::nilpotent_jordan_type(&m).expect("degree-raising action is nilpotent")
    }
}
