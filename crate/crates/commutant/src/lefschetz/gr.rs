//! The associated graded algebra of `A` along a principal ideal `(z)`, and
//! the rank comparison between a commutator element and its filtration
//! truncation.
//!
//! The graded object `A/(z) + (z)/(z^2) + ... + (z^{p-1})/(z^p)` is built by
//! linear filtration: in a Jordan basis of `x z` every basis vector has a
//! well-defined filtration level (the largest `i` with the vector inside
//! `(z^i)`), and the starred multiplication by a form keeps exactly the
//! coefficients connecting equal levels (shifted by one for `z` itself).
//! Sorting the Jordan basis by level groups the levels into blocks of the
//! dual partition sizes; the starred multiplication is then the same thing
//! as conjugating into that order, keeping only the diagonal level blocks,
//! and conjugating back. Both routes are implemented and must agree bit for
//! bit.

use crate::commutator::{is_in_commutator, CommutatorError};
use crate::field::FieldSpec;
use crate::jordan::{jordan_basis, nilpotent_jordan_type};
use crate::matrix::Matrix;
use crate::partition::Partition;

use super::algebra::{ArtinianAlgebra, LinearForm};

/// The associated graded algebra of `(A, z)`, presented in a Jordan basis
/// of `x z` together with the filtration level of each basis vector.
#[derive(Clone, Debug)]
pub struct GrAlgebra {
    jordan_type: Partition,
    h: Matrix,
    h_inv: Matrix,
    levels: Vec<usize>,
}

/// Filtration levels of the standard chain layout of a Jordan first
/// canonical matrix: within a chain of length `h` the columns are
/// `j^(h-1) v, ..., j v, v`, so they lie in `(z^(h-1)), ..., (z), A`.
pub fn chain_levels(t: &Partition) -> Vec<usize> {
    let mut levels = Vec::with_capacity(t.size());
    for &len in t.parts() {
        levels.extend((0..len).rev());
    }
    levels
}

/// Builds the associated graded algebra of `A` along `(z)`.
pub fn gr_algebra(a: &ArtinianAlgebra, z: &LinearForm) -> GrAlgebra {
    let mz = a.mult_matrix(z);
    let h = jordan_basis(&mz).expect("multiplication by a linear form is nilpotent");
    let h_inv = h.inverse().expect("jordan basis is invertible");
    let jordan_type = nilpotent_jordan_type(&mz).expect("nilpotent");
    let levels = chain_levels(&jordan_type);
    GrAlgebra { jordan_type, h, h_inv, levels }
}

impl GrAlgebra {
    pub fn jordan_type(&self) -> &Partition {
        &self.jordan_type
    }

    /// The Jordan basis of `x z` whose columns carry the filtration levels.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.h
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Starred multiplication by `f`, computed by the filtration route: the
    /// coordinates of `f * b` over the Jordan basis are filtered to the
    /// level of `b` shifted by `level_shift` (`0` for forms independent of
    /// `z`, `1` for `z` itself).
    pub fn star_mult_matrix(&self, a: &ArtinianAlgebra, f: &LinearForm, level_shift: usize) -> Matrix {
        let m = a.mult_matrix(f);
        // coordinates of f * (jordan basis) over the jordan basis
        let coords = &(&self.h_inv * &m) * &self.h;
        let n = a.dim();
        Matrix::from_fn(n, n, a.field(), |i, j| {
            if self.levels[i] == self.levels[j] + level_shift {
                coords.get(i, j).clone()
            } else {
                a.field().zero()
            }
        })
    }

    /// The same operator by block surgery: conjugate into the level-sorted
    /// order, keep only the diagonal level blocks, and come back.
    pub fn star_mult_by_truncation(&self, a: &ArtinianAlgebra, f: &LinearForm) -> Matrix {
        let m = a.mult_matrix(f);
        let conj = &(&self.h_inv * &m) * &self.h;
        level_diagonal_truncation(&conj, &self.jordan_type)
    }

    /// Kernel dimension of the starred `z` action, directly from its matrix.
    pub fn star_z_kernel_dim(&self, a: &ArtinianAlgebra, z: &LinearForm) -> usize {
        let star = self.star_mult_matrix(a, z, 1);
        star.nullspace().cols()
    }
}

/// Kernel dimension of the starred `z` action by the ideal-theoretic
/// formula: the sum over levels of
/// `dim ((z^{i-1}) cap (0:z) + (z^i)) - dim (z^i)`.
pub fn star_z_kernel_dim_by_formula(a: &ArtinianAlgebra, z: &LinearForm) -> usize {
    let mz = a.mult_matrix(z);
    let ker = mz.nullspace();
    let p = nilpotent_jordan_type(&mz).expect("nilpotent").parts().first().copied().unwrap_or(0);
    let mut total = 0;
    for i in 1..=p {
        let im_lo = mz.pow(i - 1).column_space_basis();
        let im_hi = mz.pow(i).column_space_basis();
        let meet = super::subspace::intersect_columns(&im_lo, &ker);
        let sum_rank = meet.hstack(&im_hi).rank();
        total += sum_rank - im_hi.cols();
    }
    total
}

/// Permutation matrix sorting the chain layout of `t` by ascending
/// filtration level (stable within a level). The level groups have the dual
/// partition sizes.
fn level_sort_matrix(t: &Partition, field: FieldSpec) -> (Matrix, Vec<usize>) {
    let levels = chain_levels(t);
    let n = t.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (levels[i], i));
    // q has e_{order[k]} as its k-th column; conjugation by q reindexes into
    // the sorted order
    let mut q = Matrix::zeros(n, n, field);
    for (k, &i) in order.iter().enumerate() {
        q.set(i, k, field.one());
    }
    let group_sizes = t.dual().parts().to_vec();
    (q, group_sizes)
}

/// Zeroes every coefficient of `m` (given in the chain layout of a Jordan
/// first canonical matrix of type `t`) that connects two different
/// filtration levels, by explicit block surgery in the level-sorted order.
pub fn level_diagonal_truncation(m: &Matrix, t: &Partition) -> Matrix {
    let field = m.field();
    let (q, group_sizes) = level_sort_matrix(t, field);
    let sorted = &(&q.transpose() * m) * &q;
    let n = t.size();
    let mut kept = Matrix::zeros(n, n, field);
    let mut offset = 0;
    for &s in &group_sizes {
        kept.set_block(offset, offset, &sorted.block(offset, offset, s, s));
        offset += s;
    }
    &(&q * &kept) * &q.transpose()
}

/// Result of comparing `rank(m_truncated + lambda j)` with
/// `rank(m + lambda j)` over a sample of scalars.
///
/// The per-sample inequality may fail at exceptional values of lambda where
/// the full pencil degenerates; the certified comparison is between the
/// maxima, which bound the generic ranks from below.
#[derive(Clone, Debug)]
pub struct DeformationReport {
    /// Per lambda: `(lambda, rank of truncated deformation, rank of full)`.
    pub per_lambda: Vec<(i64, usize, usize)>,
    pub max_truncated: usize,
    pub max_full: usize,
    /// `max_truncated <= max_full`: the semicontinuity-certified inequality.
    pub max_bounded: bool,
    /// Lambdas where the per-sample inequality failed; always a subset of
    /// the lambdas where the full pencil dropped below its own maximum.
    pub exceptional_lambdas: Vec<i64>,
}

/// Builds the filtration truncation of a nilpotent commutator element and
/// compares deformation ranks against the original over the sampled
/// scalars.
pub fn rank_deformation_check(
    m: &Matrix,
    j: &Matrix,
    t: &Partition,
    lambdas: &[i64],
) -> Result<DeformationReport, CommutatorError> {
    let field = m.field();
    if *j != t.jordan_first(field) {
        return Err(CommutatorError::DimensionMismatch);
    }
    if !is_in_commutator(m, j)? {
        return Err(CommutatorError::NotInCommutator);
    }
    if !m.pow(m.rows()).is_zero() {
        return Err(CommutatorError::NotNilpotent);
    }
    let truncated = level_diagonal_truncation(m, t);
    debug_assert!(is_in_commutator(&truncated, j)?);

    let mut per_lambda = Vec::with_capacity(lambdas.len());
    let mut exceptional_lambdas = Vec::new();
    for &l in lambdas {
        let lam = field.from_i64(l);
        let full = (m + &j.scale(&lam)).rank();
        let trunc = (&truncated + &j.scale(&lam)).rank();
        if trunc > full {
            exceptional_lambdas.push(l);
        }
        per_lambda.push((l, trunc, full));
    }
    let max_truncated = per_lambda.iter().map(|&(_, t, _)| t).max().unwrap_or(0);
    let max_full = per_lambda.iter().map(|&(_, _, f)| f).max().unwrap_or(0);
    Ok(DeformationReport {
        per_lambda,
        max_truncated,
        max_full,
        max_bounded: max_truncated <= max_full,
        exceptional_lambdas,
    })
}
