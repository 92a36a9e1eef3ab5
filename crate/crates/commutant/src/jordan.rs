//! Jordan type and Jordan bases of nilpotent matrices.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JordanError {
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not square")]
    NotSquare,
}

/// Successive powers `I, j, j^2, ...` up to and including the first zero
/// power. Errors if `j^n` is still nonzero.
fn nilpotent_powers(j: &Matrix) -> Result<Vec<Matrix>, JordanError> {
    if !j.is_square() {
        return Err(JordanError::NotSquare);
    }
    let n = j.rows();
    let mut powers = vec![Matrix::identity(n, j.field())];
    for _ in 0..n {
        let next = &powers[powers.len() - 1] * j;
        let done = next.is_zero();
        powers.push(next);
        if done {
            return Ok(powers);
        }
    }
    if n == 0 {
        return Ok(powers);
    }
    Err(JordanError::NotNilpotent)
}

/// The block-size partition of a nilpotent matrix. The number of parts of
/// size >= k equals `rank(j^(k-1)) - rank(j^k)`, so the i-th part of the
/// dual partition is exactly that rank difference.
pub fn nilpotent_jordan_type(j: &Matrix) -> Result<Partition, JordanError> {
    let powers = nilpotent_powers(j)?;
    let ranks: Vec<usize> = powers.iter().map(Matrix::rank).collect();
    let mut dual_parts = Vec::new();
    for k in 1..ranks.len() {
        let d = ranks[k - 1] - ranks[k];
        if d > 0 {
            dual_parts.push(d);
        }
    }
    Ok(Partition::new(dual_parts).dual())
}

/// An invertible `H` with `H^-1 * j * H` equal to the Jordan first canonical
/// matrix of the type of `j`, bit-exactly.
///
/// Chains are built top-down: for each height `k` from the nilpotency index
/// downward, the span of `ker(j^(k-1))` together with the images of already
/// chosen higher chains is extended to `ker(j^k)` by kernel basis vectors in
/// their deterministic column order; each added vector starts a new chain.
pub fn jordan_basis(j: &Matrix) -> Result<Matrix, JordanError> {
    let powers = nilpotent_powers(j)?;
    let n = j.rows();
    let field = j.field();
    let p = powers.len() - 1; // nilpotency index (j^p = 0)
    if n == 0 {
        return Ok(Matrix::zeros(0, 0, field));
    }

    // kernels[k] = basis of ker(j^k), k = 0..=p
    let kernels: Vec<Matrix> = powers.iter().map(Matrix::nullspace).collect();

    let mut tops: Vec<(Matrix, usize)> = Vec::new(); // (chain top vector, height)
    for k in (1..=p).rev() {
        // span to extend: ker(j^(k-1)) plus j^(h-k)-images of taller chains
        let mut span = kernels[k - 1].clone();
        for (t, h) in &tops {
            if *h > k {
                span = span.hstack(&(&powers[h - k] * t));
            }
        }
        let target = &kernels[k];
        let mut span_rank = span.rank();
        for c in 0..target.cols() {
            let v = target.column(c);
            let grown = span.hstack(&v);
            let r = grown.rank();
            if r > span_rank {
                span = grown;
                span_rank = r;
                tops.push((v, k));
            }
        }
    }

    // taller chains first; stable sort keeps the deterministic pick order
    tops.sort_by_key(|t| std::cmp::Reverse(t.1));

    let mut h = Matrix::zeros(n, n, field);
    let mut col = 0;
    for (t, height) in &tops {
        for step in (0..*height).rev() {
            // column order within a chain: j^(height-1) t, ..., j t, t
            let v = &powers[step] * t;
            h.set_block(0, col, &v);
            col += 1;
        }
    }
    debug_assert_eq!(col, n);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn zero_matrix_type() {
        let z = Matrix::zeros(3, 3, q());
        assert_eq!(nilpotent_jordan_type(&z).unwrap(), Partition::new(vec![1, 1, 1]));
    }

    #[test]
    fn canonical_round_trip() {
        let t = Partition::new(vec![3, 2]);
        let j = t.jordan_first(q());
        assert_eq!(nilpotent_jordan_type(&j).unwrap(), t);
    }

    #[test]
    fn not_nilpotent_rejected() {
        let id = Matrix::identity(2, q());
        assert_eq!(nilpotent_jordan_type(&id), Err(JordanError::NotNilpotent));
        assert_eq!(jordan_basis(&id), Err(JordanError::NotNilpotent));
    }

    #[test]
    fn conjugation_invariance() {
        let t = Partition::new(vec![5, 3, 1]);
        let j = t.jordan_first(q());
        // a fixed invertible conjugator with small integer entries
        let h = Matrix::from_fn(9, 9, q(), |i, k| {
            q().from_i64(if i == k { 1 } else if k == i + 1 { 2 } else if i == 8 && k == 0 { -1 } else { 0 })
        });
        let hinv = h.inverse().expect("conjugator is invertible");
        let m = &(&hinv * &j) * &h;
        assert_eq!(nilpotent_jordan_type(&m).unwrap(), t);
    }

    #[test]
    fn jordan_basis_transpose_cell() {
        // [[0,0],[1,0]] is the transpose of a cell; H^-1 j H must be the cell
        let j = Matrix::from_i64_rows(&[&[0, 0], &[1, 0]], q());
        let h = jordan_basis(&j).unwrap();
        let hinv = h.inverse().expect("jordan basis invertible");
        let canonical = &(&hinv * &j) * &h;
        assert_eq!(canonical, Partition::new(vec![2]).jordan_first(q()));
    }

    #[test]
    fn jordan_basis_accepts_canonical_input() {
        let t = Partition::new(vec![3, 2, 1]);
        let j = t.jordan_first(q());
        let h = jordan_basis(&j).unwrap();
        let hinv = h.inverse().expect("invertible");
        assert_eq!(&(&hinv * &j) * &h, j);
    }

    #[test]
    fn rank_of_big_jordan_matrix() {
        // 24 boxes in 8 rows: rank is 24 - 8
        let t = Partition::new(vec![5, 5, 5, 5, 1, 1, 1, 1]);
        assert_eq!(t.jordan_first(q()).rank(), 16);
    }

    #[test]
    fn jordan_basis_random_conjugate() {
        let t = Partition::new(vec![3, 2, 1]);
        let j0 = t.jordan_first(q());
        let p = Matrix::from_i64_rows(
            &[
                &[1, 2, 0, 0, 1, 0],
                &[0, 1, 0, 3, 0, 0],
                &[0, 0, 1, 0, 0, -2],
                &[0, 0, 0, 1, 1, 0],
                &[0, 0, 0, 0, 1, 0],
                &[1, 0, 0, 0, 0, 1],
            ],
            q(),
        );
        let pinv = p.inverse().expect("invertible");
        let m = &(&p * &j0) * &pinv;
        let h = jordan_basis(&m).unwrap();
        let hinv = h.inverse().expect("jordan basis invertible");
        assert_eq!(&(&hinv * &m) * &h, j0);
        assert_eq!(nilpotent_jordan_type(&m).unwrap(), t);
    }

    #[test]
    fn dual_parts_are_rank_differences() {
        let t = Partition::new(vec![4, 2, 2, 1]);
        let j = t.jordan_first(q());
        let dual = t.dual();
        let mut power = Matrix::identity(9, q());
        let mut prev_rank = 9;
        for (i, &nu) in dual.parts().iter().enumerate() {
            power = &power * &j;
            let r = power.rank();
            assert_eq!(prev_rank - r, nu, "dual part {i}");
            prev_rank = r;
        }
    }
}
