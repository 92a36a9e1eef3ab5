//! The commutator algebra `C(J)` of a nilpotent Jordan matrix.
//!
//! For a Jordan first canonical matrix `J` of partition `T(n_1,...,n_r)`,
//! the matrices commuting with `J` form the algebra `C(J)`. Block `(k, l)`
//! of a member, of shape `n_k x n_l`, is constant along diagonals and
//! supported on a band of `min(n_k, n_l)` free diagonals: the band starts at
//! the main diagonal for tall or square blocks and is right-justified for
//! wide blocks. [`generic_pattern`] encodes those equality classes.
//!
//! Conjugating by the permutation between the horizontal and vertical box
//! numberings (the hat transform) makes every member block upper triangular
//! with square diagonal blocks of the dual partition sizes, the coarse
//! diagonal blocks `N_1, ..., N_p`. Inside `N_1` sit the fine diagonal
//! blocks `G_1, ..., G_s`, one per distinct part size, of the multiplicity
//! sizes. The map `M -> (G_1, ..., G_s)` is a surjective algebra
//! homomorphism onto a product of full matrix rings whose kernel is
//! nilpotent, and ranks of the `G_i` powers control the rank of `M + J`.

use rand::Rng;
use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::jordan::{jordan_basis, nilpotent_jordan_type};
use crate::matrix::Matrix;
use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CommutatorError {
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("matrix does not commute with the Jordan matrix")]
    NotInCommutator,
    #[error("hat transform is not block upper triangular: coarse block ({i}, {j}) is nonzero")]
    NotBlockUpperTriangular { i: usize, j: usize },
    #[error("matrix is not in the kernel of the block projection")]
    NotInKernel,
    #[error("fine diagonal block {index} is not nilpotent")]
    NonNilpotentBlock { index: usize },
    #[error("nonzero entries outside the coarse diagonal blocks at block ({i}, {j})")]
    PreconditionViolated { i: usize, j: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
}

/// Whether `m` commutes with `j` exactly.
pub fn is_in_commutator(m: &Matrix, j: &Matrix) -> Result<bool, CommutatorError> {
    if !m.is_square() || !j.is_square() || m.rows() != j.rows() {
        return Err(CommutatorError::DimensionMismatch);
    }
    Ok((&(m * j) - &(j * m)).is_zero())
}

/// Symbolic description of a generic element of `C(J)`: every matrix
/// position is either forced zero or carries a parameter id, and positions
/// sharing an id are forced equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorPattern {
    partition: Partition,
    size: usize,
    class: Vec<Option<u32>>, // row-major position -> parameter id
    parameter_count: usize,
}

impl CommutatorPattern {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn parameter_count(&self) -> usize {
        self.parameter_count
    }

    /// Parameter id at a position, or `None` where the entry is forced zero.
    pub fn class_at(&self, i: usize, j: usize) -> Option<u32> {
        self.class[i * self.size + j]
    }

    /// Substitutes one field value per parameter.
    pub fn instantiate(&self, values: &[Scalar], field: FieldSpec) -> Matrix {
        assert_eq!(values.len(), self.parameter_count, "one value per parameter");
        Matrix::from_fn(self.size, self.size, field, |i, j| match self.class_at(i, j) {
            None => field.zero(),
            Some(id) => values[id as usize].clone(),
        })
    }

    /// Seeded random member with integer parameters in `[-bound, bound]`.
    pub fn random_instance(&self, field: FieldSpec, rng: &mut impl Rng, bound: i64) -> Matrix {
        let values: Vec<Scalar> = (0..self.parameter_count)
            .map(|_| field.from_i64(rng.gen_range(-bound..=bound)))
            .collect();
        self.instantiate(&values, field)
    }

    /// Random member whose fine diagonal blocks are strictly upper
    /// triangular, hence a random nilpotent element of `C(J)`.
    pub fn random_nilpotent_instance(&self, field: FieldSpec, rng: &mut impl Rng, bound: i64) -> Matrix {
        let mut values: Vec<Scalar> = (0..self.parameter_count)
            .map(|_| field.from_i64(rng.gen_range(-bound..=bound)))
            .collect();
        let parts = self.partition.parts();
        let row_offset = offsets_of(parts);
        // kill the main-diagonal parameter of same-size block pairs (r, r')
        // with r >= r': the fine diagonal blocks become strictly upper
        // triangular
        for r in 0..parts.len() {
            for rp in 0..parts.len() {
                if parts[r] == parts[rp] && r >= rp {
                    if let Some(id) = self.class_at(row_offset[r], row_offset[rp]) {
                        values[id as usize] = field.zero();
                    }
                }
            }
        }
        self.instantiate(&values, field)
    }
}

fn offsets_of(sizes: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(sizes.len() + 1);
    let mut acc = 0;
    for &s in sizes {
        out.push(acc);
        acc += s;
    }
    out.push(acc);
    out
}

/// The stripe pattern of a generic element of `C(J)` for `J` the Jordan
/// first canonical matrix of `t`. The parameter count equals
/// `sum min(n_i, n_j)`, the dimension of `C(J)`.
pub fn generic_pattern(t: &Partition) -> CommutatorPattern {
    let parts = t.parts();
    let n = t.size();
    let mut class = vec![None; n * n];
    let mut next_id: u32 = 0;
    let mut row_offset = 0;
    for &nk in parts {
        let mut col_offset = 0;
        for &nl in parts {
            let band = nk.min(nl);
            let lo = (nl - band) as isize; // first free diagonal (j - i)
            let base = next_id;
            next_id += band as u32;
            for i in 0..nk {
                for j in 0..nl {
                    let d = j as isize - i as isize;
                    if d >= lo && d < nl as isize {
                        let id = base + (d - lo) as u32;
                        class[(row_offset + i) * n + (col_offset + j)] = Some(id);
                    }
                }
            }
            col_offset += nl;
        }
        row_offset += nk;
    }
    CommutatorPattern { partition: t.clone(), size: n, class, parameter_count: next_id as usize }
}

/// Dimension of `C(J)`: `sum over (i, j) of min(n_i, n_j)`.
pub fn commutator_dimension(t: &Partition) -> usize {
    let parts = t.parts();
    parts.iter().flat_map(|&a| parts.iter().map(move |&b| a.min(b))).sum()
}

/// The hat transform `P^-1 M P` for the numbering permutation matrix `P`
/// of `t`; members of `C(J)` become block upper triangular.
pub fn hat(m: &Matrix, t: &Partition) -> Result<Matrix, CommutatorError> {
    let n = t.size();
    if m.rows() != n || m.cols() != n {
        return Err(CommutatorError::DimensionMismatch);
    }
    let perm = t.numbering_permutation();
    let inv = perm.inverse();
    Ok(Matrix::from_fn(n, n, m.field(), |a, b| m.get(inv.apply(a), inv.apply(b)).clone()))
}

/// Inverse of [`hat`].
pub fn unhat(mhat: &Matrix, t: &Partition) -> Result<Matrix, CommutatorError> {
    let n = t.size();
    if mhat.rows() != n || mhat.cols() != n {
        return Err(CommutatorError::DimensionMismatch);
    }
    let perm = t.numbering_permutation();
    Ok(Matrix::from_fn(n, n, mhat.field(), |i, j| mhat.get(perm.apply(i), perm.apply(j)).clone()))
}

/// Coarse and fine diagonal blocks of a hatted commutator element.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    coarse_sizes: Vec<usize>,
    coarse: Vec<Matrix>,
    fine_sizes: Vec<Vec<usize>>,
    fine: Vec<Vec<Matrix>>,
}

impl BlockDecomposition {
    /// Coarse block sizes: the dual partition.
    pub fn coarse_sizes(&self) -> &[usize] {
        &self.coarse_sizes
    }

    /// The diagonal blocks `N_1, ..., N_p`.
    pub fn coarse(&self) -> &[Matrix] {
        &self.coarse
    }

    /// Fine block sizes of each `N_i`: the leading multiplicities whose part
    /// value is at least `i`.
    pub fn fine_sizes(&self) -> &[Vec<usize>] {
        &self.fine_sizes
    }

    /// Fine diagonal blocks of each coarse block.
    pub fn fine(&self) -> &[Vec<Matrix>] {
        &self.fine
    }

    /// Fine diagonal blocks of `N_1`, the value of the block projection.
    pub fn fine_of_first(&self) -> &[Matrix] {
        &self.fine[0]
    }
}

/// Splits a hatted matrix into coarse and fine diagonal blocks. The lower
/// block triangle must vanish, which certifies that the matrix came from a
/// member of `C(J)`.
pub fn block_decomposition(mhat: &Matrix, t: &Partition) -> Result<BlockDecomposition, CommutatorError> {
    let n = t.size();
    if mhat.rows() != n || mhat.cols() != n {
        return Err(CommutatorError::DimensionMismatch);
    }
    let dual = t.dual();
    let nu = dual.parts().to_vec();
    let offsets = offsets_of(&nu);

    for i in 0..nu.len() {
        for j in 0..i {
            let block = mhat.block(offsets[i], offsets[j], nu[i], nu[j]);
            if !block.is_zero() {
                return Err(CommutatorError::NotBlockUpperTriangular { i: i + 1, j: j + 1 });
            }
        }
    }

    let mult = t.multiplicity_sequence();
    let mut coarse = Vec::with_capacity(nu.len());
    let mut fine_sizes = Vec::with_capacity(nu.len());
    let mut fine = Vec::with_capacity(nu.len());
    for (i, &v) in nu.iter().enumerate() {
        let ni = mhat.block(offsets[i], offsets[i], v, v);
        // parts of size >= i+1 contribute to this coarse block
        let sizes: Vec<usize> = mult.iter().filter(|(f, _)| *f > i).map(|(_, m)| *m).collect();
        debug_assert_eq!(sizes.iter().sum::<usize>(), v);
        let fo = offsets_of(&sizes);
        let blocks: Vec<Matrix> =
            sizes.iter().enumerate().map(|(k, &s)| ni.block(fo[k], fo[k], s, s)).collect();
        coarse.push(ni);
        fine_sizes.push(sizes);
        fine.push(blocks);
    }
    Ok(BlockDecomposition { coarse_sizes: nu, coarse, fine_sizes, fine })
}

/// The block projection `M -> (G_1, ..., G_s)`: the fine diagonal blocks of
/// the first coarse block of the hat transform. A surjective algebra
/// homomorphism onto `M(m_1) x ... x M(m_s)` with nilpotent kernel.
pub fn phi(m: &Matrix, t: &Partition) -> Result<Vec<Matrix>, CommutatorError> {
    let j = t.jordan_first(m.field());
    if !is_in_commutator(m, &j)? {
        return Err(CommutatorError::NotInCommutator);
    }
    let mhat = hat(m, t)?;
    let blocks = block_decomposition(&mhat, t)?;
    Ok(blocks.fine_of_first().to_vec())
}

/// A right inverse of [`phi`]: builds a member of `C(J)` whose fine
/// diagonal blocks are exactly the given targets (all other free parameters
/// zero).
pub fn phi_section(t: &Partition, targets: &[Matrix], field: FieldSpec) -> Matrix {
    let mult = t.multiplicity_sequence();
    assert_eq!(targets.len(), mult.len(), "one target per distinct part size");
    let pattern = generic_pattern(t);
    let mut values = vec![field.zero(); pattern.parameter_count()];
    let row_offset = offsets_of(t.parts());
    let mut group_start = 0;
    for (g, (_, m)) in mult.iter().enumerate() {
        let target = &targets[g];
        assert_eq!(target.rows(), *m, "target size must match the multiplicity");
        for a in 0..*m {
            for b in 0..*m {
                let r = group_start + a;
                let rp = group_start + b;
                // main-diagonal parameter of the same-size block pair (r, r')
                let id = pattern
                    .class_at(row_offset[r], row_offset[rp])
                    .expect("same-size blocks carry a main-diagonal parameter");
                values[id as usize] = target.get(a, b).clone();
            }
        }
        group_start += m;
    }
    pattern.instantiate(&values, field)
}

/// Least `k` with `m^k = 0` for a member of the kernel of the block
/// projection.
pub fn kernel_is_nilpotent_witness(t: &Partition, m: &Matrix) -> Result<usize, CommutatorError> {
    let blocks = phi(m, t)?;
    if !blocks.iter().all(Matrix::is_zero) {
        return Err(CommutatorError::NotInKernel);
    }
    let n = m.rows();
    let mut power = Matrix::identity(n, m.field());
    for k in 0..=n {
        if power.is_zero() {
            return Ok(k.max(1));
        }
        power = &power * m;
    }
    // the kernel of the projection is nilpotent
    unreachable!("kernel element must vanish within n steps");
}

/// Nilpotency via the block criterion: `m` is nilpotent exactly when every
/// fine diagonal block is.
pub fn is_nilpotent_via_blocks(m: &Matrix, t: &Partition) -> Result<bool, CommutatorError> {
    let blocks = phi(m, t)?;
    Ok(blocks.iter().all(|g| g.pow(g.rows()).is_zero()))
}

/// Conjugates the hat picture so every fine diagonal block becomes a Jordan
/// first canonical matrix, without moving the hatted Jordan matrix.
///
/// Returns `(h, m_normal)` with `h^-1 * jhat * h = jhat` exactly and
/// `m_normal = h^-1 * mhat * h`. Restricted to nilpotent fine blocks, where
/// the Jordan form exists over the base field; a non-nilpotent block is
/// refused rather than approximated.
pub fn normalize_fine_blocks(m: &Matrix, t: &Partition) -> Result<(Matrix, Matrix), CommutatorError> {
    let field = m.field();
    let j = t.jordan_first(field);
    if !is_in_commutator(m, &j)? {
        return Err(CommutatorError::NotInCommutator);
    }
    let mhat = hat(m, t)?;
    let blocks = block_decomposition(&mhat, t)?;

    // one Jordan conjugator per fine block of N_1; coarse block i reuses the
    // leading conjugators
    let firsts = blocks.fine_of_first();
    let mut conjugators = Vec::with_capacity(firsts.len());
    for (index, g) in firsts.iter().enumerate() {
        if !g.pow(g.rows()).is_zero() {
            return Err(CommutatorError::NonNilpotentBlock { index: index + 1 });
        }
        let f = jordan_basis(g).expect("nilpotent fine block has a jordan basis");
        conjugators.push(f);
    }

    let n = t.size();
    let mut h = Matrix::zeros(n, n, field);
    let mut offset = 0;
    for sizes in blocks.fine_sizes() {
        for (gi, &s) in sizes.iter().enumerate() {
            h.set_block(offset, offset, &conjugators[gi]);
            offset += s;
        }
    }
    debug_assert_eq!(offset, n);

    let hinv = h.inverse().expect("block diagonal of invertible blocks");
    let jhat = t.jordan_second(field);
    let j_conj = &(&hinv * &jhat) * &h;
    assert_eq!(j_conj, jhat, "fine-block conjugation must fix the hatted Jordan matrix");

    let m_normal = &(&hinv * &mhat) * &h;
    let normal_blocks = block_decomposition(&m_normal, t)?;
    for (g, orig) in normal_blocks.fine_of_first().iter().zip(firsts) {
        let jt = nilpotent_jordan_type(orig).expect("nilpotent");
        assert_eq!(*g, jt.jordan_first(field), "fine blocks must be in canonical form");
    }
    Ok((h, m_normal))
}

/// The rank bound data for `mhat + jhat`.
#[derive(Clone, Debug)]
pub struct RankFormula {
    /// `sum rank(G_i^{f_i}) + rank(J)`.
    pub lower_bound: usize,
    /// The directly computed `rank(mhat + jhat)`, present when every coarse
    /// block vanishes outside its fine diagonal blocks; the bound is then an
    /// equality.
    pub exact_when_diagonal: Option<usize>,
    /// Per distinct part size: `(f_i, m_i, rank(G_i^{f_i}))`.
    pub per_block: Vec<(usize, usize, usize)>,
    /// `rank(J) = n - r`.
    pub rank_j: usize,
}

/// Evaluates the rank bound for `m + J`, requiring the hat transform of `m`
/// to vanish outside the coarse diagonal blocks.
pub fn rank_formula(m: &Matrix, t: &Partition) -> Result<RankFormula, CommutatorError> {
    let field = m.field();
    let j = t.jordan_first(field);
    if !is_in_commutator(m, &j)? {
        return Err(CommutatorError::NotInCommutator);
    }
    let mhat = hat(m, t)?;
    let blocks = block_decomposition(&mhat, t)?;

    // bound precondition: nothing outside the coarse diagonal
    let nu = blocks.coarse_sizes().to_vec();
    let offsets = offsets_of(&nu);
    for i in 0..nu.len() {
        for jj in i + 1..nu.len() {
            if !mhat.block(offsets[i], offsets[jj], nu[i], nu[jj]).is_zero() {
                return Err(CommutatorError::PreconditionViolated { i: i + 1, j: jj + 1 });
            }
        }
    }

    let mult = t.multiplicity_sequence();
    let mut per_block = Vec::with_capacity(mult.len());
    let mut bound = 0;
    for (g, (f, mm)) in blocks.fine_of_first().iter().zip(&mult) {
        let r = g.pow(*f).rank();
        per_block.push((*f, *mm, r));
        bound += r;
    }
    let rank_j = j.rank();
    bound += rank_j;

    // equality case: every coarse block zero outside its fine diagonal
    let mut diagonal_only = true;
    'outer: for (i, ni) in blocks.coarse().iter().enumerate() {
        let sizes = &blocks.fine_sizes()[i];
        let fo = offsets_of(sizes);
        for bi in 0..sizes.len() {
            for bj in 0..sizes.len() {
                if bi != bj && !ni.block(fo[bi], fo[bj], sizes[bi], sizes[bj]).is_zero() {
                    diagonal_only = false;
                    break 'outer;
                }
            }
        }
    }

    let exact_when_diagonal = if diagonal_only {
        let jhat = t.jordan_second(field);
        Some((&mhat + &jhat).rank())
    } else {
        None
    };

    Ok(RankFormula { lower_bound: bound, exact_when_diagonal, per_block, rank_j })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn membership_basics() {
        let t = Partition::new(vec![3, 2]);
        let j = t.jordan_first(q());
        assert!(is_in_commutator(&j, &j).unwrap());
        assert!(is_in_commutator(&Matrix::identity(5, q()), &j).unwrap());
        let mismatch = Matrix::identity(4, q());
        assert_eq!(is_in_commutator(&mismatch, &j), Err(CommutatorError::DimensionMismatch));
    }

    #[test]
    fn pattern_parameter_counts() {
        assert_eq!(generic_pattern(&Partition::new(vec![3, 3, 2])).parameter_count(), 22);
        assert_eq!(generic_pattern(&Partition::new(vec![3, 2, 2])).parameter_count(), 19);
        for n in 1..=6 {
            for t in Partition::all_of(n) {
                assert_eq!(generic_pattern(&t).parameter_count(), commutator_dimension(&t));
            }
        }
    }

    #[test]
    fn pattern_layout_421() {
        // rows 0-3 / 4-5 / 6 for parts (4, 2, 1)
        let p = generic_pattern(&Partition::new(vec![4, 2, 1]));
        assert_eq!(p.parameter_count(), 15);
        // the big square block is constant along its diagonals
        let a = p.class_at(0, 0).unwrap();
        assert!((1..4).all(|k| p.class_at(k, k) == Some(a)));
        let a1 = p.class_at(0, 1).unwrap();
        assert!((1..3).all(|k| p.class_at(k, k + 1) == Some(a1)));
        assert_eq!(p.class_at(1, 0), None);
        // tall block (rows 0-3, cols 4-5): top-justified band
        let b = p.class_at(0, 4).unwrap();
        assert_eq!(p.class_at(1, 5), Some(b));
        assert!(p.class_at(0, 5).is_some());
        assert_eq!(p.class_at(2, 4), None);
        assert_eq!(p.class_at(3, 5), None);
        // wide block (rows 4-5, cols 0-3): right-justified band
        let d = p.class_at(4, 2).unwrap();
        assert_eq!(p.class_at(5, 3), Some(d));
        assert_eq!(p.class_at(4, 0), None);
        assert_eq!(p.class_at(4, 1), None);
        assert_eq!(p.class_at(5, 2), None);
        // single-row blocks keep only their last band entries
        assert!(p.class_at(6, 3).is_some());
        assert!((0..3).all(|j| p.class_at(6, j).is_none()));
        assert!(p.class_at(6, 5).is_some());
        assert_eq!(p.class_at(6, 4), None);
        assert!(p.class_at(6, 6).is_some());
    }

    #[test]
    fn pattern_instances_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=7 {
            for t in Partition::all_of(n) {
                let j = t.jordan_first(q());
                let pattern = generic_pattern(&t);
                for _ in 0..5 {
                    let m = pattern.random_instance(q(), &mut rng, 3);
                    assert!(is_in_commutator(&m, &j).unwrap(), "pattern instance must commute, {t}");
                }
            }
        }
    }

    #[test]
    fn flipping_an_off_pattern_entry_breaks_membership() {
        let t = Partition::new(vec![3, 2]);
        let j = t.jordan_first(q());
        let pattern = generic_pattern(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut m = pattern.random_instance(q(), &mut rng, 3);
        // position (1, 0) sits below the main diagonal of the (1,1) cell:
        // forced zero in the pattern
        assert_eq!(pattern.class_at(1, 0), None);
        m.set(1, 0, q().one());
        assert!(!is_in_commutator(&m, &j).unwrap());
    }

    #[test]
    fn hat_sends_jordan_first_to_second() {
        for parts in [vec![5, 3, 1], vec![3, 2, 2], vec![4, 4], vec![2, 1, 1]] {
            let t = Partition::new(parts);
            let hatted = hat(&t.jordan_first(q()), &t).unwrap();
            assert_eq!(hatted, t.jordan_second(q()));
            assert_eq!(unhat(&hatted, &t).unwrap(), t.jordan_first(q()));
        }
    }

    #[test]
    fn hat_identity_is_identity() {
        let t = Partition::new(vec![4, 2]);
        let id = Matrix::identity(6, q());
        assert_eq!(hat(&id, &t).unwrap(), id);
    }

    #[test]
    fn example_322_block_structure() {
        let t = Partition::new(vec![3, 2, 2]);
        let pattern = generic_pattern(&t);
        let values: Vec<Scalar> = (1..=19).map(|v| q().from_i64(v)).collect();
        let m = pattern.instantiate(&values, q());
        let mhat = hat(&m, &t).unwrap();
        let blocks = block_decomposition(&mhat, &t).unwrap();
        // dual partition 7 = 3 + 3 + 1
        assert_eq!(blocks.coarse_sizes(), &[3, 3, 1]);
        // nu_1 = nu_2 forces N_1 = N_2
        assert_eq!(blocks.coarse()[0], blocks.coarse()[1]);
        // N_3 is the leading principal corner of N_1
        assert_eq!(blocks.coarse()[0].block(0, 0, 1, 1), blocks.coarse()[2]);
        assert_eq!(blocks.fine_sizes()[0], vec![1, 2]);
        assert_eq!(blocks.fine_sizes()[2], vec![1]);
    }

    #[test]
    fn phi_on_identity_and_jordan() {
        let t = Partition::new(vec![5, 5, 5, 5, 1, 1, 1, 1]);
        let id = Matrix::identity(24, q());
        let gs = phi(&id, &t).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0], Matrix::identity(4, q()));
        assert_eq!(gs[1], Matrix::identity(4, q()));
        let j = t.jordan_first(q());
        let gs = phi(&j, &t).unwrap();
        assert!(gs.iter().all(Matrix::is_zero));
    }

    #[test]
    fn phi_rejects_non_members() {
        let t = Partition::new(vec![2, 1]);
        let mut m = Matrix::zeros(3, 3, q());
        m.set(1, 0, q().one());
        assert_eq!(phi(&m, &t), Err(CommutatorError::NotInCommutator));
    }

    #[test]
    fn phi_is_multiplicative() {
        let t = Partition::new(vec![3, 2, 2, 1]);
        let pattern = generic_pattern(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let a = pattern.random_instance(q(), &mut rng, 2);
            let b = pattern.random_instance(q(), &mut rng, 2);
            let ga = phi(&a, &t).unwrap();
            let gb = phi(&b, &t).unwrap();
            let gab = phi(&(&a * &b), &t).unwrap();
            for ((x, y), xy) in ga.iter().zip(&gb).zip(&gab) {
                assert_eq!(&(x * y), xy);
            }
        }
    }

    #[test]
    fn phi_section_hits_targets() {
        let t = Partition::new(vec![3, 3, 2, 1]);
        // multiplicities: (3,2), (2,1), (1,1)
        let targets = vec![
            Matrix::from_i64_rows(&[&[1, -2], &[0, 2]], q()),
            Matrix::from_i64_rows(&[&[-1]], q()),
            Matrix::from_i64_rows(&[&[2]], q()),
        ];
        let m = phi_section(&t, &targets, q());
        let j = t.jordan_first(q());
        assert!(is_in_commutator(&m, &j).unwrap());
        assert_eq!(phi(&m, &t).unwrap(), targets);
    }

    #[test]
    fn kernel_witness() {
        let t = Partition::new(vec![3, 1]);
        let z = Matrix::zeros(4, 4, q());
        assert_eq!(kernel_is_nilpotent_witness(&t, &z).unwrap(), 1);
        let j = t.jordan_first(q());
        assert_eq!(kernel_is_nilpotent_witness(&t, &j).unwrap(), 3);
        // identity is not in the kernel
        assert_eq!(
            kernel_is_nilpotent_witness(&t, &Matrix::identity(4, q())),
            Err(CommutatorError::NotInKernel)
        );
    }

    #[test]
    fn nilpotency_criterion_matches_power_test() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for t in Partition::all_of(6) {
            let pattern = generic_pattern(&t);
            for _ in 0..8 {
                let m = pattern.random_instance(q(), &mut rng, 2);
                let direct = m.pow(m.rows()).is_zero();
                assert_eq!(is_nilpotent_via_blocks(&m, &t).unwrap(), direct, "{t}");
            }
        }
    }

    #[test]
    fn normalize_fine_blocks_canonicalizes() {
        let t = Partition::new(vec![2, 2, 1]);
        let pattern = generic_pattern(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let m = pattern.random_nilpotent_instance(q(), &mut rng, 2);
        let (h, m_normal) = normalize_fine_blocks(&m, &t).unwrap();
        assert!(h.inverse().is_some());
        let blocks = block_decomposition(&m_normal, &t).unwrap();
        for g in blocks.fine_of_first() {
            let jt = nilpotent_jordan_type(g).unwrap();
            assert_eq!(*g, jt.jordan_first(q()));
        }
    }

    #[test]
    fn normalize_refuses_non_nilpotent_blocks() {
        let t = Partition::new(vec![2, 2]);
        let m = Matrix::identity(4, q());
        assert_eq!(
            normalize_fine_blocks(&m, &t),
            Err(CommutatorError::NonNilpotentBlock { index: 1 })
        );
    }

    #[test]
    fn rank_formula_zero_matrix() {
        let t = Partition::new(vec![3, 2, 1]);
        let m = Matrix::zeros(6, 6, q());
        let rf = rank_formula(&m, &t).unwrap();
        assert_eq!(rf.lower_bound, 3); // rank J = 6 - 3
        assert_eq!(rf.exact_when_diagonal, Some(3));
    }

    #[test]
    fn rank_formula_big_example() {
        // partition (5,5,5,5,1,1,1,1): fine blocks of size 4 and 4 with
        // f = (5, 1); a nilpotent G_1 and a rank-2 G_2 give 0 + 2 + 16 = 18
        let t = Partition::new(vec![5, 5, 5, 5, 1, 1, 1, 1]);
        let g1 = Matrix::from_i64_rows(
            &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]],
            q(),
        );
        let g2 = Matrix::from_i64_rows(
            &[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]],
            q(),
        );
        let m = phi_section(&t, &[g1, g2], q());
        let rf = rank_formula(&m, &t).unwrap();
        assert_eq!(rf.rank_j, 16);
        assert_eq!(rf.per_block, vec![(5, 4, 0), (1, 4, 2)]);
        assert_eq!(rf.lower_bound, 18);
        assert_eq!(rf.exact_when_diagonal, Some(18));
    }

    #[test]
    fn rank_formula_three_distinct_sizes() {
        // partition (7^6, 3^6, 1^4): fine blocks of sizes 6, 6, 4 with
        // f = (7, 3, 1); blocks of types (4,2), (4,2) and (4) give
        // 0 + 1 + 3 + 48 = 52
        let mut parts = vec![7; 6];
        parts.extend([3; 6]);
        parts.extend([1; 4]);
        let t = Partition::new(parts);
        let g12 = Partition::new(vec![4, 2]).jordan_first(q());
        let g3 = Partition::new(vec![4]).jordan_first(q());
        let m = phi_section(&t, &[g12.clone(), g12, g3], q());
        let rf = rank_formula(&m, &t).unwrap();
        assert_eq!(rf.rank_j, 48);
        assert_eq!(rf.per_block, vec![(7, 6, 0), (3, 6, 1), (1, 4, 3)]);
        assert_eq!(rf.lower_bound, 52);
        assert_eq!(rf.exact_when_diagonal, Some(52));
    }

    #[test]
    fn rank_formula_two_row_types() {
        // partition (2^5, 1^6): fine blocks of sizes 5 and 6 with f = (2, 1);
        // block types (3,1,1) and (3,3) give 1 + 4 + 5 = 10
        let mut parts = vec![2; 5];
        parts.extend([1; 6]);
        let t = Partition::new(parts);
        let g1 = Partition::new(vec![3, 1, 1]).jordan_first(q());
        let g2 = Partition::new(vec![3, 3]).jordan_first(q());
        let m = phi_section(&t, &[g1, g2], q());
        let rf = rank_formula(&m, &t).unwrap();
        assert_eq!(rf.rank_j, 5);
        assert_eq!(rf.per_block, vec![(2, 5, 1), (1, 6, 4)]);
        assert_eq!(rf.lower_bound, 10);
        assert_eq!(rf.exact_when_diagonal, Some(10));
    }

    #[test]
    fn normalize_fine_blocks_on_a_large_type() {
        let t = Partition::new(vec![5, 5, 5, 5, 1, 1, 1, 1]);
        let pattern = generic_pattern(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let m = pattern.random_nilpotent_instance(q(), &mut rng, 2);
        let (_, m_normal) = normalize_fine_blocks(&m, &t).unwrap();
        let blocks = block_decomposition(&m_normal, &t).unwrap();
        assert_eq!(blocks.fine_sizes()[0], vec![4, 4]);
        for g in blocks.fine_of_first() {
            let jt = nilpotent_jordan_type(g).unwrap();
            assert_eq!(*g, jt.jordan_first(q()));
        }
    }

    #[test]
    fn single_row_coarse_blocks_are_equal_scalars() {
        let t = Partition::new(vec![5]);
        let pattern = generic_pattern(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let m = pattern.random_instance(q(), &mut rng, 3);
        let blocks = block_decomposition(&hat(&m, &t).unwrap(), &t).unwrap();
        assert_eq!(blocks.coarse_sizes(), &[1, 1, 1, 1, 1]);
        assert!(blocks.coarse().windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn rank_formula_precondition_violation() {
        let t = Partition::new(vec![2, 1]);
        let pattern = generic_pattern(&t);
        // the parameter on the off-band diagonal of the tall (1,2) block
        // lands outside the coarse diagonal after the hat transform
        let mut values = vec![q().zero(); pattern.parameter_count()];
        let id = pattern.class_at(0, 1).expect("band parameter");
        values[id as usize] = q().one();
        let m = pattern.instantiate(&values, q());
        assert!(matches!(rank_formula(&m, &t), Err(CommutatorError::PreconditionViolated { .. })));
    }
}
