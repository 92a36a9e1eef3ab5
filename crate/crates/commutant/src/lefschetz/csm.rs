//! Central simple modules of a pair `(A, z)`.
//!
//! For each distinct part size `f_i` of the Jordan type of `x z`, the
//! subquotients
//!
//! ```text
//! U_i = (0 : z^{f_i} + (z)) / (0 : z^{f_i - 1} + (z))
//! W_i = (0 : z  cap  (z^{f_i - 1})) / (0 : z  cap  (z^{f_i}))
//! ```
//!
//! are simple modules over the commutator algebra of `x z`, of dimension
//! `m_i` (the multiplicity of `f_i`), and `W_i` is `U_i` shifted in degree
//! by `f_i - 1`. The induced action of a second linear form on `U_i`
//! realizes the fine diagonal block `G_i` of the hat picture.

use crate::matrix::Matrix;

use super::algebra::{AlgebraError, ArtinianAlgebra, LinearForm};
use super::subspace::{GradedModule, GradedSubspace};

/// The central simple modules `U_1..U_s` and `W_1..W_s` of `(A, z)`.
#[derive(Clone, Debug)]
pub struct CentralSimpleModules {
    /// Distinct part sizes `f_1 > ... > f_s` of the Jordan type of `x z`.
    pub f: Vec<usize>,
    /// Multiplicities `m_1, ..., m_s`.
    pub m: Vec<usize>,
    pub u: Vec<GradedModule>,
    pub w: Vec<GradedModule>,
}

impl CentralSimpleModules {
    pub fn count(&self) -> usize {
        self.f.len()
    }

    /// Checks `hilbert(W_i)(d) = hilbert(U_i)(d - (f_i - 1))` for all `d`.
    pub fn shifts_verified(&self) -> bool {
        self.f.iter().zip(self.u.iter().zip(&self.w)).all(|(&f, (u, w))| {
            let uh = u.hilbert();
            let wh = w.hilbert();
            (0..wh.len()).all(|d| {
                let expect = if d + 1 >= f { uh.get(d + 1 - f).copied().unwrap_or(0) } else { 0 };
                wh[d] == expect
            })
        })
    }
}

/// Computes the central simple modules of `(A, z)` by graded subspace
/// arithmetic on kernels and images of powers of `x z`.
pub fn central_simple_modules(a: &ArtinianAlgebra, z: &LinearForm) -> CentralSimpleModules {
    let mz = a.mult_matrix(z);
    let (t, _) = a.jordan_type_of(z);
    let mult = t.multiplicity_sequence();
    let f: Vec<usize> = mult.iter().map(|(f, _)| *f).collect();
    let m: Vec<usize> = mult.iter().map(|(_, m)| *m).collect();

    let im_z = GradedSubspace::image_of_power(a, &mz, 1);
    let ker_z = GradedSubspace::kernel_of_power(a, &mz, 1);

    let mut u = Vec::with_capacity(f.len());
    let mut w = Vec::with_capacity(f.len());
    for &fi in &f {
        let ker_hi = GradedSubspace::kernel_of_power(a, &mz, fi);
        let ker_lo = GradedSubspace::kernel_of_power(a, &mz, fi - 1);
        let num = ker_hi.sum(&im_z);
        let den = ker_lo.sum(&im_z);
        u.push(GradedModule::quotient(&num, &den));

        let im_hi = GradedSubspace::image_of_power(a, &mz, fi - 1);
        let im_lo = GradedSubspace::image_of_power(a, &mz, fi);
        let num_w = ker_z.intersect(&im_hi);
        let den_w = ker_z.intersect(&im_lo);
        w.push(GradedModule::quotient(&num_w, &den_w));
    }

    let csm = CentralSimpleModules { f, m, u, w };
    debug_assert!(csm
        .u
        .iter()
        .zip(&csm.m)
        .all(|(ui, &mi)| ui.dim() == mi));
    debug_assert!(csm
        .w
        .iter()
        .zip(&csm.m)
        .all(|(wi, &mi)| wi.dim() == mi));
    csm
}

/// The induced matrices `G_i` of `x g` on each `U_i` with the rank of their
/// `f_i`-th power. `g` must be independent of `z`.
#[derive(Clone, Debug)]
pub struct BlockRank {
    pub f: usize,
    pub multiplicity: usize,
    pub matrix: Matrix,
    pub rank_power: usize,
}

pub fn csm_block_ranks(
    a: &ArtinianAlgebra,
    z: &LinearForm,
    g: &LinearForm,
) -> Result<Vec<BlockRank>, AlgebraError> {
    if g.is_dependent_with(z) {
        return Err(AlgebraError::DependentForms);
    }
    let csm = central_simple_modules(a, z);
    Ok(csm
        .f
        .iter()
        .zip(csm.m.iter().zip(&csm.u))
        .map(|(&f, (&multiplicity, ui))| {
            let matrix = ui.induced_action(a, g);
            let rank_power = matrix.pow(f).rank();
            BlockRank { f, multiplicity, matrix, rank_power }
        })
        .collect())
}
