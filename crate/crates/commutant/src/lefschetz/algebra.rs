//! Graded Artinian algebras presented by a monomial basis and one
//! multiplication matrix per variable.

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::jordan::nilpotent_jordan_type;
use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::poly::{
    buchberger, monomial_basis, normal_form, GroebnerBasis, Ideal, IdealError, NotArtinianError,
    Polynomial, QuotientBasis, Vars,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    NotArtinian(#[from] NotArtinianError),
    #[error("linear form is zero")]
    ZeroForm,
    #[error("expected a homogeneous linear form, got degree {0:?}")]
    NotLinear(Option<u32>),
    #[error("forms must be linearly independent")]
    DependentForms,
    #[error("algebra is not Gorenstein (socle dimension differs from one)")]
    NotGorenstein,
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

/// A linear form given by one coefficient per variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if coeffs.iter().all(Scalar::is_zero) {
            return Err(AlgebraError::ZeroForm);
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64], field: FieldSpec) -> Result<Self, AlgebraError> {
        Self::new(coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Degree-one homogeneous polynomials only.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self, AlgebraError> {
        match p.homogeneous_degree() {
            Some(1) => {}
            d => return Err(AlgebraError::NotLinear(d)),
        }
        let mut coeffs = vec![p.field().zero(); p.nvars()];
        for (m, c) in p.terms() {
            let var = m
                .exps()
                .iter()
                .position(|&e| e == 1)
                .expect("linear monomial has a single unit exponent");
            coeffs[var] = c.clone();
        }
        LinearForm::new(coeffs)
    }

    pub fn variable(nvars: usize, i: usize, field: FieldSpec) -> Self {
        let mut coeffs = vec![field.zero(); nvars];
        coeffs[i] = field.one();
        LinearForm { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// True when the two forms span a line, i.e. are linearly dependent.
    pub fn is_dependent_with(&self, other: &LinearForm) -> bool {
        let field = self.coeffs[0].field();
        let n = self.coeffs.len();
        let m = Matrix::from_fn(2, n, field, |i, j| {
            if i == 0 { self.coeffs[j].clone() } else { other.coeffs[j].clone() }
        });
        m.rank() < 2
    }

    pub fn display(&self, vars: &Vars) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&vars.names()[i]);
            } else {
                out.push_str(&format!("{}*{}", mag.display(), vars.names()[i]));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// A graded Artinian quotient of a polynomial ring, carrying its monomial
/// basis, Hilbert function and the regular representation of each variable.
#[derive(Clone, Debug)]
pub struct ArtinianAlgebra {
    field: FieldSpec,
    vars: Vars,
    gb: GroebnerBasis,
    basis: QuotientBasis,
    mult: Vec<Matrix>,
}

impl ArtinianAlgebra {
    /// Computes the Groebner basis, the monomial basis and the variable
    /// multiplication matrices of `R/I`.
    pub fn from_ideal(vars: Vars, ideal: &Ideal) -> Result<Self, AlgebraError> {
        let gb = buchberger(ideal);
        let basis = monomial_basis(&gb)?;
        let field = ideal.field();
        let nvars = vars.len();
        let n = basis.dim();
        let mut mult = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let xv = Polynomial::variable(nvars, field, v);
            let mut m = Matrix::zeros(n, n, field);
            for (k, mono) in basis.monomials().iter().enumerate() {
                let prod = xv.mul(&Polynomial::monomial(mono.clone(), field.one()));
                let nf = normal_form(&prod, &gb);
                for (t, c) in nf.terms() {
                    let row = basis.index_of(t).expect("normal form terms are standard monomials");
                    m.set(row, k, c.clone());
                }
            }
            mult.push(m);
        }
        Ok(ArtinianAlgebra { field, vars, gb, basis, mult })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn hilbert(&self) -> &[usize] {
        self.basis.hilbert()
    }

    pub fn top_degree(&self) -> usize {
        self.basis.top_degree()
    }

    /// Largest value of the Hilbert function.
    pub fn sperner(&self) -> usize {
        self.hilbert().iter().copied().max().unwrap_or(0)
    }

    /// Sum of `min(h_i, h_{i+1})`, the best possible rank of multiplication
    /// by a linear form.
    pub fn cosperner(&self) -> usize {
        let h = self.hilbert();
        (1..h.len()).map(|i| h[i - 1].min(h[i])).sum()
    }

    pub fn var_mult(&self, i: usize) -> &Matrix {
        &self.mult[i]
    }

    /// Matrix of multiplication by `f` in the monomial basis; linear in `f`.
    pub fn mult_matrix(&self, f: &LinearForm) -> Matrix {
        assert_eq!(f.coeffs().len(), self.vars.len(), "one coefficient per variable");
        let n = self.dim();
        let mut out = Matrix::zeros(n, n, self.field);
        for (i, c) in f.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.mult[i].scale(c);
            }
        }
        out
    }

    /// The block of `op` mapping the degree-`d` piece into the
    /// degree-`d + shift` piece. Out-of-range target degrees give a matrix
    /// with zero rows.
    pub fn degree_block(&self, op: &Matrix, d: usize, shift: usize) -> Matrix {
        let src = self.basis.degree_range(d);
        let tgt = self.basis.degree_range(d + shift);
        Matrix::from_fn(tgt.len(), src.len(), self.field, |i, j| {
            op.get(tgt.start + i, src.start + j).clone()
        })
    }

    /// Jordan type of multiplication by `z`, with its dual. The dual parts
    /// are the dimensions `dim (z^{i-1})/(z^i)`.
    pub fn jordan_type_of(&self, z: &LinearForm) -> (Partition, Partition) {
        let m = self.mult_matrix(z);
        let t = nilpotent_jordan_type(&m)
            .expect("multiplication by a linear form in an Artinian graded algebra is nilpotent");
        let dual = t.dual();
        (t, dual)
    }

    /// Hilbert function of `A/(f)`: per-degree cokernel dimensions of
    /// multiplication by `f`, trailing zeros trimmed.
    pub fn quotient_hilbert(&self, f: &LinearForm) -> Vec<usize> {
        let m = self.mult_matrix(f);
        let h = self.hilbert();
        let mut out = Vec::with_capacity(h.len());
        out.push(h[0]);
        for (d, &hd) in h.iter().enumerate().skip(1) {
            let rank = self.degree_block(&m, d - 1, 1).rank();
            out.push(hd - rank);
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Whether multiplication by `y` is injective or surjective in every
    /// degree. Cross-checked against rank = CoSperner; a disagreement is a
    /// bug, not a mathematical outcome.
    pub fn is_wlp_element(&self, y: &LinearForm) -> Result<bool, AlgebraError> {
        let m = self.mult_matrix(y);
        let h = self.hilbert();
        let mut by_degrees = true;
        let mut total_rank = 0;
        for d in 0..h.len().saturating_sub(1) {
            let r = self.degree_block(&m, d, 1).rank();
            total_rank += r;
            if r != h[d].min(h[d + 1]) {
                by_degrees = false;
            }
        }
        let by_rank = total_rank == self.cosperner();
        if by_degrees != by_rank {
            return Err(AlgebraError::Inconsistency(format!(
                "per-degree criterion says {by_degrees}, rank criterion says {by_rank}"
            )));
        }
        debug_assert_eq!(total_rank, m.rank());
        Ok(by_degrees)
    }

    /// Whether every power map `y^(c-2i)` from degree `i` to degree `c - i`
    /// is bijective. For a symmetric unimodal Hilbert function the verdict
    /// is cross-checked against the dual of the Jordan type of `y`, which
    /// must equal the Hilbert values sorted decreasingly.
    pub fn is_slp_element(&self, y: &LinearForm) -> Result<bool, AlgebraError> {
        let c = self.top_degree();
        let h = self.hilbert();
        let m = self.mult_matrix(y);
        let mut bijective = true;
        for i in 0..=c / 2 {
            let k = c - 2 * i;
            if k == 0 {
                continue;
            }
            if h[i] != h[c - i] {
                bijective = false;
                break;
            }
            let block = self.degree_block(&m.pow(k), i, k);
            if block.rank() != h[i] {
                bijective = false;
                break;
            }
        }
        let symmetric = (0..h.len()).all(|i| h[i] == h[c - i]);
        let unimodal = is_unimodal(h);
        if symmetric && unimodal {
            let (t, _) = self.jordan_type_of(y);
            let mut sorted = h.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let by_dual = t.dual().parts() == sorted.as_slice();
            if by_dual != bijective {
                return Err(AlgebraError::Inconsistency(format!(
                    "bijectivity criterion says {bijective}, dual-partition criterion says {by_dual}"
                )));
            }
        }
        Ok(bijective)
    }

    /// Dimension of the socle (the common kernel of all variable
    /// multiplications).
    pub fn socle_dimension(&self) -> usize {
        let mut stacked = self.mult[0].clone();
        for m in &self.mult[1..] {
            stacked = stacked.vstack(m);
        }
        stacked.nullspace().cols()
    }

    /// A graded Artinian algebra is Gorenstein exactly when its socle is one
    /// dimensional.
    pub fn is_gorenstein(&self) -> bool {
        self.socle_dimension() == 1
    }
}

pub(crate) fn is_unimodal(h: &[usize]) -> bool {
    let Some(peak) = h.iter().enumerate().max_by_key(|&(i, &v)| (v, std::cmp::Reverse(i))) else {
        return true;
    };
    let p = peak.0;
    h[..p].windows(2).all(|w| w[0] <= w[1]) && h[p..].windows(2).all(|w| w[0] >= w[1])
}
