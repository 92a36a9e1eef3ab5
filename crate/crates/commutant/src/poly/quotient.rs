//! Monomial bases and Hilbert functions of zero-dimensional quotients.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::poly::{GroebnerBasis, Monomial};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("quotient is not finite-dimensional: no pure power of variable {var_index} appears among the leading terms")]
pub struct NotArtinianError {
    pub var_index: usize,
}

/// The standard monomials of a zero-dimensional quotient, graded by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    monomials: Vec<Monomial>,   // sorted by (degree, degrevlex)
    degree_offsets: Vec<usize>, // offsets[d]..offsets[d+1] indexes degree d
    hilbert: Vec<usize>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    pub fn top_degree(&self) -> usize {
        self.hilbert.len() - 1
    }

    /// Basis indices of the degree-`d` graded piece.
    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.degree_offsets.len() {
            if d < self.degree_offsets.len() {
                return self.degree_offsets[d]..self.dim();
            }
            return 0..0;
        }
        self.degree_offsets[d]..self.degree_offsets[d + 1]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        let d = m.degree() as usize;
        let range = self.degree_range(d);
        self.monomials[range.clone()].iter().position(|x| x == m).map(|i| range.start + i)
    }
}

/// Enumerates the monomials not divisible by any leading term of `gb`.
///
/// Finite-dimensionality is detected by the staircase test: every variable
/// must have a pure power among the leading-term multiples, otherwise the
/// variable's powers escape to infinity.
pub fn monomial_basis(gb: &GroebnerBasis) -> Result<QuotientBasis, NotArtinianError> {
    let nvars = gb.nvars();
    let lms: Vec<Monomial> = gb.leading_monomials().cloned().collect();

    // per-variable exponent bound from the minimal pure power leading term
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let bound = lms
            .iter()
            .filter(|m| m.exps().iter().enumerate().all(|(i, &e)| i == v || e == 0))
            .map(|m| m.exps()[v])
            .min();
        match bound {
            Some(b) => bounds.push(b),
            None => return Err(NotArtinianError { var_index: v }),
        }
    }

    // walk the exponent box, keeping monomials outside the staircase
    let mut standard: BTreeSet<Monomial> = BTreeSet::new();
    let mut exps = vec![0u32; nvars];
    'walk: loop {
        let m = Monomial::new(exps.clone());
        if !lms.iter().any(|lm| lm.divides(&m)) {
            standard.insert(m);
        }
        for v in (0..nvars).rev() {
            if exps[v] + 1 < bounds[v].max(1) {
                exps[v] += 1;
                continue 'walk;
            }
            exps[v] = 0;
        }
        break;
    }

    let mut monomials: Vec<Monomial> = standard.into_iter().collect();
    // by degree, then descending degrevlex within a degree (x before y)
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));

    let top = monomials.last().map(|m| m.degree() as usize).unwrap_or(0);
    let mut hilbert = vec![0usize; top + 1];
    for m in &monomials {
        hilbert[m.degree() as usize] += 1;
    }
    let mut degree_offsets = Vec::with_capacity(top + 2);
    let mut acc = 0;
    for &h in &hilbert {
        degree_offsets.push(acc);
        acc += h;
    }
    degree_offsets.push(acc);

    Ok(QuotientBasis { monomials, degree_offsets, hilbert })
}
