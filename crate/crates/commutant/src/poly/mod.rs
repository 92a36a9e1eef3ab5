//! Multivariate polynomials over an exact field.
//!
//! The monomial order is fixed crate-wide to degree reverse lexicographic
//! with the declared variable order `x_1 > x_2 > ... > x_d`; every report
//! that depends on the order records it. Polynomials store their terms in a
//! `BTreeMap` keyed by that order, so iteration and leading terms are
//! deterministic.

mod groebner;
mod parse;
mod quotient;

pub use groebner::{buchberger, normal_form, GroebnerBasis, Ideal, IdealError};
pub use parse::{parse_polynomial, ParseError};
pub use quotient::{monomial_basis, NotArtinianError, QuotientBasis};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::field::{FieldSpec, Scalar};

/// Variable names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vars {
    names: Vec<String>,
}

impl Vars {
    pub fn new(names: Vec<String>) -> Self {
        assert!(!names.is_empty(), "at least one variable");
        Vars { names }
    }

    pub fn from_strs(names: &[&str]) -> Self {
        Self::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector. `Ord` is the degrevlex order: higher total degree wins;
/// on equal degree the monomial whose trailing variable exponents are
/// smaller wins (the last nonzero entry of the difference is negative for
/// the larger monomial).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial { exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn display(&self, vars: &Vars) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&vars.names()[i]);
            if e > 1 {
                out.push_str(&format!("^{}", e));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // reverse lexicographic tie-break: scan from the last variable; the
        // first difference decides, with the smaller exponent belonging to
        // the larger monomial
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with exact coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: FieldSpec) -> Self {
        Polynomial { nvars, field, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let field = c.field();
        let mut p = Self::zero(nvars, field);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn variable(nvars: usize, field: FieldSpec, i: usize) -> Self {
        let mut p = Self::zero(nvars, field);
        p.add_term(Monomial::var(nvars, i, 1), field.one());
        p
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let field = c.field();
        let mut p = Self::zero(m.nvars(), field);
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing degrevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading term in degrevlex order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.leading().map(|(m, _)| m)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * s.clone();
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let mut out = Polynomial::zero(self.nvars, self.field);
        for (mm, cc) in self.terms() {
            out.terms.insert(mm.mul(m), cc.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars, self.field);
        for (m, c) in other.terms() {
            for (mm, cc) in self.terms() {
                out.add_term(mm.mul(m), cc.clone() * c.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inverse()),
        }
    }

    /// `Some(d)` when all terms share total degree `d`; the zero polynomial
    /// is homogeneous of every degree and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Some(0);
        };
        let d = first.degree();
        iter.all(|m| m.degree() == d).then_some(d)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn display(&self, vars: &Vars) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        // print leading term first
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.display());
            } else if mag.is_one() {
                out.push_str(&m.display(vars));
            } else {
                out.push_str(&format!("{}*{}", mag.display(), m.display(vars)));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = Vars::new((0..self.nvars).map(|i| format!("x{}", i + 1)).collect());
        f.write_str(&self.display(&vars))
    }
}
