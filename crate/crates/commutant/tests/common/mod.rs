#![allow(dead_code)] // each test target uses its own subset

//! Shared helpers and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the code paths they check: the
//! commutator dimension is recomputed from the raw commutation equations,
//! and Hilbert series of complete intersections come from direct power
//! series multiplication.

use commutant::field::FieldSpec;
use commutant::lefschetz::{ArtinianAlgebra, LinearForm};
use commutant::matrix::Matrix;
use commutant::partition::Partition;
use commutant::poly::{parse_polynomial, Ideal, Vars};

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn algebra_from(texts: &[&str], names: &[&str]) -> ArtinianAlgebra {
    let vars = Vars::from_strs(names);
    let gens = texts
        .iter()
        .map(|t| parse_polynomial(t, &vars, q()).expect("test generator parses"))
        .collect();
    let ideal = Ideal::new(vars.len(), q(), gens).expect("test ideal is homogeneous");
    ArtinianAlgebra::from_ideal(vars, &ideal).expect("test algebra is Artinian")
}

pub fn var(a: &ArtinianAlgebra, i: usize) -> LinearForm {
    LinearForm::variable(a.vars().len(), i, a.field())
}

/// Dimension of the commutator algebra straight from the linear system
/// `M J = J M`: the nullspace dimension of the n^2 x n^2 coefficient
/// matrix, independent of the stripe pattern construction.
pub fn sylvester_commutant_dimension(t: &Partition) -> usize {
    let j = t.jordan_first(q());
    let n = t.size();
    if n == 0 {
        return 0;
    }
    let mut system = Matrix::zeros(n * n, n * n, q());
    for i in 0..n {
        for jj in 0..n {
            let row = i * n + jj;
            // (M J)_{i jj} = sum_k M_{i k} J_{k jj}
            for k in 0..n {
                let c = j.get(k, jj).clone();
                if !c.is_zero() {
                    let col = i * n + k;
                    let v = system.get(row, col).clone() + c;
                    system.set(row, col, v);
                }
            }
            // -(J M)_{i jj} = -sum_k J_{i k} M_{k jj}
            for k in 0..n {
                let c = j.get(i, k).clone();
                if !c.is_zero() {
                    let col = k * n + jj;
                    let v = system.get(row, col).clone() - c;
                    system.set(row, col, v);
                }
            }
        }
    }
    system.nullspace().cols()
}

/// Hilbert series of a complete intersection with the given generator
/// degrees: the coefficients of `prod (1 + q + ... + q^(d_i - 1))`.
pub fn complete_intersection_hilbert(degrees: &[usize]) -> Vec<usize> {
    let mut h = vec![1usize];
    for &d in degrees {
        let mut next = vec![0usize; h.len() + d - 1];
        for (i, &c) in h.iter().enumerate() {
            for k in 0..d {
                next[i + k] += c;
            }
        }
        h = next;
    }
    h
}

/// Generator strings for the chain family with parameters `n`, `alpha`:
/// `x0^alpha, x1^2, x1*x2, x2^3, x2*x3, ..., x_{n-1}*x_n, x_n^3`.
pub fn chain_family_generators(n: usize, alpha: usize) -> (Vec<String>, Vec<String>) {
    assert!(n >= 2);
    let vars: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let mut gens = vec![format!("x0^{alpha}"), "x1^2".to_string()];
    for i in 1..n {
        gens.push(format!("x{}*x{}", i, i + 1));
    }
    for i in 2..=n {
        gens.push(format!("x{i}^3"));
    }
    (vars, gens)
}

/// Generator strings for the squares family with parameters `n`, `alpha`:
/// `x0^alpha, x1^2, ..., x_{n-1}^2, x_{n-1}*x_n, x_n^3`.
pub fn squares_family_generators(n: usize, alpha: usize) -> (Vec<String>, Vec<String>) {
    assert!(n >= 2);
    let vars: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let mut gens = vec![format!("x0^{alpha}")];
    for i in 1..n {
        gens.push(format!("x{i}^2"));
    }
    gens.push(format!("x{}*x{}", n - 1, n));
    gens.push(format!("x{n}^3"));
    (vars, gens)
}

pub fn algebra_from_owned(gens: &[String], names: &[String]) -> ArtinianAlgebra {
    let texts: Vec<&str> = gens.iter().map(String::as_str).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    algebra_from(&texts, &name_refs)
}
