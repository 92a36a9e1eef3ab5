//! Buchberger's algorithm with the Gebauer-Moller pair criteria, full
//! normal forms, and reduced Groebner bases under degrevlex.

use thiserror::Error;

use crate::field::FieldSpec;
use crate::par;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("generator {index} uses a different variable count")]
    ArityMismatch { index: usize },
    #[error("generator {index} lies in a different field")]
    FieldMismatch { index: usize },
}

/// A homogeneous ideal, validated on construction. Zero generators are kept
/// out; an empty list is allowed (the zero ideal).
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    field: FieldSpec,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, field: FieldSpec, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        let mut kept = Vec::new();
        for (index, g) in generators.into_iter().enumerate() {
            if g.nvars() != nvars {
                return Err(IdealError::ArityMismatch { index });
            }
            if g.field() != field {
                return Err(IdealError::FieldMismatch { index });
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(IdealError::Inhomogeneous { index });
            }
            kept.push(g);
        }
        Ok(Ideal { nvars, field, generators: kept })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// A reduced Groebner basis: monic elements, pairwise non-divisible leading
/// terms, every element fully reduced against the others, sorted by leading
/// monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    field: FieldSpec,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|p| p.leading_monomial().expect("basis elements are nonzero"))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self).is_zero()
    }
}

/// Full normal form: every term of the result is reducible by no leading
/// term of `gb`. Linear over the field and idempotent. Reducers are tried
/// in basis order, so the result is deterministic.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    assert_eq!(f.nvars(), gb.nvars, "variable count mismatch");
    reduce_full(f, &gb.basis)
}

fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut remainder = Polynomial::zero(f.nvars(), f.field());
    let mut p = f.clone();
    'outer: while let Some((lm, lc)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            let glm = g.leading_monomial().expect("nonzero reducer");
            if glm.divides(&lm) {
                let (_, glc) = g.leading().expect("nonzero reducer");
                let factor = lc.div(glc);
                let shift = glm.div_into(&lm);
                p = p.sub(&g.mul_term(&shift, &factor));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.add_term(lm.clone(), lc.clone());
        p = p.sub(&Polynomial::monomial(lm, lc));
    }
    remainder
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Moller update: prunes the pending pair set against the new basis
/// element `t` (index `t_idx`) and appends the surviving new pairs.
fn gm_update(pairs: &mut Vec<Pair>, basis: &[Polynomial], t_idx: usize) {
    let lt = basis[t_idx].leading_monomial().expect("nonzero");
    let lm = |k: usize| basis[k].leading_monomial().expect("nonzero");

    // candidate pairs (k, t)
    let cand: Vec<Pair> =
        (0..t_idx).map(|k| Pair { i: k, j: t_idx, lcm: lm(k).lcm(lt) }).collect();

    // first Gebauer-Moller sieve: drop (k,t) when another candidate's lcm
    // properly divides its lcm, or an equal lcm appears earlier
    let mut kept: Vec<Pair> = Vec::new();
    'cand: for (idx, p) in cand.iter().enumerate() {
        if lm(p.i).coprime(lt) {
            // Buchberger's product criterion: keep for the removal effect of
            // equal lcms, but never reduce it
            kept.push(p.clone());
            continue;
        }
        for (idx2, q) in cand.iter().enumerate() {
            if idx2 == idx {
                continue;
            }
            if q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || idx2 < idx) {
                continue 'cand;
            }
        }
        kept.push(p.clone());
    }
    // drop the coprime survivors now (product criterion)
    kept.retain(|p| !lm(p.i).coprime(lt));

    // second sieve: prune old pairs whose lcm is strictly handled by t
    pairs.retain(|p| {
        let l = &p.lcm;
        !(lt.divides(l) && lm(p.i).lcm(lt) != *l && lm(p.j).lcm(lt) != *l)
    });

    pairs.extend(kept);
}

/// Pop order: smallest lcm in degrevlex, ties by (i, j). The normal
/// selection strategy, deterministic.
fn pop_batch(pairs: &mut Vec<Pair>) -> Vec<Pair> {
    let min = pairs
        .iter()
        .map(|p| p.lcm.clone())
        .min()
        .expect("pop_batch called with pending pairs");
    let mut batch: Vec<Pair> = Vec::new();
    let mut rest: Vec<Pair> = Vec::new();
    for p in pairs.drain(..) {
        if p.lcm == min {
            batch.push(p);
        } else {
            rest.push(p);
        }
    }
    *pairs = rest;
    batch.sort_by_key(|p| (p.i, p.j));
    batch
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.div_into(&l), &fc.inverse());
    let b = g.mul_term(&gm.div_into(&l), &gc.inverse());
    a.sub(&b)
}

/// Computes the reduced Groebner basis of the ideal under degrevlex.
///
/// S-polynomials sharing the currently smallest lcm are reduced against a
/// frozen snapshot of the basis in parallel, then merged one by one with a
/// final sequential re-reduction, so the result is identical to the purely
/// sequential run.
pub fn buchberger(ideal: &Ideal) -> GroebnerBasis {
    let nvars = ideal.nvars;
    let field = ideal.field;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in &ideal.generators {
        let r = reduce_full(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            gm_update(&mut pairs, &basis, basis.len() - 1);
        }
    }

    while !pairs.is_empty() {
        let batch = pop_batch(&mut pairs);
        let snapshot = basis.clone();
        let pre_reduced = par::par_map(&batch, |p| {
            let s = s_polynomial(&snapshot[p.i], &snapshot[p.j]);
            reduce_full(&s, &snapshot)
        });
        for r in pre_reduced {
            // the basis may have grown while this batch was in flight
            let r = reduce_full(&r, &basis);
            if !r.is_zero() {
                basis.push(r.monic());
                gm_update(&mut pairs, &basis, basis.len() - 1);
            }
        }
    }

    // inter-reduce to the unique reduced basis
    loop {
        let mut changed = false;
        let mut next: Vec<Polynomial> = Vec::new();
        for i in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = reduce_full(&basis[i], &others);
            if r != basis[i] {
                changed = true;
            }
            if !r.is_zero() {
                next.push(r.monic());
            }
        }
        // drop duplicates that inter-reduction may produce
        next.sort_by(|a, b| {
            a.leading_monomial().expect("nonzero").cmp(b.leading_monomial().expect("nonzero"))
        });
        next.dedup();
        let done = !changed && next.len() == basis.len();
        basis = next;
        if done {
            break;
        }
    }

    GroebnerBasis { nvars, field, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Vars};

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn ideal_of(texts: &[&str], vars: &Vars) -> Ideal {
        let gens = texts.iter().map(|t| parse_polynomial(t, vars, q()).unwrap()).collect();
        Ideal::new(vars.len(), q(), gens).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let vars = Vars::from_strs(&["w", "x", "y", "z"]);
        let i = ideal_of(&["w^2", "w*x", "x^3", "x*y", "y^3", "y*z", "z^3"], &vars);
        let gb = buchberger(&i);
        let lms: Vec<String> = gb.leading_monomials().map(|m| m.display(&vars)).collect();
        assert_eq!(gb.polys().len(), 7);
        assert!(lms.contains(&"w^2".to_string()) && lms.contains(&"z^3".to_string()));
        // each basis element is a single monomial
        assert!(gb.polys().iter().all(|p| p.num_terms() == 1));
    }

    #[test]
    fn principal_ideal() {
        let vars = Vars::from_strs(&["x", "y"]);
        let i = ideal_of(&["x^2 + y^2"], &vars);
        let gb = buchberger(&i);
        assert_eq!(gb.polys().len(), 1);
        assert_eq!(gb.polys()[0], parse_polynomial("x^2 + y^2", &vars, q()).unwrap());
    }

    #[test]
    fn normal_form_properties() {
        let vars = Vars::from_strs(&["x", "y"]);
        let i = ideal_of(&["x^2 - y^2", "x*y"], &vars);
        let gb = buchberger(&i);
        // membership: a generator reduces to zero
        let g = parse_polynomial("x^2 - y^2", &vars, q()).unwrap();
        assert!(normal_form(&g, &gb).is_zero());
        // already reduced polynomials are fixed
        let f = parse_polynomial("x + 3y", &vars, q()).unwrap();
        assert_eq!(normal_form(&f, &gb), f);
        // idempotence
        let h = parse_polynomial("x^3 + x^2 + x*y + y", &vars, q()).unwrap();
        let n1 = normal_form(&h, &gb);
        assert_eq!(normal_form(&n1, &gb), n1);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let vars = Vars::from_strs(&["x", "y"]);
        let f = parse_polynomial("x^2 + y", &vars, q()).unwrap();
        let err = Ideal::new(2, q(), vec![f]).unwrap_err();
        assert_eq!(err, IdealError::Inhomogeneous { index: 0 });
    }

    #[test]
    fn katsura_like_small_system() {
        // non-monomial homogeneous system with nontrivial S-pairs
        let vars = Vars::from_strs(&["x", "y", "z"]);
        let i = ideal_of(&["x^2 + y^2 + z^2", "x*y + y*z", "y^2 - z^2"], &vars);
        let gb = buchberger(&i);
        // every generator is in the ideal of the basis
        for g in i.generators() {
            assert!(normal_form(g, &gb).is_zero());
        }
        // every S-polynomial of the basis reduces to zero
        for a in 0..gb.polys().len() {
            for b in a + 1..gb.polys().len() {
                let s = s_polynomial(&gb.polys()[a], &gb.polys()[b]);
                assert!(normal_form(&s, &gb).is_zero());
            }
        }
        // reduced: leading terms pairwise non-divisible, monic
        let lms: Vec<Monomial> = gb.leading_monomials().cloned().collect();
        for a in 0..lms.len() {
            assert!(gb.polys()[a].leading().unwrap().1.is_one());
            for b in 0..lms.len() {
                if a != b {
                    assert!(!lms[a].divides(&lms[b]));
                }
            }
        }
    }

    #[test]
    fn basis_independent_of_generator_order() {
        let vars = Vars::from_strs(&["x", "y", "z"]);
        let a = buchberger(&ideal_of(&["x^2 + y^2 + z^2", "x*y + y*z", "y^2 - z^2"], &vars));
        let b = buchberger(&ideal_of(&["y^2 - z^2", "x^2 + y^2 + z^2", "x*y + y*z"], &vars));
        assert_eq!(a, b);
    }
}
