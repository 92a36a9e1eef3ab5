//! Young diagrams and their combinatorics.
//!
//! A partition `T(n_1, ..., n_r)` with weakly decreasing positive parts is
//! drawn as a left-aligned diagram with `n_i` boxes in row `i`. The dual
//! partition reads off column heights. Numbering the boxes row by row
//! (horizontal) or column by column (vertical) gives the Jordan first and
//! second canonical forms of a nilpotent matrix of that block type, and the
//! permutation between the two numberings conjugates one into the other.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::FieldSpec;
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts may be given in any order; zeros are dropped and the rest is
    /// sorted decreasingly. The empty partition (size 0) is allowed.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part of the dual equals the number of parts that are >= i.
    pub fn dual(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Distinct part values `f_1 > f_2 > ... > f_s` with multiplicities.
    pub fn multiplicity_sequence(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((f, m)) if *f == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Bijection sending the horizontal number of each box to its vertical
    /// number (0-based internally).
    pub fn numbering_permutation(&self) -> NumberingPermutation {
        let dual = self.dual();
        // start offset of each column in the vertical numbering
        let mut col_start = Vec::with_capacity(dual.parts.len());
        let mut acc = 0;
        for &nu in &dual.parts {
            col_start.push(acc);
            acc += nu;
        }
        let mut forward = Vec::with_capacity(self.size());
        for (row, &len) in self.parts.iter().enumerate() {
            for &start in &col_start[..len] {
                forward.push(start + row);
            }
        }
        NumberingPermutation { forward }
    }

    /// Block-diagonal nilpotent matrix with upper-shift Jordan cells of the
    /// part sizes, in decreasing order.
    pub fn jordan_first(&self, field: FieldSpec) -> Matrix {
        let n = self.size();
        let mut m = Matrix::zeros(n, n, field);
        let mut offset = 0;
        for &len in &self.parts {
            for k in 0..len.saturating_sub(1) {
                m.set(offset + k, offset + k + 1, field.one());
            }
            offset += len;
        }
        m
    }

    /// Nilpotent matrix from the vertical numbering: block superdiagonal
    /// matrices of shape (dual_i x dual_{i+1}), each an identity stacked over
    /// a zero block. Equals `P^-1 * jordan_first * P` for the numbering
    /// permutation matrix `P`.
    pub fn jordan_second(&self, field: FieldSpec) -> Matrix {
        let n = self.size();
        let dual = self.dual();
        let nu = dual.parts();
        let mut m = Matrix::zeros(n, n, field);
        let mut row0 = 0;
        for i in 0..nu.len().saturating_sub(1) {
            let col0 = row0 + nu[i];
            // identity of size nu[i+1], top-justified in a nu[i] x nu[i+1] block
            for k in 0..nu[i + 1] {
                m.set(row0 + k, col0 + k, field.one());
            }
            row0 += nu[i];
        }
        m
    }

    /// All partitions of `n`, largest-part-first lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                acc.push(p);
                go(rest - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Dominance order: `self >= other` iff every prefix sum is >= the
    /// corresponding prefix sum of `other`. Returns `None` for incomparable
    /// partitions (of the same size).
    pub fn dominance_cmp(&self, other: &Partition) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering;
        let mut ge = true;
        let mut le = true;
        let (mut sa, mut sb) = (0usize, 0usize);
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            sa += self.parts.get(i).copied().unwrap_or(0);
            sb += other.parts.get(i).copied().unwrap_or(0);
            if sa < sb {
                ge = false;
            }
            if sa > sb {
                le = false;
            }
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// ASCII rendering of the diagram, optionally with box numbers.
    pub fn render_young(&self, numbering: Numbering) -> String {
        if self.is_empty() {
            return String::from("(empty diagram)\n");
        }
        let n = self.size();
        let width = n.to_string().len();
        let labels: Option<Vec<usize>> = match numbering {
            Numbering::Plain => None,
            Numbering::Horizontal => Some((1..=n).collect()),
            Numbering::Vertical => {
                let perm = self.numbering_permutation();
                Some((0..n).map(|h| perm.apply(h) + 1).collect())
            }
        };
        let mut out = String::new();
        let mut h = 0;
        for &len in &self.parts {
            for _ in 0..len {
                match &labels {
                    None => out.push_str("[ ]"),
                    Some(l) => out.push_str(&format!("[{:>width$}]", l[h], width = width)),
                }
                h += 1;
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Numbering {
    Plain,
    Horizontal,
    Vertical,
}

/// The permutation sending each box's horizontal number to its vertical
/// number. Stored 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumberingPermutation {
    forward: Vec<usize>,
}

impl NumberingPermutation {
    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.forward[i]
    }

    pub fn inverse(&self) -> NumberingPermutation {
        let mut inv = vec![0; self.forward.len()];
        for (i, &v) in self.forward.iter().enumerate() {
            inv[v] = i;
        }
        NumberingPermutation { forward: inv }
    }

    /// Permutation matrix `P` with a 1 at `(i, pi(i))`; `P^-1` is the
    /// transpose.
    pub fn matrix(&self, field: FieldSpec) -> Matrix {
        let n = self.forward.len();
        let mut m = Matrix::zeros(n, n, field);
        for (i, &v) in self.forward.iter().enumerate() {
            m.set(i, v, field.one());
        }
        m
    }
}
