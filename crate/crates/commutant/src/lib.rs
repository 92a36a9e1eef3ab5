//! Exact-arithmetic structure theory for the commutator algebra of a
//! nilpotent matrix, applied to graded Artinian algebras.
//!
//! The crate computes, over the rationals or a prime field:
//!
//! - Young diagram combinatorics and the Jordan first/second canonical
//!   forms of a nilpotent matrix ([`partition`], [`jordan`]);
//! - the commutator algebra `C(J)` of a nilpotent Jordan matrix: its
//!   generic stripe pattern, the hat transform that makes its members block
//!   upper triangular, coarse and fine diagonal blocks, the surjection onto
//!   a product of full matrix rings, and exact rank formulas
//!   ([`commutator`]);
//! - Groebner bases and monomial bases of zero-dimensional homogeneous
//!   quotients ([`poly`]);
//! - multiplication matrices, Jordan types of linear forms, central simple
//!   modules, associated graded rings, and certificates for the weak and
//!   strong Lefschetz properties ([`lefschetz`]).
//!
//! Everything is computed with exact arithmetic; random sampling is always
//! seeded and recorded, so all results are reproducible bit for bit.

pub mod commutator;
pub mod field;
pub mod jordan;
pub mod lefschetz;
pub mod matrix;
pub mod par;
pub mod partition;
pub mod poly;

pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use partition::{Numbering, NumberingPermutation, Partition};
