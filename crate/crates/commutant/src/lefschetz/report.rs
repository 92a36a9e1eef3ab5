//! The structured analysis report. Field names are stable API: the CLI
//! serializes this tree to JSON and golden tests parse it back.

use serde::{Deserialize, Serialize};

use super::analysis::{CsmSlpImplication, GenericFormAnalysis, SamplingPolicy, WlpCertificate};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NamedFormReport {
    pub name: String,
    pub form: String,
    pub jordan_type: Vec<usize>,
    pub dual: Vec<usize>,
    pub rank: usize,
    pub quotient_hilbert: Vec<usize>,
    pub is_wlp_element: bool,
    pub is_slp_element: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CsmModuleReport {
    pub index: usize,
    pub f: usize,
    pub multiplicity: usize,
    pub u_offset: usize,
    pub u_hilbert: Vec<usize>,
    pub w_offset: usize,
    pub w_hilbert: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CsmReport {
    pub z: String,
    pub f: Vec<usize>,
    pub multiplicities: Vec<usize>,
    pub modules: Vec<CsmModuleReport>,
    /// `hilbert(W_i)` equals `hilbert(U_i)` shifted by `f_i - 1`, verified.
    pub shifts_verified: bool,
    /// Symmetry of each `U_i` Hilbert window; only meaningful for
    /// Gorenstein algebras.
    pub u_hilbert_symmetric: Vec<bool>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CommutatorReport {
    pub partition: Vec<usize>,
    pub dual: Vec<usize>,
    pub multiplicities: Vec<[usize; 2]>,
    pub dimension: usize,
    pub coarse_sizes: Vec<usize>,
    pub fine_sizes_of_first: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GrReport {
    pub z: String,
    pub jordan_type: Vec<usize>,
    pub star_z_type_matches: bool,
    pub truncation_route_matches: bool,
    pub kernel_dim_direct: usize,
    pub kernel_dim_formula: usize,
}

/// The complete structured report for one job.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LefschetzReport {
    pub field_characteristic: u64,
    pub variables: Vec<String>,
    pub ideal_generators: Vec<String>,
    /// The global monomial order behind every Groebner computation.
    pub monomial_order: String,
    pub dim: usize,
    pub hilbert: Vec<usize>,
    pub sperner: usize,
    pub cosperner: usize,
    pub gorenstein: bool,
    pub sampling: SamplingPolicy,
    /// Criterion used for the module strong Lefschetz tests.
    pub module_slp_criterion: String,
    pub generic: Option<GenericFormAnalysis>,
    pub forms: Vec<NamedFormReport>,
    pub commutator: Option<CommutatorReport>,
    pub csm: Option<CsmReport>,
    pub gr: Option<GrReport>,
    pub wlp: Option<WlpCertificate>,
    pub slp_by_csm: Option<CsmSlpImplication>,
    pub notes: Vec<String>,
}
