//! Lefschetz-property analysis of graded Artinian algebras.

pub mod algebra;
pub mod analysis;
pub mod csm;
pub mod gr;
pub mod report;
pub mod subspace;

pub use algebra::{AlgebraError, ArtinianAlgebra, LinearForm};
pub use analysis::{
    binomial_family_series, csm_slp_implication, general_form_analysis, sampled_coefficient_vectors,
    wlp_certificate, wlp_certificate_search, BinomialFamily, CsmSlpImplication,
    GenericFormAnalysis, SamplingPolicy, Verdict, WlpCertificate,
};
pub use csm::{central_simple_modules, csm_block_ranks, BlockRank, CentralSimpleModules};
pub use gr::{
    gr_algebra, level_diagonal_truncation, rank_deformation_check, star_z_kernel_dim_by_formula,
    DeformationReport, GrAlgebra,
};
pub use report::LefschetzReport;
pub use subspace::{GradedModule, GradedSubspace};
