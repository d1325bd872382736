//! n-cluster-tilting subcategories, n-exact sequences, defects and the
//! higher Auslander–Reiten translations.

mod cluster;
mod duality;
mod nexact;
mod universe;

pub use cluster::{is_n_cluster_tilting, ClusterReport, Side, Violation};
pub use duality::{
    tau_n, tau_n_minus, ClusterContext, DefectFormulaReport, DefectFormulaRow, DualityRow, DualityTable, HomotopyReport, HomotopyRow,
    SigmaTauReport, SigmaTauRow, SigmaValue,
};
pub use nexact::{
    chain_map_from_bottom, chain_map_from_top, complete_n_exact_from_epi, complete_n_exact_from_mono, ApproxChoice, DefectPair,
    ExactnessReport, NExactSequence,
};
pub use universe::{enumerate_indecomposables, standard_names, IndecUniverse, Provenance};
