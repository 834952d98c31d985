//! Executable versions of the nonsymmetry arguments for labeled paths, stars
//! and bipartite graphs, plus exhaustive sweeps that check them on small
//! cases. Every set is enumerated and every membership is re-checked from
//! its definition.

mod cases;
mod classify;
mod corners;
mod regular;
mod sets;
mod stacked;
mod trees;

pub use cases::{main_theorem_case_analysis, CaseLabel, Orientation, ProofCase};
pub use classify::{classify_paths, classify_pattern, ClassificationReport, PatternVerdict};
pub use corners::{check_corner_proposition, CornerVerdict};
pub use regular::{in_subribbon_113_family, ones_next_to_the_two, verify_psi, PsiReport, RegularRibbon};
pub use sets::{
    canonical_path, engine_ascents, has_max_ascents, max_ascent_fillings, weak_column_fillings, ColoringSet, Role,
    SetContext,
};
pub use stacked::{verify_stacked_rows, StackedRows, StackedRowsReport};
pub use trees::{
    is_nonpalindromic, random_unequal_trees, verify_bipartite, verify_bipartite_graph, verify_star, BipartiteVerdict,
    StarTable, StarVerdict,
};
