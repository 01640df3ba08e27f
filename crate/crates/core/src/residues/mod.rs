//! Residues of the coefficients at `a^2 = -k^2` and their generating functions.

mod closed;
mod relations;
mod table;
mod vtower;

pub use closed::{
    c1k_conjecture, closed_residues_k1, closed_residues_k2, gamma_top_conjecture, gamma_zero_conjecture,
    vk0_conjecture, K2Branch,
};
pub use relations::{
    alternating_sums, divisor_count_audit, divisor_counts, residue_sum_relations, AlternatingSums, DivisorAudit,
    SumRelations,
};
pub use table::ResidueTable;
pub use vtower::{c1k_determination, index_map, index_map_mismatches, v_tower, VFunction};
