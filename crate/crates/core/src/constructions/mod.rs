//! Generators for the adversarial constructions, each with a self-check of
//! its defining property.

pub mod adversary;
mod ck_witness;
mod lower_bound;
mod tree;

pub use adversary::{run_adversary, AdversaryReport, AdversaryState, OnlineStrategy};
pub use ck_witness::{build_ck_witness, ck_witness_self_check};
pub use lower_bound::{build_lower_bound_set, suggested_params, LowerBoundParams, LowerBoundSet, Part};
pub use tree::{
    check_corners_not_decomposable, corner_query, monochromatic_cover, tree_to_corners, MemberKind,
    MemberSet, TreeSystem,
};

/// Builds the segment system for `p`; see [`TreeSystem::build`].
pub fn build_tree_segments(p: usize) -> crate::Result<TreeSystem> {
    TreeSystem::build(p)
}
