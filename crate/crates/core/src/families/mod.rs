//! Lattice scaffolding, the composition `H1 ∘ H2`, named graphs, membership
//! oracles for ℬ_k and 𝒞_k, and relabeling through a CRS certificate.

mod composite;
mod lattice;
mod membership;
mod named;
mod relabel;
mod scaffold;

pub(crate) use composite::{base_order, check_base};
pub use composite::{complete_base, compose, null_base, CompositeGraph};
pub use lattice::{lattice_vertices, LatticeShape, Slice, MAX_LATTICE_ORDER};
pub(crate) use membership::{closed_neighborhood_mask, in_b_slice};
pub use membership::{
    is_member_b, is_member_c, is_member_composite, member_b, member_c, member_composite, Family,
    IndexDiagnostics, LabelEdge, MembershipReport,
};
pub use named::{
    cartesian_power, example_graph, max_b, max_c, p2_box, q_canon, r_graph, t_graph, u_graph,
    v_graph, FamilyGraph, NamedGraph,
};
pub use relabel::canonical_relabel;
pub(crate) use scaffold::{
    check_index, in_c, in_d, in_gamma, in_s, lattice_graph_from_ranks, require_k_at_least_two,
};
pub use scaffold::{gamma, is_edge_covering, s_set, scaffold, ScaffoldKind};
