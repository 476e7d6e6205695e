//! Size bounds, minimality and exhaustive enumeration of extremal lattice
//! graphs.

mod bounds;
mod cover;
mod critical;
mod enumerate;
mod epsilon;

pub use bounds::{
    bounds_b, bounds_c, composite_size_bounds_b, composite_size_bounds_c, tightness_b, tightness_c,
    BoundsReport, ConditionViolation, SizeBounds, TightnessDiagnostics,
};
pub use cover::{
    cover_index_sets, is_composite_minimal_b, is_h1_minimal, is_h1_minimal_by_critical_edges,
    is_h1_minimal_by_deletion, is_k_minimal, is_k_minimal_by_deletion, CoverIndexSets,
    CoverageFailure, EdgeCriticality, EdgeWitness, MinimalityReport,
};
pub use critical::{critical_edges_b, critical_edges_c, CriticalEdgeSets, CriticalIndex};
pub use enumerate::{
    count_members_b, count_members_c, enumerate_minimal, enumerate_minimal_b, enumerate_minimal_c,
    DEFAULT_ENUMERATION_CAP,
};
pub use epsilon::{enumerate_q, epsilon, is_in_q, QEnumeration, DEFAULT_Q_CAP};

pub(crate) use enumerate::CoverSystem;
