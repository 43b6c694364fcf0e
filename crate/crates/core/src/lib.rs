//! Kite-free plane graphs: reducible configurations, discharging audits,
//! and constructive list edge and list total coloring.
//!
//! A kite is a pair of triangles sharing an edge. Graphs are given as
//! rotation systems ([`embedding::EmbeddedGraph`]); faces come from tracing
//! the rotations.

pub mod coloring;
pub mod discharging;
pub mod embedding;
pub mod generator;
pub mod oracle;
pub mod structure;

pub use coloring::{
    choose_edges, choose_total, verify_coloring, ColorMode, Coloring, ColoringError, EdgeGuarantee, ListAssignment,
    TotalGuarantee,
};
pub use discharging::{audit, AuditReport, RuleSet};
pub use embedding::{EdgeId, EmbeddedGraph, Surface, VertexId};
pub use generator::{generate_kite_free, random_lists, GenSpec};
pub use oracle::{brute_force_choose, OracleBudget};
pub use structure::{find_reducible, Configuration, ReductionMode};
