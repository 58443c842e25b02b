//! A laboratory for integer-additive set-labelings of finite simple graphs:
//! weak set-indexer (WIASI) construction and verification, an exact semantic
//! oracle for the sparing number, and a machine-checked catalog of
//! closed-form claims about it evaluated against that oracle.

pub mod claims;
pub mod corpus;
pub mod expr;
pub mod graph;
pub mod intset;
pub mod io;
pub mod labeling;
pub mod ops;
pub mod params;
pub mod sparing;

/// Default order cap for exact parameter and sparing computations.
/// Overridable per call and through `SETLAB_EXACT_CAP` in the CLI.
pub const DEFAULT_EXACT_CAP: usize = 30;

pub use graph::{bipartition, generate, odd_cycle_decomposition, FamilySpec, Graph, VertexId};
pub use intset::IntSet;
pub use labeling::{
    construct_k_uniform, construct_weak, construct_weak_default, restrict, transport, verify,
    LabelingReport, SetLabeling,
};
pub use params::{parameters, parameters_with_cap, GraphParams};
pub use sparing::{
    mono_vertex_minimum, sparing_bruteforce, sparing_exact, sparing_exact_with_cap,
    sparing_heuristic, SparingResult,
};
