//! Dichromatic and list-dichromatic numbers of digraphs.
//!
//! The crate is organised around five layers:
//!
//! * [`digraph`], [`coloring`], [`generate`], [`io`]: the digraph model,
//!   colorings and list assignments, seeded random models and the text
//!   format.
//! * [`acyclic`]: finding and certifying acyclic vertex sets.
//! * [`exact`]: exact dichromatic and list-dichromatic numbers for small
//!   digraphs, and the min-in/out degeneracy list colorer.
//! * [`procedures`]: constructive (mostly Las Vegas) list colorers whose
//!   outputs are always certified.
//! * [`experiments`]: a seeded, parallel experiment harness producing
//!   CSV/JSON reports.

pub mod acyclic;
pub mod coloring;
pub mod digraph;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod generate;
pub mod io;
pub mod procedures;
pub mod rng;

/// Color identifiers are arbitrary nonnegative integers.
pub type Color = u32;

pub use coloring::{AcyclicPartition, Bipartition, Coloring, ListAssignment};
pub use digraph::{
    bidirect, degree_stats, is_acyclic, is_valid_coloring, DegreeStats, Digraph, Graph,
};
pub use error::GraphError;
