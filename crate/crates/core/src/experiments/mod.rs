//! Seeded experiments producing [`ExperimentReport`]s.
//!
//! Every trial draws from its own stream `rng::derived(seed, stream)`, and
//! trials run on the global rayon pool with results merged by index, so a
//! report depends only on its parameters and seed.

mod bipartite;
pub mod canonical;
mod ohba;
mod random;
pub mod report;
mod tournament;

use rayon::prelude::*;
use thiserror::Error;

use crate::error::GraphError;
use crate::procedures::ProcedureError;

pub use bipartite::exp_bipartite_lower;
pub use ohba::exp_ohba_exhaustive;
pub use random::exp_random_digraph;
pub use report::{Cell, Column, ExperimentReport, Role, SCHEMA_VERSION};
pub use tournament::{exp_mset_acyclic, exp_tournament_alpha, k0, K0};

/// Largest order for which experiments compute an exact maximum acyclic
/// set.
pub const EXACT_ALPHA_MAX: usize = 24;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Procedure(#[from] ProcedureError),
}

/// Runs `f(0), ..., f(count - 1)` in parallel and returns the results in
/// index order.
fn par_trials<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).into_par_iter().map(f).collect()
}

/// Stream id for trial `t` of the group keyed by `group` (a size `n`).
fn stream(group: usize, t: usize) -> u64 {
    (group as u64) << 32 | t as u64
}

fn log2(n: usize) -> f64 {
    (n as f64).log2()
}
