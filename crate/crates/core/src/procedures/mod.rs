//! Constructive list colorers. Every coloring returned here has been
//! checked with [`is_valid_coloring`](crate::digraph::is_valid_coloring)
//! against the input lists before it is handed back.

mod extend;
mod lll;
mod lower_bound;
pub mod matching;
mod ohba;
mod split;
mod tournament;

use thiserror::Error;

use crate::acyclic::AcyclicError;
use crate::coloring::{Coloring, ListAssignment};
use crate::digraph::{is_valid_coloring, Digraph};
use crate::error::GraphError;

pub use extend::greedy_extend;
pub use lll::{
    lll_digonfree_color, lll_digonfree_color_observed, ExtensionWitness, LllProcess, LllStats,
    VertexType,
};
pub use lower_bound::{
    build_lower_bound_instance, lower_bound_side_size, major_color_analysis, CommonMajorColor,
    LowerBoundInstance, MajorColorReport,
};
pub use ohba::ohba_transfer;
pub use split::{
    bipartite_list_bound, bipartite_random_split_color, chi_ln_list_bound, chi_lnn_split_color,
    SplitStats,
};
pub use tournament::{
    phase_one_threshold, tournament_list_bound, tournament_list_color, PhaseOneStep,
    TournamentStats, DEFAULT_EPSILON,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProcedureError {
    #[error("the complete multipartite graph admits no list coloring")]
    TransferFailed,
    #[error("no successful color split within {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("matching leaves {unmatched} of {remaining} remaining vertices uncolored")]
    HallViolation { unmatched: usize, remaining: usize },
    #[error("extension still infeasible after {rounds} rounds")]
    RoundsExhausted { rounds: usize },
    #[error("no list color available at vertex {vertex}")]
    ExtensionFailed { vertex: usize },
    #[error("input digraph is not a tournament")]
    NotATournament,
    #[error("input digraph contains a digon ({from}, {to})")]
    HasDigon { from: usize, to: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<AcyclicError> for ProcedureError {
    fn from(e: AcyclicError) -> Self {
        match e {
            AcyclicError::NotATournament => ProcedureError::NotATournament,
            AcyclicError::Graph(g) => ProcedureError::Graph(g),
            other => ProcedureError::InvalidParameter(other.to_string()),
        }
    }
}

/// Final gate on every procedure output.
fn certify(
    d: &Digraph,
    lists: &ListAssignment,
    coloring: Coloring,
) -> Result<Coloring, ProcedureError> {
    if is_valid_coloring(d, &coloring, Some(lists))? {
        Ok(coloring)
    } else {
        Err(ProcedureError::InvalidColoring(
            "produced coloring failed certification".into(),
        ))
    }
}
