//! Exact solvers used as ground truth: the dichromatic number, list
//! colorability, the list dichromatic number, and the min-in/out
//! degeneracy list colorer.

mod degeneracy;
mod dichromatic;
mod list;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{AcyclicPartition, ListAssignment};
use crate::error::GraphError;

pub use degeneracy::{greedy_min_inout_list_color, min_inout_degeneracy, Degeneracy};
pub use dichromatic::dichromatic_number;
pub use list::{
    canonical_list_assignments, is_l_colorable, list_dichromatic_number,
    list_dichromatic_number_with, EnumerationMode,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("lists of size {available} are too small; the degeneracy colorer needs {required}")]
    InsufficientLists { required: usize, available: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An exact value with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// `value` acyclic classes covering the vertex set.
    Partition(AcyclicPartition),
    /// A `(value - 1)`-list-assignment admitting no list coloring; absent
    /// when `value <= 1`.
    UncolorableLists(Option<ListAssignment>),
}

impl SolveResult {
    pub fn partition(&self) -> Option<&AcyclicPartition> {
        match &self.certificate {
            Certificate::Partition(p) => Some(p),
            Certificate::UncolorableLists(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&ListAssignment> {
        match &self.certificate {
            Certificate::UncolorableLists(w) => w.as_ref(),
            Certificate::Partition(_) => None,
        }
    }
}
