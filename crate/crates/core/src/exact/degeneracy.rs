use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, ListAssignment};
use crate::digraph::Digraph;

use super::SolveError;

/// Result of the min-in/out elimination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    /// Maximum over all steps of `min(d+, d-)` of the removed vertex.
    pub value: usize,
    /// Vertices in elimination order.
    pub order: Vec<usize>,
    /// `avoid_out[v]`: at its elimination `v` had `d+ <= d-`, so its color
    /// must avoid the out-neighbors still present.
    pub avoid_out: Vec<bool>,
}

/// Repeatedly removes the vertex minimizing `min(d+, d-)` in the remaining
/// digraph, smallest id first on ties.
pub fn min_inout_degeneracy(d: &Digraph) -> Degeneracy {
    let n = d.vertex_count();
    let mut outd: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let mut ind: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut avoid_out = vec![true; n];
    let mut value = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (outd[v].min(ind[v]), v))
            .expect("vertex left");
        value = value.max(outd[v].min(ind[v]));
        avoid_out[v] = outd[v] <= ind[v];
        removed[v] = true;
        order.push(v);
        for &w in d.out_neighbors(v) {
            ind[w] -= 1;
        }
        for &w in d.in_neighbors(v) {
            outd[w] -= 1;
        }
    }
    Degeneracy {
        value,
        order,
        avoid_out,
    }
}

/// List-colors `d` when every list has more than `degeneracy` colors.
///
/// Vertices are colored in reverse elimination order; each takes its
/// smallest list color not used by the already colored neighbors on its
/// smaller side. A monochromatic cycle would pass through its earliest
/// eliminated vertex `v`, whose cycle successor and predecessor were both
/// still present when `v` was removed, and `v` avoids one of them.
pub fn greedy_min_inout_list_color(
    d: &Digraph,
    lists: &ListAssignment,
) -> Result<Coloring, SolveError> {
    let n = d.vertex_count();
    lists.check_len(n)?;
    let degeneracy = min_inout_degeneracy(d);
    if n > 0 && lists.k() < degeneracy.value + 1 {
        return Err(SolveError::InsufficientLists {
            required: degeneracy.value + 1,
            available: lists.k(),
        });
    }
    let mut coloring = Coloring::uncolored(n);
    for &v in degeneracy.order.iter().rev() {
        let side = if degeneracy.avoid_out[v] {
            d.out_neighbors(v)
        } else {
            d.in_neighbors(v)
        };
        let color = lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| side.iter().all(|&w| coloring.get(w) != Some(c)))
            .expect("fewer colored neighbors on the smaller side than list colors");
        coloring.set(v, Some(color));
    }
    Ok(coloring)
}
