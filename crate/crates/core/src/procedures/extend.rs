use crate::coloring::{Coloring, ListAssignment};
use crate::digraph::{has_monochromatic_cycle, Digraph};

use super::{certify, ProcedureError};

/// Completes a partial list coloring. Uncolored vertices are handled in
/// ascending order; each takes its smallest list color that no currently
/// colored out-neighbor carries.
///
/// The colored part of `partial` must respect the lists and contain no
/// monochromatic cycle.
pub fn greedy_extend(
    d: &Digraph,
    lists: &ListAssignment,
    partial: &Coloring,
) -> Result<Coloring, ProcedureError> {
    let n = d.vertex_count();
    lists.check_len(n)?;
    if partial.len() != n {
        return Err(ProcedureError::InvalidColoring(format!(
            "expected {n} entries, found {}",
            partial.len()
        )));
    }
    for v in 0..n {
        if let Some(c) = partial.get(v) {
            if !lists.contains(v, c) {
                return Err(ProcedureError::InvalidColoring(format!(
                    "color {c} at vertex {v} is not in its list"
                )));
            }
        }
    }
    if has_monochromatic_cycle(d, |v| partial.get(v)) {
        return Err(ProcedureError::InvalidColoring(
            "partial coloring has a monochromatic cycle".into(),
        ));
    }

    let mut out = partial.clone();
    for v in 0..n {
        if out.get(v).is_some() {
            continue;
        }
        let pick = lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| d.out_neighbors(v).iter().all(|&w| out.get(w) != Some(c)));
        match pick {
            Some(c) => out.set(v, Some(c)),
            None => return Err(ProcedureError::ExtensionFailed { vertex: v }),
        }
    }
    certify(d, lists, out)
}
