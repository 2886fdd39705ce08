use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::acyclic::find_transitive_subtournament;
use crate::coloring::{Coloring, ListAssignment};
use crate::digraph::Digraph;
use crate::rng;
use crate::Color;

use super::matching::hopcroft_karp;
use super::{certify, ProcedureError};

/// Default slack in [`tournament_list_bound`].
pub const DEFAULT_EPSILON: f64 = 0.3;

/// `ceil((n / log2 n) (1 + eps))`, or 1 when `n < 2`.
pub fn tournament_list_bound(n: usize, eps: f64) -> usize {
    if n < 2 {
        return 1;
    }
    let n_f = n as f64;
    (n_f / n_f.log2() * (1.0 + eps)).ceil() as usize
}

/// Candidate count that triggers a greedy class: `floor(n / (log2 n)^2)`,
/// clamped to at least 2 so that single vertices go to the matching phase.
pub fn phase_one_threshold(n: usize) -> usize {
    if n < 2 {
        return 2;
    }
    let l = (n as f64).log2();
    ((n as f64 / (l * l)).floor() as usize).max(2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseOneStep {
    pub color: Color,
    /// Uncolored vertices whose remaining list contained `color`.
    pub candidates: usize,
    /// Size of the transitive subtournament colored with `color`.
    pub colored: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TournamentStats {
    pub threshold: usize,
    pub phase_one: Vec<PhaseOneStep>,
    /// Vertices colored by the matching.
    pub matched: usize,
}

/// List-colors a tournament in two phases.
///
/// Phase one: while some color is still available to at least
/// [`phase_one_threshold`] uncolored vertices, take such a color of maximum
/// availability (ties broken by the seed), color a transitive
/// subtournament of those vertices with it and retire the color. Phase
/// two: match the remaining vertices to distinct remaining colors.
pub fn tournament_list_color(
    t: &Digraph,
    lists: &ListAssignment,
    seed: u64,
) -> Result<(Coloring, TournamentStats), ProcedureError> {
    if !t.is_tournament() {
        return Err(ProcedureError::NotATournament);
    }
    let n = t.vertex_count();
    lists.check_len(n)?;
    let threshold = phase_one_threshold(n);
    let mut rng = rng::seeded(seed);
    let mut coloring = Coloring::uncolored(n);
    let mut retired: Vec<Color> = Vec::new();
    let mut steps = Vec::new();

    loop {
        let mut holders: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for v in (0..n).filter(|&v| coloring.get(v).is_none()) {
            for &c in lists.list(v) {
                if !retired.contains(&c) {
                    holders.entry(c).or_default().push(v);
                }
            }
        }
        let best = holders.values().map(Vec::len).max().unwrap_or(0);
        if best < threshold {
            break;
        }
        let tied: Vec<Color> = holders
            .iter()
            .filter(|(_, vs)| vs.len() == best)
            .map(|(&c, _)| c)
            .collect();
        let color = *rng::choose(&mut rng, &tied);
        let candidates = &holders[&color];
        let found = find_transitive_subtournament(t, candidates)?;
        for &v in &found.vertices {
            coloring.set(v, Some(color));
        }
        steps.push(PhaseOneStep {
            color,
            candidates: candidates.len(),
            colored: found.len(),
        });
        retired.push(color);
    }

    let remaining: Vec<usize> = (0..n).filter(|&v| coloring.get(v).is_none()).collect();
    let mut palette: Vec<Color> = remaining
        .iter()
        .flat_map(|&v| lists.list(v).iter().copied())
        .filter(|c| !retired.contains(c))
        .collect();
    palette.sort_unstable();
    palette.dedup();
    let adj: Vec<Vec<usize>> = remaining
        .iter()
        .map(|&v| {
            lists
                .list(v)
                .iter()
                .filter_map(|c| palette.binary_search(c).ok())
                .collect()
        })
        .collect();
    let mate = hopcroft_karp(&adj, palette.len());
    let unmatched = mate.iter().filter(|m| m.is_none()).count();
    if unmatched > 0 {
        return Err(ProcedureError::HallViolation {
            unmatched,
            remaining: remaining.len(),
        });
    }
    for (&v, m) in remaining.iter().zip(&mate) {
        coloring.set(v, Some(palette[m.expect("all matched")]));
    }
    let coloring = certify(t, lists, coloring)?;
    Ok((
        coloring,
        TournamentStats {
            threshold,
            phase_one: steps,
            matched: remaining.len(),
        },
    ))
}
