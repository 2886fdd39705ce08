use serde::{Deserialize, Serialize};

use crate::coloring::{AcyclicPartition, Bipartition, Coloring, ListAssignment};
use crate::digraph::Digraph;
use crate::rng::{self, Rng};

use super::{certify, ProcedureError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitStats {
    /// Splits drawn, including the successful one.
    pub attempts: usize,
    /// Number of colors in the union of all lists.
    pub universe_size: usize,
    pub parts: usize,
}

/// `floor(log2 n) + 2`: list size that makes a random two-way split of the
/// colors succeed with positive probability on a bipartite digraph with
/// sides of size `n`.
pub fn bipartite_list_bound(n: usize) -> usize {
    crate::acyclic::halving_bound(n) + 1
}

/// `ceil(chi * ln n)`, at least 1.
pub fn chi_ln_list_bound(chi: usize, n: usize) -> usize {
    if n <= 1 {
        return 1;
    }
    ((chi as f64) * (n as f64).ln()).ceil().max(1.0) as usize
}

/// List-colors a bipartite digraph by splitting the colors at random.
///
/// Each attempt sends every color to side one or side two with a fair
/// draw; it succeeds when every vertex keeps a list color on its own
/// side, and each vertex then takes its smallest such color. No color is
/// used on both sides and no arc joins two vertices of one side, so every
/// color class is independent.
pub fn bipartite_random_split_color(
    d: &Digraph,
    sides: &Bipartition,
    lists: &ListAssignment,
    seed: u64,
    max_retries: usize,
) -> Result<(Coloring, SplitStats), ProcedureError> {
    let sides = Bipartition::new(d, sides.side1().to_vec(), sides.side2().to_vec())?;
    split_color(d, &sides.as_partition(), lists, seed, max_retries)
}

/// Generalizes the bipartite split to `chi = |partition|` parts: every
/// color goes to a uniformly random class, so each color class of the
/// result sits inside one acyclic class.
pub fn chi_lnn_split_color(
    d: &Digraph,
    partition: &AcyclicPartition,
    lists: &ListAssignment,
    seed: u64,
    max_retries: usize,
) -> Result<(Coloring, SplitStats), ProcedureError> {
    let partition = AcyclicPartition::new(d, partition.classes().to_vec())?;
    split_color(d, &partition, lists, seed, max_retries)
}

fn split_color(
    d: &Digraph,
    partition: &AcyclicPartition,
    lists: &ListAssignment,
    seed: u64,
    max_retries: usize,
) -> Result<(Coloring, SplitStats), ProcedureError> {
    let n = d.vertex_count();
    lists.check_len(n)?;
    let parts = partition.len();
    let universe = lists.universe();
    let class_of = partition.class_of();
    let mut rng = rng::seeded(seed);
    let mut part_of = vec![0usize; universe.len()];
    for attempt in 1..=max_retries {
        draw_split(&mut rng, parts, &mut part_of);
        let choice: Option<Vec<crate::Color>> = (0..n)
            .map(|v| {
                lists.list(v).iter().copied().find(|c| {
                    let i = universe.binary_search(c).expect("in universe");
                    part_of[i] == class_of[v]
                })
            })
            .collect();
        if let Some(colors) = choice {
            let coloring = certify(d, lists, Coloring::from_total(colors))?;
            return Ok((
                coloring,
                SplitStats {
                    attempts: attempt,
                    universe_size: universe.len(),
                    parts,
                },
            ));
        }
    }
    Err(ProcedureError::RetriesExhausted {
        attempts: max_retries,
    })
}

fn draw_split(rng: &mut Rng, parts: usize, part_of: &mut [usize]) {
    for p in part_of.iter_mut() {
        *p = rng::below(rng, parts.max(1));
    }
}
