use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, ListAssignment};
use crate::digraph::{degree_stats, topological_order, Digraph};
use crate::rng::{self, Rng};
use crate::Color;

use super::extend::greedy_extend;
use super::{certify, ProcedureError};

/// Radius of the undirected ball recolored around a failing vertex.
const RESAMPLE_RADIUS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexType {
    One,
    Two,
    Both,
    /// Neither count reaches the threshold, which can happen when some
    /// out-degree is far below the geometric-mean bound.
    Neither,
}

/// Diagnostic counts for one vertex after a round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionWitness {
    /// Colors outside `L(v)` drawn by some out-neighbor and kept by every
    /// out-neighbor that drew them.
    pub y: usize,
    /// Colors of `L(v)` drawn by two or more out-neighbors, all of which
    /// kept them.
    pub x: usize,
    pub vertex_type: VertexType,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LllStats {
    pub rounds: usize,
    /// Vertices redrawn over all resampling steps.
    pub resampled: usize,
    /// Failing vertices seen in the first round.
    pub initial_failures: usize,
    /// Vertices left uncolored by the random process and filled greedily.
    pub extended: usize,
}

/// State of the three-step random process on a digon-free digraph:
/// a list color drawn per vertex, removal of every vertex on a
/// monochromatic path with two arcs, then a fair coin per survivor.
pub struct LllProcess<'a> {
    d: &'a Digraph,
    lists: &'a ListAssignment,
    rng: Rng,
    drawn: Vec<Color>,
    keep_coin: Vec<bool>,
    survives_step2: Vec<bool>,
}

impl<'a> LllProcess<'a> {
    pub fn new(
        d: &'a Digraph,
        lists: &'a ListAssignment,
        seed: u64,
    ) -> Result<Self, ProcedureError> {
        let n = d.vertex_count();
        lists.check_len(n)?;
        if let Some((u, v)) = d.arcs().find(|&(u, v)| d.has_arc(v, u)) {
            return Err(ProcedureError::HasDigon { from: u, to: v });
        }
        let mut rng = rng::seeded(seed);
        let drawn = (0..n)
            .map(|v| *rng::choose(&mut rng, lists.list(v)))
            .collect();
        let keep_coin = (0..n).map(|_| rng::coin(&mut rng)).collect();
        let mut p = Self {
            d,
            lists,
            rng,
            drawn,
            keep_coin,
            survives_step2: vec![true; n],
        };
        p.recompute_step2();
        Ok(p)
    }

    /// The step-one colors.
    pub fn drawn(&self) -> &[Color] {
        &self.drawn
    }

    fn recompute_step2(&mut self) {
        let d = self.d;
        let n = d.vertex_count();
        let mono_out: Vec<bool> = (0..n)
            .map(|v| {
                d.out_neighbors(v)
                    .iter()
                    .any(|&w| self.drawn[w] == self.drawn[v])
            })
            .collect();
        let mono_in: Vec<bool> = (0..n)
            .map(|v| {
                d.in_neighbors(v)
                    .iter()
                    .any(|&u| self.drawn[u] == self.drawn[v])
            })
            .collect();
        for v in 0..n {
            let c = self.drawn[v];
            let middle = mono_in[v] && mono_out[v];
            let first = d
                .out_neighbors(v)
                .iter()
                .any(|&w| self.drawn[w] == c && mono_out[w]);
            let last = d
                .in_neighbors(v)
                .iter()
                .any(|&u| self.drawn[u] == c && mono_in[u]);
            self.survives_step2[v] = !(middle || first || last);
        }
    }

    /// Colors kept after step two.
    pub fn after_step2(&self) -> Coloring {
        Coloring::new(
            (0..self.drawn.len())
                .map(|v| self.survives_step2[v].then_some(self.drawn[v]))
                .collect(),
        )
    }

    /// Colors kept after step three.
    pub fn partial(&self) -> Coloring {
        Coloring::new(
            (0..self.drawn.len())
                .map(|v| self.retained(v).then_some(self.drawn[v]))
                .collect(),
        )
    }

    fn retained(&self, v: usize) -> bool {
        self.survives_step2[v] && self.keep_coin[v]
    }

    /// Uncolored vertices whose free list colors do not exceed their
    /// uncolored out-neighbors; greedy extension is guaranteed once this
    /// is empty.
    pub fn failing_vertices(&self) -> Vec<usize> {
        let d = self.d;
        (0..self.drawn.len())
            .filter(|&v| !self.retained(v))
            .filter(|&v| {
                let uncolored_out = d
                    .out_neighbors(v)
                    .iter()
                    .filter(|&&w| !self.retained(w))
                    .count();
                let free = self
                    .lists
                    .list(v)
                    .iter()
                    .filter(|&&c| {
                        !d.out_neighbors(v)
                            .iter()
                            .any(|&w| self.retained(w) && self.drawn[w] == c)
                    })
                    .count();
                free <= uncolored_out
            })
            .collect()
    }

    /// Redraws color and coin on every vertex within undirected distance
    /// three of a center, then recomputes step two. Returns the number of
    /// vertices redrawn.
    pub fn resample(&mut self, centers: &[usize]) -> usize {
        let d = self.d;
        let n = d.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &c in centers {
            if dist[c] == usize::MAX {
                dist[c] = 0;
                queue.push_back(c);
            }
        }
        while let Some(u) = queue.pop_front() {
            if dist[u] == RESAMPLE_RADIUS {
                continue;
            }
            for &w in d.out_neighbors(u).iter().chain(d.in_neighbors(u)) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut count = 0;
        for v in (0..n).filter(|&v| dist[v] != usize::MAX) {
            self.drawn[v] = *rng::choose(&mut self.rng, self.lists.list(v));
            self.keep_coin[v] = rng::coin(&mut self.rng);
            count += 1;
        }
        self.recompute_step2();
        count
    }

    /// Per-vertex `Y`, `X` and type classification for the current round.
    /// Types use the caller's smallest list size as `L`.
    pub fn witness(&self) -> Vec<ExtensionWitness> {
        let d = self.d;
        let n = d.vertex_count();
        let c1 = 1.0 - (-16f64).exp() / 3.0;
        let delta_tilde = degree_stats(d).delta_tilde;
        let degree_threshold = (c1 * delta_tilde / 2.0).floor() as usize;
        let list_threshold = self.lists.k() / 2;
        (0..n)
            .map(|v| {
                let own = self.lists.list(v);
                let mut by_color: std::collections::BTreeMap<Color, (usize, bool)> =
                    Default::default();
                for &w in d.out_neighbors(v) {
                    let e = by_color.entry(self.drawn[w]).or_insert((0, true));
                    e.0 += 1;
                    e.1 &= self.retained(w);
                }
                let mut y = 0;
                let mut x = 0;
                for (&c, &(count, all_kept)) in &by_color {
                    let in_list = own.binary_search(&c).is_ok();
                    if all_kept && !in_list {
                        y += 1;
                    }
                    if all_kept && in_list && count >= 2 {
                        x += 1;
                    }
                }
                let (mut foreign, mut shared) = (0, 0);
                for &w in d.out_neighbors(v) {
                    let common = self
                        .lists
                        .list(w)
                        .iter()
                        .filter(|c| own.binary_search(c).is_ok())
                        .count();
                    if self.lists.list(w).len() - common >= list_threshold {
                        foreign += 1;
                    }
                    if common >= list_threshold {
                        shared += 1;
                    }
                }
                let vertex_type = match (foreign >= degree_threshold, shared >= degree_threshold) {
                    (true, true) => VertexType::Both,
                    (true, false) => VertexType::One,
                    (false, true) => VertexType::Two,
                    (false, false) => VertexType::Neither,
                };
                ExtensionWitness { y, x, vertex_type }
            })
            .collect()
    }
}

/// Runs the random process with resampling until greedy extension is
/// feasible everywhere, then extends greedily. On an acyclic digraph the
/// first drawn coloring is returned as is.
pub fn lll_digonfree_color(
    d: &Digraph,
    lists: &ListAssignment,
    seed: u64,
    max_rounds: usize,
) -> Result<(Coloring, LllStats), ProcedureError> {
    lll_digonfree_color_observed(d, lists, seed, max_rounds, |_| {})
}

/// As [`lll_digonfree_color`], calling `observe` on the process state at
/// the start of every round.
pub fn lll_digonfree_color_observed<F>(
    d: &Digraph,
    lists: &ListAssignment,
    seed: u64,
    max_rounds: usize,
    mut observe: F,
) -> Result<(Coloring, LllStats), ProcedureError>
where
    F: FnMut(&LllProcess<'_>),
{
    let mut process = LllProcess::new(d, lists, seed)?;
    let mut stats = LllStats::default();
    let all: Vec<usize> = (0..d.vertex_count()).collect();
    if max_rounds > 0 && topological_order(d, &all)?.is_some() {
        stats.rounds = 1;
        observe(&process);
        let coloring = certify(d, lists, Coloring::from_total(process.drawn().to_vec()))?;
        return Ok((coloring, stats));
    }
    for round in 1..=max_rounds {
        stats.rounds = round;
        observe(&process);
        let failing = process.failing_vertices();
        if round == 1 {
            stats.initial_failures = failing.len();
        }
        if failing.is_empty() {
            let partial = process.partial();
            stats.extended = partial.len() - partial.colored_count();
            let coloring = greedy_extend(d, lists, &partial)?;
            return Ok((coloring, stats));
        }
        stats.resampled += process.resample(&failing);
    }
    Err(ProcedureError::RoundsExhausted { rounds: max_rounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::is_valid_coloring;
    use crate::generate::gen_random_digraph;

    fn has_mono_two_path(d: &Digraph, c: &Coloring) -> bool {
        (0..d.vertex_count()).any(|v| {
            c.get(v).is_some_and(|x| {
                d.in_neighbors(v).iter().any(|&u| c.get(u) == Some(x))
                    && d.out_neighbors(v).iter().any(|&w| c.get(w) == Some(x))
            })
        })
    }

    #[test]
    fn rejects_digons() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let lists = ListAssignment::uniform(2, &[1, 2]).unwrap();
        assert_eq!(
            lll_digonfree_color(&d, &lists, 0, 10).err(),
            Some(ProcedureError::HasDigon { from: 0, to: 1 })
        );
    }

    #[test]
    fn acyclic_input_single_round() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let lists = ListAssignment::uniform(4, &[1, 2]).unwrap();
        for seed in 0..20 {
            let (c, _) = lll_digonfree_color(&d, &lists, seed, 50).unwrap();
            assert!(is_valid_coloring(&d, &c, Some(&lists)).unwrap());
        }
    }

    #[test]
    fn three_cycle_two_lists() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let lists = ListAssignment::uniform(3, &[1, 2]).unwrap();
        for seed in 0..200 {
            let (c, _) = lll_digonfree_color(&d, &lists, seed, 100).unwrap();
            assert!(is_valid_coloring(&d, &c, Some(&lists)).unwrap());
        }
    }

    #[test]
    fn step_two_leaves_no_mono_two_path() {
        for seed in 0..10 {
            let d = gen_random_digraph(80, 0.08, seed).unwrap();
            let k = degree_stats(&d).delta_tilde.ceil().max(1.0) as usize;
            let colors: Vec<Color> = (1..=k as Color).collect();
            let lists = ListAssignment::uniform(80, &colors).unwrap();
            let mut checked = 0;
            let result = lll_digonfree_color_observed(&d, &lists, seed, 200, |p| {
                assert!(!has_mono_two_path(&d, &p.after_step2()));
                assert!(!has_mono_two_path(&d, &p.partial()));
                checked += 1;
            });
            assert!(checked > 0);
            if let Ok((c, _)) = result {
                assert!(is_valid_coloring(&d, &c, Some(&lists)).unwrap());
            }
        }
    }

    #[test]
    fn witness_counts_on_a_star() {
        // 0 -> 1, 2, 3 and nothing else.
        let d = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let lists = ListAssignment::new(vec![vec![1], vec![2], vec![2], vec![1]]).unwrap();
        let p = LllProcess::new(&d, &lists, 5).unwrap();
        // No arcs among leaves, so step two keeps everything; leaves keep
        // their color iff their coin says so.
        let w = p.witness();
        let kept = |v: usize| p.partial().get(v).is_some();
        assert_eq!(w[0].y, usize::from(kept(1) && kept(2)));
        assert_eq!(w[0].x, 0);
        assert_eq!(w[1].y, 0);
    }

    #[test]
    fn deterministic_per_seed() {
        let d = gen_random_digraph(60, 0.1, 3).unwrap();
        let lists = ListAssignment::uniform(60, &[1, 2, 3, 4, 5, 6]).unwrap();
        let a = lll_digonfree_color(&d, &lists, 9, 100);
        let b = lll_digonfree_color(&d, &lists, 9, 100);
        assert_eq!(a, b);
    }
}
