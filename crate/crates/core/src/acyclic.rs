//! Acyclic vertex sets: the tournament halving finder, exact and greedy
//! maximum acyclic sets, and acyclic-orientation counting.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{topological_order, Digraph, Graph};
use crate::error::GraphError;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AcyclicError {
    #[error("the given vertex set does not induce a tournament")]
    NotATournament,
    #[error("input too large for {method}: {detail}")]
    TooLarge {
        method: &'static str,
        detail: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An acyclic vertex set together with an ordering in which every arc
/// inside the set points forward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicSetResult {
    /// The set, ascending.
    pub vertices: Vec<usize>,
    pub witness_order: Vec<usize>,
}

impl AcyclicSetResult {
    fn from_order(witness_order: Vec<usize>) -> Self {
        let mut vertices = witness_order.clone();
        vertices.sort_unstable();
        Self {
            vertices,
            witness_order,
        }
    }

    fn from_set(d: &Digraph, vertices: Vec<usize>) -> Self {
        let witness_order = topological_order(d, &vertices)
            .expect("vertices in range")
            .expect("set is acyclic");
        Self {
            vertices,
            witness_order,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the certificate: the witness order lists exactly `vertices`
    /// and every arc of the induced subdigraph goes forward in it.
    pub fn verify(&self, d: &Digraph) -> bool {
        let n = d.vertex_count();
        let mut sorted = self.witness_order.clone();
        sorted.sort_unstable();
        if sorted != self.vertices || sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        if sorted.last().is_some_and(|&v| v >= n) {
            return false;
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in self.witness_order.iter().enumerate() {
            position[v] = i;
        }
        self.witness_order.iter().all(|&u| {
            d.out_neighbors(u)
                .iter()
                .all(|&v| position[v] == usize::MAX || position[u] < position[v])
        })
    }
}

/// Finds a transitive subtournament of `T[set]` with at least
/// `floor(log2 |set|) + 1` vertices.
///
/// Repeatedly picks the vertex with the most out-neighbors inside the
/// current candidate set (smallest id on ties) and shrinks the candidates
/// to its out-neighborhood. The maximum out-degree of an `m`-vertex
/// tournament is at least `(m - 1) / 2`, so each pick at most halves the
/// candidates. The pick order is the witness order.
pub fn find_transitive_subtournament(
    t: &Digraph,
    set: &[usize],
) -> Result<AcyclicSetResult, AcyclicError> {
    if !t.induces_tournament(set)? {
        return Err(AcyclicError::NotATournament);
    }
    let n = t.vertex_count();
    let mut candidates: Vec<usize> = set.to_vec();
    candidates.sort_unstable();
    candidates.dedup();
    let mut inside = vec![false; n];
    for &v in &candidates {
        inside[v] = true;
    }

    let mut order = Vec::new();
    while !candidates.is_empty() {
        let (pick, _) = candidates
            .iter()
            .map(|&v| {
                let deg = t.out_neighbors(v).iter().filter(|&&w| inside[w]).count();
                (v, deg)
            })
            // max_by_key keeps the last maximum; candidates are ascending,
            // so compare on (deg, Reverse(v)) to prefer the smallest id.
            .max_by_key(|&(v, deg)| (deg, std::cmp::Reverse(v)))
            .expect("nonempty");
        order.push(pick);
        let next: Vec<usize> = t
            .out_neighbors(pick)
            .iter()
            .copied()
            .filter(|&w| inside[w])
            .collect();
        for &v in &candidates {
            inside[v] = false;
        }
        for &v in &next {
            inside[v] = true;
        }
        candidates = next;
    }
    Ok(AcyclicSetResult::from_order(order))
}

/// `floor(log2 m) + 1` for `m >= 1`, and 0 for `m = 0`.
pub fn halving_bound(m: usize) -> usize {
    if m == 0 {
        0
    } else {
        m.ilog2() as usize + 1
    }
}

/// Dense bit-matrix view of a digraph with at most 64 vertices.
#[derive(Clone, Debug)]
pub(crate) struct BitDigraph {
    pub out: Vec<u64>,
    pub inn: Vec<u64>,
}

impl BitDigraph {
    pub fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        assert!(
            n <= 64,
            "bit-matrix solvers support at most 64 vertices, got {n}"
        );
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        for (u, v) in d.arcs() {
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        Self { out, inn }
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }
}

/// Incremental acyclicity for a family of disjoint vertex classes.
///
/// `reach[u]` holds the vertices reachable from `u` inside `u`'s class.
/// Inserting `v` into a class closes a cycle exactly when some in-neighbor
/// of `v` in the class is reachable from an out-neighbor of `v` in the
/// class. Every change is journaled so backtracking searches can roll back.
#[derive(Clone, Debug)]
pub(crate) struct ClassReach {
    reach: Vec<u64>,
    journal: Vec<(usize, u64)>,
}

impl ClassReach {
    pub fn new(n: usize) -> Self {
        Self {
            reach: vec![0; n],
            journal: Vec::new(),
        }
    }

    pub fn checkpoint(&self) -> usize {
        self.journal.len()
    }

    pub fn rollback(&mut self, checkpoint: usize) {
        while self.journal.len() > checkpoint {
            let (u, old) = self.journal.pop().expect("nonempty");
            self.reach[u] = old;
        }
    }

    /// Whether `class ∪ {v}` stays acyclic, given that `class` is acyclic.
    pub fn can_insert(&self, g: &BitDigraph, v: usize, class: u64) -> bool {
        let outs = g.out[v] & class;
        let ins = g.inn[v] & class;
        if outs == 0 || ins == 0 {
            return true;
        }
        self.reachable_from(outs) & ins == 0
    }

    fn reachable_from(&self, mut sources: u64) -> u64 {
        let mut r = sources;
        while sources != 0 {
            let w = sources.trailing_zeros() as usize;
            sources &= sources - 1;
            r |= self.reach[w];
        }
        r
    }

    /// Inserts `v` into `class` (the class mask before insertion) if that
    /// keeps it acyclic. Returns whether the insertion happened.
    pub fn insert(&mut self, g: &BitDigraph, v: usize, class: u64) -> bool {
        let outs = g.out[v] & class;
        let ins = g.inn[v] & class;
        let r = self.reachable_from(outs);
        if r & ins != 0 {
            return false;
        }
        self.journal.push((v, self.reach[v]));
        self.reach[v] = r;
        if ins != 0 {
            let gain = r | (1u64 << v);
            let mut members = class;
            while members != 0 {
                let u = members.trailing_zeros() as usize;
                members &= members - 1;
                if (ins >> u) & 1 == 1 || self.reach[u] & ins != 0 {
                    let old = self.reach[u];
                    if old | gain != old {
                        self.journal.push((u, old));
                        self.reach[u] = old | gain;
                    }
                }
            }
        }
        true
    }
}

/// A maximum acyclic vertex set, found by include-first branch and bound
/// over vertices `0..n`. Among maximum sets the lexicographically least
/// (as an ascending vertex list) is returned.
///
/// Exponential; intended for `n <= 30`. Panics when `n > 64`.
pub fn max_acyclic_set_exact(d: &Digraph) -> AcyclicSetResult {
    let g = BitDigraph::new(d);
    let n = g.len();
    let mut search = MaxAcyclicSearch {
        g: &g,
        reach: ClassReach::new(n),
        best: 0,
        best_set: 0,
    };
    search.run(0, 0, 0);
    let vertices: Vec<usize> = (0..n)
        .filter(|&v| (search.best_set >> v) & 1 == 1)
        .collect();
    AcyclicSetResult::from_set(d, vertices)
}

struct MaxAcyclicSearch<'a> {
    g: &'a BitDigraph,
    reach: ClassReach,
    best: usize,
    best_set: u64,
}

impl MaxAcyclicSearch<'_> {
    fn run(&mut self, next: usize, size: usize, set: u64) {
        if size > self.best {
            self.best = size;
            self.best_set = set;
        }
        let n = self.g.len();
        if next == n || size + (n - next) <= self.best {
            return;
        }
        let cp = self.reach.checkpoint();
        if self.reach.insert(self.g, next, set) {
            self.run(next + 1, size + 1, set | (1 << next));
        }
        self.reach.rollback(cp);
        self.run(next + 1, size, set);
    }
}

/// Grows an acyclic set by scanning the vertices in a seeded random order
/// and keeping each vertex that does not close a cycle.
pub fn greedy_acyclic_set(d: &Digraph, seed: u64) -> AcyclicSetResult {
    let n = d.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    rng::shuffle(&mut rng::seeded(seed), &mut order);

    let mut in_set = vec![false; n];
    let mut members = Vec::new();
    let mut stamp = vec![0u32; n];
    let mut epoch = 0u32;
    let mut stack = Vec::new();
    for v in order {
        epoch += 1;
        // Depth-first search from v's out-neighbors inside the set; reaching
        // an in-neighbor of v means v would close a cycle.
        let mut closes_cycle = false;
        stack.clear();
        for &w in d.out_neighbors(v) {
            if in_set[w] && stamp[w] != epoch {
                stamp[w] = epoch;
                stack.push(w);
            }
        }
        while let Some(w) = stack.pop() {
            if d.has_arc(w, v) {
                closes_cycle = true;
                break;
            }
            for &x in d.out_neighbors(w) {
                if in_set[x] && stamp[x] != epoch {
                    stamp[x] = epoch;
                    stack.push(x);
                }
            }
        }
        if !closes_cycle {
            in_set[v] = true;
            members.push(v);
        }
    }
    members.sort_unstable();
    AcyclicSetResult::from_set(d, members)
}

/// How an acyclic-orientation count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    BruteForce,
    DeletionContraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationCount {
    /// Number of acyclic orientations of the graph.
    pub count: u128,
    /// `prod_v (d(v) + 1)`, an upper bound on `count`.
    pub bound: u128,
    pub method: CountMethod,
}

/// Edge-count limit of the brute-force path.
pub const BRUTE_FORCE_MAX_EDGES: usize = 24;
/// Vertex limit of the deletion-contraction path.
pub const DELETION_CONTRACTION_MAX_VERTICES: usize = 24;

/// Counts acyclic orientations of `g` and evaluates the product bound
/// `prod_v (d(v) + 1)`.
///
/// Graphs with at most 24 edges are handled by trying every orientation;
/// larger ones by the recurrence `a(G) = a(G - e) + a(G / e)` (with
/// parallel edges merged after contraction), memoized on the adjacency
/// structure.
pub fn count_acyclic_orientations(g: &Graph) -> Result<OrientationCount, AcyclicError> {
    let bound = (0..g.vertex_count())
        .try_fold(1u128, |acc, v| acc.checked_mul(g.degree(v) as u128 + 1))
        .ok_or_else(|| AcyclicError::TooLarge {
            method: "product bound",
            detail: "bound overflows u128".into(),
        })?;
    if g.edge_count() <= BRUTE_FORCE_MAX_EDGES {
        return Ok(OrientationCount {
            count: count_by_brute_force(g),
            bound,
            method: CountMethod::BruteForce,
        });
    }
    let n = g.vertex_count();
    if n > DELETION_CONTRACTION_MAX_VERTICES {
        return Err(AcyclicError::TooLarge {
            method: "deletion-contraction",
            detail: format!("{n} vertices exceeds {DELETION_CONTRACTION_MAX_VERTICES}"),
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut memo = HashMap::new();
    Ok(OrientationCount {
        count: acyclic_orientations_dc(adj, &mut memo),
        bound,
        method: CountMethod::DeletionContraction,
    })
}

pub(crate) fn count_by_brute_force(g: &Graph) -> u128 {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    assert!(m < 64);
    let mut indeg = vec![0u32; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut stack = Vec::with_capacity(n);
    let mut count = 0u128;
    for mask in 0..(1u64 << m) {
        for list in &mut out {
            list.clear();
        }
        indeg.iter_mut().for_each(|x| *x = 0);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = if (mask >> i) & 1 == 1 { (u, v) } else { (v, u) };
            out[a].push(b);
            indeg[b] += 1;
        }
        stack.clear();
        stack.extend((0..n).filter(|&v| indeg[v] == 0));
        let mut removed = 0;
        while let Some(u) = stack.pop() {
            removed += 1;
            for &w in &out[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if removed == n {
            count += 1;
        }
    }
    count
}

/// Acyclic orientations by deletion-contraction on adjacency bitmasks.
fn acyclic_orientations_dc(adj: Vec<u64>, memo: &mut HashMap<Vec<u64>, u128>) -> u128 {
    // Isolated vertices contribute nothing; drop them to improve memo hits.
    let keep: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
    let adj = if keep.len() < adj.len() {
        relabel(&adj, &keep)
    } else {
        adj
    };
    let n = adj.len();
    let edges: u32 = adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
    if edges == 0 {
        return 1;
    }
    if edges as usize == n * (n - 1) / 2 {
        return (1..=n as u128).product();
    }
    if let Some(&hit) = memo.get(&adj) {
        return hit;
    }
    // Branch on an edge at a maximum-degree vertex.
    let u = (0..n)
        .max_by_key(|&v| adj[v].count_ones())
        .expect("has edges");
    let v = adj[u].trailing_zeros() as usize;

    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);

    // Contract v into u, then remove v.
    let mut merged = deleted.clone();
    let moved = merged[v];
    merged[u] |= moved;
    for (w, row) in merged.iter_mut().enumerate() {
        if (moved >> w) & 1 == 1 {
            *row |= 1 << u;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&w| w != v).collect();
    let contracted = relabel(&merged, &rest);

    let result = acyclic_orientations_dc(deleted, memo) + acyclic_orientations_dc(contracted, memo);
    memo.insert(adj, result);
    result
}

/// The subgraph on `keep` (ascending), relabelled `0..keep.len()`.
fn relabel(adj: &[u64], keep: &[usize]) -> Vec<u64> {
    keep.iter()
        .map(|&v| {
            keep.iter()
                .enumerate()
                .filter(|(_, &w)| (adj[v] >> w) & 1 == 1)
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .collect()
}

/// Whether `set` is acyclic in `d`, through the bit-matrix structure; used
/// to cross-check the incremental insert logic.
#[cfg(test)]
fn acyclic_incremental(d: &Digraph, set: &[usize]) -> bool {
    let g = BitDigraph::new(d);
    let mut reach = ClassReach::new(d.vertex_count());
    let mut class = 0u64;
    for &v in set {
        if !reach.insert(&g, v, class) {
            return false;
        }
        class |= 1 << v;
    }
    true
}
