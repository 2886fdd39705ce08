//! Digraph and undirected graph representations plus the basic predicates
//! every solver relies on.

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, ListAssignment};
use crate::error::GraphError;

/// A loopless digraph on vertices `0..n` without parallel arcs.
///
/// Both opposite arcs `(u, v)` and `(v, u)` may be present; such a pair is a
/// digon and counts as two arcs. Out- and in-adjacency lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Self {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    /// Builds a digraph from an arc list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut arc_count = 0;
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            out[u].push(v);
            inn[v].push(u);
            arc_count += 1;
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateArc { from: u, to: w[0] });
            }
        }
        for list in &mut inn {
            list.sort_unstable();
        }
        Ok(Self {
            out,
            inn,
            arc_count,
        })
    }

    /// Assembles a digraph from adjacency lists that are already sorted,
    /// loop-free and mutually consistent. Generators use this to skip the
    /// sort in `from_arcs`.
    pub(crate) fn from_sorted_adjacency(out: Vec<Vec<usize>>, inn: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(out.len(), inn.len());
        debug_assert!(out.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        debug_assert!(inn.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        let arc_count = out.iter().map(Vec::len).sum();
        debug_assert_eq!(arc_count, inn.iter().map(Vec::len).sum::<usize>());
        Self {
            out,
            inn,
            arc_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Sorted out-neighbors of `v`.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Sorted in-neighbors of `v`.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn is_digon_free(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// True iff every pair of distinct vertices is joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        let n = self.vertex_count();
        self.arc_count == n * n.saturating_sub(1) / 2 && self.is_digon_free()
    }

    /// True iff the subdigraph induced by `set` is a tournament.
    pub fn induces_tournament(&self, set: &[usize]) -> Result<bool, GraphError> {
        let mask = vertex_mask(self.vertex_count(), set)?;
        let members: Vec<usize> = (0..mask.len()).filter(|&v| mask[v]).collect();
        let size = members.len();
        let mut index = vec![usize::MAX; mask.len()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        // Bit matrix of the induced arcs; each row is `words` u64s.
        let words = size.div_ceil(64);
        let mut rows = vec![0u64; size * words];
        let mut inside = 0usize;
        for (i, &u) in members.iter().enumerate() {
            for &v in &self.out[u] {
                let j = index[v];
                if j != usize::MAX {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                    inside += 1;
                }
            }
        }
        if inside != size * size.saturating_sub(1) / 2 {
            return Ok(false);
        }
        for i in 0..size {
            for w in 0..words {
                let mut bits = rows[i * words + w];
                while bits != 0 {
                    let j = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if rows[j * words + i / 64] >> (i % 64) & 1 == 1 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The underlying simple graph: `uv` is an edge iff at least one of the
    /// arcs `(u, v)`, `(v, u)` is present.
    pub fn underlying_graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for (v, list) in adj.iter_mut().enumerate() {
            list.extend_from_slice(&self.out[v]);
            list.extend_from_slice(&self.inn[v]);
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    /// The subdigraph induced by `vertices`, relabelled `0..len` in the given
    /// order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph, GraphError> {
        let n = self.vertex_count();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            check_vertex(v, n)?;
            index[v] = i;
        }
        let arcs = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.out[v]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX)
                .map(move |&w| (i, index[w]))
        });
        Digraph::from_arcs(vertices.len(), arcs)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        check_vertex(v, self.vertex_count())
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge { u, v: w[0] });
            }
        }
        Ok(Self { adj })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// A proper 2-coloring as `(side1, side2)` if the graph is bipartite.
    /// Each component's smallest vertex goes to `side1`.
    pub fn two_coloring(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        let side1 = (0..n).filter(|&v| side[v] == 0).collect();
        let side2 = (0..n).filter(|&v| side[v] == 1).collect();
        Some((side1, side2))
    }
}

/// Per-vertex degree tallies and the geometric-mean degree bound used by
/// the digon-free list colorer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    /// max over v of sqrt(d+(v) * d-(v)).
    pub delta_tilde: f64,
    pub max_out_degree: usize,
    pub max_in_degree: usize,
}

pub fn degree_stats(d: &Digraph) -> DegreeStats {
    let n = d.vertex_count();
    let out_degrees: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let in_degrees: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    // Compare the integer products so ties do not depend on sqrt rounding.
    let max_product = out_degrees
        .iter()
        .zip(&in_degrees)
        .map(|(&o, &i)| o * i)
        .max()
        .unwrap_or(0);
    DegreeStats {
        delta_tilde: (max_product as f64).sqrt(),
        max_out_degree: out_degrees.iter().copied().max().unwrap_or(0),
        max_in_degree: in_degrees.iter().copied().max().unwrap_or(0),
        out_degrees,
        in_degrees,
    }
}

/// Replaces every edge of `g` by two opposite arcs.
pub fn bidirect(g: &Graph) -> Digraph {
    let out: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| g.neighbors(v).to_vec())
        .collect();
    let inn = out.clone();
    Digraph::from_sorted_adjacency(out, inn)
}

/// Whether the subdigraph induced by `set` contains no directed cycle.
/// Repeated vertices in `set` are ignored.
pub fn is_acyclic(d: &Digraph, set: &[usize]) -> Result<bool, GraphError> {
    let mask = vertex_mask(d.vertex_count(), set)?;
    Ok(topological_order_masked(d, &mask).is_some())
}

/// A topological order of the subdigraph induced by `set`, or `None` when it
/// has a directed cycle. Sources are released in ascending vertex order.
pub fn topological_order(d: &Digraph, set: &[usize]) -> Result<Option<Vec<usize>>, GraphError> {
    let mask = vertex_mask(d.vertex_count(), set)?;
    Ok(topological_order_masked(d, &mask))
}

fn topological_order_masked(d: &Digraph, mask: &[bool]) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut size = 0;
    for u in (0..n).filter(|&u| mask[u]) {
        size += 1;
        for &v in d.out_neighbors(u) {
            if mask[v] {
                indeg[v] += 1;
            }
        }
    }
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&u| mask[u] && indeg[u] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut order = Vec::with_capacity(size);
    while let Some(std::cmp::Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in d.out_neighbors(u) {
            if mask[v] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(std::cmp::Reverse(v));
                }
            }
        }
    }
    (order.len() == size).then_some(order)
}

/// Whether `coloring` is a total coloring with no monochromatic directed
/// cycle that, when `lists` is given, also respects every vertex's list.
pub fn is_valid_coloring(
    d: &Digraph,
    coloring: &Coloring,
    lists: Option<&ListAssignment>,
) -> Result<bool, GraphError> {
    let n = d.vertex_count();
    if coloring.len() != n {
        return Err(GraphError::LengthMismatch {
            expected: n,
            found: coloring.len(),
        });
    }
    let colors = coloring
        .as_total()
        .map_err(|vertex| GraphError::PartialColoring { vertex })?;
    if let Some(lists) = lists {
        if lists.len() != n {
            return Err(GraphError::LengthMismatch {
                expected: n,
                found: lists.len(),
            });
        }
        if (0..n).any(|v| !lists.contains(v, colors[v])) {
            return Ok(false);
        }
    }
    Ok(!has_monochromatic_cycle(d, |v| Some(colors[v])))
}

/// Whether some directed cycle has all of its vertices colored with the same
/// color. `color_of` returns `None` for uncolored vertices, which never lie
/// on a monochromatic cycle.
///
/// The arcs joining equally colored endpoints form a subdigraph whose cycles
/// are exactly the monochromatic cycles; Kahn's algorithm decides it.
pub fn has_monochromatic_cycle<F>(d: &Digraph, color_of: F) -> bool
where
    F: Fn(usize) -> Option<crate::Color>,
{
    let n = d.vertex_count();
    let colors: Vec<Option<crate::Color>> = (0..n).map(&color_of).collect();
    let same = |u: usize, v: usize| colors[u].is_some() && colors[u] == colors[v];
    let mut indeg = vec![0usize; n];
    for (u, v) in d.arcs() {
        if same(u, v) {
            indeg[v] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = stack.pop() {
        removed += 1;
        for &v in d.out_neighbors(u) {
            if same(u, v) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
    }
    removed < n
}

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<(), GraphError> {
    if v < n {
        Ok(())
    } else {
        Err(GraphError::InvalidVertex { vertex: v, n })
    }
}

pub(crate) fn vertex_mask(n: usize, set: &[usize]) -> Result<Vec<bool>, GraphError> {
    let mut mask = vec![false; n];
    for &v in set {
        check_vertex(v, n)?;
        mask[v] = true;
    }
    Ok(mask)
}
