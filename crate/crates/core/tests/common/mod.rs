//! Independent brute-force oracles shared by the integration tests. None
//! of these call into the solvers they are used to check.

#![allow(dead_code)]

use dicolor::coloring::ListAssignment;
use dicolor::{Color, Digraph, Graph};
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub fn test_rng(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed ^ 0x5eed_0f7e)
}

/// Uniform random digraph where each ordered pair is an arc with
/// probability `p` (digons allowed).
pub fn random_digraph_with_digons(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = test_rng(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// Does the subdigraph induced by `keep` contain a directed cycle?
/// Three-color DFS.
pub fn has_cycle_in(d: &Digraph, keep: &[bool]) -> bool {
    fn visit(d: &Digraph, keep: &[bool], v: usize, state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in d.out_neighbors(v) {
            if !keep[w] {
                continue;
            }
            if state[w] == 1 || (state[w] == 0 && visit(d, keep, w, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let n = d.vertex_count();
    let mut state = vec![0u8; n];
    (0..n).any(|v| keep[v] && state[v] == 0 && visit(d, keep, v, &mut state))
}

pub fn coloring_is_acyclic(d: &Digraph, colors: &[Color]) -> bool {
    let mut distinct = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.iter().all(|&c| {
        let keep: Vec<bool> = colors.iter().map(|&x| x == c).collect();
        !has_cycle_in(d, &keep)
    })
}

/// All simple directed cycles, each listed once starting from its
/// smallest vertex.
pub fn simple_cycles(d: &Digraph) -> Vec<Vec<usize>> {
    fn extend(
        d: &Digraph,
        start: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *path.last().unwrap();
        for &w in d.out_neighbors(v) {
            if w == start {
                out.push(path.clone());
            } else if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                extend(d, start, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let n = d.vertex_count();
    let mut out = Vec::new();
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        extend(d, s, &mut vec![s], &mut on, &mut out);
    }
    out
}

/// Calls `f` on every map `0..n -> 0..k`.
pub fn for_each_map<F: FnMut(&[Color]) -> bool>(n: usize, k: usize, mut f: F) -> bool {
    let mut c = vec![0 as Color; n];
    loop {
        if f(&c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if (c[i] as usize) < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Dichromatic number by trying every `k`-coloring for `k = 1, 2, ...`.
pub fn brute_dichromatic(d: &Digraph) -> usize {
    let n = d.vertex_count();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| for_each_map(n, k, |c| coloring_is_acyclic(d, c)))
        .unwrap()
}

/// Chromatic number of an undirected graph by exhaustive proper colorings.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (1..=n)
        .find(|&k| for_each_map(n, k, |c| edges.iter().all(|&(u, v)| c[u] != c[v])))
        .unwrap()
}

/// Largest acyclic vertex set by checking all subsets.
pub fn brute_alpha(d: &Digraph) -> usize {
    let n = d.vertex_count();
    (0u32..1 << n)
        .filter(|mask| {
            let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            !has_cycle_in(d, &keep)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// L-colorability by trying the full product of the lists.
pub fn brute_l_colorable(d: &Digraph, lists: &ListAssignment) -> bool {
    let n = d.vertex_count();
    let sizes: Vec<usize> = (0..n).map(|v| lists.list(v).len()).collect();
    let mut idx = vec![0usize; n];
    loop {
        let colors: Vec<Color> = (0..n).map(|v| lists.list(v)[idx[v]]).collect();
        if coloring_is_acyclic(d, &colors) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < sizes[i] {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = test_rng(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Chromatic polynomial coefficients (index = power) by deletion and
/// contraction on an edge list.
pub fn chromatic_polynomial(n: usize, edges: &[(usize, usize)]) -> Vec<i128> {
    let Some(&(u, v)) = edges.first() else {
        let mut p = vec![0i128; n + 1];
        p[n] = 1;
        return p;
    };
    let rest: Vec<(usize, usize)> = edges[1..].to_vec();
    let deleted = chromatic_polynomial(n, &rest);
    // Contract v into u, relabel the last vertex as v, drop duplicates.
    let last = n - 1;
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x == last {
            v
        } else {
            x
        }
    };
    let mut contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    contracted.sort_unstable();
    contracted.dedup();
    let c = chromatic_polynomial(n - 1, &contracted);
    let mut p = deleted;
    for (i, coef) in c.iter().enumerate() {
        p[i] -= coef;
    }
    p
}

pub fn eval(poly: &[i128], x: i128) -> i128 {
    poly.iter().rev().fold(0, |acc, &c| acc * x + c)
}

/// A random orientation of a random planar triangulation on `n >= 3`
/// vertices, grown by inserting each new vertex into a random face.
pub fn apollonian_orientation(n: usize, seed: u64) -> Digraph {
    assert!(n >= 3);
    let mut rng = test_rng(seed);
    let mut faces = vec![[0usize, 1, 2]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let arcs: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    Digraph::from_arcs(n, arcs).unwrap()
}

pub fn directed_cycle(n: usize) -> Digraph {
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn transitive_tournament(n: usize) -> Digraph {
    Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

/// Quadratic-residue tournament on 7 vertices: `i -> j` iff
/// `j - i` is 1, 2 or 4 mod 7.
pub fn qr7() -> Digraph {
    let arcs = (0..7).flat_map(|i| [1, 2, 4].map(|s| (i, (i + s) % 7)));
    Digraph::from_arcs(7, arcs).unwrap()
}

/// Random `k`-subsets of `1..=pool` for each of `n` vertices.
pub fn random_lists(n: usize, k: usize, pool: usize, seed: u64) -> ListAssignment {
    let mut rng = test_rng(seed);
    let lists = (0..n)
        .map(|_| {
            let mut all: Vec<Color> = (1..=pool as Color).collect();
            for i in 0..k {
                let j = rng.gen_range(i..pool);
                all.swap(i, j);
            }
            all[..k].to_vec()
        })
        .collect();
    ListAssignment::new(lists).unwrap()
}
