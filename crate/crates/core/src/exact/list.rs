use std::ops::ControlFlow;

use crate::acyclic::{BitDigraph, ClassReach};
use crate::coloring::{Coloring, ListAssignment};
use crate::digraph::Digraph;
use crate::Color;

use super::{dichromatic_number, Certificate, SolveResult};

/// A list coloring of `d` from `lists` with no monochromatic directed
/// cycle, or `None` when none exists.
///
/// Complete backtracking search. Vertices are visited in a greedy
/// max-connectivity order, each color class keeps an incremental
/// reachability structure, and after every assignment each unassigned
/// vertex must still have some list color it can join (forward checking).
/// Intended for `n <= 24`; panics above 64.
pub fn is_l_colorable(d: &Digraph, lists: &ListAssignment) -> Option<Coloring> {
    let n = d.vertex_count();
    assert_eq!(lists.len(), n, "one list per vertex");
    let universe = lists.universe();
    let index_lists: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            lists
                .list(v)
                .iter()
                .map(|c| universe.binary_search(c).expect("color in universe"))
                .collect()
        })
        .collect();
    let g = BitDigraph::new(d);
    let mut search = ListSearch {
        g: &g,
        lists: &index_lists,
        order: connectivity_order(&g),
        reach: ClassReach::new(n),
        classes: vec![0; universe.len()],
        chosen: vec![usize::MAX; n],
    };
    if !search.run(0) {
        return None;
    }
    Some(Coloring::from_total(
        search.chosen.iter().map(|&i| universe[i]).collect(),
    ))
}

/// Repeatedly takes the unvisited vertex with the most arcs to visited
/// vertices (ties: smallest id), so cycles are closed early in the search.
fn connectivity_order(g: &BitDigraph) -> Vec<usize> {
    let n = g.len();
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| (visited >> v) & 1 == 0)
            .max_by_key(|&v| {
                let links = ((g.out[v] | g.inn[v]) & visited).count_ones();
                (links, std::cmp::Reverse(v))
            })
            .expect("unvisited vertex");
        visited |= 1 << next;
        order.push(next);
    }
    order
}

struct ListSearch<'a> {
    g: &'a BitDigraph,
    lists: &'a [Vec<usize>],
    order: Vec<usize>,
    reach: ClassReach,
    classes: Vec<u64>,
    chosen: Vec<usize>,
}

impl ListSearch<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let lists = self.lists;
        for &c in &lists[v] {
            let cp = self.reach.checkpoint();
            if self.reach.insert(self.g, v, self.classes[c]) {
                self.classes[c] |= 1 << v;
                self.chosen[v] = c;
                if self.forward_check(depth + 1) && self.run(depth + 1) {
                    return true;
                }
                self.classes[c] &= !(1 << v);
            }
            self.reach.rollback(cp);
        }
        false
    }

    /// Classes only grow along a branch, so a vertex that cannot join any
    /// of its list classes now never will.
    fn forward_check(&self, from: usize) -> bool {
        self.order[from..].iter().all(|&u| {
            self.lists[u]
                .iter()
                .any(|&c| self.reach.can_insert(self.g, u, self.classes[c]))
        })
    }
}

/// Which list assignments `list_dichromatic_number_with` examines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every assignment up to relabelling of colors.
    Full,
    /// Only assignments in which every two colors share a vertex.
    ///
    /// If two colors appear on disjoint vertex sets, merging them into one
    /// color keeps every list at size `k` and can only make coloring
    /// harder: a coloring for the merged lists becomes one for the original
    /// lists by splitting the merged class, and subsets of acyclic classes
    /// stay acyclic. Repeated merging ends in a pairwise-intersecting
    /// assignment, so checking those alone decides `k`-choosability.
    Intersecting,
}

/// Calls `visit` on every `k`-list-assignment of `n` vertices up to color
/// relabelling, until it breaks.
///
/// An assignment is viewed as the multiset of its color columns (the set of
/// vertices whose list holds a given color); each vertex lies in exactly
/// `k` columns. Columns are generated grouped by their smallest vertex and
/// in nondecreasing bitmask order within a group, which produces each
/// multiset exactly once. Column `i` becomes color `i + 1`, so at most
/// `k * n` colors occur. Requires `n <= 64`.
pub fn canonical_list_assignments<F>(n: usize, k: usize, mode: EnumerationMode, mut visit: F)
where
    F: FnMut(&ListAssignment) -> ControlFlow<()>,
{
    assert!(n <= 64 && k >= 1);
    if n == 0 {
        return;
    }
    let mut gen = ColumnGenerator {
        n,
        k,
        mode,
        deficit: vec![k; n],
        columns: Vec::new(),
    };
    let _ = gen.extend(0, 0, &mut visit);
}

struct ColumnGenerator {
    n: usize,
    k: usize,
    mode: EnumerationMode,
    deficit: Vec<usize>,
    columns: Vec<u64>,
}

impl ColumnGenerator {
    /// `v` is the lowest vertex that may still be deficient; `floor` the
    /// smallest column mask allowed next within `v`'s group.
    fn extend<F>(&mut self, mut v: usize, mut floor: u64, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&ListAssignment) -> ControlFlow<()>,
    {
        while v < self.n && self.deficit[v] == 0 {
            v += 1;
            floor = 0;
        }
        if v == self.n {
            return visit(&self.to_lists());
        }
        let open = (v + 1..self.n)
            .filter(|&w| self.deficit[w] > 0)
            .fold(0u64, |m, w| m | (1 << w));
        let mut rest = 0u64;
        loop {
            let column = rest | (1 << v);
            let admissible = column >= floor
                && (self.mode == EnumerationMode::Full
                    || self.columns.iter().all(|&c| c & column != 0));
            if admissible {
                self.push(column);
                let flow = self.extend(v, column, visit);
                self.pop(column);
                flow?;
            }
            if rest == open {
                break;
            }
            rest = rest.wrapping_sub(open) & open;
        }
        ControlFlow::Continue(())
    }

    fn push(&mut self, column: u64) {
        self.columns.push(column);
        for w in bits(column) {
            self.deficit[w] -= 1;
        }
    }

    fn pop(&mut self, column: u64) {
        self.columns.pop();
        for w in bits(column) {
            self.deficit[w] += 1;
        }
    }

    fn to_lists(&self) -> ListAssignment {
        let mut lists = vec![Vec::with_capacity(self.k); self.n];
        for (i, &column) in self.columns.iter().enumerate() {
            for w in bits(column) {
                lists[w].push(i as Color + 1);
            }
        }
        ListAssignment::new(lists).expect("every vertex covered k times")
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// The list dichromatic number, with a witness `(value - 1)`-assignment
/// that admits no coloring when `value >= 2`.
///
/// Starts at `k = dichromatic_number(d)` and checks every canonical
/// `k`-assignment (pairwise-intersecting ones suffice, see
/// [`EnumerationMode::Intersecting`]). Doubly exponential; intended for
/// `n <= 7`.
pub fn list_dichromatic_number(d: &Digraph) -> SolveResult {
    list_dichromatic_number_with(d, EnumerationMode::Intersecting)
}

pub fn list_dichromatic_number_with(d: &Digraph, mode: EnumerationMode) -> SolveResult {
    let n = d.vertex_count();
    let chi = dichromatic_number(d).value;
    if n == 0 {
        return SolveResult {
            value: 0,
            certificate: Certificate::UncolorableLists(None),
        };
    }
    // Below chi, identical lists {1..k} already fail.
    let mut witness = (chi >= 2).then(|| {
        let colors: Vec<Color> = (1..chi as Color).collect();
        ListAssignment::uniform(n, &colors).expect("nonempty lists")
    });
    let mut k = chi;
    loop {
        let mut failing = None;
        canonical_list_assignments(n, k, mode, |lists| {
            if is_l_colorable(d, lists).is_none() {
                failing = Some(lists.clone());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        match failing {
            None => {
                return SolveResult {
                    value: k,
                    certificate: Certificate::UncolorableLists(witness),
                }
            }
            Some(lists) => {
                witness = Some(lists);
                k += 1;
            }
        }
    }
}
