use crate::coloring::{AcyclicPartition, Coloring, ListAssignment};
use crate::digraph::Digraph;

use super::{certify, ProcedureError};

/// List-colors `d` through the complete multipartite graph on the classes
/// of `partition`.
///
/// In that graph two vertices are adjacent iff they lie in different
/// classes, so a proper list coloring uses each color inside a single
/// class. Such a coloring has no monochromatic cycle in `d`: a cycle
/// meeting two classes has two differently colored vertices, and a cycle
/// inside one class cannot exist because every class is acyclic. The list
/// coloring of the multipartite graph is found by exhaustive backtracking.
///
/// When `|V| <= 2k + 1` for `k = |partition|` and every list has at least
/// `k` colors, a coloring always exists; `TransferFailed` otherwise means
/// that regime was left.
pub fn ohba_transfer(
    d: &Digraph,
    partition: &AcyclicPartition,
    lists: &ListAssignment,
) -> Result<Coloring, ProcedureError> {
    let n = d.vertex_count();
    lists.check_len(n)?;
    let partition = AcyclicPartition::new(d, partition.classes().to_vec())?;
    let class_of = partition.class_of();
    let universe = lists.universe();
    let index_lists: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            lists
                .list(v)
                .iter()
                .map(|c| universe.binary_search(c).expect("in universe"))
                .collect()
        })
        .collect();
    // Smallest lists first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (index_lists[v].len(), v));

    let mut search = MultipartiteSearch {
        lists: &index_lists,
        class_of: &class_of,
        order: &order,
        owner: vec![None; universe.len()],
        uses: vec![0; universe.len()],
        chosen: vec![0; n],
    };
    if !search.run(0) {
        return Err(ProcedureError::TransferFailed);
    }
    let coloring = Coloring::from_total(search.chosen.iter().map(|&i| universe[i]).collect());
    certify(d, lists, coloring)
}

struct MultipartiteSearch<'a> {
    lists: &'a [Vec<usize>],
    class_of: &'a [usize],
    order: &'a [usize],
    owner: Vec<Option<usize>>,
    uses: Vec<usize>,
    chosen: Vec<usize>,
}

impl MultipartiteSearch<'_> {
    fn run(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let class = self.class_of[v];
        let lists = self.lists;
        for &c in &lists[v] {
            if self.owner[c].is_some_and(|o| o != class) {
                continue;
            }
            self.owner[c] = Some(class);
            self.uses[c] += 1;
            self.chosen[v] = c;
            if self.run(depth + 1) {
                return true;
            }
            self.uses[c] -= 1;
            if self.uses[c] == 0 {
                self.owner[c] = None;
            }
        }
        false
    }
}
