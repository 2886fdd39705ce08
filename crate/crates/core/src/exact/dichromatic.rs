use crate::acyclic::{max_acyclic_set_exact, BitDigraph, ClassReach};
use crate::coloring::AcyclicPartition;
use crate::digraph::Digraph;

use super::{Certificate, SolveResult};

/// The dichromatic number with an optimal acyclic partition.
///
/// Tries `k = ceil(n / alpha), ...` where `alpha` is the largest acyclic set,
/// assigning vertices `0..n` in order. Vertex 0 always opens class 0 and a
/// vertex may open class `j` only when classes `0..j` are in use, which
/// removes relabelled duplicates. Intended for `n <= 16`; panics above 64.
pub fn dichromatic_number(d: &Digraph) -> SolveResult {
    let n = d.vertex_count();
    if n == 0 {
        return SolveResult {
            value: 0,
            certificate: Certificate::Partition(
                AcyclicPartition::new(d, Vec::new()).expect("empty partition"),
            ),
        };
    }
    let alpha = max_acyclic_set_exact(d).len();
    let lower = n.div_ceil(alpha);
    let g = BitDigraph::new(d);
    for k in lower..=n {
        let mut search = PartitionSearch {
            g: &g,
            reach: ClassReach::new(n),
            classes: vec![0; k],
        };
        if search.run(0, 0) {
            let classes = search
                .classes
                .iter()
                .map(|&mask| (0..n).filter(|&v| (mask >> v) & 1 == 1).collect())
                .collect();
            let partition =
                AcyclicPartition::new(d, classes).expect("search keeps classes acyclic");
            return SolveResult {
                value: k,
                certificate: Certificate::Partition(partition),
            };
        }
    }
    unreachable!("singleton classes always succeed at k = n")
}

struct PartitionSearch<'a> {
    g: &'a BitDigraph,
    reach: ClassReach,
    classes: Vec<u64>,
}

impl PartitionSearch<'_> {
    fn run(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.len() {
            return true;
        }
        let k = self.classes.len();
        for j in 0..k.min(used + 1) {
            let cp = self.reach.checkpoint();
            if self.reach.insert(self.g, v, self.classes[j]) {
                self.classes[j] |= 1 << v;
                if self.run(v + 1, used.max(j + 1)) {
                    return true;
                }
                self.classes[j] &= !(1 << v);
            }
            self.reach.rollback(cp);
        }
        false
    }
}
