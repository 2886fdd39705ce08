//! Canonical forms and isomorphism-free enumeration of small digraphs.

use std::collections::BTreeSet;

use crate::digraph::Digraph;

/// Largest order handled: the off-diagonal adjacency bits must fit a `u64`.
pub const MAX_ORDER: usize = 8;

fn adjacency(d: &Digraph) -> Vec<u64> {
    (0..d.vertex_count())
        .map(|v| d.out_neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Row-major off-diagonal adjacency bits of `adj` relabeled so that
/// position `i` holds vertex `perm[i]`.
fn code_of(adj: &[u64], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                code = code << 1 | (adj[perm[i]] >> perm[j] & 1);
            }
        }
    }
    code
}

/// Isomorphism-invariant vertex classes by iterated degree refinement,
/// numbered by the rank of their signature.
fn refined_classes(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let inn: Vec<u64> = (0..n)
        .map(|v| (0..n).fold(0u64, |m, u| m | (adj[u] >> v & 1) << u))
        .collect();
    let mut class = vec![0usize; n];
    let mut count = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut outs: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| class[w])
                    .collect();
                let mut ins: Vec<usize> = (0..n)
                    .filter(|&u| inn[v] >> u & 1 == 1)
                    .map(|u| class[u])
                    .collect();
                outs.sort_unstable();
                ins.sort_unstable();
                (class[v], outs, ins)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            class[v] = distinct.binary_search(&sigs[v]).expect("present");
        }
        if distinct.len() == count {
            return class;
        }
        count = distinct.len();
    }
}

/// Canonical code: the smallest [`code_of`] over relabelings that list the
/// refined classes in rank order.
pub fn canonical_code(d: &Digraph) -> u64 {
    let n = d.vertex_count();
    assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
    let adj = adjacency(d);
    canonical_code_of(&adj)
}

fn canonical_code_of(adj: &[u64]) -> u64 {
    let class = refined_classes(adj);
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (class[v], v));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if class[b[0]] == class[v] => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(adj.len());
    permute_blocks(adj, &blocks, 0, &mut perm, &mut best);
    best
}

fn permute_blocks(
    adj: &[u64],
    blocks: &[Vec<usize>],
    b: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if b == blocks.len() {
        *best = (*best).min(code_of(adj, perm));
        return;
    }
    let mut block = blocks[b].clone();
    let len = block.len();
    heap_permutations(&mut block, len, &mut |p| {
        let mark = perm.len();
        perm.extend_from_slice(p);
        permute_blocks(adj, blocks, b + 1, perm, best);
        perm.truncate(mark);
    });
}

fn heap_permutations<F: FnMut(&[usize])>(items: &mut [usize], k: usize, f: &mut F) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, f);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, f);
}

/// The digraph whose [`code_of`] under the identity labeling is `code`.
pub fn decode(n: usize, code: u64) -> Digraph {
    let bits = n * n.saturating_sub(1);
    let mut arcs = Vec::new();
    let mut pos = bits;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pos -= 1;
                if code >> pos & 1 == 1 {
                    arcs.push((i, j));
                }
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("decoded arcs are valid")
}

/// Canonical codes of all digraphs of order `n` up to isomorphism, built
/// by attaching a new vertex in every possible way to each representative
/// of order `n - 1`.
pub fn canonical_codes(n: usize) -> BTreeSet<u64> {
    assert!(n <= MAX_ORDER);
    let mut codes = BTreeSet::from([0u64]);
    for order in 1..=n {
        let prev = order - 1;
        let mut next = BTreeSet::new();
        for &code in &codes {
            let base = adjacency(&decode(prev, code));
            for out_mask in 0..1u64 << prev {
                for in_mask in 0..1u64 << prev {
                    let mut adj = base.clone();
                    for (u, row) in adj.iter_mut().enumerate() {
                        *row |= (in_mask >> u & 1) << prev;
                    }
                    adj.push(out_mask);
                    next.insert(canonical_code_of(&adj));
                }
            }
        }
        codes = next;
    }
    codes
}

/// Representatives of all digraphs of order `n` up to isomorphism, in
/// increasing canonical-code order.
pub fn enumerate_digraphs(n: usize) -> Vec<Digraph> {
    canonical_codes(n)
        .into_iter()
        .map(|c| decode(n, c))
        .collect()
}
