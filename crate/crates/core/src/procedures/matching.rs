//! Hopcroft-Karp maximum bipartite matching.

use std::collections::VecDeque;

/// Maximum matching between `left` vertices `0..adj.len()` and right
/// vertices `0..right_count`; `adj[l]` lists the right neighbors of `l`.
/// Returns `mate[l]`, the right vertex matched to `l`.
pub fn hopcroft_karp(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let left_count = adj.len();
    let mut mate_left: Vec<Option<usize>> = vec![None; left_count];
    let mut mate_right: Vec<Option<usize>> = vec![None; right_count];
    let mut dist = vec![u32::MAX; left_count];
    loop {
        // BFS layers from free left vertices.
        let mut queue = VecDeque::new();
        for l in 0..left_count {
            if mate_left[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match mate_right[r] {
                    None => found = true,
                    Some(next) if dist[next] == u32::MAX => {
                        dist[next] = dist[l] + 1;
                        queue.push_back(next);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        for l in 0..left_count {
            if mate_left[l].is_none() {
                augment(l, adj, &mut mate_left, &mut mate_right, &mut dist);
            }
        }
    }
    mate_left
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    mate_left: &mut [Option<usize>],
    mate_right: &mut [Option<usize>],
    dist: &mut [u32],
) -> bool {
    for &r in &adj[l] {
        let free_or_deeper = match mate_right[r] {
            None => true,
            Some(next) => {
                dist[next] == dist[l].wrapping_add(1)
                    && augment(next, adj, mate_left, mate_right, dist)
            }
        };
        if free_or_deeper {
            mate_left[l] = Some(r);
            mate_right[r] = Some(l);
            return true;
        }
    }
    dist[l] = u32::MAX;
    false
}
