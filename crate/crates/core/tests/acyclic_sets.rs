mod common;

use common::*;
use dicolor::acyclic::{
    count_acyclic_orientations, find_transitive_subtournament, greedy_acyclic_set, halving_bound,
    max_acyclic_set_exact, AcyclicError, CountMethod,
};
use dicolor::generate::gen_random_tournament;
use dicolor::{bidirect, is_acyclic, Digraph, Graph};

fn floor_log2_plus_one(m: usize) -> usize {
    (usize::BITS - 1 - m.leading_zeros()) as usize + 1
}

#[test]
fn finder_small_sets() {
    let t = gen_random_tournament(5, 1);
    let one = find_transitive_subtournament(&t, &[3]).unwrap();
    assert_eq!(one.vertices, vec![3]);
    let two = find_transitive_subtournament(&t, &[1, 4]).unwrap();
    let source = if t.has_arc(1, 4) { 1 } else { 4 };
    assert_eq!(two.witness_order[0], source);
    assert_eq!(two.len(), 2);
}

#[test]
fn finder_on_eight_vertex_sets() {
    for seed in 0..1000 {
        let t = gen_random_tournament(8, seed);
        let all: Vec<usize> = (0..8).collect();
        let r = find_transitive_subtournament(&t, &all).unwrap();
        assert!(r.len() >= 4, "seed {seed}");
        assert!(r.verify(&t));
        assert!(is_acyclic(&t, &r.vertices).unwrap());
    }
}

#[test]
fn finder_fuzz_up_to_2048() {
    for (i, n) in [3, 10, 33, 100, 257, 1000, 2048].into_iter().enumerate() {
        let t = gen_random_tournament(n, 40 + i as u64);
        let all: Vec<usize> = (0..n).collect();
        let r = find_transitive_subtournament(&t, &all).unwrap();
        assert!(r.len() >= floor_log2_plus_one(n));
        assert!(r.verify(&t));
        // Proper subsets too.
        let half: Vec<usize> = (0..n).step_by(2).collect();
        let r = find_transitive_subtournament(&t, &half).unwrap();
        assert!(r.len() >= floor_log2_plus_one(half.len()));
        assert!(r.vertices.iter().all(|v| v % 2 == 0));
    }
    assert_eq!(halving_bound(2048), 12);
}

#[test]
fn finder_rejects_non_tournaments() {
    let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
    assert!(matches!(
        find_transitive_subtournament(&d, &[0, 1, 2]),
        Err(AcyclicError::NotATournament)
    ));
    let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
    assert!(find_transitive_subtournament(&digon, &[0, 1]).is_err());
}

#[test]
fn exact_examples() {
    assert_eq!(max_acyclic_set_exact(&directed_cycle(3)).len(), 2);
    assert_eq!(
        max_acyclic_set_exact(&bidirect(&Graph::complete(3))).len(),
        1
    );
    assert_eq!(max_acyclic_set_exact(&transitive_tournament(6)).len(), 6);
    assert_eq!(max_acyclic_set_exact(&Digraph::empty(0)).len(), 0);
}

#[test]
fn exact_matches_subset_oracle() {
    for seed in 0..300 {
        let n = 1 + (seed as usize % 8);
        let p = [0.2, 0.35, 0.5][seed as usize % 3];
        let d = random_digraph_with_digons(n, p, seed);
        let r = max_acyclic_set_exact(&d);
        assert_eq!(r.len(), brute_alpha(&d), "seed {seed}");
        assert!(r.verify(&d));
    }
}

#[test]
fn exact_prefers_lexicographically_least_set() {
    assert_eq!(
        max_acyclic_set_exact(&directed_cycle(3)).vertices,
        vec![0, 1]
    );
}

#[test]
fn greedy_examples() {
    let t = transitive_tournament(9);
    assert_eq!(greedy_acyclic_set(&t, 4).len(), 9);
    let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
    assert_eq!(greedy_acyclic_set(&digon, 4).len(), 1);
}

#[test]
fn greedy_never_beats_exact() {
    for seed in 0..100 {
        let t = gen_random_tournament(20, seed);
        let exact = max_acyclic_set_exact(&t);
        let greedy = greedy_acyclic_set(&t, seed);
        assert!(greedy.verify(&t));
        assert!(greedy.len() <= exact.len());
    }
}

#[test]
fn orientation_count_examples() {
    let edge = count_acyclic_orientations(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap();
    assert_eq!((edge.count, edge.bound), (2, 4));
    let k3 = count_acyclic_orientations(&Graph::complete(3)).unwrap();
    assert_eq!((k3.count, k3.bound), (6, 27));
    let path =
        count_acyclic_orientations(&Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()).unwrap();
    assert_eq!((path.count, path.bound), (4, 12));
}

fn check_against_polynomial(g: &Graph) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let poly = chromatic_polynomial(g.vertex_count(), &edges);
    let r = count_acyclic_orientations(g).unwrap();
    assert_eq!(r.count as i128, eval(&poly, -1).abs(), "{edges:?}");
    assert!(r.count <= r.bound);
}

#[test]
fn orientation_count_matches_chromatic_polynomial_small() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            check_against_polynomial(&g);
        }
    }
}

#[test]
fn orientation_count_matches_chromatic_polynomial_seven() {
    for seed in 0..300 {
        let n = 6 + seed as usize % 2;
        check_against_polynomial(&random_graph(n, [0.3, 0.6, 0.9][seed as usize % 3], seed));
    }
    check_against_polynomial(&Graph::complete(7));
}

#[test]
fn orientation_count_methods_agree() {
    // 25+ edges leaves the brute-force path.
    let k8 = count_acyclic_orientations(&Graph::complete(8)).unwrap();
    assert_eq!(k8.method, CountMethod::DeletionContraction);
    assert_eq!(k8.count, 40320);
    for seed in 0..10 {
        let g = random_graph(9, 0.75, seed);
        let r = count_acyclic_orientations(&g).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        assert_eq!(
            r.count as i128,
            eval(&chromatic_polynomial(9, &edges), -1).abs()
        );
        assert!(r.count <= r.bound);
    }
}
