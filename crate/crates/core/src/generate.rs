//! Seeded random digraph models.
//!
//! Every generator visits vertex pairs `(u, v)`, `u < v`, in lexicographic
//! order and consumes its draws for one pair before moving to the next.

use crate::coloring::Bipartition;
use crate::digraph::Digraph;
use crate::error::GraphError;
use crate::rng::{self, Rng};

/// Collects arcs pair by pair. Pushing pairs in lexicographic order keeps
/// every adjacency list sorted without a final sort.
struct PairwiseBuilder {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl PairwiseBuilder {
    /// `degree` is a capacity hint per adjacency list.
    fn new(n: usize, degree: usize) -> Self {
        Self {
            out: (0..n).map(|_| Vec::with_capacity(degree)).collect(),
            inn: (0..n).map(|_| Vec::with_capacity(degree)).collect(),
        }
    }

    fn arc(&mut self, from: usize, to: usize) {
        self.out[from].push(to);
        self.inn[to].push(from);
    }

    /// Orients the pair `lo < hi` forward when `forward` holds.
    fn oriented(&mut self, lo: usize, hi: usize, forward: bool) {
        if forward {
            self.arc(lo, hi);
        } else {
            self.arc(hi, lo);
        }
    }

    fn finish(self) -> Digraph {
        Digraph::from_sorted_adjacency(self.out, self.inn)
    }
}

/// Arc bit matrices for dense models: row `u` of `out` holds `N+(u)` and
/// row `v` of `inn` holds `N-(v)`, so reading rows yields sorted lists.
struct DenseBuilder {
    n: usize,
    words: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl DenseBuilder {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            out: vec![0; n * words],
            inn: vec![0; n * words],
        }
    }

    fn oriented(&mut self, lo: usize, hi: usize, forward: bool) {
        let (from, to) = if forward { (lo, hi) } else { (hi, lo) };
        self.out[from * self.words + to / 64] |= 1 << (to % 64);
        self.inn[to * self.words + from / 64] |= 1 << (from % 64);
    }

    fn rows(bits: &[u64], n: usize, words: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|v| {
                let row = &bits[v * words..(v + 1) * words];
                let mut list =
                    Vec::with_capacity(row.iter().map(|w| w.count_ones() as usize).sum());
                for (i, &word) in row.iter().enumerate() {
                    let mut w = word;
                    while w != 0 {
                        list.push(i * 64 + w.trailing_zeros() as usize);
                        w &= w - 1;
                    }
                }
                list
            })
            .collect()
    }

    fn finish(self) -> Digraph {
        let out = Self::rows(&self.out, self.n, self.words);
        let inn = Self::rows(&self.inn, self.n, self.words);
        Digraph::from_sorted_adjacency(out, inn)
    }
}

/// Uniform random tournament: one fair coin per pair decides its orientation.
pub fn gen_random_tournament(n: usize, seed: u64) -> Digraph {
    let mut rng = rng::seeded(seed);
    random_tournament_with(n, &mut rng)
}

pub(crate) fn random_tournament_with(n: usize, rng: &mut Rng) -> Digraph {
    let mut b = DenseBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let forward = rng::coin(rng);
            b.oriented(u, v, forward);
        }
    }
    b.finish()
}

/// The `D(n, p)` model: each pair is joined with probability `2p` and the
/// arc direction is a fair coin. Never produces digons; `p = 1/2` yields a
/// random tournament.
pub fn gen_random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph, GraphError> {
    let mut rng = rng::seeded(seed);
    random_digraph_with(n, p, &mut rng)
}

pub(crate) fn random_digraph_with(n: usize, p: f64, rng: &mut Rng) -> Result<Digraph, GraphError> {
    if !(0.0..=0.5).contains(&p) {
        return Err(GraphError::InvalidProbability(p));
    }
    let joined = 2.0 * p;
    let mut b = PairwiseBuilder::new(n, (joined * n as f64 / 2.0) as usize + 1);
    for u in 0..n {
        for v in u + 1..n {
            if rng::unit(rng) < joined {
                let forward = rng::coin(rng);
                b.oriented(u, v, forward);
            }
        }
    }
    Ok(b.finish())
}

/// A uniformly random orientation of `K_{n,n}`. Side one is `0..n`, side two
/// is `n..2n`.
pub fn gen_random_complete_bipartite(n: usize, seed: u64) -> (Digraph, Bipartition) {
    let mut rng = rng::seeded(seed);
    random_complete_bipartite_with(n, &mut rng)
}

pub(crate) fn random_complete_bipartite_with(n: usize, rng: &mut Rng) -> (Digraph, Bipartition) {
    let mut b = DenseBuilder::new(2 * n);
    for u in 0..n {
        for v in n..2 * n {
            let forward = rng::coin(rng);
            b.oriented(u, v, forward);
        }
    }
    let d = b.finish();
    let sides = Bipartition::new(&d, (0..n).collect(), (n..2 * n).collect())
        .expect("all arcs cross the sides");
    (d, sides)
}
