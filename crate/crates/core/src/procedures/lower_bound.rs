use serde::{Deserialize, Serialize};

use crate::coloring::{Bipartition, Coloring, ListAssignment};
use crate::digraph::{is_acyclic, Digraph};
use crate::generate::gen_random_complete_bipartite;
use crate::Color;

use super::ProcedureError;

/// Upper limit on `side_size^2` arcs for building an instance.
const MAX_ARCS: usize = 20_000_000;

/// A random orientation of `K_{n,n}` with every `k`-subset of the color
/// pool `{1, ..., 2k - 1}` used equally often on each side.
#[derive(Clone, Debug)]
pub struct LowerBoundInstance {
    pub digraph: Digraph,
    pub bipartition: Bipartition,
    pub lists: ListAssignment,
    pub k: usize,
    pub side_size: usize,
    /// `C(2k - 1, k)`, the number of distinct lists.
    pub distinct_lists: usize,
}

impl LowerBoundInstance {
    /// Vertices per side carrying each distinct list.
    pub fn group_size(&self) -> usize {
        self.side_size / self.distinct_lists
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn round_up_to_multiple(x: f64, m: usize) -> usize {
    let m_f = m as f64;
    ((x / m_f).ceil().max(1.0) as usize) * m
}

/// Smallest side size `n`, a multiple of `C(2k-1, k)`, with
/// `n >= 3k C(2k-1, k) log2 n`, found by iterating
/// `n <- roundup(3k C(2k-1, k) log2 n)` from `n = C(2k-1, k)` until it is
/// stable.
pub fn lower_bound_side_size(k: usize) -> usize {
    assert!(k >= 2);
    let distinct = binomial(2 * k - 1, k);
    let factor = (3 * k * distinct) as f64;
    let mut n = distinct;
    for _ in 0..200 {
        let next = round_up_to_multiple(factor * (n as f64).log2(), distinct).max(distinct);
        if next == n {
            break;
        }
        n = next;
    }
    n
}

/// All `k`-subsets of `1..=pool`, lexicographically.
fn k_subsets(pool: usize, k: usize) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    let mut current: Vec<Color> = Vec::with_capacity(k);
    fn rec(
        start: usize,
        pool: usize,
        k: usize,
        current: &mut Vec<Color>,
        out: &mut Vec<Vec<Color>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for c in start..=pool {
            if pool - c + 1 < k - current.len() {
                break;
            }
            current.push(c as Color);
            rec(c + 1, pool, k, current, out);
            current.pop();
        }
    }
    rec(1, pool, k, &mut current, &mut out);
    out
}

/// Builds the bipartite lower-bound instance. `side_size` overrides the
/// fixed-point size with a smaller desk-scale side; it must be a positive
/// multiple of `C(2k-1, k)`.
///
/// Side one is `0..n`, side two `n..2n`; vertex `j` of either side gets the
/// `(j mod C(2k-1, k))`-th `k`-subset in lexicographic order.
pub fn build_lower_bound_instance(
    k: usize,
    seed: u64,
    side_size: Option<usize>,
) -> Result<LowerBoundInstance, ProcedureError> {
    if k < 2 {
        return Err(ProcedureError::InvalidParameter(format!(
            "k = {k} must be at least 2"
        )));
    }
    let distinct = binomial(2 * k - 1, k);
    let n = match side_size {
        Some(s) if s == 0 || s % distinct != 0 => {
            return Err(ProcedureError::InvalidParameter(format!(
                "side size {s} is not a positive multiple of C({}, {k}) = {distinct}",
                2 * k - 1
            )))
        }
        Some(s) => s,
        None => lower_bound_side_size(k),
    };
    if n.checked_mul(n).is_none_or(|arcs| arcs > MAX_ARCS) {
        return Err(ProcedureError::InvalidParameter(format!(
            "side size {n} needs more than {MAX_ARCS} arcs"
        )));
    }
    let (digraph, bipartition) = gen_random_complete_bipartite(n, seed);
    let subsets = k_subsets(2 * k - 1, k);
    debug_assert_eq!(subsets.len(), distinct);
    let lists = (0..2 * n)
        .map(|v| subsets[(v % n) % distinct].clone())
        .collect();
    Ok(LowerBoundInstance {
        digraph,
        bipartition,
        lists: ListAssignment::new(lists)?,
        k,
        side_size: n,
        distinct_lists: distinct,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonMajorColor {
    pub color: Color,
    pub side1_class: Vec<usize>,
    pub side2_class: Vec<usize>,
    /// Whether the two classes together induce a directed cycle.
    pub spans_cycle: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MajorColorReport {
    /// Minimum class size for a color to count as major on a side.
    pub threshold: usize,
    /// `3 log2 n` for the instance's side size `n`.
    pub log_threshold: f64,
    pub side1_majors: Vec<Color>,
    pub side2_majors: Vec<Color>,
    pub common: Vec<CommonMajorColor>,
    /// Each side has at least `k` major colors and some color is major on
    /// both sides.
    pub claims_hold: bool,
}

/// Major-color pigeonhole analysis of a list coloring of a lower-bound
/// instance.
///
/// A color is major on a side when it colors at least `threshold` vertices
/// there, with `threshold = min(ceil(3 log2 n), ceil(g / k))` (at least 1),
/// `g` being the number of vertices per distinct list. If fewer than `k`
/// colors were major on a side, some `k`-subset of the pool avoids all of
/// them and its `g` vertices would need a color used `>= g / k` times, so
/// each side has `k` major colors and, the pool having `2k - 1` colors, the
/// sides share one. At the fixed-point side size `g / k >= 3 log2 n`.
///
/// `coloring` must be total and respect the lists; it need not be acyclic,
/// and `spans_cycle` reports whether each shared major color closes a
/// directed cycle across the sides.
pub fn major_color_analysis(
    instance: &LowerBoundInstance,
    coloring: &Coloring,
) -> Result<MajorColorReport, ProcedureError> {
    let d = &instance.digraph;
    let n = instance.side_size;
    if coloring.len() != d.vertex_count() {
        return Err(ProcedureError::InvalidColoring(format!(
            "expected {} colors, found {}",
            d.vertex_count(),
            coloring.len()
        )));
    }
    let colors = coloring
        .as_total()
        .map_err(|v| ProcedureError::InvalidColoring(format!("vertex {v} is uncolored")))?;
    if let Some(v) = (0..colors.len()).find(|&v| !instance.lists.contains(v, colors[v])) {
        return Err(ProcedureError::InvalidColoring(format!(
            "color {} at vertex {v} is not in its list",
            colors[v]
        )));
    }

    let log_threshold = 3.0 * (n as f64).log2();
    let pigeonhole = instance.group_size().div_ceil(instance.k);
    let threshold = (log_threshold.ceil() as usize).min(pigeonhole).max(1);

    let classes = |side: &[usize]| {
        let mut by_color: std::collections::BTreeMap<Color, Vec<usize>> = Default::default();
        for &v in side {
            by_color.entry(colors[v]).or_default().push(v);
        }
        by_color
    };
    let side1 = classes(instance.bipartition.side1());
    let side2 = classes(instance.bipartition.side2());
    let majors = |m: &std::collections::BTreeMap<Color, Vec<usize>>| -> Vec<Color> {
        m.iter()
            .filter(|(_, vs)| vs.len() >= threshold)
            .map(|(&c, _)| c)
            .collect()
    };
    let side1_majors = majors(&side1);
    let side2_majors = majors(&side2);
    let mut common = Vec::new();
    for &c in side1_majors.iter().filter(|c| side2_majors.contains(c)) {
        let side1_class = side1[&c].clone();
        let side2_class = side2[&c].clone();
        let union: Vec<usize> = side1_class.iter().chain(&side2_class).copied().collect();
        common.push(CommonMajorColor {
            color: c,
            spans_cycle: !is_acyclic(d, &union)?,
            side1_class,
            side2_class,
        });
    }
    let claims_hold =
        side1_majors.len() >= instance.k && side2_majors.len() >= instance.k && !common.is_empty();
    Ok(MajorColorReport {
        threshold,
        log_threshold,
        side1_majors,
        side2_majors,
        common,
        claims_hold,
    })
}
