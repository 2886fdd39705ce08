use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::acyclic::{
    find_transitive_subtournament, greedy_acyclic_set, halving_bound, max_acyclic_set_exact,
};
use crate::generate::random_tournament_with;
use crate::rng;

use super::report::{frequency, mean, min_max, Cell, ExperimentReport, Role};
use super::{log2, par_trials, stream, ExperimentError, EXACT_ALPHA_MAX};

/// Threshold size for acyclic sets in a random tournament of order `n`,
/// from the expected count `f(k) = C(n, k) k! 2^-C(k, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K0 {
    /// Smallest `k >= 1` with `f(k) < 1`.
    pub k0: usize,
    /// Some `k < k0` has `f(k) = 1` exactly, so the strict inequalities
    /// defining `k0` do not both hold.
    pub tie: bool,
}

fn is_power_of_two(x: usize) -> bool {
    x != 0 && x & (x - 1) == 0
}

/// `f(k) = n (n - 1) ... (n - k + 1) / 2^C(k, 2)`, compared with 1 in log
/// space. Equality needs every factor to be a power of two, which is
/// checked exactly.
pub fn k0(n: usize) -> K0 {
    let mut log_falling = 0.0f64;
    let mut tie = false;
    for k in 1..=n {
        log_falling += ((n - k + 1) as f64).log2();
        let exponent = (k * (k - 1) / 2) as f64;
        let exact_one = (0..k).all(|i| is_power_of_two(n - i))
            && (0..k)
                .map(|i| (n - i).trailing_zeros() as usize)
                .sum::<usize>()
                == k * (k - 1) / 2;
        if exact_one {
            tie = true;
            continue;
        }
        if log_falling < exponent {
            return K0 { k0: k, tie };
        }
    }
    // f(k) >= 1 for all k <= n only when n <= 1.
    K0 { k0: n + 1, tie }
}

/// Random tournaments of each order in `ns`: exact maximum acyclic set for
/// orders up to [`EXACT_ALPHA_MAX`], plus the halving finder and a greedy
/// set on every trial.
pub fn exp_tournament_alpha(
    ns: &[usize],
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if ns.contains(&0) {
        return Err(ExperimentError::InvalidParameter(
            "orders must be positive".into(),
        ));
    }
    let mut report = ExperimentReport::new(
        "tournament-alpha",
        &[
            ("n", Role::Param),
            ("trial", Role::Param),
            ("alpha_exact", Role::Observed),
            ("finder_size", Role::Observed),
            ("greedy_size", Role::Observed),
            ("finder_bound", Role::Param),
            ("finder_meets_bound", Role::Asserted),
            ("log_bound", Role::Param),
            ("alpha_within_log_bound", Role::Observed),
            ("chi_lower", Role::Observed),
        ],
    );
    report.param(
        "n",
        ns.iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    report.param("trials", trials);
    report.param("seed", seed);

    for &n in ns {
        let rows = par_trials(trials, |t| {
            let mut rng = rng::derived(seed, stream(n, t));
            let tour = random_tournament_with(n, &mut rng);
            let all: Vec<usize> = (0..n).collect();
            let finder = find_transitive_subtournament(&tour, &all).expect("tournament");
            let greedy = greedy_acyclic_set(&tour, rng.next_u64());
            let exact = (n <= EXACT_ALPHA_MAX).then(|| max_acyclic_set_exact(&tour).len());
            let bound = halving_bound(n);
            let log_bound = 2.0 * log2(n) + 2.0;
            vec![
                n.into(),
                t.into(),
                exact.into(),
                finder.len().into(),
                greedy.len().into(),
                bound.into(),
                (finder.len() >= bound && finder.verify(&tour)).into(),
                log_bound.into(),
                exact.map(|a| a as f64 <= log_bound).into(),
                exact.map(|a| n.div_ceil(a)).into(),
            ]
        });
        for row in rows {
            report.push(row);
        }

        let rows: Vec<usize> = (0..report.records.len())
            .filter(|&i| report.records[i][0] == Cell::Int(n as i64))
            .collect();
        let pick = |name: &str| -> Vec<&Cell> {
            let c = report.column_index(name).expect("column");
            rows.iter().map(|&i| &report.records[i][c]).collect()
        };
        let alpha_mean = mean(&pick("alpha_exact"));
        let within = frequency(&pick("alpha_within_log_bound"));
        let finder_min = min_max(&pick("finder_size")).map(|(lo, _)| lo);
        let greedy_max = min_max(&pick("greedy_size")).map(|(_, hi)| hi);
        let k = k0(n);
        report.summarize(&format!("n{n}_alpha_mean"), alpha_mean);
        report.summarize(&format!("n{n}_alpha_within_log_bound_frequency"), within);
        report.summarize(&format!("n{n}_finder_min"), finder_min);
        report.summarize(&format!("n{n}_greedy_max"), greedy_max);
        report.summarize(&format!("n{n}_log_bound"), 2.0 * log2(n) + 2.0);
        report.summarize(&format!("n{n}_k0"), k.k0);
        if k.tie {
            report.flag(format!("n = {n}: f(k) = 1 exactly below k0"));
        }
    }
    Ok(report)
}

/// `floor(n / (log2 n)^2)`, clamped to `2..=n`, and whether a clamp applied.
fn m_set_size(n: usize) -> (usize, bool) {
    if n < 2 {
        return (n, true);
    }
    let raw = (n as f64 / (log2(n) * log2(n))).floor() as usize;
    let m = raw.max(2).min(n);
    (m, m != raw)
}

/// Samples random `m`-sets of random tournaments of order `n`, with
/// `m = floor(n / (log2 n)^2)`, and measures the acyclic sets found inside.
///
/// Only the pairs inside the sampled set are oriented: the induced
/// subtournament of a uniformly random tournament on any fixed `m`-set is
/// itself uniform, so this matches restricting a full tournament.
pub fn exp_mset_acyclic(
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if n == 0 || n > 4096 {
        return Err(ExperimentError::InvalidParameter(format!(
            "n = {n} must lie in 1..=4096"
        )));
    }
    let (m, clamped) = m_set_size(n);
    let k = k0(m);
    let target = k.k0.saturating_sub(4);
    let mut report = ExperimentReport::new(
        "mset-acyclic",
        &[
            ("trial", Role::Param),
            ("first_vertex", Role::Param),
            ("finder_size", Role::Observed),
            ("finder_bound", Role::Param),
            ("finder_meets_bound", Role::Asserted),
            ("alpha_exact", Role::Observed),
            ("target_k", Role::Param),
            ("target_k_found", Role::Observed),
        ],
    );
    report.param("n", n);
    report.param("m", m);
    report.param("trials", trials);
    report.param("seed", seed);
    if clamped {
        report.flag(format!("m clamped to {m}"));
    }
    if target == 0 {
        report.flag(format!("k0({m}) - 4 = {} clamped to 1", k.k0 as i64 - 4));
    }
    if k.tie {
        report.flag(format!("m = {m}: f(k) = 1 exactly below k0"));
    }
    let target = target.max(1);
    let bound = halving_bound(m);

    let rows = par_trials(trials, |t| {
        let mut rng = rng::derived(seed, stream(n, t));
        let set = rng::sample_subset(&mut rng, n, m);
        let sub = random_tournament_with(m, &mut rng);
        let all: Vec<usize> = (0..m).collect();
        let finder = find_transitive_subtournament(&sub, &all).expect("tournament");
        let exact = (m <= EXACT_ALPHA_MAX).then(|| max_acyclic_set_exact(&sub).len());
        let best = exact.unwrap_or(finder.len());
        vec![
            t.into(),
            set.first().copied().into(),
            finder.len().into(),
            bound.into(),
            (finder.len() >= bound && finder.verify(&sub)).into(),
            exact.into(),
            target.into(),
            (best >= target).into(),
        ]
    });
    for row in rows {
        report.push(row);
    }
    report.summarize("log2_m", log2(m.max(1)));
    report.summarize("finder_mean", mean(&report.column("finder_size")));
    report.summarize(
        "finder_min",
        min_max(&report.column("finder_size")).map(|(lo, _)| lo),
    );
    report.summarize("k0", k.k0);
    report.summarize(
        "target_k_frequency",
        frequency(&report.column("target_k_found")),
    );
    Ok(report)
}
