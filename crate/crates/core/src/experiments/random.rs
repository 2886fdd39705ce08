use rand::RngCore;

use crate::acyclic::{greedy_acyclic_set, max_acyclic_set_exact};
use crate::coloring::ListAssignment;
use crate::digraph::is_valid_coloring;
use crate::error::GraphError;
use crate::exact::{greedy_min_inout_list_color, min_inout_degeneracy};
use crate::generate::random_digraph_with;
use crate::rng;
use crate::Color;

use super::report::{frequency, mean, Cell, ExperimentReport, Role};
use super::{par_trials, stream, ExperimentError, EXACT_ALPHA_MAX};

/// `2 ln w / ln q` with `w = np`, `q = 1 / (1 - p)`, when both logarithms
/// are positive.
pub(crate) fn alpha_reference(n: usize, p: f64) -> Option<f64> {
    let w = n as f64 * p;
    let ln_q = -(1.0 - p).ln();
    (w > 1.0 && ln_q > 0.0).then(|| 2.0 * w.ln() / ln_q)
}

/// Samples `D(n, p)` and records the largest acyclic set found (exact up
/// to [`EXACT_ALPHA_MAX`] vertices, greedy beyond), the implied lower bound
/// `ceil(n / alpha)` on the dichromatic number, and the number of colors
/// used by the min-in/out degeneracy colorer.
pub fn exp_random_digraph(
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if !(0.0..=0.5).contains(&p) {
        return Err(GraphError::InvalidProbability(p).into());
    }
    let exact = n <= EXACT_ALPHA_MAX;
    let reference = alpha_reference(n, p);
    let mut report = ExperimentReport::new(
        "random-digraph",
        &[
            ("trial", Role::Param),
            ("arcs", Role::Observed),
            ("alpha", Role::Observed),
            ("alpha_ratio", Role::Observed),
            ("chi_lower", Role::Observed),
            ("degeneracy", Role::Observed),
            ("greedy_colors", Role::Observed),
            ("greedy_valid", Role::Asserted),
        ],
    );
    report.param("n", n);
    report.param("p", p);
    report.param("trials", trials);
    report.param("seed", seed);
    report.param("alpha_method", if exact { "exact" } else { "greedy" });
    let w = n as f64 * p;
    if !(1.0..=n as f64 / 4.0).contains(&w) {
        report.flag(format!("np = {w} lies outside [1, n/4]"));
    }
    if reference.is_none() {
        report.flag("reference 2 ln(np) / ln q undefined for these parameters");
    }

    let rows = par_trials(trials, |t| -> Result<Vec<Cell>, ExperimentError> {
        let mut rng = rng::derived(seed, stream(n, t));
        let d = random_digraph_with(n, p, &mut rng)?;
        let alpha = if exact {
            max_acyclic_set_exact(&d).len()
        } else {
            greedy_acyclic_set(&d, rng.next_u64()).len()
        };
        let degeneracy = min_inout_degeneracy(&d).value;
        let palette: Vec<Color> = (1..=degeneracy as Color + 1).collect();
        let lists = ListAssignment::uniform(n, &palette)?;
        let coloring =
            greedy_min_inout_list_color(&d, &lists).expect("lists exceed the degeneracy");
        let valid = is_valid_coloring(&d, &coloring, Some(&lists))?;
        Ok(vec![
            t.into(),
            d.arc_count().into(),
            alpha.into(),
            reference.map(|r| alpha as f64 / r).into(),
            (alpha > 0).then(|| n.div_ceil(alpha)).into(),
            degeneracy.into(),
            coloring.distinct_colors().into(),
            valid.into(),
        ])
    });
    for row in rows {
        report.push(row?);
    }

    let alpha_mean = mean(&report.column("alpha"));
    report.summarize("alpha_mean", alpha_mean);
    report.summarize("alpha_reference", reference);
    report.summarize(
        "alpha_mean_ratio",
        alpha_mean.zip(reference).map(|(a, r)| a / r),
    );
    report.summarize(
        "alpha_within_factor_2",
        alpha_mean
            .zip(reference)
            .map(|(a, r)| a >= r / 2.0 && a <= 2.0 * r),
    );
    report.summarize("chi_lower_mean", mean(&report.column("chi_lower")));
    report.summarize("greedy_colors_mean", mean(&report.column("greedy_colors")));
    report.summarize(
        "greedy_valid_frequency",
        frequency(&report.column("greedy_valid")),
    );
    Ok(report)
}
