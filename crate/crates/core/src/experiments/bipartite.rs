use rand::RngCore;

use crate::coloring::Coloring;
use crate::digraph::is_valid_coloring;
use crate::exact::is_l_colorable;
use crate::procedures::{build_lower_bound_instance, major_color_analysis};
use crate::rng;

use super::report::{frequency, Cell, ExperimentReport, Role};
use super::{par_trials, stream, ExperimentError};

/// Vertex limit of the bit-parallel list-coloring solver.
const MAX_EXACT_ORDER: usize = 64;

/// Builds `trials` lower-bound instances with the given side size and
/// decides list colorability of each exactly.
///
/// Each trial also runs the major-color analysis on a total list coloring:
/// the solver's coloring when one exists, otherwise a uniformly random
/// list-respecting (possibly cyclic) coloring from the trial stream.
pub fn exp_bipartite_lower(
    k: usize,
    side_size: usize,
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    let allowed = k == 2 || (k == 3 && side_size <= 14);
    if !allowed {
        return Err(ExperimentError::InvalidParameter(format!(
            "exact check needs k = 2, or k = 3 with side size <= 14 (got k = {k}, side {side_size})"
        )));
    }
    if 2 * side_size > MAX_EXACT_ORDER {
        return Err(ExperimentError::InvalidParameter(format!(
            "side size {side_size} exceeds the exact solver's {MAX_EXACT_ORDER} vertices"
        )));
    }
    // Validate the side size once up front.
    build_lower_bound_instance(k, 0, Some(side_size))?;

    let mut report = ExperimentReport::new(
        "bipartite-lower",
        &[
            ("trial", Role::Param),
            ("instance_seed", Role::Param),
            ("colorable", Role::Observed),
            ("coloring_valid", Role::Asserted),
            ("analysed", Role::Observed),
            ("major_threshold", Role::Observed),
            ("side1_majors", Role::Observed),
            ("side2_majors", Role::Observed),
            ("major_claims_hold", Role::Asserted),
            ("common_major_spans_cycle", Role::Observed),
        ],
    );
    report.param("k", k);
    report.param("side_size", side_size);
    report.param("trials", trials);
    report.param("seed", seed);

    let rows = par_trials(trials, |t| -> Result<Vec<Cell>, ExperimentError> {
        let mut rng = rng::derived(seed, stream(side_size, t));
        // Keep as i64-representable for the report.
        let instance_seed = rng.next_u64() >> 1;
        let inst = build_lower_bound_instance(k, instance_seed, Some(side_size))?;
        let solution = is_l_colorable(&inst.digraph, &inst.lists);
        let colorable = solution.is_some();
        let valid = match &solution {
            Some(c) => Cell::Bool(is_valid_coloring(&inst.digraph, c, Some(&inst.lists))?),
            None => Cell::Null,
        };
        let (analysed, coloring) = match solution {
            Some(c) => ("solver", c),
            None => {
                let colors = inst
                    .lists
                    .lists()
                    .iter()
                    .map(|l| *rng::choose(&mut rng, l))
                    .collect();
                ("random", Coloring::from_total(colors))
            }
        };
        let major = major_color_analysis(&inst, &coloring)?;
        Ok(vec![
            t.into(),
            instance_seed.into(),
            colorable.into(),
            valid,
            analysed.into(),
            major.threshold.into(),
            major.side1_majors.len().into(),
            major.side2_majors.len().into(),
            major.claims_hold.into(),
            major.common.iter().any(|m| m.spans_cycle).into(),
        ])
    });
    for row in rows {
        report.push(row?);
    }

    let colorable = report.column("colorable");
    let non_colorable = colorable
        .iter()
        .filter(|c| ***c == Cell::Bool(false))
        .count();
    let non_colorable_frequency = frequency(&colorable).map(|f| 1.0 - f);
    report.summarize("non_colorable", non_colorable);
    report.summarize("non_colorable_frequency", non_colorable_frequency);
    // Any non-colorable instance is a bipartite digraph (so chi <= 2)
    // whose list dichromatic number exceeds k.
    report.summarize("certified_gap", non_colorable > 0);
    let spans = frequency(&report.column("common_major_spans_cycle"));
    report.summarize("spans_cycle_frequency", spans);
    Ok(report)
}
