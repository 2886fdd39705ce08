use std::collections::BTreeMap;

use crate::coloring::ListAssignment;
use crate::digraph::{is_valid_coloring, Digraph};
use crate::exact::{dichromatic_number, list_dichromatic_number};
use crate::procedures::ohba_transfer;
use crate::rng::{self, Rng};
use crate::Color;

use super::canonical::enumerate_digraphs;
use super::report::{Cell, ExperimentReport, Role};
use super::{par_trials, stream, ExperimentError};

struct Outcome {
    chi: usize,
    in_regime: bool,
    chi_l_matches: bool,
    transfers_ok: usize,
}

/// Random `chi`-lists drawn from the pool `1..=2 chi + 1`.
fn random_lists(rng: &mut Rng, n: usize, chi: usize) -> ListAssignment {
    let pool = 2 * chi + 1;
    let lists = (0..n)
        .map(|_| {
            rng::sample_subset(rng, pool, chi)
                .into_iter()
                .map(|c| c as Color + 1)
                .collect()
        })
        .collect();
    ListAssignment::new(lists).expect("nonempty lists")
}

fn examine(d: &Digraph, transfer_lists: usize, seed: u64, id: u64) -> Outcome {
    let n = d.vertex_count();
    let solved = dichromatic_number(d);
    let chi = solved.value;
    let in_regime = n <= 2 * chi + 1;
    if !in_regime {
        return Outcome {
            chi,
            in_regime,
            chi_l_matches: true,
            transfers_ok: 0,
        };
    }
    let chi_l = list_dichromatic_number(d).value;
    let partition = solved.partition().expect("partition certificate");
    let mut rng = rng::derived(seed, id);
    let mut transfers_ok = 0;
    for _ in 0..transfer_lists {
        let lists = random_lists(&mut rng, n, chi);
        if let Ok(c) = ohba_transfer(d, partition, &lists) {
            if is_valid_coloring(d, &c, Some(&lists)).unwrap_or(false) {
                transfers_ok += 1;
            }
        }
    }
    Outcome {
        chi,
        in_regime,
        chi_l_matches: chi_l == chi,
        transfers_ok,
    }
}

/// Checks `chi_l = chi` on every digraph of order at most `nmax` (up to
/// isomorphism) with `n <= 2 chi + 1`, and runs the multipartite transfer
/// colorer on `transfer_lists` random `chi`-list assignments of each.
///
/// One record per `(n, chi)` group.
pub fn exp_ohba_exhaustive(
    nmax: usize,
    transfer_lists: usize,
    seed: u64,
) -> Result<ExperimentReport, ExperimentError> {
    if nmax > 6 {
        return Err(ExperimentError::InvalidParameter(format!(
            "nmax = {nmax} exceeds 6"
        )));
    }
    let mut report = ExperimentReport::new(
        "ohba-exhaustive",
        &[
            ("n", Role::Param),
            ("chi", Role::Param),
            ("digraphs", Role::Observed),
            ("in_regime", Role::Observed),
            ("chi_l_equals_chi", Role::Asserted),
            ("transfers", Role::Observed),
            ("transfers_succeed", Role::Asserted),
        ],
    );
    report.param("nmax", nmax);
    report.param("transfer_lists", transfer_lists);
    report.param("seed", seed);

    let mut total = 0;
    let mut total_in_regime = 0;
    let mut mismatches = 0;
    let mut transfer_failures = 0;
    for n in 1..=nmax {
        let digraphs = enumerate_digraphs(n);
        let outcomes = par_trials(digraphs.len(), |i| {
            examine(&digraphs[i], transfer_lists, seed, stream(n, i))
        });
        // (digraphs, in regime, mismatches, transfers attempted, transfers ok)
        let mut groups: BTreeMap<usize, [usize; 5]> = BTreeMap::new();
        for o in &outcomes {
            let g = groups.entry(o.chi).or_default();
            g[0] += 1;
            if o.in_regime {
                g[1] += 1;
                g[2] += usize::from(!o.chi_l_matches);
                g[3] += transfer_lists;
                g[4] += o.transfers_ok;
            }
        }
        for (&chi, g) in &groups {
            total += g[0];
            total_in_regime += g[1];
            mismatches += g[2];
            transfer_failures += g[3] - g[4];
            report.push(vec![
                n.into(),
                chi.into(),
                g[0].into(),
                g[1].into(),
                (g[2] == 0).into(),
                g[3].into(),
                (g[3] == g[4]).into(),
            ]);
        }
        report.summarize(&format!("digraphs_n{n}"), digraphs.len());
    }
    report.summarize("digraphs", total);
    report.summarize("in_regime", total_in_regime);
    report.summarize("chi_l_mismatches", mismatches);
    report.summarize("transfer_failures", transfer_failures);
    report.summarize(
        "zero_violations",
        Cell::Bool(mismatches == 0 && transfer_failures == 0),
    );
    Ok(report)
}
