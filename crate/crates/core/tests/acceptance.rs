//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use dicolor::acyclic::{count_acyclic_orientations, find_transitive_subtournament};
use dicolor::coloring::{Coloring, ListAssignment};
use dicolor::exact::dichromatic_number;
use dicolor::experiments::canonical::enumerate_digraphs;
use dicolor::experiments::report::Cell;
use dicolor::experiments::{
    exp_bipartite_lower, exp_ohba_exhaustive, exp_random_digraph, exp_tournament_alpha,
};
use dicolor::generate::{gen_random_complete_bipartite, gen_random_digraph, gen_random_tournament};
use dicolor::io::write_digraph;
use dicolor::procedures::{
    bipartite_random_split_color, chi_ln_list_bound, chi_lnn_split_color,
    lll_digonfree_color_observed, tournament_list_bound, tournament_list_color, LllProcess,
};
use dicolor::{bidirect, degree_stats, is_valid_coloring, Color, Digraph};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_chi_oracle() -> Outcome {
    let mut checked = 0;
    let mut check = |d: &Digraph| -> Result<(), String> {
        let got = dichromatic_number(d).value;
        let want = brute_dichromatic(d);
        checked += 1;
        ensure(got == want, || {
            format!(
                "{:?}: solver {got}, brute force {want}",
                d.arcs().collect::<Vec<_>>()
            )
        })
    };
    for d in enumerate_digraphs(4) {
        check(&d)?;
    }
    for seed in 0..500u64 {
        let n = 1 + seed as usize % 6;
        let p = [0.2, 0.35, 0.5, 0.65][seed as usize % 4];
        check(&random_digraph_with_digons(n, p, 1000 + seed))?;
    }
    Ok(format!("{checked} digraphs agree"))
}

fn c2_bidirection() -> Outcome {
    let mut checked = 0;
    for n in 0..=6 {
        for g in all_graphs(n) {
            let got = dichromatic_number(&bidirect(&g)).value;
            let want = brute_chromatic(&g);
            ensure(got == want, || {
                format!("{:?}: {got} vs {want}", g.edges().collect::<Vec<_>>())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} labeled graphs agree"))
}

fn c3_ohba() -> Outcome {
    let r = exp_ohba_exhaustive(5, 50, 2024).map_err(|e| e.to_string())?;
    let mismatches = &r.summary["chi_l_mismatches"];
    let failures = &r.summary["transfer_failures"];
    ensure(r.is_clean(), || format!("violations: {:?}", r.violations))?;
    ensure(
        *mismatches == Cell::Int(0) && *failures == Cell::Int(0),
        || format!("mismatches {mismatches:?}, transfer failures {failures:?}"),
    )?;
    Ok(format!(
        "{:?} digraphs, {:?} in regime, 0 mismatches, 0 transfer failures",
        r.summary["digraphs"], r.summary["in_regime"]
    ))
}

fn c4_finder() -> Outcome {
    let mut smallest_margin = usize::MAX;
    for (i, n) in [8usize, 64, 512, 2048].into_iter().enumerate() {
        let bound = (usize::BITS - 1 - n.leading_zeros()) as usize + 1;
        for t in 0..500u64 {
            let seed = (i as u64) << 32 | t;
            let tour = gen_random_tournament(n, seed);
            let all: Vec<usize> = (0..n).collect();
            let r = find_transitive_subtournament(&tour, &all).map_err(|e| e.to_string())?;
            ensure(r.len() >= bound, || {
                format!("n {n} seed {seed}: size {} < {bound}", r.len())
            })?;
            let keep: Vec<bool> = (0..n)
                .map(|v| r.vertices.binary_search(&v).is_ok())
                .collect();
            ensure(r.verify(&tour) && !has_cycle_in(&tour, &keep), || {
                format!("n {n} seed {seed}: certificate rejected")
            })?;
            smallest_margin = smallest_margin.min(r.len() - bound);
        }
    }
    Ok(format!(
        "2000 tournaments, smallest margin over bound {smallest_margin}"
    ))
}

fn c5_orientations() -> Outcome {
    let mut checked = 0;
    for n in 0..=6 {
        for g in all_graphs(n) {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            let r = count_acyclic_orientations(&g).map_err(|e| e.to_string())?;
            let p = eval(&chromatic_polynomial(n, &edges), -1).abs();
            ensure(r.count <= r.bound, || {
                format!("{edges:?}: count {} > bound {}", r.count, r.bound)
            })?;
            ensure(r.count as i128 == p, || {
                format!("{edges:?}: count {} vs |P(-1)| {p}", r.count)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} labeled graphs"))
}

fn c6_bipartite_gap() -> Outcome {
    let r = exp_bipartite_lower(2, 12, 100, 6).map_err(|e| e.to_string())?;
    ensure(r.is_clean(), || format!("violations: {:?}", r.violations))?;
    let non_colorable = &r.summary["non_colorable"];
    ensure(*non_colorable != Cell::Int(0), || {
        "0 of 100 side-12 instances are non-colorable; every colorable verdict carried a validated coloring".into()
    })?;
    Ok(format!("{non_colorable:?} non-colorable instances"))
}

fn c7_split() -> Outcome {
    let runs = 10_000u64;
    let (d, sides) = gen_random_complete_bipartite(64, 7);
    let mut attempts = 0usize;
    for seed in 0..runs {
        let lists = random_lists(128, 8, 40, seed);
        let (c, s) = bipartite_random_split_color(&d, &sides, &lists, seed, 64)
            .map_err(|e| format!("bipartite seed {seed}: {e}"))?;
        ensure(is_valid_coloring(&d, &c, Some(&lists)).unwrap(), || {
            format!("bipartite seed {seed}: invalid")
        })?;
        attempts += s.attempts;
    }
    let bip_freq = runs as f64 / attempts as f64;

    // chi_lnn on 100 random digraphs of order 12, 100 list draws each.
    let mut attempts = 0usize;
    let mut total = 0u64;
    for g in 0..100u64 {
        let d = random_digraph_with_digons(12, 0.3, 50_000 + g);
        let chi = dichromatic_number(&d);
        let partition = chi.partition().unwrap();
        let k = chi_ln_list_bound(chi.value, 12);
        for t in 0..runs / 100 {
            let seed = g << 32 | t;
            let lists = random_lists(12, k, 2 * k, seed);
            let (c, s) = chi_lnn_split_color(&d, partition, &lists, seed, 64)
                .map_err(|e| format!("chi split seed {seed}: {e}"))?;
            ensure(is_valid_coloring(&d, &c, Some(&lists)).unwrap(), || {
                format!("chi split seed {seed}: invalid")
            })?;
            attempts += s.attempts;
            total += 1;
        }
    }
    let chi_freq = total as f64 / attempts as f64;
    ensure(bip_freq >= 0.25 && chi_freq >= 0.25, || {
        format!("success per split: bipartite {bip_freq:.3}, chi {chi_freq:.3}")
    })?;
    Ok(format!(
        "success per split: bipartite {bip_freq:.3}, chi {chi_freq:.3}"
    ))
}

fn c8_tournament() -> Outcome {
    for n in [128usize, 256] {
        let k = tournament_list_bound(n, 0.3);
        let palette: Vec<Color> = (1..=k as Color).collect();
        let lists = ListAssignment::uniform(n, &palette).unwrap();
        for seed in 0..50u64 {
            let t = gen_random_tournament(n, seed);
            match tournament_list_color(&t, &lists, seed) {
                Ok((c, _)) => ensure(is_valid_coloring(&t, &c, Some(&lists)).unwrap(), || {
                    format!("n {n} seed {seed}: invalid coloring")
                })?,
                Err(e) => return Err(format!("n {n} seed {seed}: {e}")),
            }
        }
    }
    Ok("100 runs valid, no Hall violation".into())
}

fn mono_two_path(d: &Digraph, c: &Coloring) -> Option<(usize, usize, usize)> {
    for v in 0..d.vertex_count() {
        let Some(cv) = c.get(v) else { continue };
        for &u in d.in_neighbors(v) {
            if c.get(u) != Some(cv) {
                continue;
            }
            if let Some(&w) = d.out_neighbors(v).iter().find(|&&w| c.get(w) == Some(cv)) {
                return Some((u, v, w));
            }
        }
    }
    None
}

fn c9_lll() -> Outcome {
    let mut rounds = 0usize;
    let mut completed = 0;
    let mut seed = 0u64;
    while rounds < 200 {
        let n = 50 + (seed as usize * 37) % 251;
        let d = gen_random_digraph(n, 4.0 / n as f64, seed).unwrap();
        let k = (degree_stats(&d).delta_tilde.ceil() as usize).max(1);
        let lists = random_lists(n, k, 2 * k, seed);
        let mut bad = None;
        let run = lll_digonfree_color_observed(&d, &lists, seed, 10, |p: &LllProcess| {
            rounds += 1;
            if bad.is_none() {
                bad = mono_two_path(&d, &p.after_step2());
            }
        });
        if let Some(path) = bad {
            return Err(format!(
                "seed {seed}: monochromatic path {path:?} after step 2"
            ));
        }
        if let Ok((c, _)) = run {
            ensure(is_valid_coloring(&d, &c, Some(&lists)).unwrap(), || {
                format!("seed {seed}: invalid")
            })?;
            completed += 1;
        }
        seed += 1;
    }
    Ok(format!(
        "{rounds} rounds over {seed} runs, {completed} completed runs valid"
    ))
}

fn number(c: &Cell) -> String {
    match c {
        Cell::Float(f) => format!("{f:.3}"),
        other => format!("{other:?}"),
    }
}

fn c10_observations() -> Outcome {
    let a = exp_tournament_alpha(&[16], 200, 10).map_err(|e| e.to_string())?;
    let a2 = exp_tournament_alpha(&[16], 200, 10).map_err(|e| e.to_string())?;
    let b = exp_random_digraph(20, 0.25, 100, 10).map_err(|e| e.to_string())?;
    let b2 = exp_random_digraph(20, 0.25, 100, 10).map_err(|e| e.to_string())?;
    ensure(a.to_json_string() == a2.to_json_string(), || {
        "tournament report not reproducible".into()
    })?;
    ensure(b.to_json_string() == b2.to_json_string(), || {
        "random digraph report not reproducible".into()
    })?;
    ensure(a.is_clean() && b.is_clean(), || {
        format!("violations: {:?} {:?}", a.violations, b.violations)
    })?;
    Ok(format!(
        "observed: alpha <= 10 frequency {} at n=16; mean alpha {} vs reference {} (within factor 2: {:?})",
        number(&a.summary["n16_alpha_within_log_bound_frequency"]),
        number(&b.summary["alpha_mean"]),
        number(&b.summary["alpha_reference"]),
        b.summary["alpha_within_factor_2"],
    ))
}

fn run_cli(args: &[&str], out: Option<&Path>) -> Result<Vec<u8>, String> {
    let output = Command::new(env!("CARGO_BIN_EXE_dicolor"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !output.status.success() {
        return Err(format!(
            "{args:?} exited with {}: {}",
            output.status,
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    let mut bytes = output.stdout;
    if let Some(path) = out {
        bytes.extend(std::fs::read(path).map_err(|e| e.to_string())?);
    }
    Ok(bytes)
}

fn c11_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = |name: &str| dir.path().join(name);
    let write = |name: &str, text: String| std::fs::write(p(name), text).unwrap();

    write(
        "c5.txt",
        write_digraph(&bidirect(
            &dicolor::Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap(),
        )),
    );
    write("c3.txt", write_digraph(&directed_cycle(3)));
    write("t64.txt", write_digraph(&gen_random_tournament(64, 1)));
    write(
        "d60.txt",
        write_digraph(&gen_random_digraph(60, 0.05, 1).unwrap()),
    );
    write(
        "b8.txt",
        write_digraph(&gen_random_complete_bipartite(8, 1).0),
    );
    let lists = |n: usize, k: usize, pool: usize| {
        serde_json::to_string(&random_lists(n, k, pool, 3)).unwrap()
    };
    write("l5.json", lists(5, 3, 6));
    write(
        "l3.json",
        r#"{"k": 2, "lists": [[1, 2], [1, 3], [2, 3]]}"#.into(),
    );
    write("l64.json", lists(64, tournament_list_bound(64, 0.3), 30));
    write("l60.json", lists(60, 8, 12));
    write("l16.json", lists(16, 5, 10));
    write("partial.json", r#"{"colors": [1, null, null]}"#.into());

    let s = |name: &str| p(name).to_str().unwrap().to_owned();
    let cases: Vec<(Vec<String>, Option<String>)> = vec![
        (vec!["solve".into(), "chi".into(), s("c5.txt")], None),
        (vec!["solve".into(), "chil".into(), s("c3.txt")], None),
        (
            vec!["color".into(), "greedy-degeneracy".into(), s("d60.txt")],
            None,
        ),
        (
            vec![
                "color".into(),
                "ohba".into(),
                s("c5.txt"),
                "--lists".into(),
                s("l5.json"),
            ],
            None,
        ),
        (
            vec![
                "color".into(),
                "bip-split".into(),
                s("b8.txt"),
                "--lists".into(),
                s("l16.json"),
                "--seed".into(),
                "4".into(),
            ],
            None,
        ),
        (
            vec![
                "color".into(),
                "chi-split".into(),
                s("c5.txt"),
                "--lists".into(),
                s("l5.json"),
                "--seed".into(),
                "4".into(),
                "--max-retries".into(),
                "500".into(),
            ],
            None,
        ),
        (
            vec![
                "color".into(),
                "tournament".into(),
                s("t64.txt"),
                "--lists".into(),
                s("l64.json"),
                "--seed".into(),
                "2".into(),
            ],
            None,
        ),
        (
            vec![
                "color".into(),
                "lll".into(),
                s("d60.txt"),
                "--lists".into(),
                s("l60.json"),
                "--seed".into(),
                "2".into(),
            ],
            None,
        ),
        (
            vec![
                "color".into(),
                "greedy-extend".into(),
                s("c3.txt"),
                "--lists".into(),
                s("l3.json"),
                "--partial".into(),
                s("partial.json"),
            ],
            None,
        ),
        (
            vec![
                "experiment".into(),
                "ohba-exhaustive".into(),
                "--nmax".into(),
                "3".into(),
                "--seed".into(),
                "1".into(),
            ],
            None,
        ),
        (
            vec![
                "experiment".into(),
                "bipartite-lower".into(),
                "--trials".into(),
                "10".into(),
                "--seed".into(),
                "1".into(),
                "--out".into(),
                s("bip.csv"),
            ],
            Some(s("bip.csv")),
        ),
        (
            vec![
                "experiment".into(),
                "tournament-alpha".into(),
                "-n".into(),
                "8,16".into(),
                "--trials".into(),
                "20".into(),
                "--out".into(),
                s("ta.json"),
            ],
            Some(s("ta.json")),
        ),
        (
            vec![
                "experiment".into(),
                "mset-acyclic".into(),
                "-n".into(),
                "256".into(),
                "--trials".into(),
                "10".into(),
            ],
            None,
        ),
        (
            vec![
                "experiment".into(),
                "random-digraph".into(),
                "-n".into(),
                "14".into(),
                "-p".into(),
                "0.3".into(),
                "--trials".into(),
                "10".into(),
                "--out".into(),
                s("rd.csv"),
            ],
            Some(s("rd.csv")),
        ),
        (
            vec![
                "gen".into(),
                "tournament".into(),
                "-n".into(),
                "9".into(),
                "--seed".into(),
                "5".into(),
            ],
            None,
        ),
        (
            vec![
                "gen".into(),
                "digraph".into(),
                "-n".into(),
                "9".into(),
                "-p".into(),
                "0.2".into(),
                "--seed".into(),
                "5".into(),
            ],
            None,
        ),
        (
            vec![
                "gen".into(),
                "bipartite".into(),
                "-n".into(),
                "4".into(),
                "--seed".into(),
                "5".into(),
            ],
            None,
        ),
    ];
    for (args, out) in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = out.as_deref().map(Path::new);
        let first = run_cli(&args, out)?;
        let second = run_cli(&args, out)?;
        ensure(!first.is_empty(), || format!("{args:?}: no output"))?;
        ensure(first == second, || format!("{args:?}: outputs differ"))?;
    }
    Ok(format!(
        "{} invocations byte-identical on rerun",
        cases.len()
    ))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 11] = [
        (
            "dichromatic number matches brute force",
            c1_chi_oracle,
            Duration::from_secs(120),
        ),
        (
            "bidirected graphs match chromatic number",
            c2_bidirection,
            Duration::from_secs(120),
        ),
        (
            "list and ordinary numbers agree in the small-order regime",
            c3_ohba,
            Duration::from_secs(600),
        ),
        (
            "transitive subtournament finder meets its bound",
            c4_finder,
            Duration::from_secs(60),
        ),
        (
            "acyclic orientation count vs bound and chromatic polynomial",
            c5_orientations,
            Duration::from_secs(60),
        ),
        (
            "non-colorable bipartite instance at side 12",
            c6_bipartite_gap,
            Duration::from_secs(900),
        ),
        (
            "random split colorers are sound",
            c7_split,
            Duration::from_secs(300),
        ),
        (
            "tournament colorer with identical lists",
            c8_tournament,
            Duration::from_secs(300),
        ),
        (
            "no monochromatic 2-path after step 2",
            c9_lll,
            Duration::from_secs(300),
        ),
        (
            "observed asymptotic statistics are reproducible",
            c10_observations,
            Duration::from_secs(600),
        ),
        (
            "CLI output is deterministic",
            c11_determinism,
            Duration::from_secs(600),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => {
                Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {} {name}: {detail} ({elapsed:.1?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {} {name}: {detail} ({elapsed:.1?})", i + 1);
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
