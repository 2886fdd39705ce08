use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use dicolor::coloring::{AcyclicPartition, Bipartition, Coloring, ListAssignment};
use dicolor::exact::{
    dichromatic_number, greedy_min_inout_list_color, list_dichromatic_number, min_inout_degeneracy,
};
use dicolor::experiments::{
    exp_bipartite_lower, exp_mset_acyclic, exp_ohba_exhaustive, exp_random_digraph,
    exp_tournament_alpha, ExperimentReport,
};
use dicolor::generate::{gen_random_complete_bipartite, gen_random_digraph, gen_random_tournament};
use dicolor::io::{read_digraph, write_digraph};
use dicolor::procedures::{
    bipartite_random_split_color, chi_lnn_split_color, greedy_extend, lll_digonfree_color,
    ohba_transfer, tournament_list_bound, tournament_list_color, DEFAULT_EPSILON,
};
use dicolor::{Color, Digraph};

/// Dichromatic and list-dichromatic numbers of digraphs.
#[derive(Parser)]
#[command(name = "dicolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact dichromatic or list-dichromatic number with its certificate.
    Solve {
        #[arg(value_enum)]
        quantity: Quantity,
        file: PathBuf,
    },
    /// Run a list colorer and print the coloring with run statistics.
    Color(ColorArgs),
    /// Run a seeded experiment and write its report.
    Experiment(ExperimentArgs),
    /// Write a random digraph in the text format.
    Gen {
        #[arg(value_enum)]
        model: Model,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0.25)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Chi,
    Chil,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Tournament,
    Digraph,
    Bipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum Procedure {
    GreedyDegeneracy,
    Ohba,
    BipSplit,
    ChiSplit,
    Tournament,
    Lll,
    GreedyExtend,
}

#[derive(clap::Args)]
struct ColorArgs {
    #[arg(value_enum)]
    procedure: Procedure,
    file: PathBuf,
    /// List assignment as a JSON file path or inline JSON.
    #[arg(long)]
    lists: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    max_retries: usize,
    #[arg(long, default_value_t = 1000)]
    max_rounds: usize,
    /// Partial coloring for greedy-extend (JSON path or inline JSON).
    #[arg(long)]
    partial: Option<String>,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    eps: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentName {
    OhbaExhaustive,
    BipartiteLower,
    TournamentAlpha,
    MsetAcyclic,
    RandomDigraph,
}

#[derive(clap::Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    name: ExperimentName,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Order(s); comma-separated for tournament-alpha.
    #[arg(short, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(short, default_value_t = 0.25)]
    p: f64,
    #[arg(short, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 12)]
    side_size: usize,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, default_value_t = 50)]
    transfer_lists: usize,
    /// Output path; `.csv` writes CSV, anything else JSON. Stdout (JSON)
    /// when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> Result<ExitCode> {
    configure_workers()?;
    let cli = Cli::parse();
    match cli.command {
        Command::Solve { quantity, file } => {
            let d = load_digraph(&file)?;
            let result = match quantity {
                Quantity::Chi => dichromatic_number(&d),
                Quantity::Chil => list_dichromatic_number(&d),
            };
            print_json(&result)?;
        }
        Command::Color(args) => print_json(&color(&args)?)?,
        Command::Experiment(args) => {
            let report = experiment(&args)?;
            emit_report(&report, args.out.as_deref())?;
            if !report.is_clean() {
                for v in &report.violations {
                    eprintln!("violation: {v}");
                }
                return Ok(ExitCode::from(2));
            }
        }
        Command::Gen { model, n, p, seed } => {
            let d = match model {
                Model::Tournament => gen_random_tournament(n, seed),
                Model::Digraph => gen_random_digraph(n, p, seed)?,
                Model::Bipartite => gen_random_complete_bipartite(n, seed).0,
            };
            print!("{}", write_digraph(&d));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn configure_workers() -> Result<()> {
    if let Ok(raw) = std::env::var("DICOLOR_WORKERS") {
        let workers: usize = raw
            .parse()
            .with_context(|| format!("DICOLOR_WORKERS = {raw:?} is not a count"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("configuring the worker pool")?;
    }
    Ok(())
}

fn load_digraph(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_digraph(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn load_json<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {arg}"))
}

fn require_lists(args: &ColorArgs) -> Result<ListAssignment> {
    match &args.lists {
        Some(arg) => load_json(arg),
        None => bail!("--lists is required for this procedure"),
    }
}

fn exact_partition(d: &Digraph) -> Result<AcyclicPartition> {
    Ok(dichromatic_number(d)
        .partition()
        .context("dichromatic solver returned no partition")?
        .clone())
}

fn color(args: &ColorArgs) -> Result<Value> {
    let d = load_digraph(&args.file)?;
    let (coloring, stats): (Coloring, Value) = match args.procedure {
        Procedure::GreedyDegeneracy => {
            let degeneracy = min_inout_degeneracy(&d);
            let lists = match &args.lists {
                Some(arg) => load_json(arg)?,
                None => {
                    let palette: Vec<Color> = (1..=degeneracy.value as Color + 1).collect();
                    ListAssignment::uniform(d.vertex_count(), &palette)?
                }
            };
            let c = greedy_min_inout_list_color(&d, &lists)?;
            let stats =
                json!({ "degeneracy": degeneracy.value, "colors_used": c.distinct_colors() });
            (c, stats)
        }
        Procedure::Ohba => {
            let lists = require_lists(args)?;
            let partition = exact_partition(&d)?;
            let c = ohba_transfer(&d, &partition, &lists)?;
            (c, json!({ "classes": partition.len() }))
        }
        Procedure::BipSplit => {
            let lists = require_lists(args)?;
            let sides = Bipartition::detect(&d).context("digraph is not bipartite")?;
            let (c, s) =
                bipartite_random_split_color(&d, &sides, &lists, args.seed, args.max_retries)?;
            (c, serde_json::to_value(s)?)
        }
        Procedure::ChiSplit => {
            let lists = require_lists(args)?;
            let partition = exact_partition(&d)?;
            let (c, s) = chi_lnn_split_color(&d, &partition, &lists, args.seed, args.max_retries)?;
            (c, serde_json::to_value(s)?)
        }
        Procedure::Tournament => {
            let lists = require_lists(args)?;
            let (c, s) = tournament_list_color(&d, &lists, args.seed)?;
            let mut stats = serde_json::to_value(s)?;
            stats["list_bound"] = json!(tournament_list_bound(d.vertex_count(), args.eps));
            (c, stats)
        }
        Procedure::Lll => {
            let lists = require_lists(args)?;
            let (c, s) = lll_digonfree_color(&d, &lists, args.seed, args.max_rounds)?;
            (c, serde_json::to_value(s)?)
        }
        Procedure::GreedyExtend => {
            let lists = require_lists(args)?;
            let partial = match &args.partial {
                Some(arg) => load_json(arg)?,
                None => Coloring::uncolored(d.vertex_count()),
            };
            let c = greedy_extend(&d, &lists, &partial)?;
            let stats = json!({ "extended": c.len() - partial.colored_count() });
            (c, stats)
        }
    };
    Ok(json!({ "coloring": coloring, "stats": stats }))
}

fn experiment(args: &ExperimentArgs) -> Result<ExperimentReport> {
    let single_n = |default: usize| -> Result<usize> {
        match args.n.as_slice() {
            [] => Ok(default),
            [n] => Ok(*n),
            _ => bail!("this experiment takes a single -n"),
        }
    };
    let report = match args.name {
        ExperimentName::OhbaExhaustive => {
            exp_ohba_exhaustive(args.nmax, args.transfer_lists, args.seed)?
        }
        ExperimentName::BipartiteLower => {
            exp_bipartite_lower(args.k, args.side_size, args.trials, args.seed)?
        }
        ExperimentName::TournamentAlpha => {
            let ns = if args.n.is_empty() {
                vec![16]
            } else {
                args.n.clone()
            };
            exp_tournament_alpha(&ns, args.trials, args.seed)?
        }
        ExperimentName::MsetAcyclic => exp_mset_acyclic(single_n(1024)?, args.trials, args.seed)?,
        ExperimentName::RandomDigraph => {
            exp_random_digraph(single_n(20)?, args.p, args.trials, args.seed)?
        }
    };
    Ok(report)
}

fn emit_report(report: &ExperimentReport, out: Option<&Path>) -> Result<()> {
    match out {
        None => print!("{}", report.to_json_string()),
        Some(path) => {
            let csv = path
                .extension()
                .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
            let body = if csv {
                report.to_csv_string()
            } else {
                report.to_json_string()
            };
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}
