//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bench::{bench_run, BenchConfig};
use crate::drivers::{min_assignment_cover, min_ecc, solve_acc, solve_ecc, Engine, Minimum, Outcome, ReductionSummary};
use crate::error::{BenchError, InstanceError, ParseError, UnsupportedEngine};
use crate::f2::{aewcds_with, awecps_with, lrccs_with, solve_pmc_with, AewcdOptions};
use crate::graph::{Graph, Vertex};
use crate::instance::{rational_string, AewcdInstance, AwecpInstance, ProblemInstance, SearchLimits, SearchResult, SearchStats, Solution};
use crate::io::{parse_graph, parse_rational, read_pairs, read_weights, GraphFormat};
use crate::verify::verify_solution;

#[derive(Debug, Parser)]
#[command(name = "cliquecover", version, about = "Exact parameterized clique cover solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Search engine for ecc, acc, min-ecc and min-assign.
    #[arg(long, global = true)]
    pub engine: Option<Engine>,
    /// Print search statistics.
    #[arg(long, global = true)]
    pub stats: bool,
    /// Print a JSON result envelope.
    #[arg(long, global = true)]
    pub json: bool,
    /// Base seed for generated bench instances.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Skip data reduction.
    #[arg(long, global = true)]
    pub no_reduce: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Auto,
    Dimacs,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph file: DIMACS (.col, .dimacs) or 0-based edge list.
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Ecc,
    Acc,
    Wecp,
    Ewcd,
    Lrcc,
    Pmc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Edge clique cover with at most k cliques.
    Ecc {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        k: usize,
    },
    /// Edge clique cover with at most t vertex-to-clique assignments.
    Acc {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        t: usize,
    },
    /// Weighted edge clique partition with annotated vertices.
    Wecp {
        #[command(flatten)]
        input: GraphArg,
        /// `u v w` edge lines and `v s W` annotated-vertex lines.
        weights: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Exact weighted clique decomposition with annotated vertices.
    Ewcd {
        #[command(flatten)]
        input: GraphArg,
        weights: PathBuf,
        #[arg(long)]
        k: usize,
        /// Require integer clique weights in [1, wmax].
        #[arg(long, requires = "wmax")]
        integer: bool,
        #[arg(long, requires = "integer")]
        wmax: Option<u64>,
        /// Branch on marked and unmarked subtrees as two passes.
        #[arg(long)]
        merged: bool,
    },
    /// Vertex clique cover that also covers a given edge set.
    Lrcc {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        k: usize,
        /// One edge per line.
        #[arg(long)]
        estar: PathBuf,
    },
    /// Multi-colouring where listed non-adjacent pairs share a colour.
    Pmc {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        k: usize,
        /// One pair per line.
        #[arg(long)]
        pairs: PathBuf,
    },
    /// Smallest number of cliques covering every edge.
    MinEcc {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Smallest total clique size of an edge clique cover.
    MinAssign {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Check a solution file (JSON with `cover` and optional `gamma`).
    Verify {
        #[command(flatten)]
        input: GraphArg,
        /// Weight file for wecp and ewcd.
        weights: Option<PathBuf>,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long)]
        solution: PathBuf,
        /// Defaults to the number of cliques in the solution.
        #[arg(long)]
        k: Option<usize>,
        /// Defaults to the total clique size of the solution.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        estar: Option<PathBuf>,
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
    /// Compare search-tree sizes of the engines.
    Bench {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input { path: String, source: ParseError },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Engine(#[from] UnsupportedEngine),
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error("solution file: {0}")]
    Solution(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn input_err(path: &Path) -> impl FnOnce(ParseError) -> CliError + '_ {
    move |source| CliError::Input { path: path.display().to_string(), source }
}

fn load_graph(a: &GraphArg) -> Result<Graph, CliError> {
    let fmt = match a.format {
        FormatArg::Auto => GraphFormat::from_path(&a.graph),
        FormatArg::Dimacs => GraphFormat::Dimacs,
        FormatArg::Edgelist => GraphFormat::EdgeList,
    };
    parse_graph(&a.graph, fmt).map_err(input_err(&a.graph))
}

fn load_pairs(p: &Path) -> Result<Vec<(Vertex, Vertex)>, CliError> {
    read_pairs(p).map_err(input_err(p))
}

/// What a solving subcommand produced.
struct Answer {
    result: SearchResult,
    reductions: Option<ReductionSummary>,
    value: Option<usize>,
}

impl From<Outcome> for Answer {
    fn from(o: Outcome) -> Self {
        Answer { result: o.result, reductions: Some(o.reductions), value: None }
    }
}

impl Answer {
    fn unreduced(g: &Graph, result: SearchResult) -> Self {
        Answer { result, reductions: Some(ReductionSummary::identity(g)), value: None }
    }

    fn minimum(m: Minimum) -> Self {
        let result = SearchResult { solution: Some(Solution::cover(m.cover)), stats: m.stats };
        Answer { result, reductions: Some(m.reductions), value: Some(m.value) }
    }
}

#[derive(Serialize)]
struct StatsJson {
    nodes: u64,
    depth: usize,
    max_branching: usize,
    time_ms: f64,
}

impl From<&SearchStats> for StatsJson {
    fn from(s: &SearchStats) -> Self {
        StatsJson { nodes: s.nodes, depth: s.max_depth, max_branching: s.max_branching, time_ms: s.time_ms() }
    }
}

fn envelope(a: &Answer) -> Value {
    let sol = a.result.solution.as_ref();
    let mut v = json!({
        "answer": if sol.is_some() { "YES" } else { "NO" },
        "cover": sol.map(|s| &s.cliques),
        "stats": StatsJson::from(&a.result.stats),
        "reductions": a.reductions.clone().unwrap_or_default(),
    });
    if let Some(g) = sol.and_then(|s| s.gamma.as_ref()) {
        v["gamma"] = g.iter().map(rational_string).collect();
    }
    if let Some(x) = a.value {
        v["value"] = x.into();
    }
    v
}

fn print_answer(cli: &Cli, a: &Answer, out: &mut dyn Write) -> std::io::Result<()> {
    if cli.json {
        return writeln!(out, "{}", envelope(a));
    }
    match &a.result.solution {
        None => writeln!(out, "NO")?,
        Some(sol) => {
            match a.value {
                Some(x) => writeln!(out, "YES {x}")?,
                None => writeln!(out, "YES")?,
            }
            for (i, c) in sol.cliques.iter().enumerate() {
                let ids: Vec<String> = c.iter().map(ToString::to_string).collect();
                match &sol.gamma {
                    Some(g) => writeln!(out, "{} weight {}", ids.join(" "), rational_string(&g[i]))?,
                    None => writeln!(out, "{}", ids.join(" "))?,
                }
            }
        }
    }
    if cli.stats {
        let s = &a.result.stats;
        writeln!(out, "nodes {} depth {} max_branching {} time_ms {:.3}", s.nodes, s.max_depth, s.max_branching, s.time_ms())?;
        if let Some(r) = &a.reductions {
            writeln!(out, "rules_applied {} kernel_n {} kernel_m {}", r.rules_applied, r.kernel_n, r.kernel_m)?;
        }
    }
    Ok(())
}

/// Only the implicit-representation engine solves the weighted and
/// vertex-cover problems.
fn require_f2(cli: &Cli, problem: &str) -> Result<(), CliError> {
    match cli.engine {
        None | Some(Engine::F2) => Ok(()),
        Some(e) => Err(CliError::Usage(format!("--engine {e} is not available for {problem}"))),
    }
}

fn forbid_no_reduce(cli: &Cli, cmd: &str) -> Result<(), CliError> {
    if cli.no_reduce {
        return Err(CliError::Usage(format!("--no-reduce has no effect on {cmd}")));
    }
    Ok(())
}

fn parse_solution(path: &Path) -> Result<Solution, CliError> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Solution(e.to_string()))?;
    let cover = v.get("cover").cloned().unwrap_or(Value::Null);
    let cliques: Vec<Vec<Vertex>> = if cover.is_null() {
        Vec::new()
    } else {
        serde_json::from_value(cover).map_err(|e| CliError::Solution(format!("cover: {e}")))?
    };
    let gamma = match v.get("gamma") {
        None | Some(Value::Null) => None,
        Some(Value::Array(xs)) => Some(
            xs.iter()
                .map(|x| {
                    let s = match x {
                        Value::String(s) => s.clone(),
                        Value::Number(n) => n.to_string(),
                        _ => String::new(),
                    };
                    parse_rational(&s).ok_or_else(|| CliError::Solution(format!("bad weight {x}")))
                })
                .collect::<Result<Vec<BigRational>, _>>()?,
        ),
        Some(_) => return Err(CliError::Solution("gamma must be a list".into())),
    };
    Ok(Solution { cliques, gamma })
}

fn verify_cmd(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let Command::Verify { input, weights, problem, solution, k, t, estar, pairs } = &cli.command else {
        unreachable!()
    };
    let g = load_graph(input)?;
    let sol = parse_solution(solution)?;
    let k = k.unwrap_or(sol.cliques.len());
    let need = |p: &Option<PathBuf>, flag: &str| p.clone().ok_or_else(|| CliError::Usage(format!("{flag} is required")));
    let inst = match problem {
        ProblemArg::Ecc => ProblemInstance::Ecc { graph: g, k },
        ProblemArg::Acc => ProblemInstance::Acc { graph: g, t: t.unwrap_or(sol.assignments()) },
        ProblemArg::Wecp => {
            let w = need(weights, "a weight file")?;
            let w = read_weights(&w).map_err(input_err(&w))?;
            ProblemInstance::Awecp(AwecpInstance::from_weights(g, k, &w)?)
        }
        ProblemArg::Ewcd => {
            let w = need(weights, "a weight file")?;
            let w = read_weights(&w).map_err(input_err(&w))?;
            ProblemInstance::Aewcd(AewcdInstance::from_weights(g, k, &w)?)
        }
        ProblemArg::Lrcc => ProblemInstance::Lrcc { graph: g, k, e_star: load_pairs(&need(estar, "--estar")?)? },
        ProblemArg::Pmc => ProblemInstance::Pmc { graph: g, k, pairs: load_pairs(&need(pairs, "--pairs")?)? },
    };
    let verdict = verify_solution(&inst, &sol);
    if cli.json {
        let v = match &verdict {
            Ok(()) => json!({ "valid": true }),
            Err(e) => json!({ "valid": false, "violation": e.0 }),
        };
        writeln!(out, "{v}")?;
    } else {
        match &verdict {
            Ok(()) => writeln!(out, "VALID")?,
            Err(e) => writeln!(out, "INVALID: {e}")?,
        }
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let engine = cli.engine.unwrap_or(Engine::F2);
    let reduce = !cli.no_reduce;
    let limits = SearchLimits::default();
    if cli.seed.is_some() && !matches!(cli.command, Command::Bench { .. }) {
        return Err(CliError::Usage("--seed only applies to bench".into()));
    }
    let answer: Answer = match &cli.command {
        Command::Ecc { input, k } => solve_ecc(&load_graph(input)?, *k, engine, reduce, limits).into(),
        Command::Acc { input, t } => solve_acc(&load_graph(input)?, *t, engine, reduce, limits)?.into(),
        Command::Wecp { input, weights, k } => {
            require_f2(cli, "wecp")?;
            forbid_no_reduce(cli, "wecp")?;
            let w = read_weights(weights).map_err(input_err(weights))?;
            let g = load_graph(input)?;
            let inst = AwecpInstance::from_weights(g.clone(), *k, &w)?;
            Answer::unreduced(&g, awecps_with(&inst, limits))
        }
        Command::Ewcd { input, weights, k, integer: _, wmax, merged } => {
            require_f2(cli, "ewcd")?;
            forbid_no_reduce(cli, "ewcd")?;
            let w = read_weights(weights).map_err(input_err(weights))?;
            let g = load_graph(input)?;
            let inst = AewcdInstance::from_weights(g.clone(), *k, &w)?;
            let opts = AewcdOptions { merged: *merged, integer_wmax: *wmax };
            Answer::unreduced(&g, aewcds_with(&inst, opts, limits))
        }
        Command::Lrcc { input, k, estar } => {
            require_f2(cli, "lrcc")?;
            forbid_no_reduce(cli, "lrcc")?;
            let g = load_graph(input)?;
            Answer::unreduced(&g, lrccs_with(&g, *k, &load_pairs(estar)?, limits)?)
        }
        Command::Pmc { input, k, pairs } => {
            require_f2(cli, "pmc")?;
            forbid_no_reduce(cli, "pmc")?;
            let g = load_graph(input)?;
            Answer::unreduced(&g, solve_pmc_with(&g, *k, &load_pairs(pairs)?, limits)?)
        }
        Command::MinEcc { input } => {
            Answer::minimum(min_ecc(&load_graph(input)?, engine, reduce))
        }
        Command::MinAssign { input } => {
            forbid_no_reduce(cli, "min-assign")?;
            Answer::minimum(min_assignment_cover(&load_graph(input)?, engine)?)
        }
        Command::Verify { .. } => return verify_cmd(cli, out),
        Command::Bench { config } => {
            let mut c = BenchConfig::read(config)?;
            if let Some(s) = cli.seed {
                c.seed = s;
            }
            if let Some(e) = cli.engine {
                c.engines = vec![e];
            }
            if cli.no_reduce {
                c.reduce = false;
            }
            let report = bench_run(&c)?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&report).expect("plain data"))?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            return Ok(());
        }
    };
    print_answer(cli, &answer, out)?;
    Ok(())
}

/// Parses `args` (program name first) and runs the command. Returns the exit
/// code: 0 for an answer, 2 for usage and input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
