//! Search-tree size comparison between the ECC engines on generated
//! instances.
//!
//! The config is a flat `key = value` file:
//!
//! ```text
//! gnp = 30:0.3, 40:0.2     # G(n, p) families
//! complete = 10            # complete graphs
//! file = graphs/a.col      # may repeat
//! seeds = 0..20            # or a comma list; one instance per seed per family
//! seed = 0                 # added to every seed
//! engines = eccg, f1, f2
//! k = min                  # min, min-1 or a number
//! timeout_s = 60
//! node_limit.f2 = 2000000  # per engine; `node_limit` alone applies to all
//! reduce = true            # run the ECC reduction before searching
//! threads = 0              # 0 picks the rayon default
//! ```

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::drivers::{min_ecc, solve_ecc, Engine};
use crate::error::BenchError;
use crate::fixtures;
use crate::graph::Graph;
use crate::instance::SearchLimits;
use crate::io::{parse_graph, GraphFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KChoice {
    Min,
    BelowMin,
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub gnp: Vec<(usize, f64)>,
    pub complete: Vec<usize>,
    pub files: Vec<PathBuf>,
    pub seeds: Vec<u64>,
    pub seed: u64,
    pub engines: Vec<Engine>,
    pub k: KChoice,
    pub timeout: Duration,
    pub node_limit: Option<u64>,
    /// Per-engine overrides of `node_limit`.
    pub engine_node_limits: Vec<(Engine, u64)>,
    pub reduce: bool,
    pub threads: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            gnp: Vec::new(),
            complete: Vec::new(),
            files: Vec::new(),
            seeds: vec![0],
            seed: 0,
            engines: Vec::new(),
            k: KChoice::Min,
            timeout: Duration::from_secs(60),
            node_limit: None,
            engine_node_limits: Vec::new(),
            reduce: true,
            threads: 0,
        }
    }
}

fn list(v: &str) -> impl Iterator<Item = &str> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty())
}

impl BenchConfig {
    pub fn parse(text: &str) -> Result<Self, BenchError> {
        let mut c = BenchConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: String| BenchError::Config { line, msg };
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, val) = body.split_once('=').ok_or_else(|| err("expected 'key = value'".into()))?;
            let (key, val) = (key.trim(), val.trim());
            let bad = |what: &str| err(format!("bad {what} {val:?}"));
            match key {
                "gnp" => {
                    for fam in list(val) {
                        let (n, p) = fam.split_once(':').ok_or_else(|| bad("family"))?;
                        let n = n.trim().parse().map_err(|_| bad("family"))?;
                        let p: f64 = p.trim().parse().map_err(|_| bad("family"))?;
                        if !(0.0..=1.0).contains(&p) {
                            return Err(bad("probability"));
                        }
                        c.gnp.push((n, p));
                    }
                }
                "complete" => {
                    for n in list(val) {
                        c.complete.push(n.parse().map_err(|_| bad("size"))?);
                    }
                }
                "file" => c.files.push(PathBuf::from(val)),
                "seeds" => {
                    c.seeds = if let Some((a, b)) = val.split_once("..") {
                        let a: u64 = a.trim().parse().map_err(|_| bad("seed range"))?;
                        let b: u64 = b.trim().parse().map_err(|_| bad("seed range"))?;
                        (a..b).collect()
                    } else {
                        list(val).map(|s| s.parse().map_err(|_| bad("seed"))).collect::<Result<_, _>>()?
                    };
                }
                "seed" => c.seed = val.parse().map_err(|_| bad("seed"))?,
                "engines" => {
                    c.engines = list(val).map(|s| s.parse().map_err(err)).collect::<Result<_, _>>()?;
                }
                "k" => {
                    c.k = match val {
                        "min" => KChoice::Min,
                        "min-1" => KChoice::BelowMin,
                        _ => KChoice::Fixed(val.parse().map_err(|_| bad("k"))?),
                    }
                }
                "timeout_s" => {
                    let s: f64 = val.parse().map_err(|_| bad("timeout"))?;
                    c.timeout = Duration::try_from_secs_f64(s).map_err(|_| bad("timeout"))?;
                }
                "node_limit" => c.node_limit = Some(val.parse().map_err(|_| bad("node limit"))?),
                _ if key.starts_with("node_limit.") => {
                    let e: Engine = key["node_limit.".len()..].parse().map_err(err)?;
                    let n = val.parse().map_err(|_| bad("node limit"))?;
                    c.engine_node_limits.retain(|&(f, _)| f != e);
                    c.engine_node_limits.push((e, n));
                }
                "reduce" => c.reduce = val.parse().map_err(|_| bad("flag"))?,
                "threads" => c.threads = val.parse().map_err(|_| bad("thread count"))?,
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        Ok(c)
    }

    pub fn node_limit_for(&self, e: Engine) -> Option<u64> {
        self.engine_node_limits.iter().find(|&&(f, _)| f == e).map(|&(_, n)| n).or(self.node_limit)
    }

    pub fn read(path: &Path) -> Result<Self, BenchError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| BenchError::Graph { path: path.display().to_string(), source: e.into() })?;
        Self::parse(&text)
    }
}

#[derive(Debug, Clone)]
pub struct BenchInstance {
    pub name: String,
    pub graph: Graph,
    pub k: usize,
}

fn pick_k(g: &Graph, k: KChoice) -> usize {
    match k {
        KChoice::Fixed(k) => k,
        KChoice::Min => min_ecc(g, Engine::F1, true).value,
        KChoice::BelowMin => min_ecc(g, Engine::F1, true).value.saturating_sub(1),
    }
}

/// The instances a config describes, in a fixed order.
pub fn instances(c: &BenchConfig) -> Result<Vec<BenchInstance>, BenchError> {
    let mut named = Vec::new();
    for &(n, p) in &c.gnp {
        for &s in &c.seeds {
            let seed = c.seed + s;
            named.push((format!("gnp({n},{p})#{seed}"), fixtures::gnp(n, p, seed)));
        }
    }
    for &n in &c.complete {
        named.push((format!("complete({n})"), fixtures::complete(n)));
    }
    for f in &c.files {
        let g = parse_graph(f, GraphFormat::from_path(f))
            .map_err(|e| BenchError::Graph { path: f.display().to_string(), source: e })?;
        named.push((f.display().to_string(), g));
    }
    Ok(named
        .into_par_iter()
        .map(|(name, graph)| {
            let k = pick_k(&graph, c.k);
            BenchInstance { name, graph, k }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub engine: String,
    /// `YES`, `NO`, `TIMEOUT` or `LIMIT` (node limit reached).
    pub answer: String,
    pub nodes: u64,
    pub depth: usize,
    pub max_branching: usize,
    pub time_ms: f64,
}

impl BenchRow {
    pub fn completed(&self) -> bool {
        self.answer == "YES" || self.answer == "NO"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeRatio {
    pub numerator: String,
    pub denominator: String,
    /// Median over instances both engines completed; `None` if there are none.
    pub median: Option<f64>,
    pub instances: usize,
    /// Median over instances the baseline completed, counting an unfinished
    /// engine's nodes so far. Those counts only undercount the full tree, so
    /// this is an upper bound on the median the completed search would give.
    pub median_bound: Option<f64>,
    pub bound_instances: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub ratios: Vec<NodeRatio>,
    /// Every instance got the same answer from every engine that finished.
    pub answers_agree: bool,
}

fn median(mut v: Vec<f64>) -> Option<f64> {
    if v.is_empty() {
        return None;
    }
    v.sort_by(f64::total_cmp);
    let h = v.len() / 2;
    Some(if v.len() % 2 == 1 { v[h] } else { (v[h - 1] + v[h]) / 2.0 })
}

fn run_one(inst: &BenchInstance, engine: Engine, c: &BenchConfig) -> BenchRow {
    let max_nodes = c.node_limit_for(engine);
    let limits =
        SearchLimits { deadline: Some(Instant::now() + c.timeout), max_nodes, ..SearchLimits::unchecked() };
    let out = solve_ecc(&inst.graph, inst.k, engine, c.reduce, limits);
    let s = &out.result.stats;
    let answer = match (s.aborted, out.result.is_yes()) {
        (true, _) if max_nodes.is_some_and(|n| s.nodes >= n) => "LIMIT",
        (true, _) => "TIMEOUT",
        (false, true) => "YES",
        (false, false) => "NO",
    };
    BenchRow {
        instance: inst.name.clone(),
        n: inst.graph.n(),
        m: inst.graph.m(),
        k: inst.k,
        engine: engine.to_string(),
        answer: answer.into(),
        nodes: s.nodes,
        depth: s.max_depth,
        max_branching: s.max_branching,
        time_ms: s.time_ms(),
    }
}

/// Runs every engine on every instance and summarises node-count ratios
/// against the baseline.
pub fn bench_run(c: &BenchConfig) -> Result<BenchReport, BenchError> {
    if c.engines.is_empty() {
        return Err(BenchError::NoEngines);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(c.threads).build()?;
    pool.install(|| {
        let insts = instances(c)?;
        if insts.is_empty() {
            return Err(BenchError::NoInstances);
        }
        let jobs: Vec<(&BenchInstance, Engine)> =
            insts.iter().flat_map(|i| c.engines.iter().map(move |&e| (i, e))).collect();
        let rows: Vec<BenchRow> = jobs.par_iter().map(|&(i, e)| run_one(i, e, c)).collect();
        Ok(report(rows, &c.engines))
    })
}

fn report(rows: Vec<BenchRow>, engines: &[Engine]) -> BenchReport {
    let per = engines.len();
    let answers_agree = rows.chunks(per).all(|ch| {
        let mut done = ch.iter().filter(|r| r.completed()).map(|r| &r.answer);
        done.next().is_none_or(|a| done.all(|b| b == a))
    });
    let mut ratios = Vec::new();
    if let Some(base) = engines.iter().position(|&e| e == Engine::Eccg) {
        for (j, &e) in engines.iter().enumerate() {
            if j == base {
                continue;
            }
            let ratio = |ch: &[BenchRow]| ch[base].nodes.max(1) as f64 / ch[j].nodes.max(1) as f64;
            let v: Vec<f64> =
                rows.chunks(per).filter(|ch| ch[base].completed() && ch[j].completed()).map(ratio).collect();
            let b: Vec<f64> = rows.chunks(per).filter(|ch| ch[base].completed()).map(ratio).collect();
            ratios.push(NodeRatio {
                numerator: Engine::Eccg.to_string(),
                denominator: e.to_string(),
                instances: v.len(),
                median: median(v),
                bound_instances: b.len(),
                median_bound: median(b),
            });
        }
    }
    BenchReport { rows, ratios, answers_agree }
}

impl BenchReport {
    /// CSV rows followed by one summary line per ratio.
    pub fn to_text(&self) -> String {
        let mut s = String::from("instance,n,m,k,engine,answer,nodes,depth,max_branching,time_ms\n");
        for r in &self.rows {
            writeln!(
                s,
                "{},{},{},{},{},{},{},{},{},{:.3}",
                r.instance, r.n, r.m, r.k, r.engine, r.answer, r.nodes, r.depth, r.max_branching, r.time_ms
            )
            .unwrap();
        }
        for q in &self.ratios {
            let m = format_ratio(q.median);
            writeln!(s, "# median nodes {}/{} = {m} over {} instances", q.numerator, q.denominator, q.instances).unwrap();
            if q.bound_instances > q.instances {
                let b = format_ratio(q.median_bound);
                writeln!(
                    s,
                    "# median nodes {}/{} <= {b} counting unfinished runs, over {} instances",
                    q.numerator, q.denominator, q.bound_instances
                )
                .unwrap();
            }
        }
        writeln!(s, "# answers agree: {}", self.answers_agree).unwrap();
        s
    }
}

/// Two decimals, or scientific notation for ratios below 0.01.
pub fn format_ratio(x: Option<f64>) -> String {
    match x {
        None => "n/a".to_string(),
        Some(v) if v != 0.0 && v.abs() < 0.01 => format!("{v:.2e}"),
        Some(v) => format!("{v:.2}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_config() {
        let c = BenchConfig::parse("gnp = 10:0.3, 12:0.5\nseeds = 2..5 # three\nengines = eccg,f2\nk = 4\n").unwrap();
        assert_eq!(c.gnp, vec![(10, 0.3), (12, 0.5)]);
        assert_eq!(c.seeds, vec![2, 3, 4]);
        assert_eq!(c.engines, vec![Engine::Eccg, Engine::F2]);
        assert_eq!(c.k, KChoice::Fixed(4));
        assert!(matches!(BenchConfig::parse("colour = red"), Err(BenchError::Config { line: 1, .. })));
        assert!(matches!(BenchConfig::parse("\nengines = f3"), Err(BenchError::Config { line: 2, .. })));
        let c = BenchConfig::parse("node_limit = 50\nnode_limit.f2 = 7\n").unwrap();
        assert_eq!((c.node_limit_for(Engine::F2), c.node_limit_for(Engine::F1)), (Some(7), Some(50)));
        assert!(BenchConfig::parse("node_limit.f9 = 1").is_err());
    }

    #[test]
    fn empty_engines_rejected() {
        let c = BenchConfig::parse("complete = 4\nengines =\n").unwrap();
        assert!(matches!(bench_run(&c), Err(BenchError::NoEngines)));
    }

    #[test]
    fn single_clique() {
        let c = BenchConfig::parse("complete = 10\nengines = eccg, f1, f2\n").unwrap();
        let r = bench_run(&c).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert!(r.rows.iter().all(|row| row.answer == "YES" && row.k == 1));
        let f2 = r.rows.iter().find(|row| row.engine == "f2").unwrap();
        assert!(f2.nodes <= 2, "{f2:?}");
        assert!(r.answers_agree);
    }

    #[test]
    fn small_gnp_family() {
        let c = BenchConfig::parse("gnp = 12:0.4\nseeds = 0..4\nengines = eccg, f1, f2\nthreads = 2\n").unwrap();
        let r = bench_run(&c).unwrap();
        assert_eq!(r.rows.len(), 12);
        assert!(r.answers_agree);
        assert_eq!(r.ratios.len(), 2);
        let again = bench_run(&c).unwrap();
        let key = |r: &BenchReport| r.rows.iter().map(|x| (x.answer.clone(), x.nodes)).collect::<Vec<_>>();
        assert_eq!(key(&r), key(&again));
    }

    #[test]
    fn node_limit_reported() {
        let c = BenchConfig::parse("gnp = 14:0.5\nseeds = 1\nengines = eccg, f2\nnode_limit.f2 = 1000\n").unwrap();
        let r = bench_run(&c).unwrap();
        assert_eq!(r.rows[0].answer, "YES");
        assert_eq!((r.rows[1].answer.as_str(), r.rows[1].nodes), ("LIMIT", 1001));
        assert_eq!(r.ratios[0].instances, 0);
        assert_eq!(r.ratios[0].bound_instances, 1);
    }

    #[test]
    fn timeouts_bound_the_median() {
        let row = |inst: &str, engine: &str, answer: &str, nodes: u64| BenchRow {
            instance: inst.into(),
            n: 0,
            m: 0,
            k: 0,
            engine: engine.into(),
            answer: answer.into(),
            nodes,
            depth: 0,
            max_branching: 0,
            time_ms: 0.0,
        };
        let rows = vec![
            row("a", "eccg", "YES", 100),
            row("a", "f2", "YES", 10),
            row("b", "eccg", "YES", 100),
            row("b", "f2", "TIMEOUT", 1000),
            row("c", "eccg", "TIMEOUT", 5),
            row("c", "f2", "NO", 1),
        ];
        let r = report(rows, &[Engine::Eccg, Engine::F2]);
        let q = &r.ratios[0];
        assert_eq!((q.median, q.instances), (Some(10.0), 1));
        assert_eq!((q.median_bound, q.bound_instances), (Some(5.05), 2));
        assert!(r.answers_agree);
        assert!(r.to_text().contains("<= 5.05 counting unfinished runs"));
    }
}
