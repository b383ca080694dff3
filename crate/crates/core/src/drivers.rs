//! Engine dispatch with optional data reduction, and the minimisers that scan
//! the parameter upward.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::UnsupportedEngine;
use crate::f1;
use crate::f2;
use crate::graph::Graph;
use crate::instance::{Cover, SearchLimits, SearchResult, SearchStats, Solution};
use crate::reduction::{lift_solution, reduce_acc, reduce_amcc, reduce_ecc, ReducedInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Clique enumeration in the neighbourhood of the selected edge.
    F1,
    /// Implicit set representation.
    F2,
    /// Enumeration without the degeneracy restriction.
    Eccg,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Eccg, Engine::F1, Engine::F2];

    pub fn name(self) -> &'static str {
        match self {
            Engine::F1 => "f1",
            Engine::F2 => "f2",
            Engine::Eccg => "eccg",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "f1" => Ok(Engine::F1),
            "f2" => Ok(Engine::F2),
            "eccg" => Ok(Engine::Eccg),
            _ => Err(format!("unknown engine {s:?}, expected f1, f2 or eccg")),
        }
    }
}

/// What the reduction did before the search.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionSummary {
    pub rules_applied: usize,
    pub kernel_n: usize,
    pub kernel_m: usize,
}

impl ReductionSummary {
    fn of(r: &ReducedInstance) -> Self {
        ReductionSummary { rules_applied: r.trace.steps.len(), kernel_n: r.graph.n(), kernel_m: r.graph.m() }
    }

    /// No rule applied; the kernel is `g` itself.
    pub fn identity(g: &Graph) -> Self {
        ReductionSummary { rules_applied: 0, kernel_n: g.n(), kernel_m: g.m() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub result: SearchResult,
    pub reductions: ReductionSummary,
}

fn lift_result(r: &ReducedInstance, mut res: SearchResult) -> SearchResult {
    if let Some(sol) = res.solution.take() {
        let cover = r.lift(&sol.cliques).expect("solver output is a valid kernel cover");
        res.solution = Some(Solution::cover(cover));
    }
    res
}

fn run_ecc(g: &Graph, k: usize, engine: Engine, limits: SearchLimits) -> SearchResult {
    match engine {
        Engine::F1 => f1::eccs_with(g, k, limits),
        Engine::F2 => f2::eccs2_with(g, k, limits),
        Engine::Eccg => f1::eccg_baseline_with(g, k, limits),
    }
}

/// Edge clique cover with at most `k` cliques.
pub fn solve_ecc(g: &Graph, k: usize, engine: Engine, reduce: bool, limits: SearchLimits) -> Outcome {
    if !reduce {
        return Outcome { result: run_ecc(g, k, engine, limits), reductions: ReductionSummary::identity(g) };
    }
    let r = reduce_ecc(g, k);
    let reductions = ReductionSummary::of(&r);
    if r.is_no() {
        return Outcome { result: SearchResult { solution: None, stats: SearchStats::default() }, reductions };
    }
    let res = run_ecc(&r.graph, r.parameter, engine, limits);
    Outcome { result: lift_result(&r, res), reductions }
}

/// Edge clique cover with total clique size at most `t`.
pub fn solve_acc(
    g: &Graph,
    t: usize,
    engine: Engine,
    reduce: bool,
    limits: SearchLimits,
) -> Result<Outcome, UnsupportedEngine> {
    if engine == Engine::Eccg {
        return Err(UnsupportedEngine { engine: "eccg", problem: "acc" });
    }
    let run = |h: &Graph, t: usize, pre: &[usize]| match engine {
        Engine::F1 => f1::accs_with(h, t, pre, &[], limits),
        _ => f2::accs2_with(h, t, pre, limits),
    };
    if !reduce {
        return Ok(Outcome { result: run(g, t, &[]), reductions: ReductionSummary::identity(g) });
    }
    let r = reduce_acc(g, t);
    let reductions = ReductionSummary::of(&r);
    if r.is_no() {
        return Ok(Outcome { result: SearchResult { solution: None, stats: SearchStats::default() }, reductions });
    }
    let res = run(&r.graph, r.parameter, &r.precovered);
    Ok(Outcome { result: lift_result(&r, res), reductions })
}

/// Smallest feasible parameter with a witness and the summed search counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimum {
    pub value: usize,
    pub cover: Cover,
    pub stats: SearchStats,
    /// Reductions behind the successful call.
    pub reductions: ReductionSummary,
}

/// Smallest `k` admitting an edge clique cover with `k` cliques.
pub fn min_ecc(g: &Graph, engine: Engine, reduce: bool) -> Minimum {
    let mut stats = SearchStats::default();
    // every graph has a cover with at most n^2 / 4 cliques
    let bound = (g.n() * g.n() / 4).max(g.m().min(1));
    for k in 0..=bound {
        let out = solve_ecc(g, k, engine, reduce, SearchLimits::default());
        stats.absorb(&out.result.stats);
        if let Some(sol) = out.result.solution {
            return Minimum { value: k, cover: sol.cliques, stats, reductions: out.reductions };
        }
    }
    unreachable!("a cover with at most n^2 / 4 cliques exists")
}

/// Smallest total clique size of an edge clique cover.
///
/// The graph is first shrunk by the twin rules; the kernel is minimised by
/// scanning `t` and the witness lifted back. The reported value is the size
/// of the lifted witness.
pub fn min_assignment_cover(g: &Graph, engine: Engine) -> Result<Minimum, UnsupportedEngine> {
    let (kernel, trace) = reduce_amcc(g);
    let mut stats = SearchStats::default();
    for t in 0..=2 * kernel.m() {
        let out = solve_acc(&kernel, t, engine, true, SearchLimits::default())?;
        stats.absorb(&out.result.stats);
        if let Some(sol) = out.result.solution {
            let cover = lift_solution(&trace, &sol.cliques).expect("kernel cover lifts");
            let value = cover.iter().map(Vec::len).sum();
            let reductions = ReductionSummary {
                rules_applied: trace.steps.len() + out.reductions.rules_applied,
                ..out.reductions
            };
            return Ok(Minimum { value, cover, stats, reductions });
        }
    }
    unreachable!("the cover by single edges has total size 2m")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::instance::ProblemInstance;
    use crate::oracle;
    use crate::verify::verify_solution;

    fn assert_ecc(g: &Graph, m: &Minimum) {
        let p = ProblemInstance::Ecc { graph: g.clone(), k: m.value };
        verify_solution(&p, &Solution::cover(m.cover.clone())).unwrap();
    }

    fn assert_acc(g: &Graph, m: &Minimum) {
        let p = ProblemInstance::Acc { graph: g.clone(), t: m.value };
        verify_solution(&p, &Solution::cover(m.cover.clone())).unwrap();
    }

    #[test]
    fn examples() {
        let isr = fixtures::g_isr();
        for e in Engine::ALL {
            for reduce in [false, true] {
                let m = min_ecc(&isr, e, reduce);
                assert_eq!(m.value, 5);
                assert_ecc(&isr, &m);
            }
        }
        for e in [Engine::F1, Engine::F2] {
            let m = min_assignment_cover(&isr, e).unwrap();
            assert_eq!(m.value, 14);
            assert_acc(&isr, &m);
            for n in 1..6 {
                let kn = fixtures::complete(n);
                assert_eq!(min_ecc(&kn, e, true).value, usize::from(n > 1));
                // a lone vertex needs no clique
                assert_eq!(min_assignment_cover(&kn, e).unwrap().value, if n > 1 { n } else { 0 });
            }
            let p3 = fixtures::path(3);
            assert_eq!(min_ecc(&p3, e, true).value, 2);
            assert_eq!(min_assignment_cover(&p3, e).unwrap().value, 4);
        }
        assert!(min_assignment_cover(&isr, Engine::Eccg).is_err());
    }

    #[test]
    fn minimisers_match_oracle() {
        for seed in 0..40 {
            let g = fixtures::gnp(7, 0.45, 500 + seed);
            let (kstar, _) = oracle::oracle_min_ecc(&g).unwrap();
            let (tstar, _) = oracle::oracle_min_assignment(&g).unwrap();
            let m = min_ecc(&g, Engine::F2, true);
            assert_eq!(m.value, kstar, "seed {seed}");
            assert_ecc(&g, &m);
            for e in [Engine::F1, Engine::F2] {
                let m = min_assignment_cover(&g, e).unwrap();
                assert_eq!(m.value, tstar, "seed {seed}");
                assert_acc(&g, &m);
            }
        }
    }

    #[test]
    fn reduction_summary() {
        let g = fixtures::complete(4);
        let out = solve_ecc(&g, 1, Engine::F2, true, SearchLimits::default());
        assert_eq!(out.reductions, ReductionSummary { rules_applied: 4, kernel_n: 0, kernel_m: 0 });
        assert_eq!(out.result.cover(), Some(&vec![vec![0, 1, 2, 3]]));
        let out = solve_ecc(&g, 1, Engine::F2, false, SearchLimits::default());
        assert_eq!(out.reductions.rules_applied, 0);
    }
}
