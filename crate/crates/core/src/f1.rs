//! Search trees that branch on cliques enumerated inside a small
//! neighbourhood of the selected edge.

use std::time::Instant;

use crate::cliques::{enumerate_cliques_with_edge, CliqueMode};
use crate::degeneracy::DegeneracyContext;
use crate::graph::{intersect_sorted, EdgeId, Graph, Vertex};
use crate::instance::{SearchLimits, SearchResult, SearchStats, Solution};

/// Per-edge count of cliques covering it.
struct Coverage {
    count: Vec<u32>,
    uncovered: usize,
}

impl Coverage {
    fn new(g: &Graph, pre: &[EdgeId]) -> Self {
        let mut c = Coverage { count: vec![0; g.m()], uncovered: g.m() };
        for &e in pre {
            if c.count[e] == 0 {
                c.uncovered -= 1;
            }
            c.count[e] += 1;
        }
        c
    }

    fn add(&mut self, g: &Graph, z: &[Vertex]) {
        for (i, &a) in z.iter().enumerate() {
            for &b in &z[i + 1..] {
                let e = g.edge_id(a, b).expect("clique pairs are edges");
                if self.count[e] == 0 {
                    self.uncovered -= 1;
                }
                self.count[e] += 1;
            }
        }
    }

    fn remove(&mut self, g: &Graph, z: &[Vertex]) {
        for (i, &a) in z.iter().enumerate() {
            for &b in &z[i + 1..] {
                let e = g.edge_id(a, b).expect("clique pairs are edges");
                self.count[e] -= 1;
                if self.count[e] == 0 {
                    self.uncovered += 1;
                }
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Budget {
    /// Number of cliques, maximal cliques enumerated.
    Cliques,
    /// Total clique sizes, all cliques enumerated.
    Assignments,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Select {
    /// First uncovered edge of the DEP; cliques inside `N_d[x] ∩ N[y]`.
    Degeneracy,
    /// First uncovered edge by id; cliques inside `N[x] ∩ N[y]`.
    Plain,
}

struct Aborted;

struct Search<'a> {
    g: &'a Graph,
    ctx: DegeneracyContext,
    budget: Budget,
    select: Select,
    cov: Coverage,
    cliques: Vec<Vec<Vertex>>,
    stats: SearchStats,
    limits: SearchLimits,
}

impl Search<'_> {
    fn edge_at(&self, i: usize) -> (EdgeId, Vertex, Vertex) {
        match self.select {
            Select::Degeneracy => {
                let (x, y) = self.ctx.dep[i];
                (self.ctx.dep_edges[i], x, y)
            }
            Select::Plain => {
                let (x, y) = self.g.edge(i);
                (i, x, y)
            }
        }
    }

    fn restrict(&self, x: Vertex, y: Vertex) -> Vec<Vertex> {
        match self.select {
            Select::Degeneracy => intersect_sorted(&self.ctx.later_closed(x), &self.g.closed_neighborhood(y)),
            Select::Plain => self.g.common_closed(x, y),
        }
    }

    /// With `x` selected, every edge touching a vertex before `x` is covered.
    fn check_prefix(&self, i: usize) {
        let x = self.ctx.dep[i].0;
        for j in 0..i {
            let (u, _) = self.ctx.dep[j];
            if self.ctx.precedes(u, x) {
                assert!(self.cov.count[self.ctx.dep_edges[j]] > 0, "edge before the selected vertex is uncovered");
            }
        }
    }

    /// `from` is a position before which every edge is known to be covered;
    /// coverage only grows along a path, so children may start at `i + 1`.
    fn rec(&mut self, left: usize, from: usize, depth: usize) -> Result<bool, Aborted> {
        self.stats.enter(depth);
        if self.limits.exceeded(&self.stats) {
            self.stats.aborted = true;
            return Err(Aborted);
        }
        if self.cov.uncovered == 0 {
            return Ok(true);
        }
        let exhausted = match self.budget {
            Budget::Cliques => left == 0,
            Budget::Assignments => left < 2,
        };
        if exhausted {
            return Ok(false);
        }
        let mut i = from;
        while self.cov.count[self.edge_at(i).0] > 0 {
            i += 1;
        }
        if self.limits.check_invariants && self.select == Select::Degeneracy {
            self.check_prefix(i);
        }
        let (_, x, y) = self.edge_at(i);
        let mode = match self.budget {
            Budget::Cliques => CliqueMode::Maximal,
            Budget::Assignments => CliqueMode::All,
        };
        let restrict = self.restrict(x, y);
        let iter = enumerate_cliques_with_edge(self.g, x, y, &restrict, mode).expect("selected pair is an edge");
        let mut children = 0;
        for z in iter {
            let cost = match self.budget {
                Budget::Cliques => 1,
                Budget::Assignments => z.len(),
            };
            if cost > left {
                continue;
            }
            children += 1;
            self.cov.add(self.g, &z);
            self.cliques.push(z);
            match self.rec(left - cost, i + 1, depth + 1) {
                Ok(true) => {
                    self.stats.branch(children);
                    return Ok(true);
                }
                Ok(false) => {}
                Err(a) => {
                    self.stats.branch(children);
                    return Err(a);
                }
            }
            let z = self.cliques.pop().expect("pushed above");
            self.cov.remove(self.g, &z);
        }
        self.stats.branch(children);
        Ok(false)
    }
}

fn run(
    g: &Graph,
    param: usize,
    budget: Budget,
    select: Select,
    pre: &[EdgeId],
    partial: &[Vec<Vertex>],
    limits: SearchLimits,
) -> SearchResult {
    let start = Instant::now();
    let mut s = Search {
        g,
        ctx: DegeneracyContext::new(g),
        budget,
        select,
        cov: Coverage::new(g, pre),
        cliques: Vec::new(),
        stats: SearchStats::default(),
        limits,
    };
    let spent: usize = partial.iter().map(Vec::len).sum();
    let solution = if spent > param {
        None
    } else {
        for c in partial {
            s.cov.add(g, c);
            s.cliques.push(c.clone());
        }
        match s.rec(param - spent, 0, 0) {
            Ok(true) => Some(Solution::cover(std::mem::take(&mut s.cliques))),
            _ => None,
        }
    };
    s.stats.wall_time = start.elapsed();
    SearchResult { solution, stats: s.stats }
}

/// At most `k` cliques covering every edge, branching on maximal cliques of
/// `G[N_d[x] ∩ N[y]]` for the first uncovered DEP edge.
pub fn eccs(g: &Graph, k: usize) -> SearchResult {
    eccs_with(g, k, SearchLimits::default())
}

pub fn eccs_with(g: &Graph, k: usize, limits: SearchLimits) -> SearchResult {
    run(g, k, Budget::Cliques, Select::Degeneracy, &[], &[], limits)
}

/// Edge clique cover with total clique size at most `t`. `partial` cliques
/// count against `t` and are part of the returned cover; `pre_covered` edges
/// need no further cover.
pub fn accs(g: &Graph, t: usize, pre_covered: &[EdgeId], partial: &[Vec<Vertex>]) -> SearchResult {
    accs_with(g, t, pre_covered, partial, SearchLimits::default())
}

pub fn accs_with(
    g: &Graph,
    t: usize,
    pre_covered: &[EdgeId],
    partial: &[Vec<Vertex>],
    limits: SearchLimits,
) -> SearchResult {
    run(g, t, Budget::Assignments, Select::Degeneracy, pre_covered, partial, limits)
}

/// Baseline: first uncovered edge by id, maximal cliques of `G[N[x] ∩ N[y]]`.
pub fn eccg_baseline(g: &Graph, k: usize) -> SearchResult {
    eccg_baseline_with(g, k, SearchLimits::default())
}

pub fn eccg_baseline_with(g: &Graph, k: usize, limits: SearchLimits) -> SearchResult {
    run(g, k, Budget::Cliques, Select::Plain, &[], &[], limits)
}
