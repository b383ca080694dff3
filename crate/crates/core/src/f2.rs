//! Search trees over an implicit set representation: every node either grows
//! an existing clique that can absorb the selected edge or opens a new one.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::Zero;

use crate::cover_state::CoverState;
use crate::degeneracy::DegeneracyContext;
use crate::error::InstanceError;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::instance::{AewcdInstance, AwecpInstance, Cover, SearchLimits, SearchResult, SearchStats, Solution};
use crate::lp::{build_lp_parts, integer_gamma_search, lp_feasible, to_rationals};
use crate::reduction::{awecp_sanity, Verdict};

struct Aborted;

type Step = Result<bool, Aborted>;

/// Node bookkeeping shared by every solver here.
struct Tracker {
    stats: SearchStats,
    limits: SearchLimits,
}

impl Tracker {
    fn new(limits: SearchLimits) -> Self {
        Tracker { stats: SearchStats::default(), limits }
    }

    fn enter(&mut self, depth: usize, st: &CoverState<'_>) -> Result<(), Aborted> {
        self.stats.enter(depth);
        self.stats.peak_representatives = self.stats.peak_representatives.max(st.rep_total());
        if self.limits.exceeded(&self.stats) {
            self.stats.aborted = true;
            return Err(Aborted);
        }
        Ok(())
    }

    fn finish(mut self, start: Instant, solution: Option<Solution>) -> SearchResult {
        self.stats.wall_time = start.elapsed();
        SearchResult { solution, stats: self.stats }
    }
}

/// Every clique lies inside `{u_i, ..., u_n}` when `x = u_i` is selected.
fn check_suffix(ctx: &DegeneracyContext, st: &CoverState<'_>, x: Vertex) {
    for c in st.cliques() {
        assert!(
            c.iter().all(|&v| ctx.position[v] >= ctx.position[x]),
            "clique {c:?} reaches before the selected vertex {x}"
        );
    }
}

/// Largest DEP position below `top` whose edge fails `covered`.
fn last_open(ctx: &DegeneracyContext, top: usize, covered: impl Fn(EdgeId) -> bool) -> Option<usize> {
    (0..top).rev().find(|&i| !covered(ctx.dep_edges[i]))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Budget {
    Cliques,
    Assignments,
}

struct Eccs2<'g> {
    st: CoverState<'g>,
    ctx: DegeneracyContext,
    budget: Budget,
    tr: Tracker,
    found: Option<Cover>,
}

impl Eccs2<'_> {
    fn rec(&mut self, left: usize, top: usize, depth: usize) -> Step {
        self.tr.enter(depth, &self.st)?;
        if self.st.all_edges_covered() {
            self.found = Some(self.st.to_cover());
            return Ok(true);
        }
        if self.budget == Budget::Assignments && left == 0 {
            return Ok(false);
        }
        let i = last_open(&self.ctx, top, |e| self.st.is_edge_covered(e)).expect("an edge is uncovered");
        let (x, y) = self.ctx.dep[i];
        if self.tr.limits.check_invariants {
            check_suffix(&self.ctx, &self.st, x);
        }
        let mut children = 0;
        for l in self.st.common_reps(x, y) {
            let cost = match self.budget {
                Budget::Cliques => 0,
                Budget::Assignments => 2 - self.st.contains(l, x) as usize - self.st.contains(l, y) as usize,
            };
            if cost > left {
                continue;
            }
            children += 1;
            self.st.apply_cover_edge(x, y, l).expect("representative absorbs the edge");
            if self.rec(left - cost, i, depth + 1)? {
                self.tr.stats.branch(children);
                return Ok(true);
            }
            self.st.undo_last_cover_edge().expect("journal top");
        }
        let cost = match self.budget {
            Budget::Cliques => 1,
            Budget::Assignments => 2,
        };
        if left >= cost {
            children += 1;
            self.st.add_new_clique(x, y).expect("edge");
            if self.rec(left - cost, i, depth + 1)? {
                self.tr.stats.branch(children);
                return Ok(true);
            }
            self.st.remove_last_clique().expect("journal top");
        }
        self.tr.stats.branch(children);
        Ok(false)
    }
}

fn run_eccs2(g: &Graph, param: usize, budget: Budget, pre: &[EdgeId], limits: SearchLimits) -> SearchResult {
    let start = Instant::now();
    let ctx = DegeneracyContext::new(g);
    let top = ctx.dep.len();
    let mut s = Eccs2 { st: CoverState::with_precovered(g, pre), ctx, budget, tr: Tracker::new(limits), found: None };
    let _ = s.rec(param, top, 0);
    let sol = s.found.take().map(Solution::cover);
    s.tr.finish(start, sol)
}

/// At most `k` cliques covering every edge.
pub fn eccs2(g: &Graph, k: usize) -> SearchResult {
    eccs2_with(g, k, SearchLimits::default())
}

pub fn eccs2_with(g: &Graph, k: usize, limits: SearchLimits) -> SearchResult {
    run_eccs2(g, k, Budget::Cliques, &[], limits)
}

/// Edge clique cover of total size at most `t`; `pre_covered` edges need no
/// clique.
pub fn accs2(g: &Graph, t: usize, pre_covered: &[EdgeId]) -> SearchResult {
    accs2_with(g, t, pre_covered, SearchLimits::default())
}

pub fn accs2_with(g: &Graph, t: usize, pre_covered: &[EdgeId], limits: SearchLimits) -> SearchResult {
    run_eccs2(g, t, Budget::Assignments, pre_covered, limits)
}

struct Awecps<'g> {
    st: CoverState<'g>,
    ctx: DegeneracyContext,
    we: Vec<u64>,
    ws: Vec<Option<u64>>,
    open_edges: usize,
    open_s: usize,
    tr: Tracker,
    found: Option<Cover>,
}

impl Awecps<'_> {
    fn take_edge(&mut self, e: EdgeId) {
        self.we[e] -= 1;
        if self.we[e] == 0 {
            self.open_edges -= 1;
        }
    }

    fn give_edge(&mut self, e: EdgeId) {
        if self.we[e] == 0 {
            self.open_edges += 1;
        }
        self.we[e] += 1;
    }

    fn take_vertex(&mut self, v: Vertex) {
        if let Some(w) = &mut self.ws[v] {
            *w -= 1;
            if *w == 0 {
                self.open_s -= 1;
            }
        }
    }

    fn give_vertex(&mut self, v: Vertex) {
        if let Some(w) = &mut self.ws[v] {
            if *w == 0 {
                self.open_s += 1;
            }
            *w += 1;
        }
    }

    fn spent(&self, v: Vertex) -> bool {
        self.ws[v] == Some(0)
    }

    fn eid(&self, a: Vertex, b: Vertex) -> EdgeId {
        self.st.graph().edge_id(a, b).expect("clique neighbours are adjacent")
    }

    /// Whether adding `{x, y}` to `C_l` stays within every budget.
    fn can_include(&self, x: Vertex, y: Vertex, l: usize) -> bool {
        let (xin, yin) = (self.st.contains(l, x), self.st.contains(l, y));
        if (!xin && self.spent(x)) || (!yin && self.spent(y)) {
            return false;
        }
        self.st.clique(l).iter().filter(|&&z| z != x && z != y).all(|&z| {
            (xin || self.we[self.eid(x, z)] > 0) && (yin || self.we[self.eid(y, z)] > 0)
        })
    }

    /// Edges and annotated vertices newly placed in `C_l` by adding `{x, y}`.
    fn inclusion_delta(&self, x: Vertex, y: Vertex, l: usize) -> (Vec<EdgeId>, Vec<Vertex>) {
        let (xin, yin) = (self.st.contains(l, x), self.st.contains(l, y));
        let mut edges = vec![self.eid(x, y)];
        let mut verts = Vec::new();
        for &z in self.st.clique(l).iter().filter(|&&z| z != x && z != y) {
            if !xin {
                edges.push(self.eid(x, z));
            }
            if !yin {
                edges.push(self.eid(y, z));
            }
        }
        if !xin {
            verts.push(x);
        }
        if !yin {
            verts.push(y);
        }
        (edges, verts)
    }

    fn rec(&mut self, left: usize, top: usize, depth: usize) -> Step {
        self.tr.enter(depth, &self.st)?;
        if self.open_edges == 0 && self.open_s == 0 {
            self.found = Some(self.st.to_cover());
            return Ok(true);
        }
        let Some(i) = last_open(&self.ctx, top, |e| self.we[e] == 0) else {
            // annotated vertices still need cliques but no edge can host them
            return Ok(false);
        };
        let (x, y) = self.ctx.dep[i];
        if self.tr.limits.check_invariants {
            check_suffix(&self.ctx, &self.st, x);
        }
        let mut children = 0;
        let cands: Vec<usize> = self
            .st
            .common_reps(x, y)
            .into_iter()
            .filter(|&l| !(self.st.contains(l, x) && self.st.contains(l, y)))
            .collect();
        for l in cands {
            if !self.can_include(x, y, l) {
                continue;
            }
            children += 1;
            let (edges, verts) = self.inclusion_delta(x, y, l);
            self.st.apply_cover_edge(x, y, l).expect("representative absorbs the edge");
            edges.iter().for_each(|&e| self.take_edge(e));
            verts.iter().for_each(|&v| self.take_vertex(v));
            // budgets only shrink along a path, so edges after i stay exhausted
            if self.rec(left, i + 1, depth + 1)? {
                self.tr.stats.branch(children);
                return Ok(true);
            }
            edges.iter().for_each(|&e| self.give_edge(e));
            verts.iter().for_each(|&v| self.give_vertex(v));
            self.st.undo_last_cover_edge().expect("journal top");
        }
        if left > 0 {
            if self.spent(x) || self.spent(y) {
                self.tr.stats.branch(children);
                return Ok(false);
            }
            children += 1;
            let e = self.eid(x, y);
            self.st.add_new_clique(x, y).expect("edge");
            self.take_edge(e);
            self.take_vertex(x);
            self.take_vertex(y);
            if self.rec(left - 1, i + 1, depth + 1)? {
                self.tr.stats.branch(children);
                return Ok(true);
            }
            self.give_edge(e);
            self.give_vertex(x);
            self.give_vertex(y);
            self.st.remove_last_clique().expect("journal top");
        }
        self.tr.stats.branch(children);
        Ok(false)
    }
}

/// Cover with at most `k` cliques (each of size at least two) in which every
/// edge lies in exactly its weight many cliques and every annotated vertex in
/// exactly its weight many.
pub fn awecps(inst: &AwecpInstance) -> SearchResult {
    awecps_with(inst, SearchLimits::default())
}

pub fn awecps_with(inst: &AwecpInstance, limits: SearchLimits) -> SearchResult {
    let start = Instant::now();
    let g = &inst.graph;
    let mut tr = Tracker::new(limits);
    if awecp_sanity(inst) == Verdict::No {
        tr.stats.nodes = 1;
        return tr.finish(start, None);
    }
    let ctx = DegeneracyContext::new(g);
    let top = ctx.dep.len();
    let mut s = Awecps {
        st: CoverState::new(g),
        ctx,
        we: inst.edge_weight.clone(),
        ws: inst.vertex_weight.clone(),
        open_edges: inst.edge_weight.iter().filter(|&&w| w > 0).count(),
        open_s: inst.vertex_weight.iter().filter(|w| w.is_some_and(|w| w > 0)).count(),
        tr,
        found: None,
    };
    let _ = s.rec(inst.k, top, 0);
    let sol = s.found.take().map(Solution::cover);
    s.tr.finish(start, sol)
}

/// How the weighted decomposition search checks a finished cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AewcdOptions {
    /// Branch on the marked and unmarked subtrees as two whole passes
    /// instead of per choice.
    pub merged: bool,
    /// Search integer weights in `[1, wmax]` instead of solving the LP.
    pub integer_wmax: Option<u64>,
}

struct Aewcds<'g, 'i> {
    st: CoverState<'g>,
    ctx: DegeneracyContext,
    inst: &'i AewcdInstance,
    marked: Vec<bool>,
    open: usize,
    opts: AewcdOptions,
    tr: Tracker,
    found: Option<Solution>,
}

enum Choice {
    MarkOnly,
    Include(usize),
    New,
}

impl Aewcds<'_, '_> {
    fn leaf(&mut self) -> bool {
        let cover = self.st.to_cover();
        let sys = build_lp_parts(&cover, &self.inst.graph, &self.inst.edge_weight, &self.inst.vertex_weight)
            .expect("every marked edge lies in a clique");
        let gamma = match self.opts.integer_wmax {
            Some(w) => integer_gamma_search(&sys, w).map(|v| to_rationals(&v)),
            None => lp_feasible(&sys),
        };
        let Some(gamma) = gamma else { return false };
        // a zero weight clique contributes nothing and is dropped
        let (cliques, gamma): (Vec<_>, Vec<BigRational>) =
            cover.into_iter().zip(gamma).filter(|(_, w)| !w.is_zero()).unzip();
        self.found = Some(Solution { cliques, gamma: Some(gamma) });
        true
    }

    fn set_mark(&mut self, e: EdgeId, on: bool) {
        if self.marked[e] != on {
            self.marked[e] = on;
            if on {
                self.open -= 1;
            } else {
                self.open += 1;
            }
        }
    }

    /// Applies `choice`, recurses, and reverts.
    fn try_choice(&mut self, c: &Choice, mark: bool, left: usize, i: usize, depth: usize) -> Step {
        let (x, y) = self.ctx.dep[i];
        let e = self.ctx.dep_edges[i];
        let left = match c {
            Choice::MarkOnly => left,
            Choice::Include(l) => {
                self.st.apply_cover_edge(x, y, *l).expect("representative absorbs the edge");
                left
            }
            Choice::New => {
                self.st.add_new_clique(x, y).expect("edge");
                left - 1
            }
        };
        self.set_mark(e, mark);
        // an unmarked edge is reselected at once; it may then only go into
        // cliques after this one, so each set of inclusions is tried once
        let floor = if mark {
            None
        } else {
            Some(match c {
                Choice::Include(l) => *l,
                _ => self.st.num_cliques() - 1,
            })
        };
        let hit = self.rec(left, i + 1, depth + 1, floor)?;
        if hit {
            return Ok(true);
        }
        self.set_mark(e, false);
        match c {
            Choice::MarkOnly => {}
            Choice::Include(_) => self.st.undo_last_cover_edge().expect("journal top"),
            Choice::New => self.st.remove_last_clique().expect("journal top"),
        }
        Ok(false)
    }

    /// `floor` is set when the selected edge was just included without being
    /// marked: the last clique it went into.
    fn rec(&mut self, left: usize, top: usize, depth: usize, floor: Option<usize>) -> Step {
        self.tr.enter(depth, &self.st)?;
        if self.open == 0 {
            return Ok(self.leaf());
        }
        let i = last_open(&self.ctx, top, |e| self.marked[e]).expect("an edge is unmarked");
        let (x, y) = self.ctx.dep[i];
        let e = self.ctx.dep_edges[i];
        if self.tr.limits.check_invariants {
            check_suffix(&self.ctx, &self.st, x);
        }
        let mut choices = Vec::new();
        // after an unmarked inclusion, marking alone would repeat the marked
        // form of that inclusion
        if floor.is_none() && self.st.is_edge_covered(e) {
            choices.push(Choice::MarkOnly);
        }
        for l in self.st.common_reps(x, y) {
            if floor.is_some_and(|f| l <= f) {
                continue;
            }
            if !(self.st.contains(l, x) && self.st.contains(l, y)) {
                choices.push(Choice::Include(l));
            }
        }
        if left > 0 {
            choices.push(Choice::New);
        }
        // marking alone leaves the state unchanged, so only the marked form is useful
        let children = choices.iter().map(|c| if matches!(c, Choice::MarkOnly) { 1 } else { 2 }).sum();
        let mut plan: Vec<(&Choice, bool)> = Vec::with_capacity(children);
        if self.opts.merged {
            plan.extend(choices.iter().map(|c| (c, true)));
            plan.extend(choices.iter().filter(|c| !matches!(c, Choice::MarkOnly)).map(|c| (c, false)));
        } else {
            for c in &choices {
                plan.push((c, true));
                if !matches!(c, Choice::MarkOnly) {
                    plan.push((c, false));
                }
            }
        }
        for (n, (c, mark)) in plan.into_iter().enumerate() {
            if self.try_choice(c, mark, left, i, depth)? {
                self.tr.stats.branch(n + 1);
                return Ok(true);
            }
        }
        self.tr.stats.branch(children);
        Ok(false)
    }
}

/// Cover with at most `k` cliques and positive rational clique weights whose
/// sums match every edge weight and every annotated vertex weight.
pub fn aewcds(inst: &AewcdInstance) -> SearchResult {
    aewcds_with(inst, AewcdOptions::default(), SearchLimits::default())
}

/// As [`aewcds`] with integer clique weights in `[1, wmax]`.
pub fn aewcds_integer(inst: &AewcdInstance, wmax: u64) -> SearchResult {
    aewcds_with(inst, AewcdOptions { integer_wmax: Some(wmax), ..Default::default() }, SearchLimits::default())
}

pub fn aewcds_with(inst: &AewcdInstance, opts: AewcdOptions, limits: SearchLimits) -> SearchResult {
    let start = Instant::now();
    let g = &inst.graph;
    let ctx = DegeneracyContext::new(g);
    let top = ctx.dep.len();
    let mut s = Aewcds {
        st: CoverState::new(g),
        ctx,
        inst,
        marked: vec![false; g.m()],
        open: g.m(),
        opts,
        tr: Tracker::new(limits),
        found: None,
    };
    let _ = s.rec(inst.k, top, 0, None);
    let sol = s.found.take();
    s.tr.finish(start, sol)
}

struct Lrccs<'g> {
    st: CoverState<'g>,
    ctx: DegeneracyContext,
    /// DEP positions of the required edges, ascending.
    estar: Vec<usize>,
    tr: Tracker,
    found: Option<Cover>,
}

impl Lrccs<'_> {
    fn rec(&mut self, left: usize, e_top: usize, v_top: usize, depth: usize) -> Step {
        self.tr.enter(depth, &self.st)?;
        let j = (0..e_top).rev().find(|&j| !self.st.is_edge_covered(self.ctx.dep_edges[self.estar[j]]));
        let p = (0..v_top).rev().find(|&p| !self.st.is_vertex_covered(self.ctx.ordering[p]));
        if j.is_none() && p.is_none() {
            self.found = Some(self.st.to_cover());
            return Ok(true);
        }
        let edge = j.map(|j| self.ctx.dep[self.estar[j]]);
        let u = p.map(|p| self.ctx.ordering[p]);
        let edge = match (edge, u) {
            (Some((x, _)), Some(u)) if self.ctx.precedes(x, u) => None,
            _ => edge,
        };
        let x = match edge {
            Some((x, _)) => x,
            None => u.expect("a vertex is uncovered"),
        };
        if self.tr.limits.check_invariants {
            check_suffix(&self.ctx, &self.st, x);
        }
        let cands: Vec<usize> = match edge {
            Some((x, y)) => self.st.common_reps(x, y),
            None => self.st.reps(x).iter().copied().collect(),
        };
        let (ne, nv) = (j.map_or(0, |j| j + 1), p.map_or(0, |p| p + 1));
        let mut children = 0;
        for l in cands {
            let y = match edge {
                Some((_, y)) => y,
                None => self.st.clique(l)[0],
            };
            children += 1;
            self.st.apply_cover_edge(x, y, l).expect("representative absorbs the pair");
            if self.rec(left, ne, nv, depth + 1)? {
                self.tr.stats.branch(children);
                return Ok(true);
            }
            self.st.undo_last_cover_edge().expect("journal top");
        }
        if left > 0 {
            let y = edge.map_or(x, |(_, y)| y);
            children += 1;
            self.st.add_new_clique(x, y).expect("edge or single vertex");
            if self.rec(left - 1, ne, nv, depth + 1)? {
                self.tr.stats.branch(children);
                return Ok(true);
            }
            self.st.remove_last_clique().expect("journal top");
        }
        self.tr.stats.branch(children);
        Ok(false)
    }
}

/// At most `k` cliques covering every vertex and every edge of `e_star`.
pub fn lrccs(g: &Graph, k: usize, e_star: &[(Vertex, Vertex)]) -> Result<SearchResult, InstanceError> {
    lrccs_with(g, k, e_star, SearchLimits::default())
}

pub fn lrccs_with(
    g: &Graph,
    k: usize,
    e_star: &[(Vertex, Vertex)],
    limits: SearchLimits,
) -> Result<SearchResult, InstanceError> {
    let start = Instant::now();
    let ctx = DegeneracyContext::new(g);
    let mut estar = Vec::with_capacity(e_star.len());
    for &(u, v) in e_star {
        let e = g.edge_id(u, v).ok_or(InstanceError::MissingEdge(u, v))?;
        estar.push(ctx.dep_index[e]);
    }
    estar.sort_unstable();
    estar.dedup();
    let (e_top, v_top) = (estar.len(), g.n());
    let mut s = Lrccs { st: CoverState::new(g), ctx, estar, tr: Tracker::new(limits), found: None };
    let _ = s.rec(k, e_top, v_top, 0);
    let sol = s.found.take().map(Solution::cover);
    Ok(s.tr.finish(start, sol))
}

/// At most `k` colours, each vertex at least one, adjacent vertices none in
/// common and every listed pair at least one in common. Clique `i` of the
/// returned solution is colour class `i`.
pub fn solve_pmc(g: &Graph, k: usize, pairs: &[(Vertex, Vertex)]) -> Result<SearchResult, InstanceError> {
    solve_pmc_with(g, k, pairs, SearchLimits::default())
}

pub fn solve_pmc_with(
    g: &Graph,
    k: usize,
    pairs: &[(Vertex, Vertex)],
    limits: SearchLimits,
) -> Result<SearchResult, InstanceError> {
    for &(u, v) in pairs {
        if u >= g.n() || v >= g.n() {
            return Err(InstanceError::VertexOutOfRange(u.max(v)));
        }
        if u == v || g.has_edge(u, v) {
            return Err(InstanceError::AdjacentPair(u, v));
        }
    }
    lrccs_with(&g.complement(), k, pairs, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::instance::ProblemInstance;
    use crate::oracle;
    use crate::verify::verify_solution;
    use num_bigint::BigInt;

    fn r(p: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(p))
    }

    #[test]
    fn eccs2_examples() {
        let g = fixtures::g_isr();
        assert!(eccs2(&g, 5).is_yes());
        assert!(!eccs2(&g, 4).is_yes());
        assert_eq!(eccs2(&fixtures::complete(4), 1).cover(), Some(&vec![vec![0, 1, 2, 3]]));
        let s = eccs2(&g, 5).solution.unwrap();
        verify_solution(&ProblemInstance::Ecc { graph: g, k: 5 }, &s).unwrap();
    }

    #[test]
    fn accs2_examples() {
        let k3 = fixtures::complete(3);
        assert!(accs2(&k3, 3, &[]).is_yes());
        assert!(!accs2(&k3, 2, &[]).is_yes());
        let g = fixtures::g_isr();
        assert!(accs2(&g, 14, &[]).is_yes());
        assert!(!accs2(&g, 13, &[]).is_yes());
    }

    #[test]
    fn awecps_examples() {
        let k4 = AwecpInstance::unit(fixtures::complete(4), 1);
        assert_eq!(awecps(&k4).cover(), Some(&vec![vec![0, 1, 2, 3]]));
        let k3 = fixtures::complete(3);
        let mut w = vec![1; 3];
        w[k3.edge_id(0, 1).unwrap()] = 2;
        let inst = AwecpInstance::new(k3, 2, w, vec![None; 3]).unwrap();
        let mut c = awecps(&inst).cover().unwrap().clone();
        c.sort();
        assert_eq!(c, vec![vec![0, 1], vec![0, 1, 2]]);
        let inst1 = AwecpInstance { k: 1, ..inst };
        assert!(!awecps(&inst1).is_yes());
    }

    #[test]
    fn aewcds_k4w() {
        for merged in [false, true] {
            let opts = AewcdOptions { merged, integer_wmax: None };
            let inst = fixtures::k4w(3);
            let res = aewcds_with(&inst, opts, SearchLimits::default());
            let sol = res.solution.expect("yes instance");
            verify_solution(&ProblemInstance::Aewcd(inst), &sol).unwrap();
            assert!(!aewcds_with(&fixtures::k4w(2), opts, SearchLimits::default()).is_yes());
        }
        let sol = aewcds_integer(&fixtures::k4w(3), 101).solution.unwrap();
        let mut pairs: Vec<_> = sol.cliques.iter().cloned().zip(sol.gamma.unwrap()).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(vec![0, 1], r(99)), (vec![0, 1, 2], r(1)), (vec![0, 1, 2, 3], r(1))]);
    }

    #[test]
    fn aewcds_single_edge() {
        let g = fixtures::complete(2);
        let w = BigRational::new(BigInt::from(15), BigInt::from(2));
        let inst = AewcdInstance::new(g, 1, vec![w.clone()], vec![None, None]).unwrap();
        let sol = aewcds(&inst).solution.unwrap();
        assert_eq!(sol.gamma, Some(vec![w]));
    }

    #[test]
    fn lrcc_examples() {
        let g = fixtures::g_lrcc();
        let sol = lrccs(&g, 3, &fixtures::g_lrcc_estar()).unwrap().solution.unwrap();
        let p = ProblemInstance::Lrcc { graph: g.clone(), k: 3, e_star: fixtures::g_lrcc_estar() };
        verify_solution(&p, &sol).unwrap();
        assert!(lrccs(&g, 3, &[(0, 6)]).is_err());
        for k in 0..5 {
            assert_eq!(lrccs(&g, k, &[]).unwrap().is_yes(), oracle::oracle_vcc(&g, k).unwrap());
        }
    }

    #[test]
    fn pmc_examples() {
        assert!(solve_pmc(&Graph::empty(3), 1, &[]).unwrap().is_yes());
        let k3 = fixtures::complete(3);
        assert!(solve_pmc(&k3, 3, &[]).unwrap().is_yes());
        assert!(!solve_pmc(&k3, 2, &[]).unwrap().is_yes());
        assert!(solve_pmc(&k3, 3, &[(0, 1)]).is_err());
        let c5 = fixtures::cycle(5);
        for k in 0..6 {
            let want = oracle::oracle_pmc(&c5, k, &[(0, 2)]).unwrap();
            let got = solve_pmc(&c5, k, &[(0, 2)]).unwrap();
            assert_eq!(got.is_yes(), want, "k = {k}");
            if let Some(s) = got.solution {
                verify_solution(&ProblemInstance::Pmc { graph: c5.clone(), k, pairs: vec![(0, 2)] }, &s).unwrap();
            }
        }
    }

    #[test]
    fn random_agreement() {
        for seed in 0..40 {
            let g = fixtures::gnp(7, 0.5, 100 + seed);
            let (kstar, _) = oracle::oracle_min_ecc(&g).unwrap();
            let (tstar, _) = oracle::oracle_min_assignment(&g).unwrap();
            for k in kstar.saturating_sub(1)..=kstar {
                assert_eq!(eccs2(&g, k).is_yes(), k >= kstar, "seed {seed}");
            }
            for t in tstar.saturating_sub(1)..=tstar {
                assert_eq!(accs2(&g, t, &[]).is_yes(), t >= tstar, "seed {seed}");
            }
        }
    }
}
