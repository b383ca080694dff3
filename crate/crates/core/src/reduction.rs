//! Data reduction for ECC and ACC, the assignment-minimum rules, solution
//! lifting, AWECP sanity checks and the VCC to ACC construction.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::degeneracy::DegeneracyContext;
use crate::error::LiftError;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::instance::{AwecpInstance, Cover};

/// One applied rule. Vertex ids are those of the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Step {
    /// Vertex with no uncovered incident edge removed.
    Isolated { vertex: Vertex },
    /// `vertex` removed as a closed twin of `twin`; lifting adds it to every
    /// clique containing `twin`.
    MergeTwin { vertex: Vertex, twin: Vertex },
    /// A whole component collapsed to one vertex and was committed as a
    /// clique, costing one from `k`.
    CommitComponent { clique: Vec<Vertex> },
    /// Simplicial vertex removed with its closed neighbourhood committed.
    SimplicialClique { vertex: Vertex, clique: Vec<Vertex> },
    /// Edge without common neighbours removed and committed as a clique.
    IsolatedEdge { u: Vertex, v: Vertex },
}

/// Applied rules plus the map from kernel ids to original ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub original_n: usize,
    /// `map[i]` is the original id of kernel vertex `i`.
    pub map: Vec<Vertex>,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Open,
    No,
}

/// Kernel produced by a reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    /// Remaining `k` or `t`.
    pub parameter: usize,
    /// Committed cliques in original ids.
    pub forced_cliques: Cover,
    /// Kernel edges already covered by a committed clique.
    pub precovered: Vec<EdgeId>,
    pub trace: ReductionTrace,
    pub verdict: Verdict,
}

impl ReducedInstance {
    pub fn is_no(&self) -> bool {
        self.verdict == Verdict::No
    }

    /// Checks `cover` against the kernel and lifts it to the original graph.
    pub fn lift(&self, cover: &[Vec<Vertex>]) -> Result<Cover, LiftError> {
        let g = &self.graph;
        for c in cover {
            if c.iter().any(|&v| v >= g.n()) {
                return Err(LiftError::InvalidReduced(format!("clique {c:?} out of range")));
            }
            if !g.is_clique(c) {
                return Err(LiftError::InvalidReduced(format!("{c:?} is not a clique")));
            }
        }
        let pre: BTreeSet<EdgeId> = self.precovered.iter().copied().collect();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if !pre.contains(&e) && !cover.iter().any(|c| c.contains(&u) && c.contains(&v)) {
                return Err(LiftError::InvalidReduced(format!("uncovered edge ({u}, {v})")));
            }
        }
        lift_solution(&self.trace, cover)
    }
}

fn insert_sorted(c: &mut Vec<Vertex>, v: Vertex) {
    if let Err(i) = c.binary_search(&v) {
        c.insert(i, v);
    }
}

/// Maps a kernel solution back through `trace` to the original graph.
pub fn lift_solution(trace: &ReductionTrace, reduced: &[Vec<Vertex>]) -> Result<Cover, LiftError> {
    let mut cover: Cover = Vec::with_capacity(reduced.len());
    for c in reduced {
        let mut out = Vec::with_capacity(c.len());
        for &v in c {
            let Some(&o) = trace.map.get(v) else {
                return Err(LiftError::InvalidReduced(format!("vertex {v} not in the kernel")));
            };
            out.push(o);
        }
        out.sort_unstable();
        if out.windows(2).any(|w| w[0] == w[1]) {
            return Err(LiftError::InvalidReduced(format!("clique {c:?} repeats a vertex")));
        }
        cover.push(out);
    }
    for step in trace.steps.iter().rev() {
        match step {
            Step::Isolated { .. } => {}
            Step::MergeTwin { vertex, twin } => {
                for c in &mut cover {
                    if c.binary_search(twin).is_ok() {
                        insert_sorted(c, *vertex);
                    }
                }
            }
            Step::CommitComponent { clique } | Step::SimplicialClique { clique, .. } => cover.push(clique.clone()),
            Step::IsolatedEdge { u, v } => cover.push(vec![*u.min(v), *u.max(v)]),
        }
    }
    Ok(cover)
}

/// Mutable graph over original ids used while rules fire.
struct Work {
    adj: Vec<BTreeSet<Vertex>>,
    alive: Vec<bool>,
    /// Canonical pairs marked covered.
    covered: BTreeSet<(Vertex, Vertex)>,
    steps: Vec<Step>,
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

impl Work {
    fn new(g: &Graph) -> Self {
        Work {
            adj: g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect(),
            alive: vec![true; g.n()],
            covered: BTreeSet::new(),
            steps: Vec::new(),
        }
    }

    fn live(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.adj.len()).filter(|&v| self.alive[v])
    }

    fn remove_vertex(&mut self, v: Vertex) {
        let nb = std::mem::take(&mut self.adj[v]);
        for u in nb {
            self.adj[u].remove(&v);
            self.covered.remove(&key(u, v));
        }
        self.alive[v] = false;
    }

    fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        self.covered.remove(&key(u, v));
    }

    fn closed(&self, v: Vertex) -> Vec<Vertex> {
        let mut c: Vec<Vertex> = self.adj[v].iter().copied().collect();
        insert_sorted(&mut c, v);
        c
    }

    fn has_uncovered_edge(&self, v: Vertex) -> bool {
        self.adj[v].iter().any(|&u| !self.covered.contains(&key(u, v)))
    }

    fn is_clique(&self, vs: &[Vertex]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|b| self.adj[a].contains(b)))
    }

    /// Removes every vertex without uncovered incident edges.
    fn rule_isolated(&mut self) -> bool {
        let dead: Vec<Vertex> = self.live().filter(|&v| !self.has_uncovered_edge(v)).collect();
        for &v in &dead {
            self.remove_vertex(v);
            self.steps.push(Step::Isolated { vertex: v });
        }
        !dead.is_empty()
    }

    /// Compacts to a kernel graph with its id map and precovered edge ids.
    fn finish(self, original_n: usize) -> (Graph, ReductionTrace, Vec<EdgeId>) {
        let mut edges = Vec::new();
        for u in 0..self.adj.len() {
            for &v in self.adj[u].range(u + 1..) {
                edges.push((u, v));
            }
        }
        let full = Graph::new(original_n, edges).expect("edges come from a valid graph");
        let keep: Vec<Vertex> = self.live().collect();
        let (graph, map) = full.induced_subgraph(&keep);
        let mut back = vec![usize::MAX; original_n];
        for (i, &o) in map.iter().enumerate() {
            back[o] = i;
        }
        let mut pre: Vec<EdgeId> = self
            .covered
            .iter()
            .filter_map(|&(u, v)| graph.edge_id(back[u], back[v]))
            .collect();
        pre.sort_unstable();
        (graph, ReductionTrace { original_n, map, steps: self.steps }, pre)
    }
}

/// Groups of live vertices sharing a neighbourhood key, in ascending order of
/// their smallest member.
fn twin_classes(w: &Work, closed: bool) -> Vec<Vec<Vertex>> {
    let mut by_key: HashMap<Vec<Vertex>, Vec<Vertex>> = HashMap::new();
    for v in w.live() {
        let k = if closed { w.closed(v) } else { w.adj[v].iter().copied().collect() };
        by_key.entry(k).or_default().push(v);
    }
    let mut classes: Vec<Vec<Vertex>> = by_key.into_values().filter(|c| c.len() > 1).collect();
    classes.sort_unstable();
    classes
}

/// Reduces an ECC instance to a fixpoint of the isolated-vertex and
/// closed-twin rules, then applies the size checks.
///
/// When merging twins leaves the representative isolated, the collapsed
/// component is a clique that every cover must use; it is committed and `k`
/// drops by one.
pub fn reduce_ecc(g: &Graph, k: usize) -> ReducedInstance {
    let mut w = Work::new(g);
    let mut group: Vec<Vec<Vertex>> = g.vertices().map(|v| vec![v]).collect();
    let mut forced = Vec::new();
    let mut budget = k as i64;
    loop {
        let mut changed = w.rule_isolated();
        for class in twin_classes(&w, true) {
            let rep = class[0];
            for &x in &class[1..] {
                w.remove_vertex(x);
                w.steps.push(Step::MergeTwin { vertex: x, twin: rep });
                let moved = std::mem::take(&mut group[x]);
                group[rep].extend(moved);
            }
            if w.adj[rep].is_empty() {
                let mut clique = group[rep].clone();
                clique.sort_unstable();
                w.remove_vertex(rep);
                w.steps.push(Step::CommitComponent { clique: clique.clone() });
                forced.push(clique);
                budget -= 1;
            }
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let (graph, trace, precovered) = w.finish(g.n());
    let mut verdict = Verdict::Open;
    let parameter = budget.max(0) as usize;
    if budget < 0 {
        verdict = Verdict::No;
    } else if graph.n() > 0 {
        let d = DegeneracyContext::new(&graph).d;
        let n = graph.n() as u128;
        let too_many = n > (d as u128 + 1) * parameter as u128;
        let size_bound = parameter < 64 && n >= 1u128 << parameter;
        if too_many || size_bound {
            verdict = Verdict::No;
        }
    }
    ReducedInstance { graph, parameter, forced_cliques: forced, precovered, trace, verdict }
}

/// Reduces an ACC instance. Rules fire in the order isolated vertex, edge
/// without common neighbours, simplicial vertex, repeated to a fixpoint;
/// then a kernel with more vertices than budget is rejected.
pub fn reduce_acc(g: &Graph, t: usize) -> ReducedInstance {
    let mut w = Work::new(g);
    let mut forced = Vec::new();
    let mut budget = t as i64;
    'outer: loop {
        if budget < 0 {
            break;
        }
        if w.rule_isolated() {
            continue;
        }
        let live: Vec<Vertex> = w.live().collect();
        for &x in &live {
            let nb: Vec<Vertex> = w.adj[x].range(x + 1..).copied().collect();
            for y in nb {
                if w.covered.contains(&(x, y)) {
                    continue;
                }
                if w.adj[x].intersection(&w.adj[y]).next().is_none() {
                    w.remove_edge(x, y);
                    w.steps.push(Step::IsolatedEdge { u: x, v: y });
                    forced.push(vec![x, y]);
                    budget -= 2;
                    continue 'outer;
                }
            }
        }
        for &x in &live {
            if w.adj[x].iter().any(|&u| w.covered.contains(&key(u, x))) {
                continue;
            }
            let clique = w.closed(x);
            if w.is_clique(&clique) {
                for (i, &a) in clique.iter().enumerate() {
                    for &b in &clique[i + 1..] {
                        w.covered.insert((a, b));
                    }
                }
                w.remove_vertex(x);
                budget -= clique.len() as i64;
                w.steps.push(Step::SimplicialClique { vertex: x, clique: clique.clone() });
                forced.push(clique);
                continue 'outer;
            }
        }
        break;
    }
    let (graph, trace, precovered) = w.finish(g.n());
    let verdict = if budget < 0 || graph.n() as i64 > budget { Verdict::No } else { Verdict::Open };
    ReducedInstance { graph, parameter: budget.max(0) as usize, forced_cliques: forced, precovered, trace, verdict }
}

/// Rules for computing an assignment-minimum cover: isolated vertices and
/// closed twins whose survivor keeps another neighbour. There is no
/// parameter; the caller minimises over the kernel and lifts.
///
/// Open twins are deliberately left alone. Copying the cliques of one twin
/// for the other is not optimal: on the wheel with hub 0 and rim 1-3-2-4 the
/// optimum 10 uses `{0,1,3}, {0,2,4}, {1,4}, {2,3}`, while copying gives 12.
pub fn reduce_amcc(g: &Graph) -> (Graph, ReductionTrace) {
    let mut w = Work::new(g);
    loop {
        let mut changed = w.rule_isolated();
        for class in twin_classes(&w, true) {
            let rep = class[0];
            for &x in &class[1..] {
                // the survivor must keep a neighbour besides x
                if w.adj[rep].len() < 2 {
                    break;
                }
                w.remove_vertex(x);
                w.steps.push(Step::MergeTwin { vertex: x, twin: rep });
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let (graph, trace, pre) = w.finish(g.n());
    debug_assert!(pre.is_empty());
    (graph, trace)
}

/// Trivial NO checks for AWECP: an annotated vertex whose weight is below its
/// smallest incident edge weight or above their sum.
pub fn awecp_sanity(inst: &AwecpInstance) -> Verdict {
    let g = &inst.graph;
    for (x, ws) in inst.vertex_weight.iter().enumerate() {
        let Some(ws) = *ws else { continue };
        let inc = g.incident_edges(x).iter().map(|&e| inst.edge_weight[e]);
        let min = inc.clone().min();
        let sum: u64 = inc.sum();
        if min.is_some_and(|m| ws < m) || ws > sum {
            return Verdict::No;
        }
    }
    Verdict::Open
}

/// VCC to ACC: adds `q = 2m + 1` vertices adjacent to every original vertex
/// (not to each other) and sets `t = (n + k) q + 2m`.
pub fn reduce_vcc_to_acc(g: &Graph, k: usize) -> (Graph, usize) {
    let (n, m) = (g.n(), g.m());
    let q = 2 * m + 1;
    let mut edges = g.edges().to_vec();
    for u in n..n + q {
        edges.extend((0..n).map(|v| (v, u)));
    }
    let out = Graph::new(n + q, edges).expect("new vertices are in range");
    (out, (n + k) * q + 2 * m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::verify::verify_solution;
    use crate::instance::{ProblemInstance, Solution};

    fn k3_plus_isolated() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn ecc_isolated_vertex() {
        let r = reduce_ecc(&k3_plus_isolated(), 1);
        assert_eq!(r.trace.steps[0], Step::Isolated { vertex: 3 });
        // the triangle then collapses through twin merges
        assert_eq!(r.forced_cliques, vec![vec![0, 1, 2]]);
        assert_eq!(r.graph.n(), 0);
        assert_eq!(r.parameter, 0);
        assert_eq!(r.verdict, Verdict::Open);
        assert_eq!(r.lift(&[]).unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn ecc_complete_graph_commits() {
        let r = reduce_ecc(&fixtures::complete(4), 1);
        let merges = r.trace.steps.iter().filter(|s| matches!(s, Step::MergeTwin { .. })).count();
        assert_eq!(merges, 3);
        assert_eq!(r.verdict, Verdict::Open);
        assert_eq!(r.lift(&[]).unwrap(), vec![vec![0, 1, 2, 3]]);
        assert!(reduce_ecc(&fixtures::complete(4), 0).is_no());
    }

    #[test]
    fn ecc_isr_unchanged() {
        let g = fixtures::g_isr();
        let r = reduce_ecc(&g, 5);
        assert!(r.trace.steps.is_empty());
        assert_eq!(r.graph, g);
        assert_eq!(r.verdict, Verdict::Open);
        // n = 8 >= 2^3
        assert!(reduce_ecc(&g, 3).is_no());
    }

    #[test]
    fn ecc_merge_lift() {
        // triangle 0-1-2 with pendant 3 on 2: 0 and 1 are closed twins
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let r = reduce_ecc(&g, 2);
        assert_eq!(r.trace.steps, vec![Step::MergeTwin { vertex: 1, twin: 0 }]);
        assert_eq!(r.trace.map, vec![0, 2, 3]);
        let lifted = r.lift(&[vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(lifted, vec![vec![0, 1, 2], vec![2, 3]]);
        let p = ProblemInstance::Ecc { graph: g, k: 2 };
        assert_eq!(verify_solution(&p, &Solution::cover(lifted)), Ok(()));
    }

    #[test]
    fn acc_examples() {
        let r = reduce_acc(&fixtures::complete(3), 3);
        assert_eq!(r.graph.n(), 0);
        assert_eq!(r.parameter, 0);
        assert_eq!(r.forced_cliques, vec![vec![0, 1, 2]]);
        assert_eq!(r.verdict, Verdict::Open);

        let p3 = fixtures::path(3);
        let r = reduce_acc(&p3, 4);
        assert_eq!(r.forced_cliques, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!((r.parameter, r.verdict), (0, Verdict::Open));
        assert_eq!(r.lift(&[]).unwrap(), vec![vec![1, 2], vec![0, 1]]);
        assert!(reduce_acc(&p3, 3).is_no());
    }

    #[test]
    fn acc_simplicial_leaves_precovered_edges() {
        // triangle 0-1-2 plus pendant path 2-3-4: vertex 0 is simplicial
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let r = reduce_acc(&g, 100);
        assert!(r.forced_cliques.contains(&vec![0, 1, 2]));
        assert_eq!(r.verdict, Verdict::Open);
        let lifted = r.lift(&[]).unwrap();
        let total: usize = lifted.iter().map(Vec::len).sum();
        assert_eq!(total, 7);
    }

    #[test]
    fn amcc_rules() {
        let (k, trace) = reduce_amcc(&fixtures::complete(3));
        assert_eq!(k.n(), 2);
        let lifted = lift_solution(&trace, &[vec![0, 1]]).unwrap();
        assert_eq!(lifted, vec![vec![0, 1, 2]]);

        // open twins survive: the rim pairs of a wheel are not merged
        let wheel = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let (k, trace) = reduce_amcc(&wheel);
        assert_eq!((k.n(), trace.steps.len()), (5, 0));
    }

    #[test]
    fn lift_rejects_bad_ids() {
        let r = reduce_ecc(&fixtures::path(3), 2);
        assert!(r.lift(&[vec![0, 9]]).is_err());
        assert!(r.lift(&[vec![0, 1]]).is_err());
    }

    #[test]
    fn awecp_checks() {
        let mk = |s: u64| {
            AwecpInstance::new(fixtures::complete(3), 3, vec![2; 3], vec![Some(s), None, None]).unwrap()
        };
        assert_eq!(awecp_sanity(&mk(1)), Verdict::No);
        assert_eq!(awecp_sanity(&mk(5)), Verdict::No);
        assert_eq!(awecp_sanity(&mk(2)), Verdict::Open);
    }

    #[test]
    fn vcc_construction() {
        let (g, t) = reduce_vcc_to_acc(&fixtures::path(3), 2);
        assert_eq!((g.n(), t), (8, 29));
        assert_eq!(reduce_vcc_to_acc(&fixtures::path(3), 1).1, 24);
        let (g, t) = reduce_vcc_to_acc(&fixtures::complete(3), 1);
        assert_eq!((g.n(), g.m(), t), (10, 24, 34));
    }

    #[test]
    fn trace_serializes() {
        let r = reduce_ecc(&fixtures::complete(2), 1);
        let js = serde_json::to_string(&r.trace).unwrap();
        assert!(js.contains(r#""rule":"merge_twin""#), "{js}");
        let back: ReductionTrace = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r.trace);
    }
}
