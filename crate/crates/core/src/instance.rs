//! Problem instances, solutions and search statistics.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::InstanceError;
use crate::graph::{Graph, Vertex};

/// A clique cover: each clique is a sorted list of vertex ids.
pub type Cover = Vec<Vec<Vertex>>;

/// Edge and vertex weights as read from a weights file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Weights {
    /// Keyed by `(u, v)` with `u < v`.
    pub edges: BTreeMap<(Vertex, Vertex), BigRational>,
    pub vertices: BTreeMap<Vertex, BigRational>,
}

fn positive(w: &BigRational) -> Result<(), InstanceError> {
    if w.is_positive() {
        Ok(())
    } else {
        Err(InstanceError::NonPositiveWeight(w.to_string()))
    }
}

fn per_edge(g: &Graph, w: &Weights) -> Result<Vec<BigRational>, InstanceError> {
    for &(u, v) in w.edges.keys() {
        if !g.has_edge(u, v) {
            return Err(InstanceError::MissingEdge(u, v));
        }
    }
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let x = w.edges.get(&(u, v)).ok_or(InstanceError::MissingWeight(u, v))?;
            positive(x)?;
            Ok(x.clone())
        })
        .collect()
}

fn per_vertex(g: &Graph, w: &Weights) -> Result<Vec<Option<BigRational>>, InstanceError> {
    let mut out = vec![None; g.n()];
    for (&v, x) in &w.vertices {
        if v >= g.n() {
            return Err(InstanceError::VertexOutOfRange(v));
        }
        positive(x)?;
        out[v] = Some(x.clone());
    }
    Ok(out)
}

fn to_integer(x: &BigRational) -> Result<u64, InstanceError> {
    if !x.is_integer() {
        return Err(InstanceError::NonIntegerWeight(x.to_string()));
    }
    x.to_integer().to_u64().ok_or_else(|| InstanceError::NonIntegerWeight(x.to_string()))
}

/// Annotated weighted edge clique partition: every edge must lie in exactly
/// `edge_weight` cliques, every annotated vertex in exactly `vertex_weight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AwecpInstance {
    pub graph: Graph,
    pub k: usize,
    /// Indexed by edge id.
    pub edge_weight: Vec<u64>,
    /// `Some` for vertices of the annotated set.
    pub vertex_weight: Vec<Option<u64>>,
}

impl AwecpInstance {
    pub fn new(
        graph: Graph,
        k: usize,
        edge_weight: Vec<u64>,
        vertex_weight: Vec<Option<u64>>,
    ) -> Result<Self, InstanceError> {
        assert_eq!(edge_weight.len(), graph.m());
        assert_eq!(vertex_weight.len(), graph.n());
        if edge_weight.contains(&0) || vertex_weight.contains(&Some(0)) {
            return Err(InstanceError::NonPositiveWeight("0".into()));
        }
        Ok(AwecpInstance { graph, k, edge_weight, vertex_weight })
    }

    /// All edge weights 1, no annotated vertices.
    pub fn unit(graph: Graph, k: usize) -> Self {
        let (m, n) = (graph.m(), graph.n());
        AwecpInstance { graph, k, edge_weight: vec![1; m], vertex_weight: vec![None; n] }
    }

    pub fn from_weights(graph: Graph, k: usize, w: &Weights) -> Result<Self, InstanceError> {
        let e = per_edge(&graph, w)?.iter().map(to_integer).collect::<Result<_, _>>()?;
        let v = per_vertex(&graph, w)?
            .iter()
            .map(|x| x.as_ref().map(to_integer).transpose())
            .collect::<Result<_, _>>()?;
        Self::new(graph, k, e, v)
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<u64> {
        self.graph.edge_id(u, v).map(|e| self.edge_weight[e])
    }
}

/// Annotated exact weighted clique decomposition with rational weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AewcdInstance {
    pub graph: Graph,
    pub k: usize,
    pub edge_weight: Vec<BigRational>,
    pub vertex_weight: Vec<Option<BigRational>>,
}

impl AewcdInstance {
    pub fn new(
        graph: Graph,
        k: usize,
        edge_weight: Vec<BigRational>,
        vertex_weight: Vec<Option<BigRational>>,
    ) -> Result<Self, InstanceError> {
        assert_eq!(edge_weight.len(), graph.m());
        assert_eq!(vertex_weight.len(), graph.n());
        for w in edge_weight.iter().chain(vertex_weight.iter().flatten()) {
            positive(w)?;
        }
        Ok(AewcdInstance { graph, k, edge_weight, vertex_weight })
    }

    pub fn from_weights(graph: Graph, k: usize, w: &Weights) -> Result<Self, InstanceError> {
        let e = per_edge(&graph, w)?;
        let v = per_vertex(&graph, w)?;
        Self::new(graph, k, e, v)
    }

    /// Integer view, used by the integer-weight search and the partition
    /// correspondence.
    pub fn from_awecp(inst: &AwecpInstance) -> Self {
        let r = |x: u64| BigRational::from_integer(BigInt::from(x));
        AewcdInstance {
            graph: inst.graph.clone(),
            k: inst.k,
            edge_weight: inst.edge_weight.iter().map(|&w| r(w)).collect(),
            vertex_weight: inst.vertex_weight.iter().map(|w| w.map(r)).collect(),
        }
    }

    pub fn annotated(&self) -> impl Iterator<Item = (Vertex, &BigRational)> {
        self.vertex_weight.iter().enumerate().filter_map(|(v, w)| w.as_ref().map(|w| (v, w)))
    }
}

/// The six problems, each with its parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemInstance {
    Ecc { graph: Graph, k: usize },
    Acc { graph: Graph, t: usize },
    Awecp(AwecpInstance),
    Aewcd(AewcdInstance),
    Lrcc { graph: Graph, k: usize, e_star: Vec<(Vertex, Vertex)> },
    /// Solutions are colour classes: clique `i` lists the vertices with colour `i`.
    Pmc { graph: Graph, k: usize, pairs: Vec<(Vertex, Vertex)> },
}

/// A witness for a YES answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub cliques: Cover,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_gamma")]
    pub gamma: Option<Vec<BigRational>>,
}

impl Solution {
    pub fn cover(cliques: Cover) -> Self {
        Solution { cliques, gamma: None }
    }

    pub fn assignments(&self) -> usize {
        self.cliques.iter().map(Vec::len).sum()
    }
}

/// Exact rendering of a rational: `p/q`, or `p` when it is an integer.
pub fn rational_string(x: &BigRational) -> String {
    x.to_string()
}

fn ser_gamma<S: Serializer>(g: &Option<Vec<BigRational>>, s: S) -> Result<S::Ok, S::Error> {
    match g {
        Some(v) => s.collect_seq(v.iter().map(rational_string)),
        None => s.serialize_none(),
    }
}

/// Counters collected by one search.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Invocations of the recursive body.
    pub nodes: u64,
    /// Nodes that went on to branch (not answered at the coverage check).
    pub internal_nodes: u64,
    /// Root has depth 0.
    pub max_depth: usize,
    /// Most children generated at one node.
    pub max_branching: usize,
    /// Largest total size of the representative sets seen at any node.
    pub peak_representatives: usize,
    /// Set when a node or time limit stopped the search.
    pub aborted: bool,
    #[serde(serialize_with = "ser_duration_ms")]
    pub wall_time: Duration,
}

fn ser_duration_ms<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl SearchStats {
    pub(crate) fn enter(&mut self, depth: usize) {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
    }

    pub(crate) fn branch(&mut self, children: usize) {
        self.internal_nodes += 1;
        self.max_branching = self.max_branching.max(children);
    }

    /// Folds in the counters of a later search over the same input.
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.internal_nodes += other.internal_nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.max_branching = self.max_branching.max(other.max_branching);
        self.peak_representatives = self.peak_representatives.max(other.peak_representatives);
        self.aborted |= other.aborted;
        self.wall_time += other.wall_time;
    }

    pub fn time_ms(&self) -> f64 {
        self.wall_time.as_secs_f64() * 1000.0
    }
}

/// Optional resource limits for a search.
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
    /// Assert the per-node invariants. On by default in debug builds.
    pub check_invariants: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: None, deadline: None, check_invariants: cfg!(debug_assertions) }
    }
}

impl SearchLimits {
    pub fn timeout(d: Duration) -> Self {
        SearchLimits { deadline: Some(Instant::now() + d), ..Self::default() }
    }

    /// No limits and no invariant checks, for timing runs.
    pub fn unchecked() -> Self {
        SearchLimits { check_invariants: false, ..Self::default() }
    }

    pub(crate) fn exceeded(&self, stats: &SearchStats) -> bool {
        if self.max_nodes.is_some_and(|m| stats.nodes > m) {
            return true;
        }
        // clock reads are cheap enough every 256 nodes
        stats.nodes.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Answer plus statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub solution: Option<Solution>,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn is_yes(&self) -> bool {
        self.solution.is_some()
    }

    pub fn cover(&self) -> Option<&Cover> {
        self.solution.as_ref().map(|s| &s.cliques)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4w_from_fixture() {
        let inst = fixtures::k4w(3);
        let ab = inst.graph.edge_id(0, 1).unwrap();
        assert_eq!(inst.edge_weight[ab], BigRational::from_integer(101.into()));
        let as_int = AwecpInstance::from_weights(inst.graph.clone(), 3, &fixtures::k4w_weights()).unwrap();
        assert_eq!(as_int.weight(0, 1), Some(101));
    }

    #[test]
    fn missing_and_bad_weights() {
        let g = fixtures::path(3);
        let mut w = Weights::default();
        w.edges.insert((0, 1), BigRational::from_integer(1.into()));
        assert_eq!(AewcdInstance::from_weights(g.clone(), 1, &w), Err(InstanceError::MissingWeight(1, 2)));
        w.edges.insert((1, 2), BigRational::new(3.into(), 2.into()));
        assert!(AewcdInstance::from_weights(g.clone(), 1, &w).is_ok());
        assert!(matches!(AwecpInstance::from_weights(g.clone(), 1, &w), Err(InstanceError::NonIntegerWeight(_))));
        w.edges.insert((0, 2), BigRational::from_integer(1.into()));
        assert_eq!(AewcdInstance::from_weights(g, 1, &w), Err(InstanceError::MissingEdge(0, 2)));
    }

    #[test]
    fn gamma_serializes_exactly() {
        let s = Solution { cliques: vec![vec![0, 1]], gamma: Some(vec![BigRational::new(15.into(), 2.into())]) };
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"cliques":[[0,1]],"gamma":["15/2"]}"#);
        let s = Solution::cover(vec![vec![0]]);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"cliques":[[0]]}"#);
    }
}
