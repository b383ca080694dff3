//! Immutable simple undirected graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Vertex identifier, always in `0..n`.
pub type Vertex = usize;

/// Edge identifier, an index into [`Graph::edges`].
pub type EdgeId = usize;

/// A simple undirected graph with sorted adjacency lists.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted
/// lexicographically; an edge's id is its position in that list.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    // parallel to `adj`: the edge id of each incidence
    inc: Vec<Vec<EdgeId>>,
    edges: Vec<(Vertex, Vertex)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n(), edges: g.edges }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(n, canon))
    }

    fn from_canonical(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let mut nbrs = Vec::with_capacity(n);
        let mut inc = Vec::with_capacity(n);
        for mut list in adj {
            list.sort_unstable();
            nbrs.push(list.iter().map(|p| p.0).collect());
            inc.push(list.iter().map(|p| p.1).collect());
        }
        Graph { adj: nbrs, inc, edges }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Sorted open neighbourhood of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Canonical edge list, sorted, each pair with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n() || v >= self.n() {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).ok().map(|i| self.inc[a][i])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.adj[v].is_empty()
    }

    /// True if `vs` is nonempty and pairwise adjacent.
    pub fn is_clique(&self, vs: &[Vertex]) -> bool {
        if vs.is_empty() || vs.iter().any(|&v| v >= self.n()) {
            return false;
        }
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Sorted `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        out
    }

    /// Sorted `N[u] ∩ N[v]`.
    pub fn common_closed(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        intersect_sorted(&self.closed_neighborhood(u), &self.closed_neighborhood(v))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            let nb = &self.adj[u];
            let mut j = 0;
            for v in u + 1..n {
                while j < nb.len() && nb[j] < v {
                    j += 1;
                }
                if j < nb.len() && nb[j] == v {
                    continue;
                }
                edges.push((u, v));
            }
        }
        Self::from_canonical(n, edges)
    }

    /// Subgraph induced by `keep`. The returned map sends new ids to old ids
    /// (new id `i` is `keep` sorted, position `i`).
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut map: Vec<Vertex> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if back[u] != usize::MAX && back[v] != usize::MAX {
                edges.push((back[u], back[v]));
            }
        }
        // relabelling is monotone, so the list stays canonical and sorted
        (Self::from_canonical(map.len(), edges), map)
    }

    /// Graph on the same vertex set keeping only the listed edge ids.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Graph {
        let mut edges: Vec<_> = keep.iter().map(|&e| self.edges[e]).collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_canonical(self.n(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges)
    }
}

/// Intersection of two sorted slices.
pub fn intersect_sorted(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
