//! Degeneracy ordering and the degeneracy edge permutation (DEP).

use std::collections::BTreeSet;

use crate::graph::{EdgeId, Graph, Vertex};

/// Degeneracy ordering of a graph together with the derived edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyContext {
    /// `ordering[i]` is the vertex at position `i`.
    pub ordering: Vec<Vertex>,
    /// Inverse of `ordering`.
    pub position: Vec<usize>,
    pub d: usize,
    /// Neighbours that come later in the ordering, sorted by id.
    pub later_neighbors: Vec<Vec<Vertex>>,
    /// Ordered pairs `(x, y)` with `y` later than `x`, block by block.
    pub dep: Vec<(Vertex, Vertex)>,
    /// Edge ids parallel to `dep`.
    pub dep_edges: Vec<EdgeId>,
    /// Position of each edge id inside `dep`.
    pub dep_index: Vec<usize>,
}

impl DegeneracyContext {
    /// Peels a minimum-degree vertex at a time, smallest id first on ties.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (deg[v], v)).collect();
        let mut removed = vec![false; n];
        let mut ordering = Vec::with_capacity(n);
        let mut d = 0;
        while let Some((dv, v)) = queue.pop_first() {
            d = d.max(dv);
            removed[v] = true;
            ordering.push(v);
            for &u in g.neighbors(v) {
                if !removed[u] {
                    queue.remove(&(deg[u], u));
                    deg[u] -= 1;
                    queue.insert((deg[u], u));
                }
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in ordering.iter().enumerate() {
            position[v] = i;
        }
        let later_neighbors: Vec<Vec<Vertex>> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().copied().filter(|&u| position[u] > position[v]).collect())
            .collect();

        let mut dep = Vec::with_capacity(g.m());
        let mut dep_edges = Vec::with_capacity(g.m());
        for &x in &ordering {
            let mut block: Vec<Vertex> = later_neighbors[x].clone();
            block.sort_unstable_by_key(|&y| position[y]);
            for y in block {
                dep.push((x, y));
                dep_edges.push(g.edge_id(x, y).expect("later neighbour is adjacent"));
            }
        }
        let mut dep_index = vec![0; g.m()];
        for (i, &e) in dep_edges.iter().enumerate() {
            dep_index[e] = i;
        }
        DegeneracyContext { ordering, position, d, later_neighbors, dep, dep_edges, dep_index }
    }

    /// `N_d[x]`, sorted by id.
    pub fn later_closed(&self, x: Vertex) -> Vec<Vertex> {
        let mut out = self.later_neighbors[x].clone();
        let pos = out.partition_point(|&u| u < x);
        out.insert(pos, x);
        out
    }

    /// True if `a` comes strictly before `b` in the ordering.
    pub fn precedes(&self, a: Vertex, b: Vertex) -> bool {
        self.position[a] < self.position[b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn star_and_bipartite() {
        assert_eq!(DegeneracyContext::new(&fixtures::star(6)).d, 1);
        for (p, q) in [(1, 4), (2, 3), (3, 3), (4, 2)] {
            assert_eq!(DegeneracyContext::new(&fixtures::complete_bipartite(p, q)).d, p.min(q));
        }
    }

    #[test]
    fn isr_degeneracy() {
        let ctx = DegeneracyContext::new(&fixtures::g_isr());
        assert_eq!(ctx.d, 2);
    }

    #[test]
    fn dep_is_block_concatenation() {
        let g = fixtures::g_isr();
        let ctx = DegeneracyContext::new(&g);
        assert_eq!(ctx.dep.len(), g.m());
        let mut seen = vec![false; g.m()];
        let mut last_block = 0;
        for (i, &(x, y)) in ctx.dep.iter().enumerate() {
            assert!(ctx.position[x] < ctx.position[y]);
            assert!(ctx.position[x] >= last_block);
            last_block = ctx.position[x];
            let e = ctx.dep_edges[i];
            assert!(!seen[e]);
            seen[e] = true;
            assert_eq!(ctx.dep_index[e], i);
        }
        for v in g.vertices() {
            assert!(ctx.later_neighbors[v].len() <= ctx.d);
        }
    }

    #[test]
    fn empty_graph() {
        let ctx = DegeneracyContext::new(&Graph::empty(0));
        assert_eq!(ctx.d, 0);
        assert!(ctx.dep.is_empty());
    }
}
