//! Lazy enumeration of cliques that contain a given edge, inside a
//! restricted vertex set.

use crate::error::CoverError;
use crate::graph::{intersect_sorted, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliqueMode {
    /// Cliques maximal within the restricted subgraph.
    Maximal,
    /// Every clique.
    All,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn ones(len: usize) -> Self {
        let mut b = Self::zeros(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }
    fn and_count(&self, other: &Bits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

struct Frame {
    p: Bits,
    x: Bits,
    cands: Vec<usize>,
    next: usize,
}

/// Iterator over the cliques containing a fixed edge. Each item is a sorted
/// list of vertex ids.
pub struct EdgeCliques {
    mode: CliqueMode,
    base: [Vertex; 2],
    local: Vec<Vertex>,
    rows: Vec<Bits>,
    r: Vec<usize>,
    stack: Vec<Frame>,
    started: bool,
}

impl EdgeCliques {
    fn emit(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.r.iter().map(|&i| self.local[i]).collect();
        out.extend_from_slice(&self.base);
        out.sort_unstable();
        out
    }

    fn frame_maximal(&self, p: Bits, x: Bits) -> Frame {
        let mut best: Option<(u32, usize)> = None;
        for u in p.iter().chain(x.iter()) {
            let c = p.and_count(&self.rows[u]);
            // strict comparison keeps the smallest local index, hence smallest id
            if best.is_none_or(|(bc, bu)| c > bc || (c == bc && u < bu)) {
                best = Some((c, u));
            }
        }
        let cands = match best {
            Some((_, u)) => p.and_not(&self.rows[u]).iter().collect(),
            None => Vec::new(),
        };
        Frame { p, x, cands, next: 0 }
    }

    fn frame_all(&self, p: Bits) -> Frame {
        let cands = p.iter().collect();
        Frame { x: Bits(Vec::new()), p, cands, next: 0 }
    }

    fn next_maximal(&mut self) -> Option<Vec<Vertex>> {
        if !self.started {
            self.started = true;
            let n = self.local.len();
            let f = self.frame_maximal(Bits::ones(n), Bits::zeros(n));
            if f.p.is_empty() && f.x.is_empty() {
                return Some(self.emit());
            }
            self.stack.push(f);
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.cands.len() {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.r.pop();
                }
                continue;
            }
            let v = top.cands[top.next];
            top.next += 1;
            if top.next > 1 {
                let prev = top.cands[top.next - 2];
                top.p.clear(prev);
                top.x.set(prev);
            }
            let p = top.p.and(&self.rows[v]);
            let x = top.x.and(&self.rows[v]);
            self.r.push(v);
            if p.is_empty() && x.is_empty() {
                let out = self.emit();
                self.r.pop();
                return Some(out);
            }
            let f = self.frame_maximal(p, x);
            self.stack.push(f);
        }
    }

    fn next_all(&mut self) -> Option<Vec<Vertex>> {
        if !self.started {
            self.started = true;
            let f = self.frame_all(Bits::ones(self.local.len()));
            self.stack.push(f);
            return Some(self.emit());
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.cands.len() {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.r.pop();
                }
                continue;
            }
            let v = top.cands[top.next];
            top.next += 1;
            let mut p = top.p.and(&self.rows[v]);
            for &u in &top.cands[..top.next] {
                p.clear(u);
            }
            self.r.push(v);
            let f = self.frame_all(p);
            self.stack.push(f);
            return Some(self.emit());
        }
    }
}

impl Iterator for EdgeCliques {
    type Item = Vec<Vertex>;
    fn next(&mut self) -> Option<Self::Item> {
        match self.mode {
            CliqueMode::Maximal => self.next_maximal(),
            CliqueMode::All => self.next_all(),
        }
    }
}

/// Cliques of `g[restrict]` that contain the edge `{x, y}`.
///
/// `restrict` must be sorted; `x` and `y` are always treated as members.
/// Output order is deterministic.
pub fn enumerate_cliques_with_edge(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    restrict: &[Vertex],
    mode: CliqueMode,
) -> Result<EdgeCliques, CoverError> {
    if x == y || !g.has_edge(x, y) {
        return Err(CoverError::NotAnEdge { x, y });
    }
    let common = intersect_sorted(g.neighbors(x), g.neighbors(y));
    let local = intersect_sorted(&common, restrict);
    let rows = local
        .iter()
        .map(|&u| {
            let mut b = Bits::zeros(local.len());
            for (j, &v) in local.iter().enumerate() {
                if g.has_edge(u, v) {
                    b.set(j);
                }
            }
            b
        })
        .collect();
    Ok(EdgeCliques {
        mode,
        base: [x, y],
        local,
        rows,
        r: Vec::new(),
        stack: Vec::new(),
        started: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::DegeneracyContext;
    use crate::fixtures;

    fn all(n: usize) -> Vec<Vertex> {
        (0..n).collect()
    }

    fn brute(g: &Graph, x: Vertex, y: Vertex, restrict: &[Vertex]) -> Vec<Vec<Vertex>> {
        let others: Vec<Vertex> = restrict.iter().copied().filter(|&v| v != x && v != y).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << others.len()) {
            let mut c = vec![x, y];
            for (i, &v) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    c.push(v);
                }
            }
            c.sort_unstable();
            if g.is_clique(&c) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    fn brute_maximal(g: &Graph, x: Vertex, y: Vertex, restrict: &[Vertex]) -> Vec<Vec<Vertex>> {
        let every = brute(g, x, y, restrict);
        every
            .iter()
            .filter(|c| !every.iter().any(|d| d.len() > c.len() && c.iter().all(|v| d.contains(v))))
            .cloned()
            .collect()
    }

    #[test]
    fn k4_modes() {
        let g = fixtures::complete(4);
        let max: Vec<_> = enumerate_cliques_with_edge(&g, 0, 1, &all(4), CliqueMode::Maximal).unwrap().collect();
        assert_eq!(max, vec![vec![0, 1, 2, 3]]);
        let mut every: Vec<_> = enumerate_cliques_with_edge(&g, 0, 1, &all(4), CliqueMode::All).unwrap().collect();
        every.sort();
        assert_eq!(every, vec![vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3], vec![0, 1, 3]]);
    }

    #[test]
    fn rejects_non_edge() {
        let g = fixtures::path(3);
        assert!(enumerate_cliques_with_edge(&g, 0, 2, &all(3), CliqueMode::All).is_err());
    }

    #[test]
    fn isr_restricted() {
        let g = fixtures::g_isr();
        let ctx = DegeneracyContext::new(&g);
        let (x, w) = (fixtures::ISR_X, fixtures::ISR_W);
        // orient the edge along the ordering
        let (a, b) = if ctx.precedes(x, w) { (x, w) } else { (w, x) };
        let restrict = intersect_sorted(&ctx.later_closed(a), &g.closed_neighborhood(b));
        let mut got: Vec<_> =
            enumerate_cliques_with_edge(&g, a, b, &restrict, CliqueMode::Maximal).unwrap().collect();
        got.sort();
        assert_eq!(got, brute_maximal(&g, a, b, &restrict));
        assert!(restrict.len() <= ctx.d + 1);
    }

    #[test]
    fn random_against_brute_force() {
        for seed in 0..60 {
            let g = fixtures::gnp(10, 0.6, seed);
            for &(x, y) in g.edges() {
                let restrict: Vec<Vertex> = (0..10).filter(|v| !(v + seed as usize).is_multiple_of(4) || *v == x || *v == y).collect();
                let mut every: Vec<_> =
                    enumerate_cliques_with_edge(&g, x, y, &restrict, CliqueMode::All).unwrap().collect();
                every.sort();
                assert_eq!(every, brute(&g, x, y, &restrict));
                let mut max: Vec<_> =
                    enumerate_cliques_with_edge(&g, x, y, &restrict, CliqueMode::Maximal).unwrap().collect();
                max.sort();
                assert_eq!(max, brute_maximal(&g, x, y, &restrict));
            }
        }
    }

    #[test]
    fn wide_candidate_sets() {
        // more than one bitset word
        let g = fixtures::complete(70);
        let max: Vec<_> = enumerate_cliques_with_edge(&g, 3, 5, &all(70), CliqueMode::Maximal).unwrap().collect();
        assert_eq!(max, vec![all(70)]);
    }
}
