//! Named example graphs and small generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};
use crate::instance::{AewcdInstance, Weights};
use crate::io;

pub const G_ISR_EDGES: &str = include_str!("../fixtures/g_isr.edges");
pub const K4W_EDGES: &str = include_str!("../fixtures/k4w.edges");
pub const K4W_WEIGHTS: &str = include_str!("../fixtures/k4w.weights");
pub const G_LRCC_EDGES: &str = include_str!("../fixtures/g_lrcc.edges");
pub const G_LRCC_ESTAR: &str = include_str!("../fixtures/g_lrcc.estar");

pub const ISR_X: Vertex = 0;
pub const ISR_Y: Vertex = 1;
pub const ISR_W: Vertex = 2;
pub const ISR_Z: Vertex = 3;
pub const ISR_A: Vertex = 4;
pub const ISR_B: Vertex = 5;
pub const ISR_C: Vertex = 6;
pub const ISR_D: Vertex = 7;

/// Eight vertices, thirteen edges; minimum edge clique cover has five cliques.
pub fn g_isr() -> Graph {
    io::parse_edge_list(G_ISR_EDGES).expect("fixture parses")
}

/// The five-clique cover of [`g_isr`]: `xaz, xbw, ycw, ydz, wz`.
pub fn g_isr_cover() -> Vec<Vec<Vertex>> {
    let mut c = vec![
        vec![ISR_X, ISR_A, ISR_Z],
        vec![ISR_X, ISR_B, ISR_W],
        vec![ISR_Y, ISR_C, ISR_W],
        vec![ISR_Y, ISR_D, ISR_Z],
        vec![ISR_W, ISR_Z],
    ];
    c.iter_mut().for_each(|v| v.sort_unstable());
    c
}

/// K4 on `a, b, c, d` with edge weights `ab=101, ac=2, ad=1, bc=2, bd=1, cd=1`.
pub fn k4w_weights() -> Weights {
    io::parse_weights(K4W_WEIGHTS).expect("fixture parses")
}

pub fn k4w(k: usize) -> AewcdInstance {
    let g = io::parse_edge_list(K4W_EDGES).expect("fixture parses");
    AewcdInstance::from_weights(g, k, &k4w_weights()).expect("weights match")
}

/// Seven vertices `a..g`: triangles `abc`, `bcd`, `def`, `efg`.
pub fn g_lrcc() -> Graph {
    io::parse_edge_list(G_LRCC_EDGES).expect("fixture parses")
}

pub fn g_lrcc_estar() -> Vec<(Vertex, Vertex)> {
    io::parse_pairs(G_LRCC_ESTAR).expect("fixture parses")
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::new(n, e).expect("valid")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid")
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (0, v))).expect("valid")
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..p {
        for v in 0..q {
            e.push((u, p + v));
        }
    }
    Graph::new(p + q, e).expect("valid")
}

/// Erdős–Rényi `G(n, p)` from a fixed seed.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, p, &mut rng)
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::new(n, e).expect("valid")
}

/// Graph on `n` vertices whose edge set is given by the bits of `mask`
/// over the lexicographic pair order.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let mut e = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                e.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, e).expect("valid")
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |m| from_mask(n, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isr_degrees() {
        let g = g_isr();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 13);
        let deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        // x y w z a b c d
        assert_eq!(deg, vec![4, 4, 5, 5, 2, 2, 2, 2]);
        let (tri, _) = g.induced_subgraph(&[ISR_X, ISR_W, ISR_Z]);
        assert_eq!(tri, complete(3));
    }

    #[test]
    fn lrcc_covers_in_caption_are_cliques() {
        let g = g_lrcc();
        for c in [vec![0, 1, 2], vec![3, 4, 5], vec![6], vec![0], vec![1, 2, 3], vec![4, 5, 6]] {
            assert!(g.is_clique(&c), "{c:?}");
        }
        assert!(!g.is_clique(&[1, 2, 3, 0]));
        assert_eq!(g_lrcc_estar(), vec![(1, 3)]);
    }

    #[test]
    fn generators() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(path(3).m(), 2);
        assert_eq!(star(5).degree(0), 4);
        assert_eq!(complete_bipartite(2, 3).m(), 6);
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(all_labelled(4).count(), 64);
        assert_eq!(gnp(12, 0.4, 7), gnp(12, 0.4, 7));
    }
}
