//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares code with the solvers except [`Graph`] and
//! [`lp_feasible`]. Vertex sets are `u64` bitmasks.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::OracleError;
use crate::graph::{Graph, Vertex};
use crate::instance::{AewcdInstance, AwecpInstance, Cover};
use crate::lp::{build_lp_parts, lp_feasible};

/// Largest graph accepted by the exhaustive oracles.
pub const ORACLE_MAX_N: usize = 10;

fn guard(g: &Graph) -> Result<(), OracleError> {
    if g.n() > ORACLE_MAX_N {
        Err(OracleError::TooLarge { n: g.n(), limit: ORACLE_MAX_N })
    } else {
        Ok(())
    }
}

fn rows(g: &Graph) -> Vec<u64> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect()
}

fn is_clique_mask(rows: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask & !(1 << v) & !rows[v] != 0 {
            return false;
        }
    }
    mask != 0
}

fn to_vec(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn edge_mask(u: Vertex, v: Vertex) -> u64 {
    1 << u | 1 << v
}

/// Every nonempty clique, by exhaustive subset test.
pub fn all_cliques(g: &Graph) -> Result<Vec<u64>, OracleError> {
    guard(g)?;
    let r = rows(g);
    Ok((1u64..1 << g.n()).filter(|&m| is_clique_mask(&r, m)).collect())
}

/// Cliques not strictly contained in another clique.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<u64>, OracleError> {
    let all = all_cliques(g)?;
    let r = rows(g);
    Ok(all
        .iter()
        .copied()
        .filter(|&c| (0..g.n()).all(|v| c >> v & 1 == 1 || !is_clique_mask(&r, c | 1 << v)))
        .collect())
}

fn covers_edges(g: &Graph, cliques: &[u64]) -> bool {
    g.edges().iter().all(|&(u, v)| cliques.iter().any(|&c| c & edge_mask(u, v) == edge_mask(u, v)))
}

fn combinations(items: &[u64], k: usize, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
    fn rec(items: &[u64], start: usize, k: usize, cur: &mut Vec<u64>, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if rec(items, i + 1, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, 0, k, &mut Vec::new(), f)
}

/// Minimum number of cliques covering all edges, with a witness made of
/// maximal cliques.
pub fn oracle_min_ecc(g: &Graph) -> Result<(usize, Cover), OracleError> {
    let maxi: Vec<u64> = maximal_cliques(g)?.into_iter().filter(|c| c.count_ones() >= 2).collect();
    for k in 0..=maxi.len() {
        let mut found = None;
        combinations(&maxi, k, &mut |sel| {
            if covers_edges(g, sel) {
                found = Some(sel.iter().map(|&c| to_vec(c)).collect());
                true
            } else {
                false
            }
        });
        if let Some(c) = found {
            return Ok((k, c));
        }
    }
    unreachable!("all maximal cliques cover every edge")
}

pub fn oracle_ecc(g: &Graph, k: usize) -> Result<bool, OracleError> {
    Ok(oracle_min_ecc(g)?.0 <= k)
}

/// Minimum `Σ|C_l|` over edge clique covers, with a witness.
pub fn oracle_min_assignment(g: &Graph) -> Result<(usize, Cover), OracleError> {
    let cl: Vec<u64> = all_cliques(g)?.into_iter().filter(|c| c.count_ones() >= 2).collect();
    let edges: Vec<u64> = g.edges().iter().map(|&(u, v)| edge_mask(u, v)).collect();
    let mut best = (usize::MAX, Vec::new());
    let mut cur = Vec::new();
    fn dfs(edges: &[u64], cl: &[u64], cur: &mut Vec<u64>, cost: usize, best: &mut (usize, Vec<u64>)) {
        if cost >= best.0 {
            return;
        }
        let Some(&e) = edges.iter().find(|&&e| !cur.iter().any(|&c| c & e == e)) else {
            *best = (cost, cur.clone());
            return;
        };
        // at least two more assignments are needed for the uncovered edge
        if cost + 2 >= best.0 {
            return;
        }
        for &c in cl {
            if c & e == e {
                cur.push(c);
                dfs(edges, cl, cur, cost + c.count_ones() as usize, best);
                cur.pop();
            }
        }
    }
    dfs(&edges, &cl, &mut cur, 0, &mut best);
    Ok((best.0, best.1.iter().map(|&c| to_vec(c)).collect()))
}

pub fn oracle_acc(g: &Graph, t: usize) -> Result<bool, OracleError> {
    Ok(oracle_min_assignment(g)?.0 <= t)
}

/// Exists a multiset of at most `k` cliques (each of size at least two) with
/// every edge in exactly `w(e)` of them and every annotated vertex in exactly
/// its weight.
pub fn oracle_wecp(inst: &AwecpInstance) -> Result<bool, OracleError> {
    let g = &inst.graph;
    let cl: Vec<u64> = all_cliques(g)?.into_iter().filter(|c| c.count_ones() >= 2).collect();
    let edges: Vec<(u64, usize)> = g.edges().iter().enumerate().map(|(i, &(u, v))| (edge_mask(u, v), i)).collect();
    let mut ew: Vec<i64> = inst.edge_weight.iter().map(|&w| w as i64).collect();
    let mut vw: Vec<Option<i64>> = inst.vertex_weight.iter().map(|w| w.map(|x| x as i64)).collect();

    fn apply(c: u64, edges: &[(u64, usize)], ew: &mut [i64], vw: &mut [Option<i64>], d: i64) {
        for &(m, i) in edges {
            if c & m == m {
                ew[i] += d;
            }
        }
        for (v, w) in vw.iter_mut().enumerate() {
            if c >> v & 1 == 1 {
                if let Some(w) = w {
                    *w += d;
                }
            }
        }
    }

    fn dfs(k: usize, cl: &[u64], edges: &[(u64, usize)], ew: &mut [i64], vw: &mut [Option<i64>]) -> bool {
        let Some(&(e, _)) = edges.iter().find(|&&(_, i)| ew[i] > 0) else {
            return vw.iter().all(|w| w.is_none_or(|x| x == 0));
        };
        if k == 0 {
            return false;
        }
        for &c in cl {
            if c & e != e {
                continue;
            }
            apply(c, edges, ew, vw, -1);
            let ok = ew.iter().all(|&w| w >= 0) && vw.iter().all(|w| w.is_none_or(|x| x >= 0));
            if ok && dfs(k - 1, cl, edges, ew, vw) {
                return true;
            }
            apply(c, edges, ew, vw, 1);
        }
        false
    }
    Ok(dfs(inst.k, &cl, &edges, &mut ew, &mut vw))
}

/// Exists a set of at most `k` distinct cliques (each of size at least two)
/// covering every edge whose weight system has a nonnegative solution.
pub fn oracle_ewcd(inst: &AewcdInstance) -> Result<Option<(Cover, Vec<BigRational>)>, OracleError> {
    let g = &inst.graph;
    let cl: Vec<u64> = all_cliques(g)?.into_iter().filter(|c| c.count_ones() >= 2).collect();
    for k in 0..=inst.k.min(cl.len()) {
        let mut found = None;
        combinations(&cl, k, &mut |sel| {
            if !covers_edges(g, sel) {
                return false;
            }
            let cover: Cover = sel.iter().map(|&c| to_vec(c)).collect();
            let sys = build_lp_parts(&cover, g, &inst.edge_weight, &inst.vertex_weight).expect("covering");
            if let Some(gamma) = lp_feasible(&sys) {
                found = Some((cover, gamma));
                true
            } else {
                false
            }
        });
        if let Some((cover, gamma)) = found {
            // zero-weight cliques are dropped; the rest still meets every row
            let keep: Vec<usize> = (0..cover.len()).filter(|&i| !gamma[i].is_zero()).collect();
            return Ok(Some((
                keep.iter().map(|&i| cover[i].clone()).collect(),
                keep.iter().map(|&i| gamma[i].clone()).collect(),
            )));
        }
    }
    Ok(None)
}

/// Minimum number of cliques covering every vertex and every pair in `e_star`.
pub fn oracle_min_lrcc(g: &Graph, e_star: &[(Vertex, Vertex)]) -> Result<usize, OracleError> {
    let maxi = maximal_cliques(g)?;
    if e_star.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return Ok(usize::MAX);
    }
    let full = if g.n() == 0 { 0 } else { u64::MAX >> (64 - g.n()) };
    let targets: Vec<u64> = e_star.iter().map(|&(u, v)| edge_mask(u, v)).collect();
    for k in 0..=maxi.len() {
        let hit = combinations(&maxi, k, &mut |sel| {
            sel.iter().fold(0, |a, &c| a | c) == full
                && targets.iter().all(|&t| sel.iter().any(|&c| c & t == t))
        });
        if hit {
            return Ok(k);
        }
    }
    unreachable!("maximal cliques cover all vertices and edges")
}

pub fn oracle_lrcc(g: &Graph, k: usize, e_star: &[(Vertex, Vertex)]) -> Result<bool, OracleError> {
    Ok(oracle_min_lrcc(g, e_star)? <= k)
}

/// Chromatic number by backtracking colouring.
pub fn chromatic_number(g: &Graph) -> Result<usize, OracleError> {
    guard(g)?;
    let n = g.n();
    fn colour(g: &Graph, v: usize, c: usize, col: &mut [usize], used: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for x in 0..c.min(used + 1) {
            if g.neighbors(v).iter().all(|&u| u >= v || col[u] != x) {
                col[v] = x;
                if colour(g, v + 1, c, col, used.max(x + 1)) {
                    return true;
                }
            }
        }
        false
    }
    for c in 0..=n {
        if colour(g, 0, c, &mut vec![0; n], 0) {
            return Ok(c);
        }
    }
    unreachable!()
}

/// Vertex clique cover with at most `k` cliques.
pub fn oracle_vcc(g: &Graph, k: usize) -> Result<bool, OracleError> {
    Ok(chromatic_number(&g.complement())? <= k)
}

/// Fewest colours in a multi-colouring where each vertex gets at least one
/// colour, adjacent vertices share none, and every listed pair shares one.
pub fn oracle_min_pmc(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Result<usize, OracleError> {
    guard(g)?;
    let n = g.n();
    if pairs.iter().any(|&(u, v)| g.has_edge(u, v)) {
        return Ok(usize::MAX);
    }
    fn assign(g: &Graph, pairs: &[(Vertex, Vertex)], k: usize, v: usize, used: usize, col: &mut [u32]) -> bool {
        if v == g.n() {
            return pairs.iter().all(|&(a, b)| col[a] & col[b] != 0);
        }
        let forbid = g.neighbors(v).iter().filter(|&&u| u < v).fold(0u32, |a, &u| a | col[u]);
        // new colours must be the next consecutive unused ones
        for fresh in 0..=(k - used) {
            let fresh_mask = ((1u32 << fresh) - 1) << used;
            for old in 0u32..(1 << used) {
                let s = old | fresh_mask;
                if s == 0 || s & forbid != 0 {
                    continue;
                }
                // a pair with an earlier vertex must share an already fixed colour
                if pairs.iter().any(|&(a, b)| {
                    let other = if a == v { b } else if b == v { a } else { return false };
                    other < v && col[other] & s == 0
                }) {
                    continue;
                }
                col[v] = s;
                if assign(g, pairs, k, v + 1, used + fresh, col) {
                    return true;
                }
            }
        }
        col[v] = 0;
        false
    }
    for k in 0..=n {
        if assign(g, pairs, k, 0, 0, &mut vec![0; n]) {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

pub fn oracle_pmc(g: &Graph, k: usize, pairs: &[(Vertex, Vertex)]) -> Result<bool, OracleError> {
    Ok(oracle_min_pmc(g, pairs)? <= k)
}

/// Size of a largest clique, by branch and bound (`n ≤ 64`).
pub fn clique_number(g: &Graph) -> usize {
    assert!(g.n() <= 64, "bitmask branch and bound limited to 64 vertices");
    let r = rows(g);
    fn expand(r: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            expand(r, size + 1, rest & r[v], best);
        }
    }
    let mut best = 0;
    let all = if g.n() == 0 { 0 } else { u64::MAX >> (64 - g.n()) };
    expand(&r, 0, all, &mut best);
    best
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Largest minimum degree over all nonempty induced subgraphs (`n ≤ 16`).
pub fn degeneracy_brute(g: &Graph) -> usize {
    assert!(g.n() <= 16);
    let r = rows(g);
    (1u64..1 << g.n())
        .map(|s| to_vec(s).iter().map(|&v| (r[v] & s).count_ones() as usize).min().unwrap_or(0))
        .max()
        .unwrap_or(0)
}
