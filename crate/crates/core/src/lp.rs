//! Exact feasibility of `A γ = b, γ ≥ 0` for clique weights.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::LpError;
use crate::graph::Graph;
use crate::instance::AewcdInstance;

/// Equality system over `num_vars` nonnegative variables. Each row lists the
/// variables with coefficient one and its right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSystem {
    pub num_vars: usize,
    pub rows: Vec<(Vec<usize>, BigRational)>,
    /// Whether callers must drop zero-valued variables from a reported solution.
    pub strict: bool,
}

/// One row per edge (cliques containing it) and one per annotated vertex
/// (cliques containing it). Fails if some edge lies in no clique.
pub fn build_lp(cover: &[Vec<usize>], inst: &AewcdInstance) -> Result<LpSystem, LpError> {
    build_lp_parts(cover, &inst.graph, &inst.edge_weight, &inst.vertex_weight)
}

pub fn build_lp_parts(
    cover: &[Vec<usize>],
    g: &Graph,
    edge_weight: &[BigRational],
    vertex_weight: &[Option<BigRational>],
) -> Result<LpSystem, LpError> {
    let mut member = vec![Vec::new(); g.n()];
    for (i, c) in cover.iter().enumerate() {
        for &v in c {
            member[v].push(i);
        }
    }
    let mut rows = Vec::with_capacity(g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let inc: Vec<usize> = member[u].iter().copied().filter(|i| member[v].contains(i)).collect();
        if inc.is_empty() {
            return Err(LpError::UncoveredEdge(u, v));
        }
        rows.push((inc, edge_weight[e].clone()));
    }
    for (v, w) in vertex_weight.iter().enumerate() {
        if let Some(w) = w {
            rows.push((member[v].clone(), w.clone()));
        }
    }
    Ok(LpSystem { num_vars: cover.len(), rows, strict: true })
}

/// A nonnegative solution, or `None` if the system is infeasible.
///
/// Phase-one simplex with Bland's rule, so it always terminates; arithmetic
/// is exact.
pub fn lp_feasible(sys: &LpSystem) -> Option<Vec<BigRational>> {
    let k = sys.num_vars;
    let m = sys.rows.len();
    for (inc, rhs) in &sys.rows {
        if inc.is_empty() && !rhs.is_zero() {
            return None;
        }
    }
    // columns: k structural, m artificial, then rhs
    let cols = k + m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (r, (inc, rhs)) in sys.rows.iter().enumerate() {
        let sign = if rhs.is_negative() { -BigRational::one() } else { BigRational::one() };
        let mut row = vec![BigRational::zero(); cols + 1];
        for &j in inc {
            row[j] += &sign;
        }
        row[k + r] = BigRational::one();
        row[cols] = rhs * &sign;
        t.push(row);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();
    // objective row: minimise the artificials, expressed in nonbasic terms
    let mut obj = vec![BigRational::zero(); cols + 1];
    for row in &t {
        for j in 0..k {
            obj[j] -= &row[j];
        }
        obj[cols] -= &row[cols];
    }

    while let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // unbounded cannot happen: the phase-one objective is bounded below by 0
        let (lr, _) = leave.expect("phase one is bounded");
        pivot(&mut t, &mut obj, lr, enter);
        basis[lr] = enter;
    }

    if !obj[cols].is_zero() {
        return None;
    }
    let mut gamma = vec![BigRational::zero(); k];
    for (r, &b) in basis.iter().enumerate() {
        if b < k {
            gamma[b] = t[r][cols].clone();
        }
    }
    debug_assert!(satisfies(sys, &gamma));
    Some(gamma)
}

fn pivot(t: &mut [Vec<BigRational>], obj: &mut [BigRational], lr: usize, col: usize) {
    let p = t[lr][col].clone();
    for x in t[lr].iter_mut() {
        *x /= &p;
    }
    let prow = t[lr].clone();
    let eliminate = |row: &mut [BigRational]| {
        let f = row[col].clone();
        if !f.is_zero() {
            for (x, pv) in row.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *x -= &f * pv;
                }
            }
        }
    };
    for (r, row) in t.iter_mut().enumerate() {
        if r != lr {
            eliminate(row);
        }
    }
    eliminate(obj);
}

/// True if `gamma` is nonnegative and meets every row exactly.
pub fn satisfies(sys: &LpSystem, gamma: &[BigRational]) -> bool {
    gamma.len() == sys.num_vars
        && gamma.iter().all(|g| !g.is_negative())
        && sys.rows.iter().all(|(inc, rhs)| {
            let s: BigRational = inc.iter().map(|&j| &gamma[j]).sum();
            s == *rhs
        })
}

/// Integer `γ ∈ [1, wmax]^k` meeting every row, found by depth-first search
/// with partial-sum pruning. Rows with a non-integer right-hand side make the
/// system infeasible.
pub fn integer_gamma_search(sys: &LpSystem, wmax: u64) -> Option<Vec<u64>> {
    let mut rhs = Vec::with_capacity(sys.rows.len());
    for (inc, r) in &sys.rows {
        if !r.is_integer() || r.is_negative() {
            return None;
        }
        let v = r.to_integer().to_u64()?;
        if inc.is_empty() && v != 0 {
            return None;
        }
        rhs.push(v);
    }
    let k = sys.num_vars;
    let mut rows_of = vec![Vec::new(); k];
    // the variable that completes each row
    let mut last = vec![0usize; sys.rows.len()];
    for (r, (inc, _)) in sys.rows.iter().enumerate() {
        for &j in inc {
            rows_of[j].push(r);
            last[r] = last[r].max(j);
        }
    }
    let mut st = IntSearch {
        rows_of: &rows_of,
        last: &last,
        rhs: &rhs,
        remaining: sys.rows.iter().map(|(inc, _)| inc.len() as u64).collect(),
        sum: vec![0; sys.rows.len()],
        gamma: vec![0; k],
        wmax,
    };
    if st.dfs(0) {
        Some(st.gamma)
    } else {
        None
    }
}

struct IntSearch<'a> {
    rows_of: &'a [Vec<usize>],
    last: &'a [usize],
    rhs: &'a [u64],
    remaining: Vec<u64>,
    sum: Vec<u64>,
    gamma: Vec<u64>,
    wmax: u64,
}

impl IntSearch<'_> {
    fn dfs(&mut self, j: usize) -> bool {
        if j == self.gamma.len() {
            return true;
        }
        // every unassigned variable in a row contributes at least one
        let mut hi = self.wmax;
        for &r in &self.rows_of[j] {
            let slack = self.rhs[r].saturating_sub(self.sum[r] + self.remaining[r] - 1);
            hi = hi.min(slack);
        }
        for val in 1..=hi {
            let mut ok = true;
            for &r in &self.rows_of[j] {
                self.sum[r] += val;
                self.remaining[r] -= 1;
                if self.last[r] == j && self.sum[r] != self.rhs[r] {
                    ok = false;
                }
            }
            self.gamma[j] = val;
            if ok && self.dfs(j + 1) {
                return true;
            }
            for &r in &self.rows_of[j] {
                self.sum[r] -= val;
                self.remaining[r] += 1;
            }
        }
        self.gamma[j] = 0;
        false
    }
}

/// Integer vector as rationals.
pub fn to_rationals(v: &[u64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}
