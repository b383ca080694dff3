//! Polynomial-time checks of a solution against its problem statement.

use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use crate::graph::{Graph, Vertex};
use crate::instance::{rational_string, ProblemInstance, Solution};

/// The first violated clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violation {}

fn fail<T>(msg: impl Into<String>) -> Result<T, Violation> {
    Err(Violation(msg.into()))
}

fn check_cliques(g: &Graph, cliques: &[Vec<Vertex>], min_size: usize) -> Result<(), Violation> {
    for (i, c) in cliques.iter().enumerate() {
        if c.len() < min_size {
            return fail(format!("clique {i} has fewer than {min_size} vertices"));
        }
        if !g.is_clique(c) {
            return fail(format!("clique {i} {c:?} is not a clique"));
        }
    }
    Ok(())
}

fn count_cliques(k: usize, cliques: &[Vec<Vertex>]) -> Result<(), Violation> {
    if cliques.len() > k {
        return fail(format!("{} cliques exceed the limit {k}", cliques.len()));
    }
    Ok(())
}

fn containing<'a>(cliques: &'a [Vec<Vertex>], vs: &'a [Vertex]) -> impl Iterator<Item = usize> + 'a {
    cliques.iter().enumerate().filter(move |(_, c)| vs.iter().all(|v| c.contains(v))).map(|(i, _)| i)
}

fn check_edges_covered(g: &Graph, cliques: &[Vec<Vertex>]) -> Result<(), Violation> {
    for &(u, v) in g.edges() {
        if containing(cliques, &[u, v]).next().is_none() {
            return fail(format!("uncovered edge ({u}, {v})"));
        }
    }
    Ok(())
}

/// `Ok(())` if `sol` satisfies every clause of `problem`.
pub fn verify_solution(problem: &ProblemInstance, sol: &Solution) -> Result<(), Violation> {
    let cl = &sol.cliques;
    match problem {
        ProblemInstance::Ecc { graph, k } => {
            check_cliques(graph, cl, 1)?;
            check_edges_covered(graph, cl)?;
            count_cliques(*k, cl)
        }
        ProblemInstance::Acc { graph, t } => {
            check_cliques(graph, cl, 1)?;
            check_edges_covered(graph, cl)?;
            let a = sol.assignments();
            if a > *t {
                return fail(format!("{a} assignments exceed the budget {t}"));
            }
            Ok(())
        }
        ProblemInstance::Awecp(inst) => {
            let g = &inst.graph;
            check_cliques(g, cl, 2)?;
            count_cliques(inst.k, cl)?;
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let c = containing(cl, &[u, v]).count() as u64;
                if c != inst.edge_weight[e] {
                    return fail(format!("edge ({u}, {v}) in {c} cliques, expected {}", inst.edge_weight[e]));
                }
            }
            for (v, w) in inst.vertex_weight.iter().enumerate() {
                if let Some(w) = w {
                    let c = containing(cl, &[v]).count() as u64;
                    if c != *w {
                        return fail(format!("vertex {v} in {c} cliques, expected {w}"));
                    }
                }
            }
            Ok(())
        }
        ProblemInstance::Aewcd(inst) => {
            let g = &inst.graph;
            check_cliques(g, cl, 2)?;
            count_cliques(inst.k, cl)?;
            let Some(gamma) = &sol.gamma else { return fail("missing clique weights") };
            if gamma.len() != cl.len() {
                return fail(format!("{} weights for {} cliques", gamma.len(), cl.len()));
            }
            if let Some(i) = gamma.iter().position(|x| !x.is_positive()) {
                return fail(format!("weight of clique {i} is not positive"));
            }
            let sum = |vs: &[Vertex]| -> BigRational { containing(cl, vs).map(|i| &gamma[i]).sum() };
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let s = sum(&[u, v]);
                if s != inst.edge_weight[e] {
                    return fail(format!(
                        "sum mismatch on edge ({u}, {v}): {} != {}",
                        rational_string(&s),
                        rational_string(&inst.edge_weight[e])
                    ));
                }
            }
            for (v, w) in inst.annotated() {
                let s = sum(&[v]);
                if s != *w {
                    return fail(format!("sum mismatch on vertex {v}: {} != {}", rational_string(&s), rational_string(w)));
                }
            }
            Ok(())
        }
        ProblemInstance::Lrcc { graph, k, e_star } => {
            check_cliques(graph, cl, 1)?;
            count_cliques(*k, cl)?;
            for v in graph.vertices() {
                if containing(cl, &[v]).next().is_none() {
                    return fail(format!("uncovered vertex {v}"));
                }
            }
            for &(u, v) in e_star {
                if containing(cl, &[u, v]).next().is_none() {
                    return fail(format!("uncovered edge ({u}, {v})"));
                }
            }
            Ok(())
        }
        ProblemInstance::Pmc { graph, k, pairs } => {
            count_cliques(*k, cl)?;
            for (i, class) in cl.iter().enumerate() {
                for (a, &u) in class.iter().enumerate() {
                    if u >= graph.n() {
                        return fail(format!("vertex {u} out of range"));
                    }
                    if let Some(&v) = class[a + 1..].iter().find(|&&v| graph.has_edge(u, v)) {
                        return fail(format!("adjacent vertices {u} and {v} share colour {i}"));
                    }
                }
            }
            for v in graph.vertices() {
                if containing(cl, &[v]).next().is_none() {
                    return fail(format!("vertex {v} has no colour"));
                }
            }
            for &(u, v) in pairs {
                if containing(cl, &[u, v]).next().is_none() {
                    return fail(format!("pair ({u}, {v}) shares no colour"));
                }
            }
            Ok(())
        }
    }
}
