//! Text formats: DIMACS `.col`, plain edge lists, weight files, pair files.
//!
//! Edge lists are 0-based `u v` lines; a line holding a single integer fixes
//! the vertex count (otherwise it is one more than the largest id). DIMACS
//! ids are 1-based and converted on input. Weight files hold `u v w` lines for
//! edges and `v s W` lines for annotated vertices, ids 0-based. Lines starting
//! with `c` or `#` are comments everywhere.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;
use crate::graph::{Graph, Vertex};
use crate::instance::{rational_string, Weights};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl GraphFormat {
    /// `.col` and `.dimacs` files are DIMACS, everything else an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col") | Some("dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with('c') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn id(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::at(line, format!("expected a vertex id, found {tok:?}")))
}

pub fn parse_graph(path: &Path, format: GraphFormat) -> Result<Graph, ParseError> {
    let text = fs::read_to_string(path)?;
    match format {
        GraphFormat::Dimacs => parse_dimacs(&text),
        GraphFormat::EdgeList => parse_edge_list(&text),
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (ln, tok) in lines(text) {
        match tok[0] {
            "p" => {
                if n.is_some() {
                    return Err(ParseError::at(ln, "duplicate problem line"));
                }
                if tok.len() != 4 || tok[1] != "edge" && tok[1] != "col" {
                    return Err(ParseError::at(ln, "expected 'p edge <n> <m>'"));
                }
                n = Some(id(tok[2], ln)?);
                id(tok[3], ln)?;
            }
            "e" => {
                let nn = n.ok_or_else(|| ParseError::at(ln, "edge before problem line"))?;
                if tok.len() != 3 {
                    return Err(ParseError::at(ln, "expected 'e <u> <v>'"));
                }
                let (u, v) = (id(tok[1], ln)?, id(tok[2], ln)?);
                if u == 0 || v == 0 || u > nn || v > nn {
                    return Err(ParseError::at(ln, format!("vertex out of range 1..{nn} in ({u}, {v})")));
                }
                if u == v {
                    return Err(ParseError::at(ln, format!("self-loop on {u}")));
                }
                edges.push((ln, u - 1, v - 1));
            }
            other => return Err(ParseError::at(ln, format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| ParseError::at(0, "missing problem line"))?;
    build(n, edges)
}

fn build(n: usize, edges: Vec<(usize, Vertex, Vertex)>) -> Result<Graph, ParseError> {
    for &(ln, u, v) in &edges {
        if u == v || u >= n || v >= n {
            let source = Graph::new(n, [(u, v)]).unwrap_err();
            return Err(ParseError::Graph { line: ln, source });
        }
    }
    Ok(Graph::new(n, edges.into_iter().map(|(_, u, v)| (u, v))).expect("checked above"))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (ln, tok) in lines(text) {
        match tok.len() {
            1 => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(ParseError::at(ln, "vertex count must come first and only once"));
                }
                declared = Some(id(tok[0], ln)?);
            }
            2 => {
                let (u, v) = (id(tok[0], ln)?, id(tok[1], ln)?);
                max_id = Some(max_id.unwrap_or(0).max(u).max(v));
                edges.push((ln, u, v));
            }
            _ => return Err(ParseError::at(ln, "expected 'u v'")),
        }
    }
    let n = declared.unwrap_or(max_id.map_or(0, |m| m + 1));
    build(n, edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn serialize_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Parses `12`, `-3`, `7.5`, `0.125` or `3/4` into an exact rational.
pub fn parse_rational(tok: &str) -> Option<BigRational> {
    if let Some((p, q)) = tok.split_once('/') {
        let p: BigInt = p.parse().ok()?;
        let q: BigInt = q.parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let r = BigRational::new(numer, denom);
    Some(if neg { -r } else { r })
}

fn weight(tok: &str, ln: usize) -> Result<BigRational, ParseError> {
    let w = parse_rational(tok).ok_or_else(|| ParseError::at(ln, format!("bad weight {tok:?}")))?;
    if !w.is_positive() {
        return Err(ParseError::at(ln, format!("weight must be positive, found {tok}")));
    }
    Ok(w)
}

pub fn parse_weights(text: &str) -> Result<Weights, ParseError> {
    let mut w = Weights::default();
    for (ln, tok) in lines(text) {
        if tok.len() != 3 {
            return Err(ParseError::at(ln, "expected 'u v w' or 'v s W'"));
        }
        if tok[1] == "s" {
            let v = id(tok[0], ln)?;
            if w.vertices.insert(v, weight(tok[2], ln)?).is_some() {
                return Err(ParseError::at(ln, format!("duplicate weight for vertex {v}")));
            }
        } else {
            let (u, v) = (id(tok[0], ln)?, id(tok[1], ln)?);
            if u == v {
                return Err(ParseError::at(ln, format!("self-loop on {u}")));
            }
            if w.edges.insert((u.min(v), u.max(v)), weight(tok[2], ln)?).is_some() {
                return Err(ParseError::at(ln, format!("duplicate weight for ({u}, {v})")));
            }
        }
    }
    Ok(w)
}

pub fn read_weights(path: &Path) -> Result<Weights, ParseError> {
    parse_weights(&fs::read_to_string(path)?)
}

fn weight_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        rational_string(x)
    }
}

pub fn serialize_weights(w: &Weights) -> String {
    let mut s = String::new();
    for (&(u, v), x) in &w.edges {
        writeln!(s, "{u} {v} {}", weight_string(x)).unwrap();
    }
    for (&v, x) in &w.vertices {
        writeln!(s, "{v} s {}", weight_string(x)).unwrap();
    }
    s
}

/// One `u v` pair per line, 0-based.
pub fn parse_pairs(text: &str) -> Result<Vec<(Vertex, Vertex)>, ParseError> {
    lines(text)
        .map(|(ln, tok)| {
            if tok.len() != 2 {
                return Err(ParseError::at(ln, "expected 'u v'"));
            }
            Ok((id(tok[0], ln)?, id(tok[1], ln)?))
        })
        .collect()
}

pub fn read_pairs(path: &Path) -> Result<Vec<(Vertex, Vertex)>, ParseError> {
    parse_pairs(&fs::read_to_string(path)?)
}
