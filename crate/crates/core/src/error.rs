use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("({x}, {y}) is not an edge")]
    NotAnEdge { x: Vertex, y: Vertex },
    #[error("clique {clique} does not represent both {x} and {y}")]
    NotRepresented { clique: usize, x: Vertex, y: Vertex },
    #[error("clique index {0} out of range")]
    NoSuchClique(usize),
    #[error("undo does not match the top of the journal")]
    JournalMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("reduced solution is invalid: {0}")]
    InvalidReduced(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("edge ({0}, {1}) lies in no clique of the cover")]
    UncoveredEdge(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle limited to n <= {limit}, got n = {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("pair ({0}, {1}) is an edge")]
    AdjacentPair(Vertex, Vertex),
    #[error("pair ({0}, {1}) is not an edge")]
    MissingEdge(Vertex, Vertex),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("weight for edge ({0}, {1}) missing")]
    MissingWeight(Vertex, Vertex),
    #[error("weight must be positive: {0}")]
    NonPositiveWeight(String),
    #[error("weight is not an integer: {0}")]
    NonIntegerWeight(String),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ParseError {
    pub(crate) fn at(line: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax { line, msg: msg.into() }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Graph { line, .. } => Some(*line),
            ParseError::Io(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("engine {engine} does not solve {problem}")]
pub struct UnsupportedEngine {
    pub engine: &'static str,
    pub problem: &'static str,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("config lists no engines")]
    NoEngines,
    #[error("config lists no instances")]
    NoInstances,
    #[error("{path}: {source}")]
    Graph { path: String, source: ParseError },
    #[error(transparent)]
    Pool(#[from] rayon::ThreadPoolBuildError),
}
