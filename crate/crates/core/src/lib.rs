//! Exact parameterized solvers for clique cover problems: edge clique cover,
//! assignment clique cover, weighted edge clique partition, exact weighted
//! clique decomposition, link-respected vertex clique cover and pairwise
//! mutual colourability.

pub mod bench;
pub mod cli;
pub mod cliques;
pub mod cover_state;
pub mod degeneracy;
pub mod drivers;
pub mod error;
pub mod f1;
pub mod f2;
pub mod fixtures;
pub mod graph;
pub mod instance;
pub mod io;
pub mod lp;
pub mod oracle;
pub mod reduction;
pub mod verify;

pub use graph::{EdgeId, Graph, Vertex};
