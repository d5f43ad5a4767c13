//! Deciding whether a single edge contraction lowers the total domination number of
//! a graph: exact oracles, polynomial-time solvers for `H`-free classes, hardness
//! gadgets and the classifier for pattern graphs `H`.

pub mod cli;
pub mod cover;
pub mod gadgets;
pub mod dichotomy;
pub mod error;
pub mod generators;
pub mod graph;
pub mod induced;
pub mod lemmas;
pub mod oracle;
pub mod poly;

pub use cover::Budget;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
