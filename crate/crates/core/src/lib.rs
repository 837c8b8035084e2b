//! Construction and analysis of extremal triangle-free subgraphs of random
//! graphs: seeded G(n,p) / two-block samplers, the staged sparsify-blowup-
//! prune-purge pipeline, exact and heuristic distance-to-r-partite solvers,
//! and Monte Carlo checkers for the probabilistic regularity ingredients.

pub mod construction;
pub mod diagnostics;
pub mod edgelist;
pub mod error;
pub mod gadget;
pub mod graph;
pub mod partite;
pub mod random;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
