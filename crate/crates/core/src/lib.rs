//! Structural parameters of König-Egerváry graphs.
//!
//! The library computes the stability number α, matching number μ, the core
//! and its complement-side counterpart (the anticore), α-critical and
//! μ-critical edges, and the derived reduced graph `G0 = G - N[core(G)]`. The
//! [`harness`] module turns known statements about these quantities into
//! executable checks and fuzzes them on generated graphs.

pub mod criticality;
pub mod edgelist;
mod error;
pub mod graph;
pub mod harness;
pub mod ke;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, Matching, VertexSet};
pub use solvers::Limits;
