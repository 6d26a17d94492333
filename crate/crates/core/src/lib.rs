//! Degree-sequence conditions for edge-connectivity of r-uniform hypergraphs,
//! with exhaustive realization oracles and extremal constructions.

pub mod cli;
pub mod combinatorics;
pub mod conditions;
pub mod degseq;
pub mod error;
pub mod extremal;
mod flow;
pub mod hypergraph;
pub mod realizations;

pub use conditions::{check, Mode, TheoremId, Verdict};
pub use degseq::DegreeSequence;
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
