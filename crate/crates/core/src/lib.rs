//! Almost self-centered (ASC) graphs: verification, embedding constructions,
//! sufficient-condition checkers for diameter-2 graphs, and an exhaustive
//! solver for the r-ASC index θ_r(G) of small graphs.
//!
//! A connected graph is r-ASC when its radius is r and exactly two vertices
//! are non-central. θ_r(G) is the least number of vertices that must be added
//! to G to obtain an r-ASC graph containing G as an induced subgraph.

pub mod analysis;
pub mod bench;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod par;
pub mod report;
pub mod solver;

pub use error::{Error, ParseError, Result};
pub use graph::{combine, induced_check, CombineOp, Graph};
