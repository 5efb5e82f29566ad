//! The forest graph operator on finite simple graphs.
//!
//! `F(G)` has the maximal forests of `G` as vertices, two forests being adjacent when
//! they differ by a single edge exchange. The crate enumerates and counts maximal
//! forests, builds `F(G)` with its exchange metric, iterates the operator and
//! classifies convergence, searches for roots and depth certificates, and implements
//! the Whitney 2-operations that leave the forest family unchanged.

pub mod corpus;
pub mod dynamics;
pub mod error;
pub mod forest;
pub mod forest_graph;
pub mod graph;
pub mod io;
pub mod roots;
pub mod verify;
pub mod whitney;

pub use error::{Error, ForestCount, Result};
pub use forest::{ForestFamily, MaximalForest};
pub use forest_graph::ForestGraph;
pub use graph::{Cycle, EdgeSubset, Graph};
