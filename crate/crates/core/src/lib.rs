//! Rainbow independent sets: exact solvers, the constructive algorithms behind
//! the known upper bounds, extremal constructions, reduction machinery and an
//! exact calculator for `f_G(n, m)`.

pub mod bitset;
pub mod constructions;
pub mod dag;
pub mod enumerate;
pub mod digraph;
pub mod family;
pub mod fcalc;
pub mod graph;
pub mod pattern;
pub mod recognize;
pub mod repeating;
pub mod sample;
pub mod solver;
pub mod sunflower;
pub mod witness;

#[cfg(test)]
mod testutil;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use digraph::{Digraph, DigraphError};
pub use family::{ColoredFamily, FamilyError, RainbowSelection, SelectionError};
pub use graph::{Graph, GraphError};
pub use pattern::{contains_induced, PatternError, PatternId};
pub use solver::{brute_rainbow, find_rainbow, greedy_maximal_rainbow, max_rainbow_size};
