//! Constructive algorithms that produce rainbow independent sets under the
//! hypotheses of the known upper bounds. Each detects a violated hypothesis
//! instead of returning a wrong answer.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::pattern::PatternId;

mod chordal;
mod clawfree;
mod colourable;
mod degree;
mod ramsey;
mod repeating;

pub use chordal::chordal_rainbow;
pub use clawfree::{clawfree_rainbow, cliquepartition_rainbow};
pub use colourable::{colourable_rainbow, staircase_colourable_rainbow};
pub use degree::{degree2_rainbow, maxdeg_rainbow_pair};
pub use ramsey::ramsey_maximal_rainbow;
pub use repeating::{repeating_diag_rainbow, DiagMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("the graph contains an induced {pattern} on {witness}")]
    PatternFound { pattern: PatternId, witness: VertexSet },
    #[error("no simplicial vertex among {remaining}; the graph is not chordal")]
    NotChordal { remaining: VertexSet },
    #[error("the colouring gives both ends of edge {u}-{v} the same colour")]
    ImproperColoring { u: usize, v: usize },
    #[error("vertex {vertex} has degree {degree}, above the bound {bound}")]
    DegreeTooHigh { vertex: usize, degree: usize, bound: usize },
    #[error("need at least {need} sets, got {have}")]
    TooFewSets { need: usize, have: usize },
    #[error("colour {color} has {size} vertices, need at least {need}")]
    SetTooSmall { color: usize, size: usize, need: usize },
    #[error("invalid parameters: {0}")]
    Precondition(String),
    #[error("{image} has no independent {m}-set and no {r}-clique, so {bound} is not a valid Ramsey bound")]
    RamseyBoundTooSmall { image: VertexSet, m: usize, r: usize, bound: usize },
}

fn require_sets(have: usize, need: usize) -> Result<(), WitnessError> {
    if have < need {
        return Err(WitnessError::TooFewSets { need, have });
    }
    Ok(())
}

fn require_sizes(sizes: impl IntoIterator<Item = usize>, need: usize) -> Result<(), WitnessError> {
    for (color, size) in sizes.into_iter().enumerate() {
        if size < need {
            return Err(WitnessError::SetTooSmall { color, size, need });
        }
    }
    Ok(())
}

fn require_max_degree(g: &crate::graph::Graph, bound: usize) -> Result<(), WitnessError> {
    match g.vertices().iter().find(|&v| g.degree(v) > bound) {
        Some(vertex) => Err(WitnessError::DegreeTooHigh {
            vertex,
            degree: g.degree(vertex),
            bound,
        }),
        None => Ok(()),
    }
}
