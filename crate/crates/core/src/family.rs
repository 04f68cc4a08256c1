//! Coloured families of independent sets and rainbow selections over them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("colour {color}: vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { color: usize, vertex: usize, n: usize },
    #[error("colour {color}: set is not independent (edge {u}-{v})")]
    NotIndependent { color: usize, u: usize, v: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelectionError {
    #[error("colour {0} is used more than once")]
    RepeatedColor(usize),
    #[error("vertex {0} is used more than once")]
    RepeatedVertex(usize),
    #[error("colour {0} does not exist in the family")]
    ColorOutOfRange(usize),
    #[error("vertex {vertex} is not in the set of colour {color}")]
    NotMember { color: usize, vertex: usize },
    #[error("selected vertices {u} and {v} are adjacent")]
    NotIndependent { u: usize, v: usize },
}

/// An ordered list of independent sets (repeats allowed) over a host graph.
/// The position of a set in the list is its colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredFamily {
    host: Graph,
    sets: Vec<VertexSet>,
}

impl ColoredFamily {
    pub fn new(host: Graph, sets: Vec<VertexSet>) -> Result<Self, FamilyError> {
        let mut family = Self {
            host,
            sets: Vec::with_capacity(sets.len()),
        };
        for set in sets {
            family.push(set)?;
        }
        Ok(family)
    }

    /// Each `(set, copies)` pair contributes `copies` consecutive colours.
    pub fn repeated(host: Graph, blocks: &[(VertexSet, usize)]) -> Result<Self, FamilyError> {
        let sets = blocks
            .iter()
            .flat_map(|&(s, copies)| std::iter::repeat(s).take(copies))
            .collect();
        Self::new(host, sets)
    }

    pub fn push(&mut self, set: VertexSet) -> Result<(), FamilyError> {
        let color = self.sets.len();
        let n = self.host.vertex_count();
        if let Some(vertex) = set.iter().find(|&v| v >= n) {
            return Err(FamilyError::VertexOutOfRange { color, vertex, n });
        }
        for u in set.iter() {
            if let Some(v) = self.host.neighbors(u).intersection(&set).above(u).first() {
                return Err(FamilyError::NotIndependent { color, u, v });
            }
        }
        self.sets.push(set);
        Ok(())
    }

    /// A copy with one more colour appended.
    pub fn with_set(&self, set: VertexSet) -> Result<Self, FamilyError> {
        let mut f = self.clone();
        f.push(set)?;
        Ok(f)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn set(&self, color: usize) -> &VertexSet {
        &self.sets[color]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(VertexSet::len).collect()
    }

    /// The common set size, or `None` if the family is empty or mixed.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.sets.first()?.len();
        self.sets.iter().all(|s| s.len() == first).then_some(first)
    }

    pub fn union(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(s))
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let mut seen = VertexSet::EMPTY;
        for s in &self.sets {
            if s.intersects(&seen) {
                return false;
            }
            seen = seen.union(s);
        }
        true
    }

    /// The sets as plain vertex lists, for serialisation.
    pub fn set_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(VertexSet::to_vec).collect()
    }
}

/// On-disk family description. `graph` is either an inline edge list in the
/// graph text format (starting with `p `) or a path to a graph file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub graph: String,
    pub sets: Vec<Vec<usize>>,
}

impl FamilyFile {
    pub fn is_inline(&self) -> bool {
        self.graph.trim_start().starts_with("p ")
    }

    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        self.sets.iter().map(|s| s.iter().copied().collect()).collect()
    }
}

/// Colour/vertex pairs chosen by a rainbow search.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RainbowSelection {
    pub assignments: Vec<(usize, usize)>,
}

impl RainbowSelection {
    pub fn new(mut assignments: Vec<(usize, usize)>) -> Self {
        assignments.sort_unstable();
        Self { assignments }
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn image(&self) -> VertexSet {
        self.assignments.iter().map(|&(_, v)| v).collect()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.assignments.iter().map(|&(c, _)| c).collect()
    }

    /// Checks every selection invariant against `family` using only pairwise
    /// adjacency lookups.
    pub fn validate(&self, family: &ColoredFamily) -> Result<(), SelectionError> {
        self.validate_choice(family)?;
        let g = family.host();
        for (i, &(_, v)) in self.assignments.iter().enumerate() {
            for &(_, v2) in &self.assignments[..i] {
                if g.has_edge(v, v2) {
                    return Err(SelectionError::NotIndependent { u: v2.min(v), v: v2.max(v) });
                }
            }
        }
        Ok(())
    }

    /// Checks that this is a partial choice function with distinct values,
    /// without requiring the image to be independent.
    pub fn validate_choice(&self, family: &ColoredFamily) -> Result<(), SelectionError> {
        for (i, &(c, v)) in self.assignments.iter().enumerate() {
            if c >= family.len() {
                return Err(SelectionError::ColorOutOfRange(c));
            }
            if !family.set(c).contains(v) {
                return Err(SelectionError::NotMember { color: c, vertex: v });
            }
            for &(c2, v2) in &self.assignments[..i] {
                if c2 == c {
                    return Err(SelectionError::RepeatedColor(c));
                }
                if v2 == v {
                    return Err(SelectionError::RepeatedVertex(v));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn rejects_dependent_and_out_of_range_sets() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            ColoredFamily::new(c4.clone(), vec![set(&[0, 2]), set(&[0, 1])]),
            Err(FamilyError::NotIndependent { color: 1, u: 0, v: 1 })
        );
        assert_eq!(
            ColoredFamily::new(c4, vec![set(&[5])]),
            Err(FamilyError::VertexOutOfRange { color: 0, vertex: 5, n: 4 })
        );
    }

    #[test]
    fn repeated_blocks_and_sizes() {
        let c4 = Graph::cycle(4).unwrap();
        let f = ColoredFamily::repeated(c4, &[(set(&[0, 2]), 2), (set(&[1]), 1)]).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.sizes(), vec![2, 2, 1]);
        assert_eq!(f.uniform_size(), None);
        assert!(!f.pairwise_disjoint());
        assert_eq!(f.union(), set(&[0, 1, 2]));
    }

    #[test]
    fn selection_validation() {
        let p3 = Graph::path(3).unwrap();
        let f = ColoredFamily::new(p3, vec![set(&[0, 2]), set(&[0, 2]), set(&[1])]).unwrap();
        assert_eq!(RainbowSelection::new(vec![(1, 2), (0, 0)]).validate(&f), Ok(()));
        assert_eq!(
            RainbowSelection::new(vec![(0, 0), (0, 2)]).validate(&f),
            Err(SelectionError::RepeatedColor(0))
        );
        assert_eq!(
            RainbowSelection::new(vec![(0, 0), (1, 0)]).validate(&f),
            Err(SelectionError::RepeatedVertex(0))
        );
        assert_eq!(
            RainbowSelection::new(vec![(0, 1)]).validate(&f),
            Err(SelectionError::NotMember { color: 0, vertex: 1 })
        );
        assert_eq!(
            RainbowSelection::new(vec![(0, 0), (2, 1)]).validate(&f),
            Err(SelectionError::NotIndependent { u: 0, v: 1 })
        );
        assert_eq!(
            RainbowSelection::new(vec![(7, 0)]).validate(&f),
            Err(SelectionError::ColorOutOfRange(7))
        );
    }

    #[test]
    fn family_file_round_trip() {
        let file = FamilyFile {
            graph: "p 2 1\ne 0 1\n".into(),
            sets: vec![vec![0], vec![1]],
        };
        assert!(file.is_inline());
        let json = serde_json::to_string(&file).unwrap();
        assert_eq!(serde_json::from_str::<FamilyFile>(&json).unwrap(), file);
        assert!(!FamilyFile { graph: "c6.graph".into(), sets: vec![] }.is_inline());
    }
}
