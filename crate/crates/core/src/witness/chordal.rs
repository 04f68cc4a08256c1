use crate::bitset::VertexSet;
use crate::family::{ColoredFamily, RainbowSelection};
use crate::recognize::find_simplicial_in;

use super::{require_sets, require_sizes, WitnessError};

/// A rainbow independent `m`-set from the first `m` sets (each of size at
/// least `m`) of a family in a chordal graph.
///
/// Each step works inside the union `V` of the remaining sets, takes the
/// lowest vertex `v` simplicial in `G[V]`, gives it to the last remaining set
/// containing it and deletes `N[v]`. Since `N[v]` is a clique in `G[V]`, every
/// other set loses at most one vertex.
pub fn chordal_rainbow(family: &ColoredFamily, m: usize) -> Result<RainbowSelection, WitnessError> {
    require_sets(family.len(), m)?;
    require_sizes(family.sets()[..m].iter().map(VertexSet::len), m)?;
    let g = family.host();
    let mut remaining: Vec<(usize, VertexSet)> = family.sets()[..m].iter().copied().enumerate().collect();
    let mut assignments = Vec::with_capacity(m);
    while !remaining.is_empty() {
        let union = remaining.iter().fold(VertexSet::EMPTY, |acc, (_, s)| acc.union(s));
        let v = find_simplicial_in(g, &union).ok_or(WitnessError::NotChordal { remaining: union })?;
        let local = g.neighbors(v).intersection(&union);
        assert!(g.is_clique(&local), "vertex {v} must be simplicial in the current graph");
        let pos = remaining
            .iter()
            .rposition(|(_, s)| s.contains(v))
            .expect("v lies in the union of the remaining sets");
        let (color, _) = remaining.remove(pos);
        assignments.push((color, v));
        let closed = g.closed_neighbors(v);
        for (_, s) in &mut remaining {
            *s = s.difference(&closed);
        }
    }
    debug_assert_eq!(assignments.len(), m);
    Ok(RainbowSelection::new(assignments))
}
