//! Induced-subgraph detection for the small pattern families that appear as
//! forbidden subgraphs: cliques, cliques minus an edge, `K_3^{--}`, stars and cycles.
//!
//! Each family has its own specialised search; there is no general subgraph
//! isomorphism here.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Patterns with more vertices than this are rejected.
pub const MAX_PATTERN_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "snake_case")]
pub enum PatternId {
    /// `K_r`, `r >= 2`.
    CompleteK(usize),
    /// `K_r^-`: `K_r` with one edge deleted, `r >= 2`.
    CompleteMinusEdge(usize),
    /// `K_3^{--}`: three vertices spanning exactly one edge.
    TwoIsolatedPlusEdge,
    /// The star `K_{1,t}`, `t >= 1`; `Star(3)` is the claw.
    Star(usize),
    /// The cycle `C_s`, `s >= 3`.
    Cycle(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern {0} has order {1}, above the supported maximum {MAX_PATTERN_ORDER}")]
    UnsupportedOrder(PatternId, usize),
    #[error("pattern {0} has an invalid parameter")]
    InvalidParameter(PatternId),
}

impl PatternId {
    pub fn order(&self) -> usize {
        match *self {
            PatternId::CompleteK(r) | PatternId::CompleteMinusEdge(r) => r,
            PatternId::TwoIsolatedPlusEdge => 3,
            PatternId::Star(t) => t + 1,
            PatternId::Cycle(s) => s,
        }
    }

    fn validate(&self) -> Result<(), PatternError> {
        let ok = match *self {
            PatternId::CompleteK(r) | PatternId::CompleteMinusEdge(r) => r >= 2,
            PatternId::TwoIsolatedPlusEdge => true,
            PatternId::Star(t) => t >= 1,
            PatternId::Cycle(s) => s >= 3,
        };
        if !ok {
            return Err(PatternError::InvalidParameter(*self));
        }
        if self.order() > MAX_PATTERN_ORDER {
            return Err(PatternError::UnsupportedOrder(*self, self.order()));
        }
        Ok(())
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternId::CompleteK(r) => write!(f, "K{r}"),
            PatternId::CompleteMinusEdge(r) => write!(f, "K{r}-"),
            PatternId::TwoIsolatedPlusEdge => write!(f, "K3--"),
            PatternId::Star(t) => write!(f, "K1,{t}"),
            PatternId::Cycle(s) => write!(f, "C{s}"),
        }
    }
}

/// Returns a vertex set inducing `pattern` in `g`, or `None` if `g` is pattern-free.
pub fn contains_induced(g: &Graph, pattern: PatternId) -> Result<Option<VertexSet>, PatternError> {
    pattern.validate()?;
    Ok(match pattern {
        PatternId::CompleteK(r) => find_clique_in(g, &g.vertices(), r),
        PatternId::CompleteMinusEdge(r) => find_clique_minus_edge(g, r),
        PatternId::TwoIsolatedPlusEdge => find_k3_minus_minus(g),
        PatternId::Star(t) => find_star(g, t),
        PatternId::Cycle(s) => find_induced_cycle(g, s),
    })
}

/// Lexicographically first clique of size `r` inside `within`.
pub fn find_clique_in(g: &Graph, within: &VertexSet, r: usize) -> Option<VertexSet> {
    fn rec(g: &Graph, chosen: VertexSet, candidates: VertexSet, left: usize) -> Option<VertexSet> {
        if left == 0 {
            return Some(chosen);
        }
        for v in candidates.iter() {
            let rest = candidates.above(v).intersection(g.neighbors(v));
            if rest.len() + 1 < left {
                continue;
            }
            let mut next = chosen;
            next.insert(v);
            if let Some(found) = rec(g, next, rest, left - 1) {
                return Some(found);
            }
        }
        None
    }
    // Degree filter: a vertex in an r-clique has at least r-1 neighbours.
    let eligible: VertexSet = within
        .intersection(&g.vertices())
        .iter()
        .filter(|&v| g.neighbors(v).intersection(within).len() + 1 >= r)
        .collect();
    rec(g, VertexSet::EMPTY, eligible, r)
}

fn find_clique_minus_edge(g: &Graph, r: usize) -> Option<VertexSet> {
    // A non-adjacent pair u < v whose common neighbourhood holds an (r-2)-clique.
    let n = g.vertex_count();
    for u in 0..n {
        if g.degree(u) + 2 < r {
            continue;
        }
        let non_adjacent = g.vertices().above(u).difference(g.neighbors(u));
        for v in non_adjacent.iter() {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if let Some(mut core) = find_clique_in(g, &common, r - 2) {
                core.insert(u);
                core.insert(v);
                return Some(core);
            }
        }
    }
    None
}

fn find_k3_minus_minus(g: &Graph) -> Option<VertexSet> {
    for (u, v) in g.edges() {
        let far = g
            .vertices()
            .difference(&g.closed_neighbors(u))
            .difference(&g.closed_neighbors(v));
        if let Some(w) = far.first() {
            return Some([u, v, w].into_iter().collect());
        }
    }
    None
}

fn find_star(g: &Graph, t: usize) -> Option<VertexSet> {
    (0..g.vertex_count())
        .filter(|&c| g.degree(c) >= t)
        .find_map(|c| {
            g.first_independent_set_in(g.neighbors(c), t).map(|mut leaves| {
                leaves.insert(c);
                leaves
            })
        })
}

/// Returns the vertices of an induced cycle of length `s`, in cycle order,
/// starting from its smallest vertex.
pub fn find_induced_cycle_ordered(g: &Graph, s: usize) -> Option<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, blocked: VertexSet, s: usize) -> bool {
        let i = path.len();
        let start = path[0];
        let last = path[i - 1];
        let mut candidates = g.neighbors(last).above(start).difference(&blocked);
        if i == s - 1 {
            candidates = candidates.intersection(g.neighbors(start));
        } else if i >= 2 {
            candidates = candidates.difference(g.neighbors(start));
        }
        for v in candidates.iter() {
            path.push(v);
            if i + 1 == s {
                return true;
            }
            // `blocked` holds the start and N[p_j] for interior path vertices other
            // than the newest two; the start is handled separately above.
            let next_blocked = if i >= 2 {
                blocked.union(&g.closed_neighbors(last))
            } else {
                blocked
            };
            if extend(g, path, next_blocked, s) {
                return true;
            }
            path.pop();
        }
        false
    }
    if s < 3 {
        return None;
    }
    for start in 0..g.vertex_count() {
        if g.degree(start) < 2 {
            continue;
        }
        let mut path = vec![start];
        if extend(g, &mut path, VertexSet::singleton(start), s) {
            return Some(path);
        }
    }
    None
}

fn find_induced_cycle(g: &Graph, s: usize) -> Option<VertexSet> {
    find_induced_cycle_ordered(g, s).map(|c| c.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    /// Brute force: does `set` induce exactly the pattern?
    fn induces(g: &Graph, set: &VertexSet, p: PatternId) -> bool {
        let (h, _) = g.induced(set);
        let k = h.vertex_count();
        let degrees: Vec<usize> = (0..k).map(|v| h.degree(v)).collect();
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        match p {
            PatternId::CompleteK(r) => k == r && h.edge_count() == r * (r - 1) / 2,
            PatternId::CompleteMinusEdge(r) => k == r && h.edge_count() + 1 == r * (r - 1) / 2,
            PatternId::TwoIsolatedPlusEdge => k == 3 && h.edge_count() == 1,
            PatternId::Star(t) => {
                k == t + 1
                    && h.edge_count() == t
                    && (0..k).any(|c| h.degree(c) == t)
            }
            PatternId::Cycle(s) => {
                k == s && degrees.iter().all(|&d| d == 2) && h.components_in(&h.vertices()).len() == 1
            }
        }
    }

    fn brute(g: &Graph, p: PatternId) -> bool {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|b| b.count_ones() as usize == p.order())
            .any(|b| induces(g, &(0..n).filter(|v| b >> v & 1 == 1).collect(), p))
    }


    fn patterns() -> Vec<PatternId> {
        vec![
            PatternId::CompleteK(3),
            PatternId::CompleteK(4),
            PatternId::CompleteMinusEdge(3),
            PatternId::CompleteMinusEdge(4),
            PatternId::TwoIsolatedPlusEdge,
            PatternId::Star(2),
            PatternId::Star(3),
            PatternId::Cycle(3),
            PatternId::Cycle(4),
            PatternId::Cycle(5),
        ]
    }

    #[test]
    fn spec_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(contains_induced(&c6, PatternId::Cycle(4)).unwrap(), None);
        assert_eq!(
            contains_induced(&c6, PatternId::Cycle(6)).unwrap(),
            Some(c6.vertices())
        );
        let mut k4_minus = Graph::complete(4).unwrap();
        k4_minus.remove_edge(0, 1);
        assert_eq!(
            contains_induced(&k4_minus, PatternId::CompleteMinusEdge(4)).unwrap(),
            Some(k4_minus.vertices())
        );
    }

    #[test]
    fn rejects_bad_patterns() {
        let g = Graph::cycle(5).unwrap();
        assert!(matches!(
            contains_induced(&g, PatternId::CompleteK(11)),
            Err(PatternError::UnsupportedOrder(..))
        ));
        assert!(matches!(
            contains_induced(&g, PatternId::Cycle(2)),
            Err(PatternError::InvalidParameter(_))
        ));
        assert!(contains_induced(&g, PatternId::Star(0)).is_err());
    }

    #[test]
    fn cycle_order_is_a_cycle() {
        let g = Graph::cycle(7).unwrap();
        let c = find_induced_cycle_ordered(&g, 7).unwrap();
        for i in 0..7 {
            assert!(g.has_edge(c[i], c[(i + 1) % 7]));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_brute_force(g in arb_graph(8)) {
            for p in patterns() {
                let found = contains_induced(&g, p).unwrap();
                prop_assert_eq!(found.is_some(), brute(&g, p), "pattern {}", p);
                if let Some(w) = found {
                    prop_assert!(induces(&g, &w, p), "bad witness {} for {}", w, p);
                }
            }
        }

        #[test]
        fn invariant_under_relabelling(g in arb_graph(8), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.permuted(&perm);
            for p in patterns() {
                prop_assert_eq!(
                    contains_induced(&g, p).unwrap().is_some(),
                    contains_induced(&h, p).unwrap().is_some()
                );
            }
        }
    }
}
