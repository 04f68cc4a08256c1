//! Graph-class recognisers: complete multipartite, simplicial vertices and
//! chordality, exact `k`-colouring.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// The parts of `g` if it is complete multipartite (equivalently `K_3^{--}`-free),
/// ordered by their lowest vertex.
pub fn complete_multipartite_parts(g: &Graph) -> Option<Vec<VertexSet>> {
    // Non-adjacency must be an equivalence relation; its classes are the parts.
    let all = g.vertices();
    let mut parts = Vec::new();
    let mut unseen = all;
    while let Some(v) = unseen.first() {
        let part = all.difference(g.neighbors(v));
        if !g.is_independent(&part) {
            return None;
        }
        if part.iter().any(|u| all.difference(g.neighbors(u)) != part) {
            return None;
        }
        unseen = unseen.difference(&part);
        parts.push(part);
    }
    Some(parts)
}

/// Lowest vertex of `within` whose neighbourhood inside `within` is a clique.
pub fn find_simplicial_in(g: &Graph, within: &VertexSet) -> Option<usize> {
    within
        .iter()
        .find(|&v| g.is_clique(&g.neighbors(v).intersection(within)))
}

pub fn find_simplicial(g: &Graph) -> Option<usize> {
    find_simplicial_in(g, &g.vertices())
}

/// A perfect elimination ordering built by repeatedly removing the lowest
/// simplicial vertex, or `None` if `g` is not chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut remaining = g.vertices();
    let mut order = Vec::with_capacity(g.vertex_count());
    while !remaining.is_empty() {
        let v = find_simplicial_in(g, &remaining)?;
        order.push(v);
        remaining.remove(v);
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// An exact proper colouring with colours `0..k`, if one exists.
///
/// Vertices are coloured in index order, lowest colour first; a vertex never
/// opens more than one new colour, which removes colour-permutation symmetry.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn rec(g: &Graph, k: usize, v: usize, used: usize, classes: &mut [VertexSet], colour: &mut [usize]) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if classes[c].intersects(g.neighbors(v)) {
                continue;
            }
            classes[c].insert(v);
            colour[v] = c;
            if rec(g, k, v + 1, used.max(c + 1), classes, colour) {
                return true;
            }
            classes[c].remove(v);
        }
        false
    }
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut classes = vec![VertexSet::EMPTY; k];
    let mut colour = vec![0; n];
    rec(g, k, 0, 0, &mut classes, &mut colour).then_some(colour)
}

/// Colour classes `V_0, ..., V_{k-1}` of a colouring vector.
pub fn color_classes(coloring: &[usize], k: usize) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::EMPTY; k];
    for (v, &c) in coloring.iter().enumerate() {
        classes[c].insert(v);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{contains_induced, find_clique_in, PatternId};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;


    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn multipartite_examples() {
        let k22 = Graph::complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(complete_multipartite_parts(&k22), Some(vec![set(&[0, 1]), set(&[2, 3])]));
        // P3 = K_{1,2}: the middle vertex is its own part.
        let p3 = Graph::path(3).unwrap();
        assert_eq!(complete_multipartite_parts(&p3), Some(vec![set(&[0, 2]), set(&[1])]));
        assert_eq!(complete_multipartite_parts(&Graph::cycle(6).unwrap()), None);
        assert_eq!(
            complete_multipartite_parts(&Graph::empty(3).unwrap()),
            Some(vec![set(&[0, 1, 2])])
        );
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(find_simplicial(&Graph::path(3).unwrap()), Some(0));
        assert_eq!(find_simplicial(&Graph::cycle(4).unwrap()), None);
        assert_eq!(find_simplicial(&Graph::complete(4).unwrap()), Some(0));
    }

    #[test]
    fn chordal_examples() {
        let tree = Graph::new(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(perfect_elimination_order(&tree).unwrap().len(), 6);
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        // Square of a path: an interval graph.
        let mut p2 = Graph::path(7).unwrap();
        for i in 0..5 {
            p2.add_edge(i, i + 2).unwrap();
        }
        assert!(is_chordal(&p2));
    }

    #[test]
    fn coloring_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(k_coloring(&c5, 2), None);
        let col = k_coloring(&c5, 3).unwrap();
        assert!(c5.edges().iter().all(|&(u, v)| col[u] != col[v]));
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k_coloring(&k33, 2), Some(vec![0, 0, 0, 1, 1, 1]));
        assert_eq!(k_coloring(&Graph::empty(0).unwrap(), 0), Some(vec![]));
        assert_eq!(k_coloring(&Graph::empty(1).unwrap(), 0), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn multipartite_iff_k3_minus_minus_free(g in arb_graph(8)) {
            let brute_free = contains_induced(&g, PatternId::TwoIsolatedPlusEdge).unwrap().is_none();
            let parts = complete_multipartite_parts(&g);
            prop_assert_eq!(parts.is_some(), brute_free);
            if let Some(parts) = parts {
                let total: usize = parts.iter().map(VertexSet::len).sum();
                prop_assert_eq!(total, g.vertex_count());
                for (i, a) in parts.iter().enumerate() {
                    prop_assert!(g.is_independent(a));
                    for b in &parts[i + 1..] {
                        for u in a.iter() {
                            prop_assert!(b.is_subset(g.neighbors(u)));
                        }
                    }
                }
            }
        }

        #[test]
        fn peo_suffix_property(g in arb_graph(9)) {
            let has_long_hole = (4..=g.vertex_count())
                .any(|s| contains_induced(&g, PatternId::Cycle(s)).unwrap().is_some());
            let order = perfect_elimination_order(&g);
            prop_assert_eq!(order.is_some(), !has_long_hole);
            if let Some(order) = order {
                for (i, &v) in order.iter().enumerate() {
                    let later: VertexSet = order[i + 1..].iter().copied().collect();
                    prop_assert!(g.is_clique(&g.neighbors(v).intersection(&later)));
                }
            }
        }

        #[test]
        fn coloring_is_proper_and_exact(g in arb_graph(8), k in 0usize..5) {
            let omega = (1..=g.vertex_count())
                .take_while(|&r| find_clique_in(&g, &g.vertices(), r).is_some())
                .last()
                .unwrap_or(0);
            match k_coloring(&g, k) {
                Some(col) => {
                    prop_assert!(col.iter().all(|&c| c < k));
                    prop_assert!(g.edges().iter().all(|&(u, v)| col[u] != col[v]));
                }
                None => {
                    // Brute force over all k^n assignments.
                    let n = g.vertex_count() as u32;
                    let total = (k as u64).pow(n);
                    let any = (0..total).any(|mut code| {
                        let col: Vec<u64> = (0..n).map(|_| { let c = code % k as u64; code /= k as u64; c }).collect();
                        g.edges().iter().all(|&(u, v)| col[u] != col[v])
                    });
                    prop_assert!(!any);
                }
            }
            if k < omega {
                prop_assert!(k_coloring(&g, k).is_none());
            }
        }
    }
}
