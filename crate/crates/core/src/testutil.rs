//! Shared generators for unit tests.

use proptest::prelude::*;

use crate::bitset::VertexSet;
use crate::family::ColoredFamily;
use crate::graph::Graph;

pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// A random graph with up to `max_colors` random independent sets of size at
/// most `max_size` (each set is a random subset thinned to an independent one).
pub(crate) fn arb_family(max_n: usize, max_colors: usize, max_size: usize) -> impl Strategy<Value = ColoredFamily> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let n = g.vertex_count();
        proptest::collection::vec(proptest::collection::vec(0..n, 1..=max_size), 0..=max_colors).prop_map(
            move |raw| {
                let sets = raw
                    .into_iter()
                    .map(|vs| {
                        let mut s = VertexSet::EMPTY;
                        for v in vs {
                            if !g.neighbors(v).intersects(&s) {
                                s.insert(v);
                            }
                        }
                        s
                    })
                    .collect();
                ColoredFamily::new(g.clone(), sets).unwrap()
            },
        )
    })
}
