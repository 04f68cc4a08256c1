//! All graphs on a few vertices up to isomorphism.
//!
//! Graphs are grown one vertex at a time (every neighbourhood of the new
//! vertex) and deduplicated by a canonical code: the lexicographically
//! largest upper-triangle adjacency string over vertex orders that respect a
//! colour refinement of the vertices.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest vertex count whose canonical code fits in a `u64`.
pub const MAX_CANONICAL: usize = 11;

fn bit(i: usize, j: usize) -> u32 {
    debug_assert!(i < j);
    (63 - (j * (j - 1) / 2 + i)) as u32
}

/// Mask of the code bits fixed once positions `0..=j` are placed.
fn prefix_mask(j: usize) -> u64 {
    let len = (j + 1) * j / 2;
    if len == 0 {
        0
    } else {
        !0u64 << (64 - len)
    }
}

/// Ordered cells of the stable colour refinement started from degrees.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        colour = sigs.iter().map(|s| distinct.binary_search(s).expect("present")).collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

struct Canon<'a> {
    g: &'a Graph,
    slots: Vec<usize>,
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
}

impl Canon<'_> {
    fn rec(&mut self, j: usize, code: u64) {
        let n = self.g.vertex_count();
        if j == n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let cell = self.slots[j];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for (i, &u) in self.order.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    next |= 1 << bit(i, j);
                }
            }
            if let Some(b) = self.best {
                let mask = prefix_mask(j);
                if next & mask < b & mask {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.rec(j + 1, next);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// A code equal for two graphs exactly when they are isomorphic (given equal
/// vertex counts).
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_CANONICAL, "canonical codes need at most {MAX_CANONICAL} vertices");
    let cells = refined_cells(g);
    let slots = cells.iter().enumerate().flat_map(|(c, cell)| std::iter::repeat_n(c, cell.len())).collect();
    let mut canon = Canon {
        g,
        slots,
        cells,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    canon.rec(0, 0);
    canon.best.unwrap_or(0)
}

/// The graph on `n` vertices described by a canonical code.
pub fn from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).expect("small vertex count");
    for j in 1..n {
        for i in 0..j {
            if code >> bit(i, j) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// One graph from each isomorphism class on exactly `n` vertices, in
/// decreasing order of canonical code (so the complete graph comes first).
pub fn graphs_on(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANONICAL);
    let mut codes: Vec<u64> = vec![0];
    for k in 1..n {
        let mut next = HashSet::new();
        for &code in &codes {
            let g = from_code(k, code);
            for nbhd in 0u64..(1 << k) {
                let mut h = Graph::empty(k + 1).expect("small vertex count");
                for (u, v) in g.edges() {
                    h.add_edge(u, v).expect("in range");
                }
                for u in (0..k).filter(|u| nbhd >> u & 1 == 1) {
                    h.add_edge(u, k).expect("in range");
                }
                next.insert(canonical_code(&h));
            }
        }
        codes = next.into_iter().collect();
    }
    codes.sort_unstable_by(|a, b| b.cmp(a));
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

/// [`graphs_on`] for every vertex count in `1..=n`.
pub fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(graphs_on).collect()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| graphs_on(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn codes_separate_classes() {
        let graphs = graphs_on(5);
        let codes: HashSet<u64> = graphs.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), graphs.len());
        assert_eq!(graphs[0], Graph::complete(5).unwrap());
        assert_eq!(graphs.last().unwrap().edge_count(), 0);
    }

    #[test]
    fn regular_graphs() {
        // Both are 2-regular, so refinement leaves a single cell.
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_triangles));
        assert_eq!(canonical_code(&c6), canonical_code(&c6.permuted(&[3, 0, 4, 1, 5, 2])));
    }

    proptest! {
        #[test]
        fn relabelling_invariant(g in crate::testutil::arb_graph(8), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut crate::sample::trial_rng(seed, 0));
            let h = g.permuted(&perm);
            prop_assert_eq!(canonical_code(&g), canonical_code(&h));
            let back = from_code(g.vertex_count(), canonical_code(&g));
            prop_assert_eq!(canonical_code(&back), canonical_code(&g));
            prop_assert_eq!(back.edge_count(), g.edge_count());
        }
    }
}
