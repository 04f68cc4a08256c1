//! Undirected simple graphs with dense bit-row adjacency.

use std::fmt::Write as _;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An undirected simple graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(vertex_count)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        Ok(Self {
            n: vertex_count,
            adj: vec![VertexSet::EMPTY; vertex_count],
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n);
            g.adj[v].remove(v);
        }
        Ok(g)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    /// Complete multipartite graph; part `p` occupies a contiguous index block.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self, GraphError> {
        let n = sizes.iter().sum();
        let mut g = Self::empty(n)?;
        let mut part = Vec::with_capacity(n);
        for (p, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat(p).take(s));
        }
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].above(u).iter().map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Union of `N(v)` over `v` in `set`.
    pub fn neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(&self.adj[v]))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = *set;
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    /// All independent sets of the given size, in lexicographic order.
    pub fn independent_sets(&self, size: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let _ = self.for_each_independent_set_in(&self.vertices(), size, |s| {
            out.push(*s);
            ControlFlow::<()>::Continue(())
        });
        out
    }

    /// Visits the independent `size`-subsets of `within` in lexicographic order,
    /// stopping early when the visitor breaks.
    pub fn for_each_independent_set_in<B>(
        &self,
        within: &VertexSet,
        size: usize,
        mut visit: impl FnMut(&VertexSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        fn rec<B>(
            g: &Graph,
            chosen: &mut VertexSet,
            candidates: VertexSet,
            left: usize,
            visit: &mut impl FnMut(&VertexSet) -> ControlFlow<B>,
        ) -> ControlFlow<B> {
            if left == 0 {
                return visit(chosen);
            }
            if candidates.len() < left {
                return ControlFlow::Continue(());
            }
            for v in candidates.iter() {
                let rest = candidates.above(v).difference(&g.adj[v]);
                if rest.len() + 1 < left {
                    continue;
                }
                chosen.insert(v);
                rec(g, chosen, rest, left - 1, visit)?;
                chosen.remove(v);
            }
            ControlFlow::Continue(())
        }
        let within = within.intersection(&self.vertices());
        let mut chosen = VertexSet::EMPTY;
        rec(self, &mut chosen, within, size, &mut visit)
    }

    /// Lexicographically first independent `size`-subset of `within`.
    pub fn first_independent_set_in(&self, within: &VertexSet, size: usize) -> Option<VertexSet> {
        match self.for_each_independent_set_in(within, size, |s| ControlFlow::Break(*s)) {
            ControlFlow::Break(s) => Some(s),
            ControlFlow::Continue(()) => None,
        }
    }

    /// Size of a largest independent subset of `within`.
    pub fn independence_number_in(&self, within: &VertexSet) -> usize {
        fn rec(g: &Graph, candidates: VertexSet, size: usize, best: &mut usize) {
            if size + candidates.len() <= *best {
                return;
            }
            match candidates.first() {
                None => *best = (*best).max(size),
                Some(v) => {
                    rec(g, candidates.difference(&g.closed_neighbors(v)), size + 1, best);
                    let mut without = candidates;
                    without.remove(v);
                    rec(g, without, size, best);
                }
            }
        }
        let mut best = 0;
        rec(self, within.intersection(&self.vertices()), 0, &mut best);
        best
    }

    pub fn independence_number(&self) -> usize {
        self.independence_number_in(&self.vertices())
    }

    /// A 2-colouring `(side0, side1)` of the subgraph induced by `within`, if bipartite.
    /// Each component's lowest vertex goes to `side0`.
    pub fn bipartition_in(&self, within: &VertexSet) -> Option<(VertexSet, VertexSet)> {
        let within = within.intersection(&self.vertices());
        let mut sides = [VertexSet::EMPTY; 2];
        let mut unseen = within;
        while let Some(root) = unseen.first() {
            let mut frontier = VertexSet::singleton(root);
            let mut side = 0;
            unseen.remove(root);
            while !frontier.is_empty() {
                if sides[1 - side].intersects(&frontier) {
                    return None;
                }
                sides[side] = sides[side].union(&frontier);
                let next = self.neighborhood_of(&frontier).intersection(&within);
                if next.intersects(&sides[side]) {
                    return None;
                }
                frontier = next.intersection(&unseen);
                unseen = unseen.difference(&frontier);
                side = 1 - side;
            }
        }
        Some((sides[0], sides[1]))
    }

    pub fn is_bipartite_in(&self, within: &VertexSet) -> bool {
        self.bipartition_in(within).is_some()
    }

    /// Connected components of the subgraph induced by `within`, ordered by lowest vertex.
    pub fn components_in(&self, within: &VertexSet) -> Vec<VertexSet> {
        let within = within.intersection(&self.vertices());
        let mut unseen = within;
        let mut out = Vec::new();
        while let Some(root) = unseen.first() {
            let mut comp = VertexSet::singleton(root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self
                    .neighborhood_of(&frontier)
                    .intersection(&within)
                    .difference(&comp);
                comp = comp.union(&frontier);
            }
            unseen = unseen.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `set`, relabelled `0..|set|` in increasing order,
    /// with the map from new to old labels.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.intersection(&self.vertices()).to_vec();
        let mut g = Graph::empty(old.len()).expect("subgraph is no larger than its host");
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        (g, old)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same size");
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    /// Disjoint union; the second graph's vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift)?;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same size");
        let all = self.vertices();
        for v in 0..self.n {
            let mut row = all.difference(&self.adj[v]);
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    /// Line graph: one vertex per edge of `self` (numbered as in [`Graph::edges`]),
    /// adjacent when the edges share an endpoint. Returns the edge labels.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
        let labels = self.edges();
        let mut g = Graph::empty(labels.len())?;
        for (i, &(a, b)) in labels.iter().enumerate() {
            for (j, &(c, d)) in labels.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok((g, labels))
    }

    /// Parses the `p <n> <m>` / `e <u> <v>` edge-list format (0-indexed, `#` comments).
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let parse_err = |line: usize, message: String| GraphError::Parse { line, message };
        let mut graph: Option<Graph> = None;
        let mut declared_edges = 0;
        let mut seen_edges = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let num = |i: usize| -> Result<usize, GraphError> {
                fields
                    .get(i)
                    .ok_or_else(|| parse_err(line, format!("expected {} fields", 3)))?
                    .parse::<usize>()
                    .map_err(|e| parse_err(line, format!("field {}: {e}", i + 1)))
            };
            match fields[0] {
                "p" => {
                    if graph.is_some() {
                        return Err(parse_err(line, "duplicate header line".into()));
                    }
                    if fields.len() != 3 {
                        return Err(parse_err(line, "header must be `p <vertex_count> <edge_count>`".into()));
                    }
                    let n = num(1)?;
                    declared_edges = num(2)?;
                    graph = Some(Graph::empty(n).map_err(|e| parse_err(line, e.to_string()))?);
                }
                "e" => {
                    let g = graph
                        .as_mut()
                        .ok_or_else(|| parse_err(line, "edge before `p` header".into()))?;
                    if fields.len() != 3 {
                        return Err(parse_err(line, "edge must be `e <u> <v>`".into()));
                    }
                    let (u, v) = (num(1)?, num(2)?);
                    g.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
                    seen_edges += 1;
                }
                other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            }
        }
        let g = graph.ok_or_else(|| parse_err(0, "missing `p` header".into()))?;
        if seen_edges != declared_edges {
            return Err(parse_err(
                0,
                format!("header declares {declared_edges} edges but {seen_edges} were listed"),
            ));
        }
        Ok(g)
    }

    /// Serialises to the edge-list text format.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("p {} {}\n", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }


    #[test]
    fn make_graph_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert!((0..6).all(|v| c6.degree(v) == 2));
        let all: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let k4 = Graph::new(4, &all).unwrap();
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert_eq!(k4, Graph::complete(4).unwrap());
    }

    #[test]
    fn make_graph_errors_and_duplicates() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap().edge_count(), 1);
        assert!(matches!(Graph::empty(MAX_VERTICES + 1), Err(GraphError::TooManyVertices(_))));
    }

    #[test]
    fn independence_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(c6.is_independent(&set(&[0, 2, 4])));
        assert!(!c6.is_independent(&set(&[0, 1])));
        assert!(Graph::complete(4).unwrap().is_independent(&set(&[0])));
    }

    #[test]
    fn enum_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.independent_sets(2), vec![set(&[0, 2]), set(&[1, 3])]);
        assert!(Graph::complete(4).unwrap().independent_sets(2).is_empty());
        assert_eq!(c4.independent_sets(0), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn line_graph_examples() {
        let (l, labels) = Graph::path(3).unwrap().line_graph().unwrap();
        assert_eq!(labels, vec![(0, 1), (1, 2)]);
        assert_eq!(l, Graph::new(2, &[(0, 1)]).unwrap());

        let c6 = Graph::cycle(6).unwrap();
        let (l6, labels) = c6.line_graph().unwrap();
        // Labels: (0,1),(0,5),(1,2),(2,3),(3,4),(4,5); L(C6) is again a 6-cycle.
        assert_eq!(l6.edge_count(), 6);
        assert!((0..6).all(|v| l6.degree(v) == 2));
        assert_eq!(l6.components_in(&l6.vertices()).len(), 1);
        // The two perfect matchings of C6 are the two independent 3-sets of L(C6).
        let matchings: Vec<Vec<(usize, usize)>> = l6
            .independent_sets(3)
            .iter()
            .map(|s| s.iter().map(|i| labels[i]).collect())
            .collect();
        assert_eq!(matchings.len(), 2);
        for m in matchings {
            let covered: VertexSet = m.iter().flat_map(|&(a, b)| [a, b]).collect();
            assert_eq!(covered.len(), 6);
        }
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::cycle(6).unwrap().max_degree(), 2);
        assert_eq!(Graph::complete(4).unwrap().max_degree(), 3);
    }

    #[test]
    fn text_format_round_trip_and_diagnostics() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        let commented = "# a path\np 3 2\ne 0 1\n\n# middle\ne 1 2\n";
        assert_eq!(Graph::parse(commented).unwrap(), Graph::path(3).unwrap());
        let bad = Graph::parse("p 3 1\ne 0 7\n").unwrap_err();
        assert!(matches!(bad, GraphError::Parse { line: 2, .. }), "{bad}");
        assert!(matches!(Graph::parse("e 0 1\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(Graph::parse("p 3 2\ne 0 1\n").is_err());
    }

    #[test]
    fn bipartition_and_components() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.bipartition_in(&c5.vertices()).is_none());
        let mut path = c5.vertices();
        path.remove(4);
        let (a, b) = c5.bipartition_in(&path).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1, 3]));
        let two = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        let comps = two.components_in(&two.vertices());
        assert_eq!(comps, vec![set(&[0, 1]), set(&[2]), set(&[3, 4])]);
    }

    #[test]
    fn independence_number_small() {
        assert_eq!(Graph::cycle(5).unwrap().independence_number(), 2);
        assert_eq!(Graph::cycle(8).unwrap().independence_number(), 4);
        assert_eq!(Graph::complete(6).unwrap().independence_number(), 1);
    }

    proptest! {
        #[test]
        fn is_independent_matches_pair_loop(g in arb_graph(12), bits in any::<u16>()) {
            let s: VertexSet = (0..g.vertex_count()).filter(|v| bits >> v & 1 == 1).collect();
            let vs = s.to_vec();
            let naive = vs.iter().all(|&u| vs.iter().all(|&v| !g.has_edge(u, v)));
            prop_assert_eq!(g.is_independent(&s), naive);
        }

        #[test]
        fn enumeration_matches_subset_filter(g in arb_graph(10), size in 0usize..5) {
            let n = g.vertex_count();
            let mut expected: Vec<VertexSet> = (0u32..1 << n)
                .filter(|b| b.count_ones() as usize == size)
                .map(|b| (0..n).filter(|v| b >> v & 1 == 1).collect::<VertexSet>())
                .filter(|s| g.is_independent(s))
                .collect();
            expected.sort();
            prop_assert_eq!(g.independent_sets(size), expected);
        }

        #[test]
        fn line_graph_independence_is_matching(h in arb_graph(6), bits in any::<u16>()) {
            let (l, labels) = h.line_graph().unwrap();
            let s: VertexSet = (0..l.vertex_count().min(16)).filter(|v| bits >> v & 1 == 1).collect();
            let edges: Vec<_> = s.iter().map(|i| labels[i]).collect();
            let mut touched = VertexSet::EMPTY;
            let mut matching = true;
            for (a, b) in edges {
                matching &= touched.insert(a) & touched.insert(b);
            }
            prop_assert_eq!(l.is_independent(&s), matching);
        }
    }
}
