//! Column-partitioned graphs whose column pairs all induce the same row
//! digraph, and the tools to detect and extract them.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::family::{ColoredFamily, FamilyError};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepeatingError {
    #[error("columns have different sizes ({left} and {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("columns do not partition the vertex set")]
    NotPartition,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph on `columns x rows` with vertex `(a, b)` at index `a * rows + b`,
/// where `(a, b) ~ (a', b')` for `a < a'` exactly when `b -> b'` is an arc of
/// the base digraph. Columns are independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatingGraph {
    columns: usize,
    rows: usize,
    base: Digraph,
    graph: Graph,
}

impl RepeatingGraph {
    pub fn from_base(base: Digraph, columns: usize) -> Result<Self, RepeatingError> {
        let rows = base.vertex_count();
        let mut graph = Graph::empty(columns * rows)?;
        for a in 0..columns {
            for a2 in a + 1..columns {
                for (b, b2) in base.arcs() {
                    graph.add_edge(a * rows + b, a2 * rows + b2)?;
                }
            }
        }
        Ok(Self {
            columns,
            rows,
            base,
            graph,
        })
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Every row is a clique (the base has a loop at every vertex).
    pub fn is_strongly_repeating(&self) -> bool {
        self.base.has_all_loops()
    }

    pub fn vertex(&self, column: usize, row: usize) -> usize {
        column * self.rows + row
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.rows, v % self.rows)
    }

    pub fn column(&self, a: usize) -> VertexSet {
        (0..self.rows).map(|b| self.vertex(a, b)).collect()
    }

    pub fn row(&self, b: usize) -> VertexSet {
        (0..self.columns).map(|a| self.vertex(a, b)).collect()
    }

    /// Row-ordered vertex lists of the columns.
    pub fn column_lists(&self) -> Vec<Vec<usize>> {
        (0..self.columns)
            .map(|a| (0..self.rows).map(|b| self.vertex(a, b)).collect())
            .collect()
    }

    /// The columns as colours, each repeated `copies` times consecutively.
    pub fn column_family(&self, copies: usize) -> Result<ColoredFamily, FamilyError> {
        let blocks: Vec<_> = (0..self.columns).map(|a| (self.column(a), copies)).collect();
        ColoredFamily::repeated(self.graph.clone(), &blocks)
    }
}

/// The strongly repeating graph of `d`: arcs between columns in both
/// directions according to column order, and every row a clique.
pub fn repeating_from_digraph(d: &Digraph, columns: usize) -> Result<RepeatingGraph, RepeatingError> {
    RepeatingGraph::from_base(d.with_all_loops(), columns)
}

/// The row digraph `b -> b'` iff `col_a[b] ~ col_b[b']`.
pub fn column_digraph(g: &Graph, col_a: &[usize], col_b: &[usize]) -> Result<Digraph, RepeatingError> {
    if col_a.len() != col_b.len() {
        return Err(RepeatingError::SizeMismatch {
            left: col_a.len(),
            right: col_b.len(),
        });
    }
    let mut d = Digraph::empty(col_a.len()).map_err(|_| GraphError::TooManyVertices(col_a.len()))?;
    for (b, &u) in col_a.iter().enumerate() {
        for (b2, &v) in col_b.iter().enumerate() {
            if g.has_edge(u, v) {
                d.add_arc(b, b2).expect("row indices are in range");
            }
        }
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatingBase {
    pub base: Digraph,
    pub strongly: bool,
}

fn check_partition(g: &Graph, columns: &[Vec<usize>]) -> Result<(), RepeatingError> {
    if let Some(first) = columns.first() {
        if let Some(bad) = columns.iter().find(|c| c.len() != first.len()) {
            return Err(RepeatingError::SizeMismatch {
                left: first.len(),
                right: bad.len(),
            });
        }
    }
    let mut seen = VertexSet::EMPTY;
    for &v in columns.iter().flatten() {
        if v >= g.vertex_count() || !seen.insert(v) {
            return Err(RepeatingError::NotPartition);
        }
    }
    if seen != g.vertices() {
        return Err(RepeatingError::NotPartition);
    }
    Ok(())
}

/// All pairwise column digraphs `D(a, a')` for `a < a'`, indexed `[a][a']`.
fn pair_digraphs(g: &Graph, columns: &[Vec<usize>]) -> Result<Vec<Vec<Option<Digraph>>>, RepeatingError> {
    let t = columns.len();
    let mut table = vec![vec![None; t]; t];
    for a in 0..t {
        for a2 in a + 1..t {
            table[a][a2] = Some(column_digraph(g, &columns[a], &columns[a2])?);
        }
    }
    Ok(table)
}

/// The common base digraph if `g`, split into the given row-ordered columns,
/// is repeating. Columns must partition the vertices and have equal sizes.
/// A single column has no pair to read a base from; its base is reported as
/// the arcless digraph.
pub fn is_repeating(g: &Graph, columns: &[Vec<usize>]) -> Result<Option<RepeatingBase>, RepeatingError> {
    check_partition(g, columns)?;
    let rows = columns.first().map_or(0, Vec::len);
    if columns.iter().any(|c| !g.is_independent(&c.iter().copied().collect())) {
        return Ok(None);
    }
    let base = match columns.len() {
        0 | 1 => Digraph::empty(rows).map_err(|_| GraphError::TooManyVertices(rows))?,
        _ => column_digraph(g, &columns[0], &columns[1])?,
    };
    for a in 0..columns.len() {
        for a2 in a + 1..columns.len() {
            if column_digraph(g, &columns[a], &columns[a2])? != base {
                return Ok(None);
            }
        }
    }
    let strongly = base.has_all_loops();
    Ok(Some(RepeatingBase { base, strongly }))
}

/// The first `size`-subset of columns, in colexicographic order, whose
/// induced subgraph is repeating.
pub fn find_repeating_subfamily(
    g: &Graph,
    columns: &[Vec<usize>],
    size: usize,
) -> Result<Option<Vec<usize>>, RepeatingError> {
    check_partition(g, columns)?;
    let t = columns.len();
    if size > t {
        return Ok(None);
    }
    let independent: Vec<bool> = columns
        .iter()
        .map(|c| g.is_independent(&c.iter().copied().collect()))
        .collect();
    let table = pair_digraphs(g, columns)?;
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        let ok = combo.iter().all(|&a| independent[a])
            && (size < 2 || {
                let base = table[combo[0]][combo[1]].as_ref();
                combo
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| combo[i + 1..].iter().all(|&a2| table[a][a2].as_ref() == base))
            });
        if ok {
            return Ok(Some(combo));
        }
        // Colexicographic successor.
        let mut i = 0;
        loop {
            if i == size {
                return Ok(None);
            }
            let limit = if i + 1 < size { combo[i + 1] } else { t };
            if combo[i] + 1 < limit {
                combo[i] += 1;
                for (j, c) in combo.iter_mut().enumerate().take(i) {
                    *c = j;
                }
                break;
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn worked_column_digraph() {
        // Left column 0,1,2 and right column 3,4,5 (rows b1, b2, b3).
        let g = Graph::new(6, &[(0, 4), (4, 1), (1, 5), (5, 0)]).unwrap();
        let d = column_digraph(&g, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert_eq!(d, Digraph::new(3, &[(0, 1), (1, 1), (1, 2), (0, 2)]).unwrap());
    }

    #[test]
    fn column_digraph_extremes() {
        let g = Graph::empty(4).unwrap();
        assert_eq!(column_digraph(&g, &[0, 1], &[2, 3]).unwrap().arc_count(), 0);
        let k22 = Graph::complete_multipartite(&[2, 2]).unwrap();
        let d = column_digraph(&k22, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(d, Digraph::complete_with_loops(2).unwrap());
        assert!(matches!(
            column_digraph(&k22, &[0], &[2, 3]),
            Err(RepeatingError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn mismatch_is_not_repeating() {
        // Three columns of one row; D(0,1) has a loop, D(0,2) does not.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cols = vec![vec![0], vec![1], vec![2]];
        assert_eq!(is_repeating(&g, &cols).unwrap(), None);
        assert_eq!(find_repeating_subfamily(&g, &cols, 2).unwrap(), Some(vec![0, 1]));
        assert_eq!(find_repeating_subfamily(&g, &cols, 3).unwrap(), None);
        assert_eq!(is_repeating(&g, &[vec![0, 1]]), Err(RepeatingError::NotPartition));
    }

    #[test]
    fn identical_pairs_give_first_columns() {
        let r = RepeatingGraph::from_base(Digraph::directed_cycle(3).unwrap(), 5).unwrap();
        assert_eq!(
            find_repeating_subfamily(r.graph(), &r.column_lists(), 3).unwrap(),
            Some(vec![0, 1, 2])
        );
    }

    #[test]
    fn strongly_repeating_rows_are_cliques() {
        let r = repeating_from_digraph(&Digraph::empty(3).unwrap(), 4).unwrap();
        assert!(r.is_strongly_repeating());
        for b in 0..3 {
            assert!(r.graph().is_clique(&r.row(b)));
        }
        let plain = RepeatingGraph::from_base(Digraph::empty(3).unwrap(), 4).unwrap();
        assert!(!plain.is_strongly_repeating());
        assert!(plain.graph().is_independent(&plain.row(0)));
    }

    #[test]
    fn one_row_three_columns_always_has_a_repeating_pair() {
        for mask in 0u8..8 {
            let pairs = [(0, 1), (0, 2), (1, 2)];
            let edges: Vec<_> = (0..3).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::new(3, &edges).unwrap();
            let found = find_repeating_subfamily(&g, &[vec![0], vec![1], vec![2]], 2).unwrap();
            assert!(found.is_some());
        }
    }

    fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let arcs: Vec<_> = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n)).collect();
                Digraph::new(n, &arcs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn base_round_trip(d in arb_digraph(5), t in 2usize..5) {
            let r = RepeatingGraph::from_base(d.clone(), t).unwrap();
            let found = is_repeating(r.graph(), &r.column_lists()).unwrap().unwrap();
            prop_assert_eq!(found.strongly, d.has_all_loops());
            prop_assert_eq!(found.base, d.clone());
            let strong = repeating_from_digraph(&d, t).unwrap();
            let found = is_repeating(strong.graph(), &strong.column_lists()).unwrap().unwrap();
            prop_assert!(found.strongly);
            prop_assert_eq!(found.base, d.with_all_loops());
        }
    }
}
