//! The digraph condition characterising when forbidding `C_4, ..., C_s`
//! still allows arbitrarily large families without a rainbow `m`-set.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;

/// How the underlying undirected graph treats a digon. Loops never form
/// undirected cycles but always count as directed cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleConvention {
    pub digons_are_cycles: bool,
}

impl Default for CycleConvention {
    fn default() -> Self {
        Self { digons_are_cycles: true }
    }
}

/// Why the condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DagCertificate {
    /// An undirected cycle of length at most `s` that is not a consistently
    /// directed `s`-cycle, as a vertex sequence.
    Cycle(Vec<usize>),
    /// `m` vertices inducing an acyclic sub-digraph.
    AcyclicSet(Vec<usize>),
}

fn underlying(d: &Digraph) -> Vec<VertexSet> {
    let n = d.vertex_count();
    let mut adj = vec![VertexSet::EMPTY; n];
    for (u, v) in d.arcs() {
        if u != v {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    adj
}

fn consistently_directed(d: &Digraph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    let forward = (0..l).all(|i| d.has_arc(cycle[i], cycle[(i + 1) % l]));
    let backward = (0..l).all(|i| d.has_arc(cycle[(i + 1) % l], cycle[i]));
    forward || backward
}

/// The first undirected cycle of length `3..=s` that is not a consistently
/// directed `s`-cycle. Each cycle is visited once, from its lowest vertex,
/// with its second vertex below its last.
fn bad_cycle(d: &Digraph, adj: &[VertexSet], s: usize) -> Option<Vec<usize>> {
    fn extend(d: &Digraph, adj: &[VertexSet], s: usize, path: &mut Vec<usize>, on_path: &mut VertexSet) -> Option<Vec<usize>> {
        let start = path[0];
        let last = *path.last().expect("non-empty path");
        if path.len() >= 3 && adj[last].contains(start) && path[1] < last {
            if !(path.len() == s && consistently_directed(d, path)) {
                return Some(path.clone());
            }
        }
        if path.len() == s {
            return None;
        }
        for next in adj[last].above(start).difference(on_path).iter() {
            path.push(next);
            on_path.insert(next);
            let found = extend(d, adj, s, path, on_path);
            path.pop();
            on_path.remove(next);
            if found.is_some() {
                return found;
            }
        }
        None
    }
    (0..adj.len()).find_map(|start| {
        let mut path = vec![start];
        extend(d, adj, s, &mut path, &mut VertexSet::singleton(start))
    })
}

/// Whether `d` has (i) no undirected cycle of length at most `s` other than
/// the directed `s`-cycle and (ii) no acyclic induced sub-digraph on `m`
/// vertices, with a certificate when it fails.
pub fn digraph_condition_a(
    d: &Digraph,
    s: usize,
    m: usize,
    convention: CycleConvention,
) -> (bool, Option<DagCertificate>) {
    let n = d.vertex_count();
    if convention.digons_are_cycles && s >= 2 {
        for (u, v) in d.arcs() {
            if u < v && d.has_arc(v, u) {
                return (false, Some(DagCertificate::Cycle(vec![u, v])));
            }
        }
    }
    if let Some(cycle) = bad_cycle(d, &underlying(d), s) {
        return (false, Some(DagCertificate::Cycle(cycle)));
    }
    if let Some(set) = first_acyclic_subset(d, n, m) {
        return (false, Some(DagCertificate::AcyclicSet(set.to_vec())));
    }
    (true, None)
}

/// First `m`-subset (lexicographic) inducing an acyclic sub-digraph.
fn first_acyclic_subset(d: &Digraph, n: usize, m: usize) -> Option<VertexSet> {
    fn rec(d: &Digraph, n: usize, m: usize, from: usize, chosen: &mut VertexSet) -> bool {
        if chosen.len() == m {
            return true;
        }
        for v in from..n {
            if n - v < m - chosen.len() {
                break;
            }
            chosen.insert(v);
            // Acyclicity is hereditary, so dead prefixes are pruned.
            if d.is_acyclic_in(chosen) && rec(d, n, m, v + 1, chosen) {
                return true;
            }
            chosen.remove(v);
        }
        false
    }
    let mut chosen = VertexSet::EMPTY;
    rec(d, n, m, 0, &mut chosen).then_some(chosen)
}
