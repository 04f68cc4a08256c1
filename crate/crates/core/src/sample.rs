//! Seeded random instances from named graph classes.
//!
//! Every sampler re-checks class membership before returning, so a sampler
//! bug surfaces as an error rather than as a spurious counterexample.

use std::fmt;
use std::str::FromStr;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::family::ColoredFamily;
use crate::graph::Graph;
use crate::pattern::{contains_induced, find_clique_in, PatternId};
use crate::recognize::is_chordal;

/// The generator behind every sampler: ChaCha8 seeded from `seed`, with the
/// trial number selecting the stream so trials are independent of each other
/// and of the order in which they run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SampleClass {
    /// Line graphs of bipartite graphs; the sets are matchings.
    BipartiteLine,
    /// As `BipartiteLine`, but colour `i` (1-based) has `min(i, n)` edges.
    BipartiteLineStaircase,
    /// Line graphs of arbitrary graphs; the sets are matchings.
    Line,
    Chordal,
    KColorable(usize),
    MaxDegree(usize),
    /// No clique on `r` vertices.
    KrFree(usize),
    /// Line graphs, which contain no induced claw.
    ClawFree,
    /// No induced `K_{1,t+1}`.
    StarFree(usize),
}

impl fmt::Display for SampleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleClass::BipartiteLine => write!(f, "bipartite-line"),
            SampleClass::BipartiteLineStaircase => write!(f, "bipartite-line-staircase"),
            SampleClass::Line => write!(f, "line"),
            SampleClass::Chordal => write!(f, "chordal"),
            SampleClass::KColorable(k) => write!(f, "{k}-colorable"),
            SampleClass::MaxDegree(k) => write!(f, "max-degree-{k}"),
            SampleClass::KrFree(r) => write!(f, "K{r}-free"),
            SampleClass::ClawFree => write!(f, "claw-free"),
            SampleClass::StarFree(t) => write!(f, "K1,{}-free", t + 1),
        }
    }
}

impl FromStr for SampleClass {
    type Err = SampleError;

    /// Accepts the names printed by `Display`.
    fn from_str(s: &str) -> Result<Self, SampleError> {
        let bad = || SampleError::UnknownClass(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match s {
            "bipartite-line" => SampleClass::BipartiteLine,
            "bipartite-line-staircase" => SampleClass::BipartiteLineStaircase,
            "line" => SampleClass::Line,
            "chordal" => SampleClass::Chordal,
            "claw-free" => SampleClass::ClawFree,
            _ => {
                if let Some(k) = s.strip_suffix("-colorable") {
                    SampleClass::KColorable(num(k)?)
                } else if let Some(k) = s.strip_prefix("max-degree-") {
                    SampleClass::MaxDegree(num(k)?)
                } else if let Some(r) = s.strip_prefix('K').and_then(|r| r.strip_suffix("-free")) {
                    if let Some(t) = r.strip_prefix("1,") {
                        SampleClass::StarFree(num(t)?.checked_sub(1).ok_or_else(bad)?)
                    } else {
                        SampleClass::KrFree(num(r)?)
                    }
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SampleError {
    #[error("unknown sample class `{0}`")]
    UnknownClass(String),
    #[error("cannot sample {class} with {sets} independent {n}-sets: {reason}")]
    Unsatisfiable {
        class: SampleClass,
        n: usize,
        sets: usize,
        reason: String,
    },
    #[error("sampled graph is not in class {0}")]
    ClassDrift(SampleClass),
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub family: ColoredFamily,
    /// A proper colouring, for the `k`-colourable class.
    pub coloring: Option<Vec<usize>>,
    /// The graph whose line graph is the host, for the line-graph classes.
    pub line_root: Option<Graph>,
}

/// Draws an instance with `sets` independent sets of size `n` (or the
/// staircase sizes) from `class`.
pub fn sample(class: SampleClass, n: usize, sets: usize, rng: &mut ChaCha8Rng) -> Result<Instance, SampleError> {
    let unsat = |reason: &str| SampleError::Unsatisfiable {
        class,
        n,
        sets,
        reason: reason.to_string(),
    };
    if n == 0 {
        return Err(unsat("set size must be positive"));
    }
    for _ in 0..200 {
        let drawn = match class {
            SampleClass::BipartiteLine => Some(bipartite_line(n, sets, false, rng)),
            SampleClass::BipartiteLineStaircase => Some(bipartite_line(n, sets, true, rng)),
            SampleClass::Line | SampleClass::ClawFree => Some(line(n, sets, rng)),
            SampleClass::Chordal => {
                let g = chordal_graph(rng.random_range(n..=3 * n + 2), rng);
                with_random_sets(g, n, sets, rng)
            }
            SampleClass::KColorable(k) => {
                if k == 0 {
                    return Err(unsat("k must be positive"));
                }
                let (g, coloring) = k_colorable_graph(k, n, rng);
                with_random_sets(g, n, sets, rng).map(|mut inst| {
                    inst.coloring = Some(coloring);
                    inst
                })
            }
            SampleClass::MaxDegree(k) => {
                let g = max_degree_graph(rng.random_range(n + 1..=3 * n + 3), k, rng);
                with_random_sets(g, n, sets, rng)
            }
            SampleClass::KrFree(r) => {
                if r < 2 {
                    return Err(unsat("r must be at least 2"));
                }
                let g = kr_free_graph(rng.random_range(n..=3 * n), r, rng);
                with_random_sets(g, n, sets, rng)
            }
            SampleClass::StarFree(t) => {
                if t == 0 {
                    return Err(unsat("t must be at least 1"));
                }
                let g = star_free_graph(rng.random_range(n..=3 * n), t, rng);
                with_random_sets(g, n, sets, rng)
            }
        };
        if let Some(inst) = drawn {
            verify(class, &inst)?;
            return Ok(inst);
        }
    }
    Err(unsat("no instance found after 200 attempts"))
}

fn verify(class: SampleClass, inst: &Instance) -> Result<(), SampleError> {
    let g = inst.family.host();
    let ok = match class {
        SampleClass::BipartiteLine | SampleClass::BipartiteLineStaircase => inst
            .line_root
            .as_ref()
            .is_some_and(|h| h.is_bipartite_in(&h.vertices()) && h.line_graph().is_ok_and(|(l, _)| &l == g)),
        SampleClass::Line => inst
            .line_root
            .as_ref()
            .is_some_and(|h| h.line_graph().is_ok_and(|(l, _)| &l == g)),
        SampleClass::ClawFree => contains_induced(g, PatternId::Star(3)).expect("order 4").is_none(),
        SampleClass::Chordal => is_chordal(g),
        SampleClass::KColorable(k) => inst
            .coloring
            .as_ref()
            .is_some_and(|c| c.iter().all(|&x| x < k) && g.edges().iter().all(|&(u, v)| c[u] != c[v])),
        SampleClass::MaxDegree(k) => g.max_degree() <= k,
        SampleClass::KrFree(r) => find_clique_in(g, &g.vertices(), r).is_none(),
        SampleClass::StarFree(t) => star_free(g, t),
    };
    if ok {
        Ok(())
    } else {
        Err(SampleError::ClassDrift(class))
    }
}

fn star_free(g: &Graph, t: usize) -> bool {
    g.vertices()
        .iter()
        .all(|v| g.independence_number_in(g.neighbors(v)) <= t)
}

/// Attaches `sets` random independent `n`-sets, or `None` if `g` has too few.
fn with_random_sets(g: Graph, n: usize, sets: usize, rng: &mut ChaCha8Rng) -> Option<Instance> {
    let mut family = Vec::with_capacity(sets);
    for _ in 0..sets {
        family.push(random_independent_set(&g, n, rng)?);
    }
    Some(Instance {
        family: ColoredFamily::new(g, family).expect("sets are independent"),
        coloring: None,
        line_root: None,
    })
}

/// A random maximal-greedy independent `n`-subset of `g`, if one is found
/// within a few shuffles.
pub fn random_independent_set(g: &Graph, n: usize, rng: &mut ChaCha8Rng) -> Option<VertexSet> {
    let mut order = g.vertices().to_vec();
    for _ in 0..20 {
        order.shuffle(rng);
        let mut s = VertexSet::EMPTY;
        for &v in &order {
            if s.len() == n {
                break;
            }
            if !g.neighbors(v).intersects(&s) {
                s.insert(v);
            }
        }
        if s.len() == n {
            return Some(s);
        }
    }
    None
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).expect("caller keeps n small");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Line graph of a host built from random matchings; colour `i` is matching `i`.
fn line_from_matchings(host_n: usize, matchings: &[Vec<(usize, usize)>]) -> Instance {
    let mut host = Graph::empty(host_n).expect("small host");
    for &(u, v) in matchings.iter().flatten() {
        host.add_edge(u, v).expect("in range");
    }
    let (l, labels) = host.line_graph().expect("small line graph");
    let index = |e: (usize, usize)| labels.binary_search(&(e.0.min(e.1), e.0.max(e.1))).expect("edge of host");
    let sets = matchings
        .iter()
        .map(|m| m.iter().map(|&e| index(e)).collect())
        .collect();
    Instance {
        family: ColoredFamily::new(l, sets).expect("matchings are independent in the line graph"),
        coloring: None,
        line_root: Some(host),
    }
}

fn bipartite_line(n: usize, sets: usize, staircase: bool, rng: &mut ChaCha8Rng) -> Instance {
    let side = n + rng.random_range(0..=1);
    let left: Vec<usize> = (0..side).collect();
    let mut right: Vec<usize> = (side..2 * side).collect();
    let mut matchings = Vec::with_capacity(sets);
    for i in 0..sets {
        let size = if staircase { (i + 1).min(n) } else { n };
        let mut l = left.clone();
        l.shuffle(rng);
        right.shuffle(rng);
        matchings.push(l.iter().zip(&right).take(size).map(|(&a, &b)| (a, b)).collect());
    }
    line_from_matchings(2 * side, &matchings)
}

fn line(n: usize, sets: usize, rng: &mut ChaCha8Rng) -> Instance {
    let host_n = 2 * n + rng.random_range(0..=2);
    let mut vertices: Vec<usize> = (0..host_n).collect();
    let mut matchings = Vec::with_capacity(sets);
    for _ in 0..sets {
        vertices.shuffle(rng);
        matchings.push(vertices.chunks(2).take(n).map(|p| (p[0], p[1])).collect());
    }
    line_from_matchings(host_n, &matchings)
}

/// Each new vertex is joined to a random clique of the current graph, so the
/// reverse insertion order is a perfect elimination ordering.
pub fn chordal_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).expect("small");
    for v in 1..n {
        if rng.random_bool(0.2) {
            continue;
        }
        let anchor = rng.random_range(0..v);
        let mut clique = VertexSet::singleton(anchor);
        let mut candidates = g.neighbors(anchor).intersection(&VertexSet::full(v));
        while let Some(&u) = candidates.to_vec().choose(rng) {
            if !rng.random_bool(0.5) {
                break;
            }
            clique.insert(u);
            candidates = candidates.intersection(g.neighbors(u));
        }
        for u in clique.iter() {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// `k` classes of sizes between `n` and `2n`, random edges across classes.
pub fn k_colorable_graph(k: usize, n: usize, rng: &mut ChaCha8Rng) -> (Graph, Vec<usize>) {
    let mut coloring = Vec::new();
    for c in 0..k {
        let size = rng.random_range(n..=2 * n);
        coloring.extend(std::iter::repeat(c).take(size));
    }
    coloring.shuffle(rng);
    let p = rng.random_range(0.2..0.8);
    let mut g = Graph::empty(coloring.len()).expect("small");
    for u in 0..coloring.len() {
        for v in u + 1..coloring.len() {
            if coloring[u] != coloring[v] && rng.random_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    (g, coloring)
}

/// Random edges in random order, kept while both ends have degree below `k`.
pub fn max_degree_graph(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let keep = rng.random_range(0.3..1.0);
    let mut g = Graph::empty(n).expect("small");
    for (u, v) in pairs {
        if g.degree(u) < k && g.degree(v) < k && rng.random_bool(keep) {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// Random edges in random order, kept while no `r`-clique appears.
pub fn kr_free_graph(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let keep = rng.random_range(0.3..1.0);
    let mut g = Graph::empty(n).expect("small");
    for (u, v) in pairs {
        if !rng.random_bool(keep) {
            continue;
        }
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if r > 2 && find_clique_in(&g, &common, r - 2).is_none() {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// Random edges in random order, kept while the graph stays `K_{1,t+1}`-free.
pub fn star_free_graph(n: usize, t: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let keep = rng.random_range(0.3..1.0);
    let mut g = Graph::empty(n).expect("small");
    for (u, v) in pairs {
        if !rng.random_bool(keep) {
            continue;
        }
        g.add_edge(u, v).expect("in range");
        // A new induced star must be centred at u or v.
        if [u, v].iter().any(|&c| g.independence_number_in(g.neighbors(c)) > t) {
            g.remove_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_names_round_trip() {
        for class in [
            SampleClass::BipartiteLine,
            SampleClass::BipartiteLineStaircase,
            SampleClass::Line,
            SampleClass::Chordal,
            SampleClass::KColorable(3),
            SampleClass::MaxDegree(2),
            SampleClass::KrFree(3),
            SampleClass::ClawFree,
            SampleClass::StarFree(2),
        ] {
            assert_eq!(class.to_string().parse::<SampleClass>(), Ok(class));
        }
        assert!("triangle".parse::<SampleClass>().is_err());
    }

    #[test]
    fn same_seed_same_instance() {
        let a = sample(SampleClass::Chordal, 4, 5, &mut trial_rng(9, 3)).unwrap();
        let b = sample(SampleClass::Chordal, 4, 5, &mut trial_rng(9, 3)).unwrap();
        assert_eq!(a.family, b.family);
        let c = sample(SampleClass::Chordal, 4, 5, &mut trial_rng(9, 4)).unwrap();
        assert_ne!(a.family, c.family);
    }

    #[test]
    fn bipartite_line_matchings_have_size_n() {
        let inst = sample(SampleClass::BipartiteLine, 4, 7, &mut trial_rng(1, 0)).unwrap();
        assert_eq!(inst.family.len(), 7);
        assert_eq!(inst.family.uniform_size(), Some(4));
        assert!(contains_induced(inst.family.host(), PatternId::Star(3)).unwrap().is_none());
    }

    #[test]
    fn staircase_sizes() {
        let inst = sample(SampleClass::BipartiteLineStaircase, 3, 5, &mut trial_rng(2, 0)).unwrap();
        assert_eq!(inst.family.sizes(), vec![1, 2, 3, 3, 3]);
    }

    #[test]
    fn classes_are_honoured() {
        for trial in 0..20 {
            let mut rng = trial_rng(5, trial);
            let inst = sample(SampleClass::MaxDegree(2), 4, 7, &mut rng).unwrap();
            assert!(inst.family.host().max_degree() <= 2);
            let inst = sample(SampleClass::Chordal, 5, 4, &mut rng).unwrap();
            assert!(is_chordal(inst.family.host()));
            let inst = sample(SampleClass::KrFree(3), 3, 6, &mut rng).unwrap();
            assert!(contains_induced(inst.family.host(), PatternId::CompleteK(3)).unwrap().is_none());
            let inst = sample(SampleClass::StarFree(2), 4, 3, &mut rng).unwrap();
            assert!(contains_induced(inst.family.host(), PatternId::Star(3)).unwrap().is_none());
            let inst = sample(SampleClass::KColorable(3), 4, 7, &mut rng).unwrap();
            assert!(inst.coloring.is_some());
        }
    }

    #[test]
    fn impossible_requests_are_reported() {
        let err = sample(SampleClass::MaxDegree(2), 0, 3, &mut trial_rng(0, 0)).unwrap_err();
        assert!(matches!(err, SampleError::Unsatisfiable { .. }));
    }
}
