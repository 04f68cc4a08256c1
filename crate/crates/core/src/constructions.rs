//! Extremal families with machine-checkable manifests.
//!
//! Generators are cheap and do not verify anything themselves;
//! [`ConstructionOutput::certify`] re-checks every manifest entry with an
//! independent routine (solver, pattern search, degree counts, enumeration).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::family::ColoredFamily;
use crate::graph::{Graph, GraphError};
use crate::pattern::{contains_induced, find_clique_in, PatternId};
use crate::repeating::{is_repeating, RepeatingError, RepeatingGraph};
use crate::solver::{find_rainbow, max_rainbow_size};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("a perfect matching of even-length chords of C_{{2n}} exists if and only if n is even (got n = {0})")]
    OddN(usize),
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("R({r},{m}) is not in the table and the search exceeded {budget} nodes")]
    RamseyBudget { r: usize, m: usize, budget: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Repeating(#[from] RepeatingError),
}

/// An expected property of a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "kebab-case")]
pub enum Property {
    /// The family has no rainbow independent `m`-set.
    NoRainbow { m: usize },
    /// The largest rainbow independent set has exactly `size` vertices.
    MaxRainbow { size: usize },
    /// No induced copy of `pattern`.
    PatternFree { pattern: PatternId },
    Regular { degree: usize },
    MaxDegree { bound: usize },
    /// The graph has exactly `count` independent `size`-sets.
    IndependentSetCount { size: usize, count: usize },
    ColorsDisjoint,
    /// The repeating columns are independent sets.
    ColumnsIndependent,
    /// Every independent `m`-set lies inside one column.
    IndependentSetsInColumns { m: usize },
    /// The columns form a repeating graph (strongly, if every row is a clique).
    Repeating { strongly: bool },
    /// Independence number below `m`.
    IndependenceBelow { m: usize },
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::NoRainbow { m } => write!(f, "no rainbow {m}-set"),
            Property::MaxRainbow { size } => write!(f, "largest rainbow set has {size} vertices"),
            Property::PatternFree { pattern } => write!(f, "no induced {pattern}"),
            Property::Regular { degree } => write!(f, "{degree}-regular"),
            Property::MaxDegree { bound } => write!(f, "maximum degree at most {bound}"),
            Property::IndependentSetCount { size, count } => write!(f, "{count} independent {size}-sets"),
            Property::ColorsDisjoint => write!(f, "colours pairwise disjoint"),
            Property::ColumnsIndependent => write!(f, "columns independent"),
            Property::IndependentSetsInColumns { m } => write!(f, "every independent {m}-set lies in a column"),
            Property::Repeating { strongly: true } => write!(f, "strongly repeating"),
            Property::Repeating { strongly: false } => write!(f, "repeating"),
            Property::IndependenceBelow { m } => write!(f, "no independent {m}-set"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub property: Property,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionOutput {
    pub name: String,
    pub family: ColoredFamily,
    /// Column structure, for constructions that are repeating graphs.
    pub repeating: Option<RepeatingGraph>,
    pub manifest: Vec<Property>,
}

impl ConstructionOutput {
    pub fn graph(&self) -> &Graph {
        self.family.host()
    }

    pub fn columns(&self) -> Option<Vec<VertexSet>> {
        self.repeating
            .as_ref()
            .map(|rg| (0..rg.columns()).map(|a| rg.column(a)).collect())
    }

    /// Re-checks every manifest entry.
    pub fn certify(&self) -> Vec<Check> {
        self.manifest
            .iter()
            .map(|p| Check {
                property: p.clone(),
                holds: self.check(p),
            })
            .collect()
    }

    pub fn is_certified(&self) -> bool {
        self.certify().iter().all(|c| c.holds)
    }

    fn check(&self, property: &Property) -> bool {
        let g = self.graph();
        match *property {
            Property::NoRainbow { m } => find_rainbow(&self.family, m).is_none(),
            Property::MaxRainbow { size } => max_rainbow_size(&self.family).0 == size,
            Property::PatternFree { pattern } => contains_induced(g, pattern).is_ok_and(|w| w.is_none()),
            Property::Regular { degree } => g.vertex_count() == 0 || (g.min_degree() == degree && g.max_degree() == degree),
            Property::MaxDegree { bound } => g.max_degree() <= bound,
            Property::IndependentSetCount { size, count } => g.independent_sets(size).len() == count,
            Property::ColorsDisjoint => self.family.pairwise_disjoint(),
            Property::ColumnsIndependent => self
                .columns()
                .is_some_and(|cols| cols.iter().all(|c| g.is_independent(c))),
            Property::IndependentSetsInColumns { m } => self.columns().is_some_and(|cols| {
                g.independent_sets(m)
                    .iter()
                    .all(|s| cols.iter().any(|c| s.is_subset(c)))
            }),
            Property::Repeating { strongly } => self.repeating.as_ref().is_some_and(|rg| {
                let lists: Vec<Vec<usize>> = rg.column_lists();
                matches!(is_repeating(g, &lists), Ok(Some(base)) if base.strongly == strongly)
            }),
            Property::IndependenceBelow { m } => g.first_independent_set_in(&g.vertices(), m).is_none(),
        }
    }
}

/// Line graph of `host` with one colour per `(matching, copies)` block
/// repeated `copies` times. Matching edges are given as vertex pairs.
fn line_family(host: &Graph, blocks: &[(Vec<(usize, usize)>, usize)]) -> Result<ColoredFamily, ConstructionError> {
    let (line, labels) = host.line_graph()?;
    let index = |(u, v): (usize, usize)| {
        let key = (u.min(v), u.max(v));
        labels.iter().position(|&e| e == key).expect("matching edge of the host")
    };
    let sets: Vec<(VertexSet, usize)> = blocks
        .iter()
        .map(|(edges, copies)| (edges.iter().map(|&e| index(e)).collect(), *copies))
        .collect();
    ColoredFamily::repeated(line, &sets).map_err(|e| ConstructionError::Invalid(e.to_string()))
}

fn cycle_matchings(n: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let len = 2 * n;
    let even = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
    let odd = (0..n).map(|i| (2 * i + 1, (2 * i + 2) % len)).collect();
    (even, odd)
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Invalid(msg.into())
}

/// The two perfect matchings of `C_{2n}`, each `n - 1` times, as independent
/// sets of the line graph.
pub fn drisko_cycle(n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if n < 2 {
        return Err(invalid("drisko_cycle needs n >= 2"));
    }
    let (even, odd) = cycle_matchings(n);
    let family = line_family(&Graph::cycle(2 * n)?, &[(even, n - 1), (odd, n - 1)])?;
    Ok(ConstructionOutput {
        name: format!("drisko-cycle-{n}"),
        family,
        repeating: None,
        manifest: vec![Property::NoRainbow { m: n }, Property::MaxRainbow { size: n - 1 }],
    })
}

/// Whether some perfect matching of `K_{2n}` on the cycle order uses only
/// chords of even circular length; exhaustive.
pub fn even_length_perfect_matching_exists(n: usize) -> bool {
    fn rec(free: VertexSet, len: usize) -> bool {
        let Some(u) = free.first() else { return true };
        let mut rest = free;
        rest.remove(u);
        rest.iter().any(|v| {
            let d = (v + len - u) % len;
            let mut next = rest;
            next.remove(v);
            d.min(len - d) % 2 == 0 && rec(next, len)
        })
    }
    rec(VertexSet::full(2 * n), 2 * n)
}

/// Drisko's family on `C_{2n}` plus the antipodal matching `{(i, i + n)}`,
/// whose chords all have the even length `n`.
pub fn even_matching_family(n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if n % 2 == 1 || n == 0 {
        return Err(ConstructionError::OddN(n));
    }
    let len = 2 * n;
    let mut host = Graph::cycle(len)?;
    let antipodal: Vec<(usize, usize)> = (0..n).map(|i| (i, i + n)).collect();
    for &(u, v) in &antipodal {
        host.add_edge(u, v)?;
    }
    let (even, odd) = cycle_matchings(n);
    let family = line_family(&host, &[(even, n - 1), (odd, n - 1), (antipodal, 1)])?;
    Ok(ConstructionOutput {
        name: format!("even-matching-{n}"),
        family,
        repeating: None,
        manifest: vec![Property::NoRainbow { m: n }],
    })
}

/// Two disjoint copies of the base graph; each colour becomes its set
/// together with the copy of that set.
///
/// A rainbow `(2m - 1)`-set puts `m` vertices in one copy, so a base without
/// rainbow `m`-sets yields a doubled family without rainbow `(2m - 1)`-sets.
pub fn doubled_family(base: &ConstructionOutput) -> Result<ConstructionOutput, ConstructionError> {
    let g = base.graph();
    let n = g.vertex_count();
    let graph = g.disjoint_union(g)?;
    let sets = base
        .family
        .sets()
        .iter()
        .map(|s| s.union(&s.iter().map(|v| v + n).collect()))
        .collect();
    let family = ColoredFamily::new(graph, sets).map_err(|e| invalid(e.to_string()))?;
    let manifest = base
        .manifest
        .iter()
        .filter_map(|p| match *p {
            Property::NoRainbow { m } if m > 0 => Some(Property::NoRainbow { m: 2 * m - 1 }),
            Property::ColorsDisjoint => Some(Property::ColorsDisjoint),
            Property::MaxDegree { bound } => Some(Property::MaxDegree { bound }),
            Property::Regular { degree } => Some(Property::Regular { degree }),
            _ => None,
        })
        .collect();
    Ok(ConstructionOutput {
        name: format!("{}-doubled", base.name),
        family,
        repeating: None,
        manifest,
    })
}

/// `G_{t,n}`: the cycle of length `tn` with every pair at distance below `t`
/// joined; the `t` residue classes mod `t`, each `n - 1` times.
pub fn circulant_power(t: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if t < 1 || n < 2 {
        return Err(invalid("circulant_power needs t >= 1 and n >= 2"));
    }
    let len = t * n;
    let mut g = Graph::empty(len)?;
    for u in 0..len {
        for d in 1..t {
            let v = (u + d) % len;
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v)?;
            }
        }
    }
    let classes: Vec<(VertexSet, usize)> = (0..t)
        .map(|a| ((0..n).map(|i| a + i * t).collect(), n - 1))
        .collect();
    let family = ColoredFamily::repeated(g, &classes).map_err(|e| invalid(e.to_string()))?;
    let mut manifest = vec![
        Property::NoRainbow { m: n },
        Property::IndependentSetCount { size: n, count: t },
    ];
    if 2 * (t - 1) < len {
        manifest.push(Property::Regular { degree: 2 * t - 2 });
    }
    if n >= 4 {
        manifest.push(Property::PatternFree { pattern: PatternId::Cycle(4) });
    }
    Ok(ConstructionOutput {
        name: format!("circulant-t{t}-n{n}"),
        family,
        repeating: None,
        manifest,
    })
}

/// `ceil(n / t)` disjoint copies of `K_{t,...,t}` with `k` parts; colour `i`
/// is the union of the `i`-th parts.
pub fn multipartite_copies(k: usize, t: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if k < 2 || t < 1 {
        return Err(invalid("multipartite_copies needs k >= 2 and t >= 1"));
    }
    let copies = n.div_ceil(t).max(1);
    let block = Graph::complete_multipartite(&vec![t; k])?;
    let mut g = Graph::empty(0)?;
    for _ in 0..copies {
        g = g.disjoint_union(&block)?;
    }
    let size = k * t;
    let sets = (0..k)
        .map(|i| (0..copies).flat_map(|c| (0..t).map(move |j| c * size + i * t + j)).collect())
        .collect();
    let family = ColoredFamily::new(g, sets).map_err(|e| invalid(e.to_string()))?;
    let mut manifest = vec![Property::MaxRainbow { size: copies.min(k) }, Property::ColorsDisjoint];
    if t + 2 <= crate::pattern::MAX_PATTERN_ORDER {
        manifest.push(Property::PatternFree { pattern: PatternId::Star(t + 1) });
    }
    Ok(ConstructionOutput {
        name: format!("multipartite-copies-k{k}-t{t}-n{n}"),
        family,
        repeating: None,
        manifest,
    })
}

fn sides(k: usize, n: usize, offset: usize) -> Vec<VertexSet> {
    (0..k).map(|i| (offset + i * n..offset + (i + 1) * n).collect()).collect()
}

/// `K_{n,...,n}` with `k` sides, each side `m - 1` times.
pub fn colourable_lower(k: usize, n: usize, m: usize) -> Result<ConstructionOutput, ConstructionError> {
    if k < 1 || m < 1 || m > n {
        return Err(invalid("colourable_lower needs k >= 1 and 1 <= m <= n"));
    }
    let g = Graph::complete_multipartite(&vec![n; k])?;
    let blocks: Vec<(VertexSet, usize)> = sides(k, n, 0).into_iter().map(|s| (s, m - 1)).collect();
    let family = ColoredFamily::repeated(g, &blocks).map_err(|e| invalid(e.to_string()))?;
    Ok(ConstructionOutput {
        name: format!("colourable-k{k}-n{n}-m{m}"),
        family,
        repeating: None,
        manifest: vec![Property::NoRainbow { m }],
    })
}

/// `m - 1` disjoint copies of `K_{n,...,n}`; every side is one colour.
pub fn colourable_disjoint_lower(k: usize, n: usize, m: usize) -> Result<ConstructionOutput, ConstructionError> {
    if k < 1 || m < 1 {
        return Err(invalid("colourable_disjoint_lower needs k >= 1 and m >= 1"));
    }
    let block = Graph::complete_multipartite(&vec![n; k])?;
    let mut g = Graph::empty(0)?;
    let mut sets = Vec::new();
    for c in 0..m - 1 {
        sets.extend(sides(k, n, c * k * n));
        g = g.disjoint_union(&block)?;
    }
    let family = ColoredFamily::new(g, sets).map_err(|e| invalid(e.to_string()))?;
    Ok(ConstructionOutput {
        name: format!("colourable-disjoint-k{k}-n{n}-m{m}"),
        family,
        repeating: None,
        manifest: vec![Property::NoRainbow { m }, Property::ColorsDisjoint],
    })
}

/// `H^{(n)}`: vertex `v` becomes `{v n, ..., v n + n - 1}`, edges become
/// complete bipartite graphs. The parts are the colours.
pub fn blowup(h: &Graph, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    let mut g = Graph::empty(h.vertex_count() * n)?;
    for (u, v) in h.edges() {
        for a in 0..n {
            for b in 0..n {
                g.add_edge(u * n + a, v * n + b)?;
            }
        }
    }
    let parts = (0..h.vertex_count()).map(|v| (v * n..(v + 1) * n).collect()).collect();
    let family = ColoredFamily::new(g, parts).map_err(|e| invalid(e.to_string()))?;
    Ok(ConstructionOutput {
        name: format!("blowup-{}-{n}", h.vertex_count()),
        family,
        repeating: None,
        manifest: vec![Property::ColorsDisjoint],
    })
}

/// Blow-up of a `K_r`-free graph with independence number below `m` by
/// `n >= m`: `K_r`-free, and its parts have no rainbow independent `m`-set.
pub fn ramsey_blowup(h: &Graph, r: usize, m: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if n < m {
        return Err(invalid("ramsey_blowup needs n >= m"));
    }
    let mut out = blowup(h, n)?;
    out.name = format!("ramsey-blowup-r{r}-m{m}-n{n}");
    out.manifest.push(Property::NoRainbow { m });
    if r <= crate::pattern::MAX_PATTERN_ORDER {
        out.manifest.push(Property::PatternFree { pattern: PatternId::CompleteK(r) });
    }
    Ok(out)
}

/// Known Ramsey numbers with explicit extremal graphs on `R - 1` vertices.
fn ramsey_table(r: usize, m: usize) -> Option<Graph> {
    match (r, m) {
        (_, 1) | (1, _) => Graph::empty(0).ok(),
        (2, m) => Graph::empty(m - 1).ok(),
        (r, 2) => Graph::complete(r - 1).ok(),
        (3, 3) => Graph::cycle(5).ok(),
        (3, 4) => {
            // Wagner graph: C8 plus the four long diagonals.
            let mut g = Graph::cycle(8).ok()?;
            for i in 0..4 {
                g.add_edge(i, i + 4).ok()?;
            }
            Some(g)
        }
        _ => None,
    }
}

fn is_ramsey_graph(g: &Graph, r: usize, m: usize) -> bool {
    find_clique_in(g, &g.vertices(), r).is_none() && g.first_independent_set_in(&g.vertices(), m).is_none()
}

/// A `K_r`-free graph on `n` vertices with no independent `m`-set, by
/// vertex-by-vertex extension: each new vertex picks its neighbours among
/// the earlier ones so that no `K_r` and no independent `m`-set appears.
/// `Err(())` when the node budget runs out.
pub fn search_ramsey_graph(r: usize, m: usize, n: usize, budget: u64, nodes: &mut u64) -> Result<Option<Graph>, ()> {
    fn place(
        g: &mut Graph,
        r: usize,
        m: usize,
        v: usize,
        u: usize,
        budget: u64,
        nodes: &mut u64,
    ) -> Result<bool, ()> {
        *nodes += 1;
        if *nodes > budget {
            return Err(());
        }
        if v == g.vertex_count() {
            return Ok(true);
        }
        if u == v {
            return place(g, r, m, v + 1, 0, budget, nodes);
        }
        let earlier = VertexSet::full(u);
        let nb = g.neighbors(v).intersection(&earlier);
        let non = earlier.difference(g.neighbors(v));
        // Join u and v: the common earlier neighbours must hold no K_{r-2}.
        if find_clique_in(g, &nb.intersection(g.neighbors(u)), r - 2).is_none() {
            g.add_edge(u, v).expect("in range");
            if place(g, r, m, v, u + 1, budget, nodes)? {
                return Ok(true);
            }
            g.remove_edge(u, v);
        }
        // Keep them apart: the common earlier non-neighbours must hold no
        // independent (m-2)-set.
        let common_non = non.difference(g.neighbors(u));
        if g.first_independent_set_in(&common_non, m - 2).is_none() && place(g, r, m, v, u + 1, budget, nodes)? {
            return Ok(true);
        }
        Ok(false)
    }
    if r < 2 || m < 2 {
        return Ok(None);
    }
    let mut g = Graph::empty(n).map_err(|_| ())?;
    Ok(place(&mut g, r, m, 0, 0, budget, nodes)?.then_some(g))
}

/// A `K_r`-free graph on `R(r, m) - 1` vertices with independence number
/// below `m`: from the table of known values, or by searching for the first
/// `N` with no such graph on `N` vertices.
pub fn ramsey_witness(r: usize, m: usize, budget: u64) -> Result<Graph, ConstructionError> {
    if r == 0 || m == 0 {
        return Err(invalid("ramsey_witness needs r, m >= 1"));
    }
    if let Some(g) = ramsey_table(r, m) {
        assert!(is_ramsey_graph(&g, r, m));
        return Ok(g);
    }
    let mut nodes = 0;
    let mut best = Graph::empty(0)?;
    for n in 1.. {
        match search_ramsey_graph(r, m, n, budget, &mut nodes) {
            Ok(Some(g)) => best = g,
            Ok(None) => break,
            Err(()) => return Err(ConstructionError::RamseyBudget { r, m, budget }),
        }
    }
    assert!(is_ramsey_graph(&best, r, m));
    Ok(best)
}

/// `R(r, m)`, as one more than the order of [`ramsey_witness`].
pub fn ramsey_number(r: usize, m: usize, budget: u64) -> Result<usize, ConstructionError> {
    Ok(ramsey_witness(r, m, budget)?.vertex_count() + 1)
}

/// `K_{n,...,n}` with `r - 2` parts as a repeating graph whose columns are
/// the parts; each column is one colour.
pub fn multipartite_repeating(r: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if r < 3 || n < 2 {
        return Err(invalid("multipartite_repeating needs r >= 3 and n >= 2"));
    }
    let rg = RepeatingGraph::from_base(Digraph::complete_with_loops(n).map_err(|e| invalid(e.to_string()))?, r - 2)?;
    let family = rg.column_family(1).map_err(|e| invalid(e.to_string()))?;
    let mut manifest = vec![Property::NoRainbow { m: n }, Property::ColumnsIndependent];
    // A single column has no pair to compare, so the base is undetermined.
    if r > 3 {
        manifest.push(Property::Repeating { strongly: true });
    }
    if r <= crate::pattern::MAX_PATTERN_ORDER {
        manifest.push(Property::PatternFree { pattern: PatternId::CompleteMinusEdge(r) });
    }
    Ok(ConstructionOutput {
        name: format!("multipartite-repeating-r{r}-n{n}"),
        family,
        repeating: Some(rg),
        manifest,
    })
}

/// Parameters `(r, t)` of the bounded-degree grid.
pub fn grid_parameters(k: usize, n: usize, m: usize) -> (usize, usize) {
    let r = n - m + 2;
    (r, (k + 1).div_ceil(r))
}

/// The repeating graph on `[t] x Z_n` with `(a, b) ~ (a', b')` for `a < a'`
/// and `b' - b` in `{0, ..., r - 1}` mod `n`, where `r = n - m + 2` and
/// `t = ceil((k + 1) / r)`; each column `m - 1` times.
pub fn bounded_degree_grid(k: usize, n: usize, m: usize) -> Result<ConstructionOutput, ConstructionError> {
    if m < 2 || m > n {
        return Err(invalid("bounded_degree_grid needs 2 <= m <= n"));
    }
    let (r, t) = grid_parameters(k, n, m);
    assert!(r * (t - 1) <= k);
    let mut base = Digraph::empty(n).map_err(|e| invalid(e.to_string()))?;
    for b in 0..n {
        for i in 0..r {
            base.add_arc(b, (b + i) % n).map_err(|e| invalid(e.to_string()))?;
        }
    }
    let rg = RepeatingGraph::from_base(base, t)?;
    let family = rg.column_family(m - 1).map_err(|e| invalid(e.to_string()))?;
    let mut manifest = vec![
        Property::NoRainbow { m },
        Property::Regular { degree: r * (t - 1) },
        Property::MaxDegree { bound: k },
        Property::ColumnsIndependent,
        Property::IndependentSetsInColumns { m },
    ];
    if t > 1 {
        manifest.push(Property::Repeating { strongly: true });
    }
    Ok(ConstructionOutput {
        name: format!("grid-k{k}-n{n}-m{m}"),
        family,
        repeating: Some(rg),
        manifest,
    })
}

/// The strongly repeating graph of `d` on `t` columns, each column `copies`
/// times, claimed to have no rainbow independent `m`-set.
pub fn digraph_repeating(
    d: &Digraph,
    t: usize,
    copies: usize,
    m: usize,
) -> Result<ConstructionOutput, ConstructionError> {
    let rg = crate::repeating::repeating_from_digraph(d, t)?;
    let family = rg.column_family(copies).map_err(|e| invalid(e.to_string()))?;
    let mut manifest = vec![Property::NoRainbow { m }, Property::ColumnsIndependent];
    if t > 1 {
        manifest.push(Property::Repeating { strongly: true });
    }
    Ok(ConstructionOutput {
        name: format!("digraph-repeating-{}-t{t}", d.vertex_count()),
        family,
        repeating: Some(rg),
        manifest,
    })
}

/// [`digraph_repeating`] for the directed `n`-cycle with columns repeated
/// `n - 1` times: `{C_4, ..., C_n}`-free with no rainbow independent `n`-set.
pub fn directed_cycle_repeating(n: usize, t: usize) -> Result<ConstructionOutput, ConstructionError> {
    if n < 3 {
        return Err(invalid("directed_cycle_repeating needs n >= 3"));
    }
    let d = Digraph::directed_cycle(n).map_err(|e| invalid(e.to_string()))?;
    let mut out = digraph_repeating(&d, t, n - 1, n)?;
    out.name = format!("directed-cycle-repeating-n{n}-t{t}");
    for s in 4..=n.min(crate::pattern::MAX_PATTERN_ORDER) {
        out.manifest.push(Property::PatternFree { pattern: PatternId::Cycle(s) });
    }
    Ok(out)
}
