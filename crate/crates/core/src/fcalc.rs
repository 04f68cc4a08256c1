//! Exact values of `f_G(n, m)` for one small graph, certification of lower
//! bound witnesses, and sampled checks of upper bounds over graph classes.
//!
//! `f_G(n, m)` is one more than the largest family of independent `n`-sets of
//! `G` (repeats allowed) with no rainbow independent `m`-set. Such a family
//! never needs a set more than `m - 1` times: `m` copies of an independent
//! `n`-set with `n >= m` already contain a rainbow `m`-set. The search below
//! enumerates multisets over `I_n(G)` as nondecreasing index lists with that
//! multiplicity cap.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::family::ColoredFamily;
use crate::graph::Graph;
use crate::sample::{sample, trial_rng, SampleClass, SampleError};
use crate::solver::{brute_rainbow, find_rainbow, BudgetExceeded};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FcalcError {
    #[error("m = {m} exceeds n = {n}")]
    MTooLarge { n: usize, m: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FValue {
    Defined(usize),
    /// `G` has no independent `n`-set.
    Undefined,
}

impl FValue {
    pub fn defined(self) -> Option<usize> {
        match self {
            FValue::Defined(v) => Some(v),
            FValue::Undefined => None,
        }
    }
}

impl Serialize for FValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FValue::Defined(v) => s.serialize_u64(*v as u64),
            FValue::Undefined => s.serialize_str("undefined"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FResult {
    /// When `complete` is false this is only a lower bound.
    pub value: FValue,
    /// A family of `value - 1` sets with no rainbow `m`-set, first in search
    /// order. `None` when the value is undefined.
    pub witness: Option<ColoredFamily>,
    pub nodes: u64,
    /// False if the node budget ran out before the search finished.
    pub complete: bool,
}

/// The rainbow images a family can realise, by size, below `m`. Appending a
/// set `S` creates a rainbow `m`-set exactly when some realisable
/// `(m-1)`-image extends by a vertex of `S`.
#[derive(Clone)]
struct Images {
    levels: Vec<HashSet<VertexSet>>,
}

impl Images {
    fn new(m: usize) -> Self {
        let mut levels = vec![HashSet::new(); m];
        levels[0].insert(VertexSet::EMPTY);
        Self { levels }
    }

    fn extensions<'a>(g: &'a Graph, base: &'a HashSet<VertexSet>, set: VertexSet) -> impl Iterator<Item = VertexSet> + 'a {
        base.iter().flat_map(move |img| {
            let blocked = img.union(&g.neighborhood_of(img));
            set.difference(&blocked).iter().map(move |v| {
                let mut next = *img;
                next.insert(v);
                next
            })
        })
    }

    fn completes(&self, g: &Graph, set: VertexSet) -> bool {
        let top = self.levels.last().expect("m >= 1");
        Self::extensions(g, top, set).next().is_some()
    }

    fn with(&self, g: &Graph, set: VertexSet) -> Self {
        let mut next = self.clone();
        for j in (1..self.levels.len()).rev() {
            let added: Vec<VertexSet> = Self::extensions(g, &self.levels[j - 1], set).collect();
            next.levels[j].extend(added);
        }
        next
    }
}

struct Search<'a> {
    g: &'a Graph,
    sets: &'a [VertexSet],
    cap: usize,
    budget: Option<u64>,
    nodes: u64,
    out_of_budget: bool,
    stack: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn rec(&mut self, start: usize, used_at_start: usize, images: &Images) {
        if self.out_of_budget {
            return;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.out_of_budget = true;
            return;
        }
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        let capacity = (self.sets.len() - start) * self.cap - used_at_start;
        if self.stack.len() + capacity <= self.best.len() {
            return;
        }
        for j in start..self.sets.len() {
            let used = if j == start { used_at_start } else { 0 };
            if used == self.cap || images.completes(self.g, self.sets[j]) {
                continue;
            }
            let next = images.with(self.g, self.sets[j]);
            self.stack.push(j);
            self.rec(j, used + 1, &next);
            self.stack.pop();
        }
    }
}

fn setup(g: &Graph, n: usize, m: usize) -> Result<Option<Vec<VertexSet>>, FcalcError> {
    if m > n {
        return Err(FcalcError::MTooLarge { n, m });
    }
    let sets = g.independent_sets(n);
    Ok((!sets.is_empty()).then_some(sets))
}

fn finish(g: &Graph, sets: &[VertexSet], best: &[usize], nodes: u64, complete: bool) -> FResult {
    let family = ColoredFamily::new(g.clone(), best.iter().map(|&i| sets[i]).collect())
        .expect("independent sets of the host");
    FResult {
        value: FValue::Defined(best.len() + 1),
        witness: Some(family),
        nodes,
        complete,
    }
}

fn undefined() -> FResult {
    FResult {
        value: FValue::Undefined,
        witness: None,
        nodes: 0,
        complete: true,
    }
}

/// `f_G(n, m)` by exhaustive search, optionally stopping after `budget` nodes.
///
/// Families are explored depth first as nondecreasing lists of indices into
/// `I_n(G)` (lexicographic order of the sets), and a branch is cut once its
/// remaining capacity cannot beat the best family found so far.
pub fn f_exact(g: &Graph, n: usize, m: usize, budget: Option<u64>) -> Result<FResult, FcalcError> {
    if m == 0 {
        return Ok(f_zero(g, n));
    }
    let Some(sets) = setup(g, n, m)? else {
        return Ok(undefined());
    };
    let mut search = Search {
        g,
        sets: &sets,
        cap: m - 1,
        budget,
        nodes: 0,
        out_of_budget: false,
        stack: Vec::new(),
        best: Vec::new(),
    };
    search.rec(0, 0, &Images::new(m));
    Ok(finish(g, &sets, &search.best, search.nodes, !search.out_of_budget))
}

/// As [`f_exact`], with the top-level branches (the first set of the family)
/// searched in parallel. Each branch keeps its own bound, so the node count
/// does not depend on the number of workers; the value and witness equal the
/// sequential ones. The budget applies per branch.
pub fn f_exact_parallel(g: &Graph, n: usize, m: usize, budget: Option<u64>) -> Result<FResult, FcalcError> {
    if m <= 1 {
        return f_exact(g, n, m, budget);
    }
    let Some(sets) = setup(g, n, m)? else {
        return Ok(undefined());
    };
    let root = Images::new(m);
    let branches: Vec<(Vec<usize>, u64, bool)> = (0..sets.len())
        .into_par_iter()
        .map(|j| {
            let mut search = Search {
                g,
                sets: &sets,
                cap: m - 1,
                budget,
                nodes: 0,
                out_of_budget: false,
                stack: vec![j],
                best: Vec::new(),
            };
            search.rec(j, 1, &root.with(g, sets[j]));
            (search.best, search.nodes, search.out_of_budget)
        })
        .collect();
    let nodes = 1 + branches.iter().map(|b| b.1).sum::<u64>();
    let complete = branches.iter().all(|b| !b.2);
    let mut best: &[usize] = &[];
    for (b, _, _) in &branches {
        if b.len() > best.len() {
            best = b;
        }
    }
    Ok(finish(g, &sets, best, nodes, complete))
}

fn f_zero(g: &Graph, n: usize) -> FResult {
    if g.independent_sets(n).is_empty() {
        return undefined();
    }
    // The empty set is a rainbow 0-set of every family, the empty one included.
    FResult {
        value: FValue::Defined(0),
        witness: None,
        nodes: 0,
        complete: true,
    }
}

/// Reference enumerator for `f_G(n, m)`: grows every bad multiset level by
/// level with no multiplicity cap and no bound, testing each candidate with
/// [`brute_rainbow`]. Only for tiny inputs.
pub fn f_naive(g: &Graph, n: usize, m: usize) -> Result<FValue, BudgetExceeded> {
    let sets = g.independent_sets(n);
    if sets.is_empty() {
        return Ok(FValue::Undefined);
    }
    let bad = |family: &[usize]| -> Result<bool, BudgetExceeded> {
        let f = ColoredFamily::new(g.clone(), family.iter().map(|&i| sets[i]).collect())
            .expect("independent sets of the host");
        Ok(brute_rainbow(&f, m, crate::solver::DEFAULT_BRUTE_BUDGET)?.is_none())
    };
    let mut level: Vec<Vec<usize>> = if bad(&[])? { vec![Vec::new()] } else { Vec::new() };
    let mut size = 0;
    while !level.is_empty() {
        let mut next = Vec::new();
        for family in &level {
            let from = family.last().copied().unwrap_or(0);
            for j in from..sets.len() {
                let mut bigger = family.clone();
                bigger.push(j);
                if bad(&bigger)? {
                    next.push(bigger);
                }
            }
        }
        size += 1;
        level = next;
    }
    // `size` is one past the largest level that had a bad family.
    Ok(FValue::Defined(size))
}

/// True iff `family` has no rainbow independent `m`-set, which certifies
/// `f_G(n, m) > |family|` for its host.
pub fn certify_lower_bound(family: &ColoredFamily, m: usize) -> bool {
    find_rainbow(family, m).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub class: String,
    pub sets: usize,
    pub n: usize,
    pub m: usize,
    pub trials: u64,
    pub seed: u64,
    /// Trial numbers whose instance had no rainbow `m`-set.
    pub failures: Vec<u64>,
}

/// One sampled trial: whether the drawn family has a rainbow `m`-set.
pub fn property_trial(class: SampleClass, sets: usize, n: usize, m: usize, seed: u64, trial: u64) -> Result<bool, SampleError> {
    let inst = sample(class, n, sets, &mut trial_rng(seed, trial))?;
    Ok(find_rainbow(&inst.family, m).is_some())
}

/// Draws `trials` instances of `sets` independent `n`-sets from `class` and
/// records every trial without a rainbow `m`-set.
pub fn property_upper_bound(
    class: SampleClass,
    sets: usize,
    n: usize,
    m: usize,
    trials: u64,
    seed: u64,
) -> Result<PropertyReport, SampleError> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        if !property_trial(class, sets, n, m, seed, trial)? {
            failures.push(trial);
        }
    }
    Ok(PropertyReport {
        class: class.to_string(),
        sets,
        n,
        m,
        trials,
        seed,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::constructions::drisko_cycle;
    use crate::testutil::arb_graph;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn value(g: &Graph, n: usize, m: usize) -> FValue {
        f_exact(g, n, m, None).unwrap().value
    }

    #[test]
    fn four_cycle() {
        let r = f_exact(&Graph::cycle(4).unwrap(), 2, 2, None).unwrap();
        assert_eq!(r.value, FValue::Defined(3));
        assert!(r.complete);
        assert_eq!(r.witness.unwrap().sets(), &[set(&[0, 2]), set(&[1, 3])]);
    }

    #[test]
    fn edgeless_gives_m() {
        for n in 1..=4 {
            let g = Graph::empty(n).unwrap();
            for m in 1..=n {
                let r = f_exact(&g, n, m, None).unwrap();
                assert_eq!(r.value, FValue::Defined(m));
                assert_eq!(r.witness.unwrap().sets(), vec![VertexSet::full(n); m - 1]);
            }
        }
    }

    #[test]
    fn undefined_and_errors() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(value(&k4, 2, 2), FValue::Undefined);
        assert_eq!(value(&k4, 2, 0), FValue::Undefined);
        assert_eq!(value(&k4, 1, 1), FValue::Defined(1));
        assert_eq!(value(&k4, 1, 0), FValue::Defined(0));
        assert_eq!(f_exact(&k4, 1, 2, None).unwrap_err(), FcalcError::MTooLarge { n: 1, m: 2 });
        assert_eq!(serde_json::to_string(&FValue::Undefined).unwrap(), "\"undefined\"");
        assert_eq!(serde_json::to_string(&FValue::Defined(3)).unwrap(), "3");
    }

    #[test]
    fn complete_bipartite_three_three() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(value(&g, 3, 2), FValue::Defined(3));
        assert_eq!(f_naive(&g, 3, 2).unwrap(), FValue::Defined(3));
    }

    #[test]
    fn six_cycle_matches_drisko() {
        // C6 is the line graph of itself; its two perfect matchings with
        // multiplicity give f = 2n - 1 at n = 3.
        let g = Graph::cycle(6).unwrap();
        assert_eq!(value(&g, 3, 3), FValue::Defined(5));
        assert_eq!(value(&g, 3, 2), FValue::Defined(2));
        let d = drisko_cycle(3).unwrap();
        assert!(certify_lower_bound(&d.family, 3));
    }

    #[test]
    fn budget_marks_incomplete() {
        let g = Graph::cycle(8).unwrap();
        let r = f_exact(&g, 3, 3, Some(5)).unwrap();
        assert!(!r.complete);
        assert!(r.nodes <= 6);
        assert!(f_exact(&g, 3, 3, None).unwrap().complete);
    }

    #[test]
    fn parallel_matches_sequential() {
        for g in [
            Graph::cycle(7).unwrap(),
            Graph::complete_multipartite(&[2, 3, 3]).unwrap(),
            Graph::path(7).unwrap(),
        ] {
            for (n, m) in [(2, 2), (3, 2), (3, 3)] {
                let a = f_exact(&g, n, m, None).unwrap();
                let b = f_exact_parallel(&g, n, m, None).unwrap();
                assert_eq!(a.value, b.value);
                assert_eq!(a.witness, b.witness);
            }
        }
    }

    #[test]
    fn property_report_is_deterministic() {
        let a = property_upper_bound(SampleClass::BipartiteLine, 5, 3, 3, 20, 7).unwrap();
        assert!(a.failures.is_empty());
        assert_eq!(a, property_upper_bound(SampleClass::BipartiteLine, 5, 3, 3, 20, 7).unwrap());
        // Too few colours: Drisko-type failures are expected to show up.
        let b = property_upper_bound(SampleClass::BipartiteLine, 2, 3, 3, 20, 7).unwrap();
        assert_eq!(b.failures.len(), 20);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn agrees_with_naive(g in arb_graph(6), n in 1usize..=3, m in 1usize..=3) {
            prop_assume!(m <= n);
            let r = f_exact(&g, n, m, None).unwrap();
            prop_assert_eq!(r.value, f_naive(&g, n, m).unwrap());
            if let Some(w) = r.witness {
                prop_assert!(certify_lower_bound(&w, m));
                prop_assert!(r.value.defined().unwrap() >= m);
            }
        }

        #[test]
        fn monotone_in_m_and_n(g in arb_graph(6)) {
            for n in 1..=3 {
                for m in 1..n {
                    if let (Some(a), Some(b)) = (value(&g, n, m).defined(), value(&g, n, m + 1).defined()) {
                        prop_assert!(a <= b);
                    }
                    if let (Some(a), Some(b)) = (value(&g, n, m).defined(), value(&g, n - 1, m).defined()) {
                        prop_assert!(a <= b, "n {} m {}: {} > {}", n, m, a, b);
                    }
                }
            }
        }
    }
}
