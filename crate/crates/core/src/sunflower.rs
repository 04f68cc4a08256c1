//! Sunflower extraction and the reduction from general families to
//! families of pairwise disjoint sets.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::family::{ColoredFamily, RainbowSelection};

/// Members whose pairwise intersections all equal `core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower {
    pub core: VertexSet,
    /// Indices into the input list, increasing.
    pub members: Vec<usize>,
    /// `set \ core` for each member, in member order.
    pub petals: Vec<VertexSet>,
}

impl Sunflower {
    /// Checks the defining property against the sets it was drawn from.
    pub fn is_valid_for(&self, sets: &[VertexSet]) -> bool {
        self.members.len() == self.petals.len()
            && self.members.windows(2).all(|w| w[0] < w[1])
            && self.members.iter().zip(&self.petals).all(|(&i, p)| {
                sets.get(i)
                    .is_some_and(|s| self.core.is_subset(s) && s.difference(&self.core) == *p)
            })
            && self.petals.iter().enumerate().all(|(i, p)| {
                self.petals[i + 1..].iter().all(|q| !p.intersects(q))
            })
    }
}

/// `n! (k - 1)^n`, saturating.
pub fn sunflower_bound(n: usize, k: usize) -> u128 {
    let fact = (1..=n as u128).fold(1u128, |acc, i| acc.saturating_mul(i));
    let base = (k as u128).saturating_sub(1);
    (0..n).fold(fact, |acc, _| acc.saturating_mul(base))
}

/// A `k`-petal sunflower among `sets`, found by the classical recursion: a
/// greedy maximal disjoint subfamily either has `k` members or its union
/// holds an element common to many sets, which joins the core. Elements are
/// tried by decreasing frequency, ties to the lowest, so the search is
/// guaranteed to succeed once `sets.len() > n! (k - 1)^n` for `n`-sets.
pub fn find_sunflower(sets: &[VertexSet], k: usize) -> Option<Sunflower> {
    fn rec(sets: &[VertexSet], idx: &[usize], removed: VertexSet, k: usize) -> Option<(VertexSet, Vec<usize>)> {
        let mut seen = VertexSet::EMPTY;
        let mut disjoint = Vec::new();
        for &i in idx {
            let s = sets[i].difference(&removed);
            if !s.intersects(&seen) {
                seen = seen.union(&s);
                disjoint.push(i);
                if disjoint.len() == k {
                    return Some((removed, disjoint));
                }
            }
        }
        let mut counts: Vec<(usize, usize)> = seen
            .iter()
            .map(|x| (x, idx.iter().filter(|&&i| sets[i].contains(x)).count()))
            .filter(|&(_, c)| c >= k)
            .collect();
        counts.sort_by_key(|&(x, c)| (std::cmp::Reverse(c), x));
        for (x, _) in counts {
            let sub: Vec<usize> = idx.iter().copied().filter(|&i| sets[i].contains(x)).collect();
            let mut next = removed;
            next.insert(x);
            if let Some(found) = rec(sets, &sub, next, k) {
                return Some(found);
            }
        }
        None
    }
    if k == 0 {
        return Some(Sunflower {
            core: VertexSet::EMPTY,
            members: Vec::new(),
            petals: Vec::new(),
        });
    }
    let idx: Vec<usize> = (0..sets.len()).collect();
    let (core, members) = rec(sets, &idx, VertexSet::EMPTY, k)?;
    let petals = members.iter().map(|&i| sets[i].difference(&core)).collect();
    Some(Sunflower { core, members, petals })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SunflowerError {
    #[error("sets must all have the same size")]
    NotUniform,
    #[error("m = {m} exceeds the set size {n}")]
    MTooLarge { m: usize, n: usize },
    #[error("no {petals}-petal sunflower among {have} sets; the guarantee needs {bound}")]
    NoSunflower { petals: usize, have: usize, bound: u128 },
    #[error("the sunflower has {petals} members but {need} are needed to colour the core")]
    TooFewPetals { petals: usize, need: usize },
}

/// Reduces a rainbow `m`-set search over uniform `n`-sets to the disjoint
/// case: takes an `petals`-member sunflower with core `Y` and petal size `l`,
/// asks `disjoint_solver` for a rainbow `(m - n + l)`-set among the petals,
/// and completes it with vertices of `Y` under unused member colours.
///
/// `Ok(None)` means the sunflower was found but the disjoint instance has no
/// solution.
pub fn sunflower_reduce_rainbow(
    family: &ColoredFamily,
    m: usize,
    petals: usize,
    mut disjoint_solver: impl FnMut(&ColoredFamily, usize) -> Option<RainbowSelection>,
) -> Result<Option<RainbowSelection>, SunflowerError> {
    let n = match family.uniform_size() {
        Some(n) => n,
        None if family.is_empty() => 0,
        None => return Err(SunflowerError::NotUniform),
    };
    if m > n && !family.is_empty() {
        return Err(SunflowerError::MTooLarge { m, n });
    }
    let flower = find_sunflower(family.sets(), petals).ok_or(SunflowerError::NoSunflower {
        petals,
        have: family.len(),
        bound: sunflower_bound(n, petals),
    })?;
    let l = n - flower.core.len();
    let q = (m + l).saturating_sub(n);
    let mut assignments = Vec::with_capacity(m);
    if q > 0 {
        let petal_family =
            ColoredFamily::new(family.host().clone(), flower.petals.clone()).expect("subsets of independent sets");
        let Some(inner) = disjoint_solver(&petal_family, q) else {
            return Ok(None);
        };
        assert!(inner.len() >= q && inner.validate(&petal_family).is_ok());
        assignments.extend(inner.assignments.iter().take(q).map(|&(c, v)| (flower.members[c], v)));
    }
    let used: Vec<usize> = assignments.iter().map(|&(c, _)| c).collect();
    let fresh: Vec<usize> = flower.members.iter().copied().filter(|c| !used.contains(c)).collect();
    let need = m - q;
    if fresh.len() < need {
        return Err(SunflowerError::TooFewPetals {
            petals: flower.members.len(),
            need: q + need,
        });
    }
    assignments.extend(fresh.into_iter().zip(flower.core.take(need).iter()));
    let selection = RainbowSelection::new(assignments);
    debug_assert_eq!(selection.validate(family), Ok(()));
    Ok(Some(selection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::solver::find_rainbow;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn pairwise_core(sets: &[VertexSet], fl: &Sunflower) -> bool {
        fl.members.iter().enumerate().all(|(i, &a)| {
            fl.members[i + 1..]
                .iter()
                .all(|&b| sets[a].intersection(&sets[b]) == fl.core)
        })
    }

    #[test]
    fn disjoint_sets_have_empty_core() {
        let sets = vec![set(&[0, 1]), set(&[2, 3]), set(&[4, 5])];
        let fl = find_sunflower(&sets, 3).unwrap();
        assert_eq!(fl.core, VertexSet::EMPTY);
        assert_eq!(fl.members, vec![0, 1, 2]);
        assert!(fl.is_valid_for(&sets));
    }

    #[test]
    fn designed_core() {
        let sets = vec![set(&[0, 1, 2]), set(&[0, 1, 3]), set(&[0, 1, 4]), set(&[2, 3, 4])];
        let fl = find_sunflower(&sets, 3).unwrap();
        assert_eq!(fl.core, set(&[0, 1]));
        assert_eq!(fl.members, vec![0, 1, 2]);
        assert!(pairwise_core(&sets, &fl));
    }

    #[test]
    fn small_k_and_repeats() {
        assert_eq!(find_sunflower(&[], 0).unwrap().members, Vec::<usize>::new());
        assert_eq!(find_sunflower(&[], 1), None);
        let fl = find_sunflower(&[set(&[3, 4])], 1).unwrap();
        assert_eq!((fl.core, fl.members), (VertexSet::EMPTY, vec![0]));
        // Identical sets form a sunflower whose core is the whole set.
        let same = vec![set(&[1, 2]); 3];
        let fl = find_sunflower(&same, 3).unwrap();
        assert_eq!(fl.core, set(&[1, 2]));
        assert!(fl.petals.iter().all(VertexSet::is_empty));
    }

    #[test]
    fn any_two_pairs_form_a_sunflower() {
        let pairs: Vec<VertexSet> = (0..6).flat_map(|a| (a + 1..6).map(move |b| set(&[a, b]))).collect();
        for a in &pairs {
            for b in &pairs {
                let sets = [*a, *b];
                let fl = find_sunflower(&sets, 2).unwrap();
                assert!(fl.is_valid_for(&sets) && pairwise_core(&sets, &fl));
            }
        }
    }

    #[test]
    fn bound_is_not_enough_for_singletons() {
        assert_eq!(find_sunflower(&[set(&[0])], 2), None);
        assert_eq!(find_sunflower(&[set(&[0]), set(&[1])], 3), None);
        // Repeated sets are outside the guarantee.
        assert_eq!(find_sunflower(&[set(&[0]), set(&[0]), set(&[1])], 3), None);
    }

    #[test]
    fn bound_values() {
        assert_eq!(sunflower_bound(2, 3), 8);
        assert_eq!(sunflower_bound(3, 2), 6);
        assert_eq!(sunflower_bound(0, 5), 1);
    }

    fn subfamilies(all: &[VertexSet], size: usize, start: usize, acc: &mut Vec<VertexSet>, visit: &mut impl FnMut(&[VertexSet])) {
        if acc.len() == size {
            visit(acc);
            return;
        }
        for i in start..all.len() {
            acc.push(all[i]);
            subfamilies(all, size, i + 1, acc, visit);
            acc.pop();
        }
    }

    /// Every family of `n! (k - 1)^n + 1` distinct `n`-subsets of a 6-element
    /// ground set, for n <= 2 and k <= 3, yields a sunflower; for n = 2 the
    /// count `n! (k - 1)^n` itself already suffices.
    #[test]
    fn exhaustive_guarantee_small() {
        for (n, extra) in [(1, 1), (2, 0)] {
            let all: Vec<VertexSet> = (0u32..1 << 6)
                .filter(|b| b.count_ones() as usize == n)
                .map(|b| (0..6).filter(|&i| b >> i & 1 == 1).collect())
                .collect();
            for k in 2..=3 {
                let size = sunflower_bound(n, k) as usize + extra;
                subfamilies(&all, size, 0, &mut Vec::new(), &mut |sets| {
                    let fl = find_sunflower(sets, k).unwrap_or_else(|| panic!("{sets:?}"));
                    assert!(fl.is_valid_for(sets) && pairwise_core(sets, &fl));
                });
            }
        }
    }

    fn arb_uniform(n: usize, ground: usize, count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<VertexSet>> {
        prop::collection::vec(
            prop::sample::subsequence((0..ground).collect::<Vec<_>>(), n).prop_map(|v| v.into_iter().collect()),
            count,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn random_three_sets(sets in arb_uniform(3, 9, 1..60), k in 2usize..4) {
            let found = find_sunflower(&sets, k);
            if sets.len() as u128 > sunflower_bound(3, k) {
                prop_assert!(found.is_some());
            }
            if let Some(fl) = found {
                prop_assert_eq!(fl.members.len(), k);
                prop_assert!(fl.is_valid_for(&sets) && pairwise_core(&sets, &fl));
            }
        }
    }

    #[test]
    fn reduction_disjoint_pass_through() {
        let f = ColoredFamily::new(Graph::empty(6).unwrap(), vec![set(&[0, 1]), set(&[2, 3]), set(&[4, 5])]).unwrap();
        let sel = sunflower_reduce_rainbow(&f, 2, 3, find_rainbow).unwrap().unwrap();
        assert_eq!(sel.len(), 2);
        assert_eq!(sel.validate(&f), Ok(()));
    }

    #[test]
    fn reduction_uses_core_vertex() {
        // Vertex 0 is isolated and lies in every set; petals are pairwise
        // completely joined.
        let petals = [[1, 2], [3, 4], [5, 6]];
        let mut g = Graph::empty(7).unwrap();
        for (i, p) in petals.iter().enumerate() {
            for q in &petals[i + 1..] {
                for &u in p {
                    for &v in q {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
        }
        let f = ColoredFamily::new(g, vec![set(&[0, 1, 2]), set(&[0, 3, 4]), set(&[0, 5, 6])]).unwrap();
        let sel = sunflower_reduce_rainbow(&f, 2, 3, find_rainbow).unwrap().unwrap();
        assert_eq!(sel.validate(&f), Ok(()));
        assert!(sel.image().contains(0));
        // A rainbow 3-set needs petal vertices from two distinct sets.
        assert_eq!(sunflower_reduce_rainbow(&f, 3, 3, find_rainbow), Ok(None));
        assert!(find_rainbow(&f, 3).is_none());
    }

    #[test]
    fn reduction_on_even_cycle_matchings() {
        let g = Graph::cycle(6).unwrap();
        let f = ColoredFamily::repeated(g, &[(set(&[0, 2, 4]), 2), (set(&[1, 3, 5]), 2)]).unwrap();
        assert_eq!(sunflower_reduce_rainbow(&f, 3, 2, find_rainbow), Ok(None));
        assert!(matches!(
            sunflower_reduce_rainbow(&f, 3, 3, find_rainbow),
            Err(SunflowerError::NoSunflower { petals: 3, have: 4, bound: 48 })
        ));
    }

    fn arb_uniform_family() -> impl Strategy<Value = (ColoredFamily, usize)> {
        (crate::testutil::arb_graph(8), 1usize..=3, prop::collection::vec(any::<prop::sample::Index>(), 0..14))
            .prop_filter_map("no independent n-sets", |(g, n, picks)| {
                let pool = g.independent_sets(n);
                if pool.is_empty() {
                    return None;
                }
                let sets = picks.iter().map(|i| *i.get(&pool)).collect();
                Some((ColoredFamily::new(g, sets).unwrap(), n))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn reduction_output_validates((f, n) in arb_uniform_family(), m in 0usize..4, k in 1usize..5) {
            prop_assume!(m <= n);
            let result = sunflower_reduce_rainbow(&f, m, k, find_rainbow);
            match result {
                Ok(Some(sel)) => {
                    prop_assert_eq!(sel.len(), m);
                    prop_assert_eq!(sel.validate(&f), Ok(()));
                }
                Ok(None) => prop_assert!(m > 0),
                Err(SunflowerError::NoSunflower { .. }) => prop_assert!(find_sunflower(f.sets(), k).is_none()),
                Err(SunflowerError::TooFewPetals { petals, .. }) => prop_assert!(petals < m),
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }
}
