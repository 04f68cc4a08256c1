use crate::bitset::VertexSet;
use crate::family::{ColoredFamily, RainbowSelection};
use crate::pattern::PatternId;

use super::{require_sets, require_sizes, WitnessError};

/// A rainbow independent `m`-set from the first `m` sets of a family in a
/// `K_{1,t+1}`-free graph, where every set has at least `n` vertices and
/// `m <= ceil(n / t)`.
///
/// Repeatedly takes the lowest vertex `v` of the last remaining set and
/// deletes `N[v]` from the others; each of them loses at most `t` vertices,
/// or else `v` with `t + 1` of its neighbours in that set is an induced star.
pub fn clawfree_rainbow(family: &ColoredFamily, t: usize, m: usize) -> Result<RainbowSelection, WitnessError> {
    if t == 0 {
        return Err(WitnessError::Precondition("t must be at least 1".into()));
    }
    require_sets(family.len(), m)?;
    let n = family.sets()[..m].iter().map(VertexSet::len).min().unwrap_or(0);
    if m > n.div_ceil(t) {
        return Err(WitnessError::Precondition(format!(
            "m = {m} exceeds ceil(n / t) = {} for n = {n}, t = {t}",
            n.div_ceil(t)
        )));
    }
    let g = family.host();
    let mut sets: Vec<VertexSet> = family.sets()[..m].to_vec();
    let mut assignments = Vec::with_capacity(m);
    for color in (0..m).rev() {
        let v = sets[color]
            .first()
            .ok_or(WitnessError::SetTooSmall { color, size: 0, need: 1 })?;
        assignments.push((color, v));
        for set in &mut sets[..color] {
            let hit = set.intersection(g.neighbors(v));
            if hit.len() > t {
                let mut witness = hit.take(t + 1);
                witness.insert(v);
                return Err(WitnessError::PatternFound {
                    pattern: PatternId::Star(t + 1),
                    witness,
                });
            }
            *set = set.difference(&g.closed_neighbors(v));
        }
    }
    Ok(RainbowSelection::new(assignments))
}

/// A full rainbow independent set from `k` sets of size at least `k` in a
/// disjoint union of cliques. Independent sets there form a partition
/// matroid, so taking for each colour in turn any vertex from an unused
/// clique always succeeds.
pub fn cliquepartition_rainbow(family: &ColoredFamily) -> Result<RainbowSelection, WitnessError> {
    let g = family.host();
    for v in g.vertices().iter() {
        let nb = g.neighbors(v);
        for u in nb.iter() {
            if let Some(w) = nb.above(u).difference(g.neighbors(u)).first() {
                return Err(WitnessError::PatternFound {
                    pattern: PatternId::CompleteMinusEdge(3),
                    witness: [u, v, w].into_iter().collect(),
                });
            }
        }
    }
    let k = family.len();
    require_sizes(family.sizes(), k)?;
    let mut blocked = VertexSet::EMPTY;
    let mut assignments = Vec::with_capacity(k);
    for (color, set) in family.sets().iter().enumerate() {
        let v = set
            .difference(&blocked)
            .first()
            .expect("augmentation in a partition matroid");
        assignments.push((color, v));
        blocked = blocked.union(&g.closed_neighbors(v));
    }
    Ok(RainbowSelection::new(assignments))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::sample::{sample, trial_rng, SampleClass};
    use crate::solver::find_rainbow;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn disjoint_cliques_with_t_one() {
        // Three disjoint edges; each colour is a transversal.
        let g = Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let f = ColoredFamily::repeated(g, &[(set(&[0, 2, 4]), 2), (set(&[1, 3, 5]), 1)]).unwrap();
        let sel = clawfree_rainbow(&f, 1, 3).unwrap();
        assert_eq!(sel.validate(&f), Ok(()));
        let sel = cliquepartition_rainbow(&f).unwrap();
        assert_eq!(sel.len(), 3);
        assert_eq!(sel.validate(&f), Ok(()));
    }

    #[test]
    fn single_step() {
        let f = ColoredFamily::new(Graph::cycle(6).unwrap(), vec![set(&[1, 3, 5])]).unwrap();
        assert_eq!(clawfree_rainbow(&f, 2, 1).unwrap().assignments, vec![(0, 1)]);
    }

    #[test]
    fn edgeless_host_returns_the_set() {
        let f = ColoredFamily::repeated(Graph::empty(3).unwrap(), &[(set(&[0, 1, 2]), 3)]).unwrap();
        assert_eq!(cliquepartition_rainbow(&f).unwrap().image(), set(&[0, 1, 2]));
    }

    #[test]
    fn violations_are_reported() {
        let p3 = Graph::path(3).unwrap();
        let f = ColoredFamily::new(p3, vec![set(&[0, 2])]).unwrap();
        assert_eq!(
            cliquepartition_rainbow(&f),
            Err(WitnessError::PatternFound {
                pattern: PatternId::CompleteMinusEdge(3),
                witness: set(&[0, 1, 2])
            })
        );
        // A claw centred at 0 against t = 2.
        let claw = Graph::new(6, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let f = ColoredFamily::new(claw, vec![set(&[1, 2, 3]), set(&[0, 4, 5])]).unwrap();
        assert_eq!(
            clawfree_rainbow(&f, 2, 2),
            Err(WitnessError::PatternFound {
                pattern: PatternId::Star(3),
                witness: set(&[0, 1, 2, 3])
            })
        );
        assert!(matches!(clawfree_rainbow(&f, 3, 2), Err(WitnessError::Precondition(_))));
    }

    #[test]
    fn random_claw_free_instances() {
        for trial in 0..200 {
            let mut rng = trial_rng(31, trial);
            let n = 2 + (trial as usize % 5);
            let m = n.div_ceil(2);
            let inst = sample(SampleClass::ClawFree, n, m, &mut rng).unwrap();
            let sel = clawfree_rainbow(&inst.family, 2, m).unwrap();
            assert_eq!(sel.len(), m);
            assert_eq!(sel.validate(&inst.family), Ok(()));
            assert!(find_rainbow(&inst.family, m).is_some());
        }
    }

    #[test]
    fn random_star_free_instances() {
        for trial in 0..100 {
            let mut rng = trial_rng(32, trial);
            let t = 1 + trial as usize % 3;
            let n = 2 + trial as usize % 4;
            let m = n.div_ceil(t);
            let inst = sample(SampleClass::StarFree(t), n, m, &mut rng).unwrap();
            let sel = clawfree_rainbow(&inst.family, t, m).unwrap();
            assert_eq!(sel.validate(&inst.family), Ok(()));
        }
    }

    #[test]
    fn random_disjoint_cliques() {
        for trial in 0..100 {
            let mut rng = trial_rng(33, trial);
            let n = 1 + trial as usize % 6;
            let inst = sample(SampleClass::StarFree(1), n, n, &mut rng).unwrap();
            let sel = cliquepartition_rainbow(&inst.family).unwrap();
            assert_eq!(sel.len(), n);
            assert_eq!(sel.validate(&inst.family), Ok(()));
        }
    }
}
