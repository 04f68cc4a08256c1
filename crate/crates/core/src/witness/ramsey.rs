use crate::bitset::VertexSet;
use crate::family::{ColoredFamily, RainbowSelection};
use crate::pattern::{find_clique_in, PatternId};
use crate::solver::greedy_maximal_rainbow;

use super::{require_sets, require_sizes, WitnessError};

/// A rainbow independent `m`-set from the first `bound` sets (each of size at
/// least `m`) of a family in a `K_r`-free graph, where the caller supplies
/// `bound >= R(r, m)`.
///
/// A greedy maximal rainbow set either represents all `bound` colours, and
/// then holds an independent `m`-set, or contains some unrepresented set
/// entirely. A supplied bound that is too small is reported rather than
/// trusted.
pub fn ramsey_maximal_rainbow(
    family: &ColoredFamily,
    r: usize,
    m: usize,
    bound: usize,
) -> Result<RainbowSelection, WitnessError> {
    if m == 0 {
        return Ok(RainbowSelection::default());
    }
    require_sets(family.len(), bound)?;
    require_sizes(family.sets()[..bound].iter().map(VertexSet::len), m)?;
    let g = family.host();
    let prefix = ColoredFamily::new(g.clone(), family.sets()[..bound].to_vec()).expect("prefix of a valid family");
    let greedy = greedy_maximal_rainbow(&prefix, |_| true);
    let image = greedy.image();
    let owner = |v: usize| greedy.assignments.iter().find(|&&(_, u)| u == v).map(|&(c, _)| c);
    let chosen = if greedy.len() == bound {
        match g.first_independent_set_in(&image, m) {
            Some(s) => s,
            None => {
                return Err(match find_clique_in(g, &image, r) {
                    Some(witness) => WitnessError::PatternFound {
                        pattern: PatternId::CompleteK(r),
                        witness,
                    },
                    None => WitnessError::RamseyBoundTooSmall { image, m, r, bound },
                })
            }
        }
    } else {
        let used = greedy.colors();
        let j = (0..bound).find(|c| !used.contains(c)).expect("an unrepresented colour");
        assert!(prefix.set(j).is_subset(&image));
        prefix.set(j).take(m)
    };
    Ok(RainbowSelection::new(
        chosen.iter().map(|v| (owner(v).expect("vertex of the image"), v)).collect(),
    ))
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
    fn edgeless_transversal() {
        let f = ColoredFamily::new(Graph::empty(3).unwrap(), vec![set(&[0, 1, 2]); 3]).unwrap();
        let sel = ramsey_maximal_rainbow(&f, 2, 3, 3).unwrap();
        assert_eq!(sel, RainbowSelection::new(vec![(0, 0), (1, 1), (2, 2)]));
    }

    fn blown_up_pentagon() -> ColoredFamily {
        // Each vertex of C5 becomes an independent 4-set.
        let mut g = Graph::empty(20).unwrap();
        for i in 0..5 {
            let j = (i + 1) % 5;
            for a in 0..4 {
                for b in 0..4 {
                    g.add_edge(4 * i + a, 4 * j + b).unwrap();
                }
            }
        }
        let parts: Vec<VertexSet> = (0..5).map(|i| (4 * i..4 * i + 4).collect()).collect();
        ColoredFamily::new(g, parts).unwrap()
    }

    #[test]
    fn pentagon_parts_need_a_sixth_set() {
        let f = blown_up_pentagon();
        assert!(find_rainbow(&f, 3).is_none());
        for extra in [set(&[0, 1, 8, 9]), set(&[4, 5, 12, 13]), set(&[2, 3, 10, 11]), set(&[4, 5, 6, 7])] {
            let f6 = f.with_set(extra).unwrap();
            let sel = ramsey_maximal_rainbow(&f6, 3, 3, 6).unwrap();
            assert_eq!(sel.validate(&f6), Ok(()));
        }
    }

    #[test]
    fn too_small_bound_is_reported() {
        let f = blown_up_pentagon();
        assert!(matches!(
            ramsey_maximal_rainbow(&f, 3, 3, 5),
            Err(WitnessError::RamseyBoundTooSmall { m: 3, r: 3, bound: 5, .. })
        ));
        let k4 = ColoredFamily::new(Graph::complete(4).unwrap(), vec![VertexSet::EMPTY; 0]).unwrap();
        assert_eq!(ramsey_maximal_rainbow(&k4, 3, 0, 1), Ok(RainbowSelection::default()));
    }

    #[test]
    fn triangle_is_reported() {
        // Triangle with a pendant: the image {0, 1, 3} holds the pair {0, 3}.
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let f = ColoredFamily::new(g.clone(), vec![set(&[0, 3]), set(&[1, 3]), set(&[0, 3])]).unwrap();
        assert_eq!(ramsey_maximal_rainbow(&f, 3, 2, 3).unwrap().validate(&f), Ok(()));
        let f = ColoredFamily::new(
            Graph::new(6, &[(0, 2), (0, 4), (2, 4)]).unwrap(),
            vec![set(&[0, 1]), set(&[2, 3]), set(&[4, 5]), set(&[0, 1])],
        )
        .unwrap();
        // The image {0, 2, 4, 1} holds an independent pair, so no error.
        assert!(ramsey_maximal_rainbow(&f, 3, 2, 4).is_ok());
        let f = ColoredFamily::new(
            Graph::new(6, &[(0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5), (0, 3), (2, 5), (4, 1)]).unwrap(),
            vec![set(&[0, 1]), set(&[2, 3]), set(&[4, 5])],
        )
        .unwrap();
        assert_eq!(
            ramsey_maximal_rainbow(&f, 3, 2, 3),
            Err(WitnessError::PatternFound { pattern: PatternId::CompleteK(3), witness: set(&[0, 2, 4]) })
        );
    }

    #[test]
    fn random_triangle_free_instances() {
        for trial in 0..200 {
            let mut rng = trial_rng(71, trial);
            let n = 3 + trial as usize % 2;
            let inst = sample(SampleClass::KrFree(3), n, 6, &mut rng).unwrap();
            let sel = ramsey_maximal_rainbow(&inst.family, 3, 3, 6).unwrap();
            assert_eq!(sel.len(), 3);
            assert_eq!(sel.validate(&inst.family), Ok(()));
            assert!(find_rainbow(&inst.family, 3).is_some());
        }
    }
}
