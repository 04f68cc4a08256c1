use crate::bitset::VertexSet;
use crate::family::{ColoredFamily, RainbowSelection};
use crate::solver::greedy_maximal_rainbow;

use super::{require_max_degree, require_sets, require_sizes, WitnessError};

/// A rainbow independent `n`-set from the first `2n - 1` sets (each of size
/// at least `n`) of a family in a graph of maximum degree 2.
///
/// Builds a maximal rainbow set `M` inducing a bipartite graph. If it uses
/// every colour, its larger side is the answer. Otherwise an unrepresented
/// set `I` is repaired inside `M`: each `v` in `I` outside `M` closes an odd
/// cycle `C_v` whose other vertices lie in `M`, and `I ∩ C_v` is swapped for
/// an equally large independent set of the path `C_v - v`.
pub fn degree2_rainbow(family: &ColoredFamily, n: usize) -> Result<RainbowSelection, WitnessError> {
    let g = family.host();
    require_max_degree(g, 2)?;
    if n == 0 {
        return Ok(RainbowSelection::default());
    }
    let count = 2 * n - 1;
    require_sets(family.len(), count)?;
    require_sizes(family.sets()[..count].iter().map(VertexSet::len), n)?;
    let prefix = ColoredFamily::new(g.clone(), family.sets()[..count].to_vec()).expect("prefix of a valid family");
    let greedy = greedy_maximal_rainbow(&prefix, |image| g.is_bipartite_in(image));
    let image = greedy.image();
    assert!(g.is_bipartite_in(&image));
    let owner = |v: usize| greedy.assignments.iter().find(|&&(_, u)| u == v).map(|&(c, _)| c);
    let chosen = if greedy.len() == count {
        let (a, b) = g.bipartition_in(&image).expect("bipartite image");
        let side = if a.len() >= b.len() { a } else { b };
        side.take(n)
    } else {
        let used = greedy.colors();
        let j = (0..count).find(|c| !used.contains(c)).expect("an unrepresented colour");
        let mut repaired = *prefix.set(j);
        for v in prefix.set(j).difference(&image).iter() {
            let mut with_v = image;
            with_v.insert(v);
            let cycle = g
                .components_in(&with_v)
                .into_iter()
                .find(|c| c.contains(v))
                .expect("v lies in some component");
            debug_assert!(!g.is_bipartite_in(&cycle));
            let hit = prefix.set(j).intersection(&cycle);
            let mut path = cycle;
            path.remove(v);
            let replacement = g
                .first_independent_set_in(&path, hit.len())
                .expect("a path on 2s vertices has an independent s-set");
            repaired = repaired.difference(&hit).union(&replacement);
        }
        assert!(repaired.is_subset(&image) && g.is_independent(&repaired));
        repaired.take(n)
    };
    Ok(RainbowSelection::new(
        chosen.iter().map(|v| (owner(v).expect("vertex of the image"), v)).collect(),
    ))
}

/// A rainbow independent 2-set from the first `ceil((k + 1) / n) + 1` sets of
/// a family in a graph of maximum degree `k`, where `n >= 2` is the smallest
/// set size.
pub fn maxdeg_rainbow_pair(family: &ColoredFamily, k: usize) -> Result<RainbowSelection, WitnessError> {
    let g = family.host();
    require_max_degree(g, k)?;
    let n = family.sets().iter().map(VertexSet::len).min().unwrap_or(0);
    if n < 2 {
        return Err(WitnessError::Precondition(format!("sets need at least 2 vertices, smallest has {n}")));
    }
    let count = (k + 1).div_ceil(n) + 1;
    require_sets(family.len(), count)?;
    let sets = &family.sets()[..count];
    for i in 0..count {
        for j in i + 1..count {
            if let Some(x) = sets[i].intersection(&sets[j]).first() {
                let mut rest = sets[i];
                rest.remove(x);
                let y = rest.first().expect("n >= 2");
                return Ok(RainbowSelection::new(vec![(i, y), (j, x)]));
            }
        }
    }
    // Disjoint: the later sets hold at least k + 1 vertices, more than N(u).
    let u = sets[0].first().expect("n >= 2");
    let later = sets[1..].iter().fold(VertexSet::EMPTY, |acc, s| acc.union(s));
    let w = later
        .difference(g.neighbors(u))
        .first()
        .expect("k + 1 candidates against at most k neighbours");
    let j = (1..count).find(|&j| sets[j].contains(w)).expect("w is in a later set");
    Ok(RainbowSelection::new(vec![(0, u), (j, w)]))
}
