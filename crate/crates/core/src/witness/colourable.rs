use crate::bitset::VertexSet;
use crate::family::{ColoredFamily, RainbowSelection};
use crate::graph::Graph;
use crate::recognize::color_classes;
use crate::solver::greedy_maximal_rainbow;

use super::{require_sets, require_sizes, WitnessError};

fn check_coloring(g: &Graph, coloring: &[usize], k: usize) -> Result<(), WitnessError> {
    if coloring.len() != g.vertex_count() {
        return Err(WitnessError::Precondition(format!(
            "colouring covers {} vertices, graph has {}",
            coloring.len(),
            g.vertex_count()
        )));
    }
    if let Some(&c) = coloring.iter().find(|&&c| c >= k) {
        return Err(WitnessError::Precondition(format!("colour {c} is not below k = {k}")));
    }
    match g.edges().into_iter().find(|&(u, v)| coloring[u] == coloring[v]) {
        Some((u, v)) => Err(WitnessError::ImproperColoring { u, v }),
        None => Ok(()),
    }
}

/// Shared tail: from a greedy maximal rainbow set over `sets`, either every
/// colour is represented and some colour class holds `m` of its vertices, or
/// an unrepresented set lies inside the image and supplies `m` vertices.
fn extract(
    family: &ColoredFamily,
    coloring: &[usize],
    k: usize,
    count: usize,
    m: usize,
) -> Result<RainbowSelection, WitnessError> {
    let prefix = ColoredFamily::new(family.host().clone(), family.sets()[..count].to_vec())
        .expect("prefix of a valid family");
    let greedy = greedy_maximal_rainbow(&prefix, |_| true);
    let owner = |v: usize| greedy.assignments.iter().find(|&&(_, u)| u == v).map(|&(c, _)| c);
    let chosen: VertexSet = if greedy.len() == count {
        let image = greedy.image();
        color_classes(coloring, k)
            .into_iter()
            .map(|class| class.intersection(&image))
            .find(|part| part.len() >= m)
            .expect("pigeonhole over k classes")
            .take(m)
    } else {
        let used = greedy.colors();
        let j = (0..count).find(|c| !used.contains(c)).expect("an unrepresented colour");
        let set = prefix.set(j);
        assert!(set.is_subset(&greedy.image()), "maximality puts the unrepresented set inside the image");
        set.take(m)
    };
    Ok(RainbowSelection::new(
        chosen.iter().map(|v| (owner(v).expect("vertex of the image"), v)).collect(),
    ))
}

/// A rainbow independent `m`-set from the first `k(m-1)+1` sets (each of
/// size at least `m`) of a family in a graph with the given proper
/// `k`-colouring.
pub fn colourable_rainbow(
    family: &ColoredFamily,
    coloring: &[usize],
    k: usize,
    m: usize,
) -> Result<RainbowSelection, WitnessError> {
    check_coloring(family.host(), coloring, k)?;
    if m == 0 {
        return Ok(RainbowSelection::default());
    }
    let count = k * (m - 1) + 1;
    require_sets(family.len(), count)?;
    require_sizes(family.sets()[..count].iter().map(VertexSet::len), m)?;
    extract(family, coloring, k, count, m)
}

/// As [`colourable_rainbow`], with colour `i` (1-based) only required to have
/// `min(i, n)` vertices, where `n >= m`. The greedy pass in colour order
/// represents every colour `i <= n`, so an unrepresented colour has at least
/// `n` vertices.
pub fn staircase_colourable_rainbow(
    family: &ColoredFamily,
    coloring: &[usize],
    k: usize,
    n: usize,
    m: usize,
) -> Result<RainbowSelection, WitnessError> {
    check_coloring(family.host(), coloring, k)?;
    if m > n {
        return Err(WitnessError::Precondition(format!("m = {m} exceeds n = {n}")));
    }
    if m == 0 {
        return Ok(RainbowSelection::default());
    }
    let count = k * (m - 1) + 1;
    require_sets(family.len(), count)?;
    for (color, set) in family.sets()[..count].iter().enumerate() {
        let need = (color + 1).min(n);
        if set.len() < need {
            return Err(WitnessError::SetTooSmall {
                color,
                size: set.len(),
                need,
            });
        }
    }
    extract(family, coloring, k, count, m)
}
