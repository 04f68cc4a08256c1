//! Exact search for partial rainbow independent sets.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::family::{ColoredFamily, RainbowSelection};
use crate::graph::Graph;

/// Default node budget for [`brute_rainbow`].
pub const DEFAULT_BRUTE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("enumeration budget of {budget} choice functions exceeded")]
pub struct BudgetExceeded {
    pub budget: u64,
}

/// A rainbow independent `m`-set of `family`, if one exists.
pub fn find_rainbow(family: &ColoredFamily, m: usize) -> Option<RainbowSelection> {
    find_rainbow_in(family.host(), family.sets(), m, &mut 0)
}

/// Search over raw sets (assumed independent in `g`), adding the number of
/// search nodes visited to `nodes`.
///
/// Colours are tried in order of ascending set size, then by set contents,
/// then by index; vertices in ascending order; "use this colour" before
/// "skip it". Identical sets are adjacent in this order and are used as a
/// prefix with increasing vertices, which removes copy-permutation symmetry.
pub fn find_rainbow_in(
    g: &Graph,
    sets: &[VertexSet],
    m: usize,
    nodes: &mut u64,
) -> Option<RainbowSelection> {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by(|&a, &b| {
        sets[a]
            .len()
            .cmp(&sets[b].len())
            .then_with(|| sets[a].cmp(&sets[b]))
            .then(a.cmp(&b))
    });
    let ordered: Vec<VertexSet> = order.iter().map(|&c| sets[c]).collect();
    let mut search = Search {
        g,
        sets: &ordered,
        m,
        picks: vec![None; ordered.len()],
        chosen: 0,
        nodes: 0,
    };
    let found = search.rec(0, VertexSet::EMPTY);
    *nodes += search.nodes;
    found.then(|| {
        RainbowSelection::new(
            search
                .picks
                .iter()
                .enumerate()
                .filter_map(|(i, p)| p.map(|v| (order[i], v)))
                .collect(),
        )
    })
}

struct Search<'a> {
    g: &'a Graph,
    sets: &'a [VertexSet],
    m: usize,
    picks: Vec<Option<usize>>,
    chosen: usize,
    nodes: u64,
}

impl Search<'_> {
    fn rec(&mut self, i: usize, forbidden: VertexSet) -> bool {
        self.nodes += 1;
        if self.chosen == self.m {
            return true;
        }
        let mut live_colors = 0;
        let mut live_vertices = VertexSet::EMPTY;
        for s in &self.sets[i..] {
            let a = s.difference(&forbidden);
            if !a.is_empty() {
                live_colors += 1;
                live_vertices = live_vertices.union(&a);
            }
        }
        if self.chosen + live_colors.min(live_vertices.len()) < self.m {
            return false;
        }
        let mut available = self.sets[i].difference(&forbidden);
        if i > 0 && self.sets[i - 1] == self.sets[i] {
            match self.picks[i - 1] {
                None => available = VertexSet::EMPTY,
                Some(u) => available = available.above(u),
            }
        }
        for v in available.iter() {
            self.picks[i] = Some(v);
            self.chosen += 1;
            if self.rec(i + 1, forbidden.union(&self.g.closed_neighbors(v))) {
                return true;
            }
            self.chosen -= 1;
        }
        self.picks[i] = None;
        self.rec(i + 1, forbidden)
    }
}

/// Largest `m` with a rainbow independent `m`-set, with a witness.
pub fn max_rainbow_size(family: &ColoredFamily) -> (usize, RainbowSelection) {
    let mut best = RainbowSelection::default();
    for m in 1..=family.len() {
        match find_rainbow(family, m) {
            Some(sel) => best = sel,
            None => break,
        }
    }
    (best.len(), best)
}

/// Exhaustive oracle: every `m`-subset of colours (lexicographic) and every
/// choice function on it, checked with pairwise adjacency lookups.
pub fn brute_rainbow(
    family: &ColoredFamily,
    m: usize,
    budget: u64,
) -> Result<Option<RainbowSelection>, BudgetExceeded> {
    let g = family.host();
    let lists: Vec<Vec<usize>> = family.sets().iter().map(VertexSet::to_vec).collect();
    let k = lists.len();
    if m > k {
        return Ok(None);
    }
    let mut spent = 0u64;
    let mut colors: Vec<usize> = (0..m).collect();
    loop {
        if colors.iter().all(|&c| !lists[c].is_empty()) {
            let mut digits = vec![0usize; m];
            'choices: loop {
                spent += 1;
                if spent > budget {
                    return Err(BudgetExceeded { budget });
                }
                let picked: Vec<usize> = colors.iter().zip(&digits).map(|(&c, &d)| lists[c][d]).collect();
                let ok = (0..m).all(|a| (0..a).all(|b| picked[a] != picked[b] && !g.has_edge(picked[a], picked[b])));
                if ok {
                    return Ok(Some(RainbowSelection::new(colors.iter().copied().zip(picked).collect())));
                }
                let mut pos = m;
                while pos > 0 {
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < lists[colors[pos]].len() {
                        continue 'choices;
                    }
                    digits[pos] = 0;
                }
                break;
            }
        }
        // Next colour combination.
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if colors[i] < k - m + i {
                colors[i] += 1;
                for j in i + 1..m {
                    colors[j] = colors[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// An inclusion-maximal rainbow selection whose image stays `admissible`.
///
/// Colours are scanned once in index order and each takes the lowest vertex
/// that keeps the image admissible. A single pass is maximal because callers
/// supply downward-closed predicates: a vertex rejected earlier stays rejected
/// as the image grows.
pub fn greedy_maximal_rainbow(
    family: &ColoredFamily,
    mut admissible: impl FnMut(&VertexSet) -> bool,
) -> RainbowSelection {
    let mut image = VertexSet::EMPTY;
    let mut assignments = Vec::new();
    for (c, set) in family.sets().iter().enumerate() {
        for v in set.difference(&image).iter() {
            let mut next = image;
            next.insert(v);
            if admissible(&next) {
                image = next;
                assignments.push((c, v));
                break;
            }
        }
    }
    RainbowSelection::new(assignments)
}

/// Whether no unrepresented colour can add a vertex to `selection` while
/// keeping the image admissible.
pub fn is_maximal(
    family: &ColoredFamily,
    selection: &RainbowSelection,
    mut admissible: impl FnMut(&VertexSet) -> bool,
) -> bool {
    let image = selection.image();
    let used = selection.colors();
    family.sets().iter().enumerate().all(|(c, set)| {
        used.contains(&c)
            || set.difference(&image).iter().all(|v| {
                let mut next = image;
                next.insert(v);
                !admissible(&next)
            })
    })
}
