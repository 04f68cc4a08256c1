//! Rainbow matchings: bipartite and general line graphs.

use rainbow_core::constructions::{
    doubled_family, drisko_cycle, even_length_perfect_matching_exists, even_matching_family,
};
use rainbow_core::sample::{sample, SampleClass};
use rainbow_core::witness::staircase_colourable_rainbow;
use rainbow_core::{ColoredFamily, VertexSet};

use super::{certified, may_solve, must_solve, witness, Outcome, Plan, SuiteSpec};

/// Set size for trial `trial`, cycling through `lo..=hi`.
fn cycle_n(trial: u64, lo: usize, hi: usize) -> usize {
    lo + trial as usize % (hi.max(lo) - lo + 1)
}

pub fn drisko(spec: &SuiteSpec, plan: &mut Plan) {
    for n in 2..=5 {
        plan.fixed(format!("cycle-family-n{n}"), move || certified(drisko_cycle(n)));
    }
    let hi = spec.max_n(4);
    plan.trials(spec, "bipartite-line", move |trial, rng| {
        let n = cycle_n(trial, 2, hi);
        match sample(SampleClass::BipartiteLine, n, 2 * n - 1, rng) {
            Ok(inst) => must_solve(&inst.family, n),
            Err(e) => Outcome::error("instance", e),
        }
    });
}

/// Number of perfect matchings of `0..2n` (points on a cycle) whose chords
/// all have even circular length, by listing every pairing.
fn even_pairings(n: usize) -> usize {
    fn rec(left: &mut Vec<usize>, points: usize) -> usize {
        let Some(u) = left.pop() else {
            return 1;
        };
        let mut count = 0;
        for i in 0..left.len() {
            let v = left[i];
            let d = u.abs_diff(v);
            if d.min(points - d) % 2 == 0 {
                let w = left.swap_remove(i);
                count += rec(left, points);
                left.push(w);
                let last = left.len() - 1;
                left.swap(i, last);
            }
        }
        left.push(u);
        count
    }
    rec(&mut (0..2 * n).collect(), 2 * n)
}

pub fn gendrisko(spec: &SuiteSpec, plan: &mut Plan) {
    for n in [2, 4] {
        plan.fixed(format!("even-matching-n{n}"), move || certified(even_matching_family(n)));
    }
    plan.fixed("doubled-even-matching-n2", || {
        certified(even_matching_family(2).and_then(|base| doubled_family(&base)))
    });
    plan.fixed("even-matching-n3", || match even_matching_family(3) {
        Ok(_) => Outcome::check("refused", "built", false),
        Err(e) => Outcome::check("refused", e.to_string(), true),
    });
    for n in 2..=6 {
        plan.fixed(format!("even-length-pairing-n{n}"), move || {
            let listed = even_pairings(n) > 0;
            Outcome::equal(listed, even_length_perfect_matching_exists(n))
        });
    }
    let hi = spec.max_n(3);
    plan.trials(spec, "line", move |trial, rng| {
        let n = cycle_n(trial, 2, hi);
        match sample(SampleClass::Line, n, 3 * n - 2, rng) {
            Ok(inst) => must_solve(&inst.family, n),
            Err(e) => Outcome::error("instance", e),
        }
    });
    // Conjectured: 2n matchings suffice, and 2n - 1 for odd n.
    plan.trials(spec, "line-conjectured", move |trial, rng| {
        let n = cycle_n(trial, 2, hi);
        let sets = if n % 2 == 1 { 2 * n - 1 } else { 2 * n };
        match sample(SampleClass::Line, n, sets, rng) {
            Ok(inst) => may_solve(&inst.family, n),
            Err(e) => Outcome::error("instance", e),
        }
    });
}

pub fn staircase(spec: &SuiteSpec, plan: &mut Plan) {
    let hi = spec.max_n(3);
    plan.trials(spec, "bipartite-line", move |trial, rng| {
        let n = cycle_n(trial, 2, hi);
        let inst = match sample(SampleClass::BipartiteLineStaircase, n, 2 * n - 1, rng) {
            Ok(inst) => inst,
            Err(e) => return Outcome::error("instance", e),
        };
        let short = inst.family.sets().iter().enumerate().find(|(i, s)| s.len() < (i + 1).min(n));
        if let Some((i, s)) = short {
            return Outcome::check("staircase sizes", format!("colour {} has {} edges", i + 1, s.len()), false);
        }
        must_solve(&inst.family, n)
    });
    // Colourable graphs with staircase sizes, m = n.
    plan.trials(spec, "colourable", move |trial, rng| {
        let k = 1 + trial as usize % 3;
        let n = cycle_n(trial / 3, 1, hi);
        let inst = match sample(SampleClass::KColorable(k), n, k * (n - 1) + 1, rng) {
            Ok(inst) => inst,
            Err(e) => return Outcome::error("instance", e),
        };
        let sets: Vec<VertexSet> = inst
            .family
            .sets()
            .iter()
            .enumerate()
            .map(|(i, s)| s.take((i + 1).min(n)))
            .collect();
        let f = ColoredFamily::new(inst.family.host().clone(), sets).expect("subsets of independent sets");
        let coloring = inst.coloring.expect("colourable samples carry a colouring");
        witness(staircase_colourable_rainbow(&f, &coloring, k, n, n), &f, n)
    });
    // Conjectured: n matchings of size n in a bipartite graph have a rainbow
    // (n-1)-matching, and even n - 1 of them do.
    let hi = spec.max_n(4);
    for (label, sets) in [("bipartite-n-sets", 0), ("bipartite-n-1-sets", 1)] {
        plan.trials(spec, label, move |trial, rng| {
            let n = cycle_n(trial, 2, hi);
            match sample(SampleClass::BipartiteLine, n, n - sets, rng) {
                Ok(inst) => may_solve(&inst.family, n - 1),
                Err(e) => Outcome::error("instance", e),
            }
        });
    }
}
