//! Colourable and bounded-degree graphs, Ramsey bounds, sunflowers, and
//! regression values of f.

use rand::seq::SliceRandom;
use rand::Rng;
use rainbow_core::constructions::{
    blowup, bounded_degree_grid, colourable_disjoint_lower, colourable_lower, ramsey_blowup, ramsey_number,
    ramsey_witness, search_ramsey_graph,
};
use rainbow_core::enumerate::graphs_on;
use rainbow_core::fcalc::{f_exact, f_exact_parallel, f_naive, FValue};
use rainbow_core::sample::{random_graph, random_independent_set, sample, SampleClass};
use rainbow_core::sunflower::{find_sunflower, sunflower_bound, sunflower_reduce_rainbow};
use rainbow_core::witness::{colourable_rainbow, degree2_rainbow, maxdeg_rainbow_pair, ramsey_maximal_rainbow};
use rainbow_core::{find_rainbow, ColoredFamily, Graph, VertexSet};

use super::{certified, may_solve, must_solve, witness, Outcome, Plan, SuiteSpec};

/// `f(g, n, m)` within the suite budget; `Err` when the budget ran out.
fn f_value(g: &Graph, n: usize, m: usize, budget: u64) -> Result<FValue, String> {
    let r = f_exact(g, n, m, Some(budget)).map_err(|e| e.to_string())?;
    if r.complete {
        Ok(r.value)
    } else {
        Err(format!("node budget {budget} exhausted"))
    }
}

fn show(v: FValue) -> String {
    v.defined().map_or("undefined".into(), |x| x.to_string())
}

pub fn colourable(spec: &SuiteSpec, plan: &mut Plan) {
    for k in 1..=3 {
        for n in 1..=4 {
            for m in 1..=n {
                plan.fixed(format!("lower-k{k}-n{n}-m{m}"), move || certified(colourable_lower(k, n, m)));
                plan.fixed(format!("lower-disjoint-k{k}-n{n}-m{m}"), move || {
                    certified(colourable_disjoint_lower(k, n, m))
                });
            }
        }
    }
    let budget = spec.budget;
    let c4 = Graph::cycle(4).expect("small");
    let k33 = Graph::complete_multipartite(&[3, 3]).expect("small");
    for (name, g, n, m) in [("c4", c4, 2, 2), ("k33", k33, 3, 2)] {
        // Both are bipartite, so the bound k(m-1)+1 with k = 2 is 2m - 1.
        let want = FValue::Defined(2 * (m - 1) + 1);
        plan.fixed(format!("f-{name}-n{n}-m{m}"), move || match (f_value(&g, n, m, budget), f_naive(&g, n, m)) {
            (Ok(fast), Ok(slow)) => Outcome::check(show(want), format!("{} (naive {})", show(fast), show(slow)), fast == want && slow == want),
            (Err(e), _) => Outcome::error(show(want), e),
            (_, Err(e)) => Outcome::error(show(want), e),
        });
    }
    plan.trials(spec, "k-colourable", |trial, rng| {
        let k = 1 + trial as usize % 3;
        let n = 2 + trial as usize % 3;
        let m = 1 + (trial as usize / 3) % n;
        match sample(SampleClass::KColorable(k), n, k * (m - 1) + 1, rng) {
            Ok(inst) => {
                let coloring = inst.coloring.as_deref().expect("colourable samples carry a colouring");
                witness(colourable_rainbow(&inst.family, coloring, k, m), &inst.family, m)
            }
            Err(e) => Outcome::error("instance", e),
        }
    });
}

pub fn degree12(spec: &SuiteSpec, plan: &mut Plan) {
    let hi = spec.max_n(5);
    plan.trials(spec, "max-degree-2", move |trial, rng| {
        let n = 1 + trial as usize % hi;
        match sample(SampleClass::MaxDegree(2), n, 2 * n - 1, rng) {
            Ok(inst) => witness(degree2_rainbow(&inst.family, n), &inst.family, n),
            Err(e) => Outcome::error("instance", e),
        }
    });
    plan.trials(spec, "max-degree-1", move |trial, rng| {
        let n = 1 + trial as usize % hi;
        match sample(SampleClass::MaxDegree(1), n, n, rng) {
            Ok(inst) => must_solve(&inst.family, n),
            Err(e) => Outcome::error("instance", e),
        }
    });
    // Conjectured: n - 1 sets of size n have a rainbow (n-1)-set.
    plan.trials(spec, "max-degree-2-conjectured", move |trial, rng| {
        let n = 2 + trial as usize % hi.max(2).saturating_sub(1);
        match sample(SampleClass::MaxDegree(2), n, n - 1, rng) {
            Ok(inst) => may_solve(&inst.family, n - 1),
            Err(e) => Outcome::error("instance", e),
        }
    });
    // Every graph of maximum degree 2 on up to 8 vertices.
    let budget = spec.budget;
    for v in 1..=8 {
        for n in [2, 3] {
            plan.fixed(format!("all-v{v}-n{n}"), move || {
                let graphs: Vec<Graph> = graphs_on(v).into_iter().filter(|g| g.max_degree() <= 2).collect();
                let mut worst = 0;
                for g in &graphs {
                    match f_value(g, n, n, budget) {
                        Ok(f) => worst = worst.max(f.defined().unwrap_or(0)),
                        Err(e) => return Outcome::error(format!("f <= {}", 2 * n - 1), e),
                    }
                }
                Outcome::check(format!("f <= {}", 2 * n - 1), format!("max f = {worst} over {} graphs", graphs.len()), worst < 2 * n)
            });
            plan.fixed(format!("all-v{v}-n{n}-m{}", n - 1), move || {
                let graphs: Vec<Graph> = graphs_on(v).into_iter().filter(|g| g.max_degree() <= 2).collect();
                let mut worst = 0;
                for g in &graphs {
                    match f_value(g, n, n - 1, budget) {
                        Ok(f) => worst = worst.max(f.defined().unwrap_or(0)),
                        Err(e) => return Outcome::error(format!("f <= {}", n - 1), e),
                    }
                }
                Outcome::conjecture(format!("f <= {}", n - 1), format!("max f = {worst} over {} graphs", graphs.len()), worst < n)
            });
        }
    }
}

pub fn grid(spec: &SuiteSpec, plan: &mut Plan) {
    for k in 1..=4 {
        for n in 3..=5 {
            for m in 2..=n {
                plan.fixed(format!("grid-k{k}-n{n}-m{m}"), move || certified(bounded_degree_grid(k, n, m)));
            }
        }
    }
    plan.trials(spec, "pair", |trial, rng| {
        let k = trial as usize % 5;
        let n = 2 + (trial as usize / 5) % 3;
        let count = (k + 1).div_ceil(n) + 1;
        let inst = match sample(SampleClass::MaxDegree(k), n, count, rng) {
            Ok(inst) => inst,
            Err(e) => return Outcome::error("instance", e),
        };
        let mut sets = inst.family.sets().to_vec();
        sets.shuffle(rng);
        let f = ColoredFamily::new(inst.family.host().clone(), sets).expect("same sets");
        witness(maxdeg_rainbow_pair(&f, k), &f, 2)
    });
    // Rainbow 3-sets from 2 ceil((k+1)/(n-1)) + 1 sets of size n.
    let hi = spec.max_n(5).max(3);
    plan.trials(spec, "three-sets", move |trial, rng| {
        let k = 1 + trial as usize % 4;
        let n = 3 + (trial as usize / 4) % (hi - 2);
        let count = 2 * (k + 1).div_ceil(n - 1) + 1;
        match sample(SampleClass::MaxDegree(k), n, count, rng) {
            Ok(inst) => must_solve(&inst.family, 3),
            Err(e) => Outcome::error("instance", e),
        }
    });
    // Conjectured: ceil((k+1)/(n-m+2))(m-1) + 1 sets suffice; the grids above
    // show that one fewer does not.
    plan.trials(spec, "conjectured", move |trial, rng| {
        let k = 1 + trial as usize % 4;
        let n = 2 + (trial as usize / 4) % (hi - 1);
        let m = 2 + (trial as usize / 16) % (n - 1);
        let count = (k + 1).div_ceil(n - m + 2) * (m - 1) + 1;
        match sample(SampleClass::MaxDegree(k), n, count, rng) {
            Ok(inst) => may_solve(&inst.family, m),
            Err(e) => Outcome::error("instance", e),
        }
    });
}

pub fn ramsey(spec: &SuiteSpec, plan: &mut Plan) {
    plan.fixed("blowup-c5-n4", || certified(blowup(&Graph::cycle(5).expect("small"), 4)));
    let budget = spec.budget;
    for (r, m, want) in [(2, 4, 4), (4, 2, 4), (3, 3, 6), (3, 4, 9)] {
        plan.fixed(format!("ramsey-number-r{r}-m{m}"), move || match ramsey_number(r, m, budget) {
            Ok(got) => Outcome::equal(want, got),
            Err(e) => Outcome::error(want.to_string(), e),
        });
    }
    plan.fixed("ramsey-search-r3-m3", move || {
        let mut nodes = 0;
        let five = search_ramsey_graph(3, 3, 5, budget, &mut nodes);
        let six = search_ramsey_graph(3, 3, 6, budget, &mut nodes);
        let ok = matches!(five, Ok(Some(_))) && six == Ok(None);
        Outcome::check("graph on 5 vertices, none on 6", format!("{} on 5, {} on 6", found(&five), found(&six)), ok)
    });
    for (r, m, n) in [(3, 3, 3), (3, 3, 4), (3, 4, 4)] {
        plan.fixed(format!("ramsey-blowup-r{r}-m{m}-n{n}"), move || {
            certified(ramsey_witness(r, m, budget).and_then(|h| ramsey_blowup(&h, r, m, n)))
        });
    }
    plan.trials(spec, "triangle-free", |trial, rng| {
        let n = 3 + trial as usize % 2;
        match sample(SampleClass::KrFree(3), n, 6, rng) {
            Ok(inst) => witness(ramsey_maximal_rainbow(&inst.family, 3, 3, 6), &inst.family, 3),
            Err(e) => Outcome::error("instance", e),
        }
    });
    plan.trials(spec, "triangle-free-m4", |trial, rng| {
        let n = 4 + trial as usize % 2;
        match sample(SampleClass::KrFree(3), n, 9, rng) {
            Ok(inst) => witness(ramsey_maximal_rainbow(&inst.family, 3, 4, 9), &inst.family, 4),
            Err(e) => Outcome::error("instance", e),
        }
    });
}

fn found<T, E>(r: &Result<Option<T>, E>) -> &'static str {
    match r {
        Ok(Some(_)) => "found",
        Ok(None) => "none",
        Err(_) => "budget",
    }
}

/// Whether some `k` of `sets` form a sunflower, by checking every `k`-subset.
fn brute_sunflower(sets: &[VertexSet], k: usize) -> bool {
    fn rec(sets: &[VertexSet], k: usize, from: usize, chosen: &mut Vec<VertexSet>) -> bool {
        if chosen.len() == k {
            let core = chosen.iter().fold(chosen[0], |acc, s| acc.intersection(s));
            return (0..k).all(|i| (0..i).all(|j| chosen[i].intersection(&chosen[j]) == core));
        }
        (from..sets.len()).any(|i| {
            chosen.push(sets[i]);
            let hit = rec(sets, k, i + 1, chosen);
            chosen.pop();
            hit
        })
    }
    k == 0 || rec(sets, k, 0, &mut Vec::new())
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

pub fn sunflower(spec: &SuiteSpec, plan: &mut Plan) {
    for k in 1..=3usize {
        plan.fixed(format!("singletons-k{k}"), move || {
            let size = sunflower_bound(1, k) as usize + 1;
            let sets: Vec<VertexSet> = (0..size).map(|v| set(&[v])).collect();
            let ok = find_sunflower(&sets, k).is_some_and(|sf| sf.is_valid_for(&sets));
            Outcome::check(format!("{k}-petal sunflower"), if ok { "found" } else { "none" }, ok)
        });
        // Every family of at least 2(k-1)^2 distinct pairs on 6 points.
        plan.fixed(format!("pairs-k{k}"), move || {
            let all: Vec<VertexSet> = (0..6).flat_map(|a| (a + 1..6).map(move |b| set(&[a, b]))).collect();
            let least = (sunflower_bound(2, k) as usize).max(1);
            let mut checked = 0;
            for mask in 0u32..1 << all.len() {
                if (mask.count_ones() as usize) < least {
                    continue;
                }
                let sets: Vec<VertexSet> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
                if !find_sunflower(&sets, k).is_some_and(|sf| sf.is_valid_for(&sets)) {
                    return Outcome::check("sunflower in every family", format!("none in {sets:?}"), false);
                }
                checked += 1;
            }
            Outcome::check("sunflower in every family", format!("{checked} families"), true)
        });
    }
    plan.trials(spec, "triples", |trial, rng| {
        let k = 2 + trial as usize % 2;
        let ground = rng.random_range(5..=9);
        let mut triples: Vec<VertexSet> = (0..ground)
            .flat_map(|a| (a + 1..ground).flat_map(move |b| (b + 1..ground).map(move |c| set(&[a, b, c]))))
            .collect();
        triples.shuffle(rng);
        let bound = sunflower_bound(3, k) as usize;
        let size = rng.random_range(2..=(bound + 4).min(triples.len()));
        triples.truncate(size);
        let got = find_sunflower(&triples, k);
        if got.as_ref().is_some_and(|sf| !sf.is_valid_for(&triples)) {
            return Outcome::check("valid sunflower", "invalid", false);
        }
        let exists = brute_sunflower(&triples, k);
        let expected = if size >= bound { "found" } else if exists { "found or missed" } else { "none" };
        let observed = if got.is_some() { "found" } else { "none" };
        let ok = (exists || got.is_none()) && (size < bound || got.is_some());
        Outcome::check(expected, observed, ok)
    });
    plan.trials(spec, "reduction", |trial, rng| {
        let n = 2 + trial as usize % 2;
        let g = random_graph(rng.random_range(n + 2..=10), 0.25, rng);
        let count = rng.random_range(1..=12);
        let sets: Vec<VertexSet> = (0..count).filter_map(|_| random_independent_set(&g, n, rng)).collect();
        let f = ColoredFamily::new(g, sets).expect("independent sets");
        let m = rng.random_range(1..=n);
        let petals = rng.random_range(1..=4);
        match sunflower_reduce_rainbow(&f, m, petals, |d, q| find_rainbow(d, q)) {
            Ok(Some(sel)) => witness::<String>(Ok(sel), &f, m),
            Ok(None) => Outcome::check("valid or no answer", "no answer", true),
            Err(e) => Outcome::check("valid or no answer", e.to_string(), true),
        }
    });
}

pub fn fexact_regression(spec: &SuiteSpec, plan: &mut Plan) {
    let budget = spec.budget;
    let c6 = Graph::cycle(6).expect("small");
    let known = [
        ("c4-n2-m2", Graph::cycle(4).expect("small"), 2, 2, FValue::Defined(3)),
        ("k33-n3-m2", Graph::complete_multipartite(&[3, 3]).expect("small"), 3, 2, FValue::Defined(3)),
        ("k33-n3-m3", Graph::complete_multipartite(&[3, 3]).expect("small"), 3, 3, FValue::Defined(5)),
        ("c6-n3-m3", c6.clone(), 3, 3, FValue::Defined(5)),
        ("c6-n3-m2", c6, 3, 2, FValue::Defined(2)),
        ("c8-n4-m4", Graph::cycle(8).expect("small"), 4, 4, FValue::Defined(7)),
        ("edgeless5-n3-m3", Graph::empty(5).expect("small"), 3, 3, FValue::Defined(3)),
        ("k4-n2-m1", Graph::complete(4).expect("small"), 2, 1, FValue::Undefined),
        ("p4-n2-m2", Graph::path(4).expect("small"), 2, 2, FValue::Defined(2)),
    ];
    for (name, g, n, m, want) in known {
        plan.fixed(name, move || match f_value(&g, n, m, budget) {
            Ok(got) => Outcome::check(show(want), show(got), got == want),
            Err(e) => Outcome::error(show(want), e),
        });
    }
    // f_exact against the uncapped enumerator on every small graph.
    let top = spec.max_n(6).min(7);
    for v in 1..=top {
        plan.fixed(format!("naive-v{v}"), move || {
            let graphs = graphs_on(v);
            let mut values = 0;
            for g in &graphs {
                for n in 1..=3 {
                    for m in 1..=n {
                        let fast = match f_value(g, n, m, budget) {
                            Ok(f) => f,
                            Err(e) => return Outcome::error("agree", e),
                        };
                        match f_naive(g, n, m) {
                            Ok(slow) if slow == fast => values += 1,
                            Ok(slow) => {
                                let what = format!("f({:?},{n},{m}) = {} vs naive {}", g.edges(), show(fast), show(slow));
                                return Outcome::check("agree", what, false);
                            }
                            Err(e) => return Outcome::error("agree", e),
                        }
                    }
                }
            }
            Outcome::check("agree", format!("{values} values on {} graphs", graphs.len()), true)
        });
    }
    // Parallel and sequential search agree on value and witness.
    plan.trials(spec, "parallel", move |_, rng| {
        let g = random_graph(rng.random_range(4..=7), rng.random_range(0.2..0.6), rng);
        let n = rng.random_range(1..=3);
        let m = rng.random_range(1..=n);
        let seq = f_exact(&g, n, m, Some(budget));
        let par = f_exact_parallel(&g, n, m, Some(budget));
        match (seq, par) {
            (Ok(a), Ok(b)) => {
                let ok = a.value == b.value && a.witness == b.witness && a.complete == b.complete;
                Outcome::check(show(a.value), show(b.value), ok)
            }
            (Err(a), Err(b)) => Outcome::check(a.to_string(), b.to_string(), a == b),
            (a, b) => Outcome::check(format!("{a:?}"), format!("{b:?}"), false),
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_sunflower_small() {
        let sets = [set(&[0, 1]), set(&[0, 2]), set(&[1, 2])];
        assert!(brute_sunflower(&sets, 2));
        assert!(!brute_sunflower(&sets, 3));
        assert!(brute_sunflower(&[set(&[0]), set(&[1]), set(&[2])], 3));
    }
}
