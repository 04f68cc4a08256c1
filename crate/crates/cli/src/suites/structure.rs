//! Forbidden induced subgraphs: claw-free, K_r^- and C_4, chordal, and the
//! digraph condition for repeating graphs.

use rand::seq::SliceRandom;
use rand::Rng;
use rainbow_core::constructions::{
    circulant_power, digraph_repeating, directed_cycle_repeating, multipartite_copies, multipartite_repeating,
};
use rainbow_core::dag::{digraph_condition_a, CycleConvention, DagCertificate};
use rainbow_core::repeating::RepeatingGraph;
use rainbow_core::sample::{sample, SampleClass};
use rainbow_core::witness::{chordal_rainbow, clawfree_rainbow, repeating_diag_rainbow, DiagMode, WitnessError};
use rainbow_core::{contains_induced, max_rainbow_size, Digraph, PatternId};

use super::{certified, witness, Outcome, Plan, SuiteSpec};

pub fn clawfree(spec: &SuiteSpec, plan: &mut Plan) {
    for (k, t, n) in [(3, 2, 4), (2, 2, 4), (3, 3, 6), (4, 2, 5)] {
        plan.fixed(format!("multipartite-copies-k{k}-t{t}-n{n}"), move || {
            let out = match multipartite_copies(k, t, n) {
                Ok(out) => out,
                Err(e) => return Outcome::error("max rainbow size", e),
            };
            let (size, _) = max_rainbow_size(&out.family);
            Outcome::equal(k.min(n.div_ceil(t)), size)
        });
    }
    let hi = spec.max_n(6);
    plan.trials(spec, "claw-free", move |trial, rng| {
        let n = 1 + trial as usize % hi;
        let m = n.div_ceil(2);
        match sample(SampleClass::ClawFree, n, m, rng) {
            Ok(inst) => witness(clawfree_rainbow(&inst.family, 2, m), &inst.family, m),
            Err(e) => Outcome::error("instance", e),
        }
    });
    plan.trials(spec, "star-free", move |trial, rng| {
        let t = 2 + trial as usize % 2;
        let n = 1 + (trial as usize / 2) % hi;
        let m = n.div_ceil(t);
        match sample(SampleClass::StarFree(t), n, m, rng) {
            Ok(inst) => witness(clawfree_rainbow(&inst.family, t, m), &inst.family, m),
            Err(e) => Outcome::error("instance", e),
        }
    });
}

pub fn forbidden(spec: &SuiteSpec, plan: &mut Plan) {
    for t in 2..=4 {
        for n in 4..=6 {
            plan.fixed(format!("circulant-t{t}-n{n}"), move || certified(circulant_power(t, n)));
        }
    }
    for (r, n) in [(4, 2), (4, 3), (5, 3)] {
        plan.fixed(format!("multipartite-repeating-r{r}-n{n}"), move || certified(multipartite_repeating(r, n)));
    }
    // Strongly repeating graphs on a loops base, sometimes with one extra arc.
    // The algorithm must answer validly or name a genuine K_r^-.
    plan.trials(spec, "repeating", |trial, rng| {
        let r = 4 + trial as usize % 2;
        let n = 3 + (trial as usize / 2) % 2;
        let mut d = Digraph::empty(n).expect("small").with_all_loops();
        if rng.random_bool(0.3) {
            let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
            if u != v {
                d.add_arc(u, v).expect("in range");
            }
        }
        let rg = match RepeatingGraph::from_base(d, n.max(r - 1)) {
            Ok(rg) => rg,
            Err(e) => return Outcome::error("instance", e),
        };
        let family = rg.column_family(1).expect("columns are independent");
        let free = contains_induced(rg.graph(), PatternId::CompleteMinusEdge(r)).expect("small pattern").is_none();
        match repeating_diag_rainbow(&rg, DiagMode::CompleteMinusEdge, r) {
            Ok(sel) => witness::<WitnessError>(Ok(sel), &family, n),
            Err(WitnessError::PatternFound { witness, .. }) => {
                let edges = witness.len() * (witness.len() - 1) / 2;
                let induced = rg.graph().induced(&witness).0.edge_count();
                let ok = !free && witness.len() == r && induced + 1 == edges;
                Outcome::check(format!("rainbow {n}-set or K{r}- witness"), format!("K{r}- at {witness:?}"), ok)
            }
            Err(e) => Outcome::error(format!("rainbow {n}-set"), e),
        }
    });
}

pub fn chordal(spec: &SuiteSpec, plan: &mut Plan) {
    let hi = spec.max_n(6);
    plan.trials(spec, "chordal", move |trial, rng| {
        let n = 1 + trial as usize % hi;
        let m = 1 + (trial as usize / hi) % n;
        match sample(SampleClass::Chordal, n, m, rng) {
            Ok(inst) => witness(chordal_rainbow(&inst.family, m), &inst.family, m),
            Err(e) => Outcome::error("instance", e),
        }
    });
}

/// Whether `vs` induces a sub-digraph with no directed cycle (loops count).
fn acyclic(d: &Digraph, vs: &[usize]) -> bool {
    let mut left: Vec<usize> = vs.to_vec();
    while !left.is_empty() {
        let Some(i) = left.iter().position(|&v| !left.iter().any(|&u| d.has_arc(u, v))) else {
            return false;
        };
        left.swap_remove(i);
    }
    true
}

/// Checks a failure certificate against the digraph.
fn certificate_ok(d: &Digraph, s: usize, m: usize, cert: &DagCertificate) -> bool {
    match cert {
        DagCertificate::Cycle(seq) => {
            let l = seq.len();
            let mut distinct = seq.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != l || l < 2 || l > s {
                return false;
            }
            if l == 2 {
                return d.has_arc(seq[0], seq[1]) && d.has_arc(seq[1], seq[0]);
            }
            let step = |i: usize| (seq[i], seq[(i + 1) % l]);
            let closed = (0..l).all(|i| {
                let (a, b) = step(i);
                d.has_arc(a, b) || d.has_arc(b, a)
            });
            let forward = (0..l).all(|i| d.has_arc(step(i).0, step(i).1));
            let backward = (0..l).all(|i| d.has_arc(step(i).1, step(i).0));
            closed && !(l == s && (forward || backward))
        }
        DagCertificate::AcyclicSet(vs) => vs.len() == m && acyclic(d, vs),
    }
}

pub fn dag(spec: &SuiteSpec, plan: &mut Plan) {
    for n in 4..=6 {
        plan.fixed(format!("directed-cycle-n{n}"), move || {
            let (ok, cert) = digraph_condition_a(&Digraph::directed_cycle(n).expect("n >= 2"), n, n, CycleConvention::default());
            Outcome::check("condition holds", cert.map_or("holds".into(), |c| format!("{c:?}")), ok)
        });
        for t in 1..=4 {
            plan.fixed(format!("directed-cycle-n{n}-t{t}"), move || {
                let out = match directed_cycle_repeating(n, t) {
                    Ok(out) => out,
                    Err(e) => return Outcome::error("manifest holds", e),
                };
                let cycle = (4..=n).find(|&s| contains_induced(out.graph(), PatternId::Cycle(s)).expect("small").is_some());
                if let Some(s) = cycle {
                    return Outcome::check("no induced C4..Cn", format!("induced C{s}"), false);
                }
                certified::<String>(Ok(out))
            });
        }
    }
    // Loopless digraphs, half of them disjoint directed s-cycles (for which
    // the condition holds with m = c(s-1)+1), sometimes with an extra arc.
    // When the condition holds, the repeating graph on max(m, s) columns must
    // be certified and free of short induced cycles; otherwise the
    // certificate must be genuine.
    plan.trials(spec, "digraph", |trial, rng| {
        let (d, s, m) = if trial % 2 == 0 {
            let copies = rng.random_range(1..=2);
            let s = rng.random_range(4..=5);
            let n = copies * s;
            let mut labels: Vec<usize> = (0..n).collect();
            labels.shuffle(rng);
            let mut d = Digraph::empty(n).expect("small");
            for c in 0..copies {
                for i in 0..s {
                    d.add_arc(labels[c * s + i], labels[c * s + (i + 1) % s]).expect("in range");
                }
            }
            if rng.random_bool(0.3) {
                let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
                if u != v && !d.has_arc(u, v) {
                    d.add_arc(u, v).expect("in range");
                }
            }
            (d, s, copies * (s - 1) + 1)
        } else {
            let n = rng.random_range(2..=5);
            let mut d = Digraph::empty(n).expect("small");
            for u in 0..n {
                for v in (0..n).filter(|&v| v != u) {
                    if rng.random_bool(0.3) {
                        d.add_arc(u, v).expect("in range");
                    }
                }
            }
            (d, rng.random_range(4..=5), rng.random_range(1..=n))
        };
        let (ok, cert) = digraph_condition_a(&d, s, m, CycleConvention::default());
        if !ok {
            let cert_ok = cert.as_ref().is_some_and(|c| certificate_ok(&d, s, m, c));
            return Outcome::check("genuine certificate", format!("{cert:?}"), cert_ok);
        }
        let out = match digraph_repeating(&d, m.max(s), 1, m) {
            Ok(out) => out,
            Err(e) => return Outcome::error("manifest holds", e),
        };
        if let Some(c) = (4..=s).find(|&c| contains_induced(out.graph(), PatternId::Cycle(c)).expect("small").is_some()) {
            return Outcome::check(format!("no induced C4..C{s}"), format!("induced C{c}"), false);
        }
        certified::<String>(Ok(out))
    });
}
