//! Verification suites behind `rainbow verify`.
//!
//! A suite is a list of jobs: fixed checks first, then seeded random trials.
//! Jobs run on the caller's thread pool and rows come back in job order, so
//! a fixed seed gives the same report for any number of workers.

mod bounds;
mod matching;
mod structure;

use std::fmt::Display;
use std::time::Instant;

use clap::ValueEnum;
use rainbow_core::constructions::ConstructionOutput;
use rainbow_core::sample::trial_rng;
use rainbow_core::{find_rainbow, ColoredFamily, RainbowSelection};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{Row, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Drisko,
    Gendrisko,
    Staircase,
    Clawfree,
    Forbidden,
    Chordal,
    Dag,
    Colourable,
    Degree12,
    Grid,
    Ramsey,
    Sunflower,
    FexactRegression,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteSpec {
    pub suite: Suite,
    /// Random trials per trial group.
    pub trials: u64,
    pub seed: u64,
    /// Largest set size used by the random trials; each suite has a default.
    pub max_n: Option<usize>,
    /// Node budget for the exhaustive searches (f values, Ramsey graphs).
    pub budget: u64,
}

impl SuiteSpec {
    fn max_n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default).max(1)
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl Outcome {
    pub fn check(expected: impl Into<String>, observed: impl Into<String>, ok: bool) -> Self {
        Self {
            expected: expected.into(),
            observed: observed.into(),
            status: Status::of(ok),
        }
    }

    /// Compares two displayable values for equality.
    pub fn equal<T: PartialEq + std::fmt::Display>(expected: T, observed: T) -> Self {
        let ok = expected == observed;
        Self::check(expected.to_string(), observed.to_string(), ok)
    }

    pub fn conjecture(expected: impl Into<String>, observed: impl Into<String>, ok: bool) -> Self {
        Self {
            expected: expected.into(),
            observed: observed.into(),
            status: Status::conjecture(ok),
        }
    }

    pub fn error(expected: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self::check(expected, format!("error: {err}"), false)
    }
}

type Run = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Job {
    pub instance: String,
    run: Run,
}

/// Collects the jobs of a suite.
#[derive(Default)]
pub struct Plan {
    jobs: Vec<Job>,
    groups: u64,
}

impl Plan {
    pub fn fixed(&mut self, instance: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'static) {
        self.jobs.push(Job {
            instance: instance.into(),
            run: Box::new(run),
        });
    }

    /// `trials` jobs named `<label>-<trial>`. Each group draws from its own
    /// streams of the suite seed, so adding a group leaves the others alone.
    pub fn trials(
        &mut self,
        spec: &SuiteSpec,
        label: &str,
        body: impl Fn(u64, &mut ChaCha8Rng) -> Outcome + Send + Sync + Clone + 'static,
    ) {
        let group = self.groups;
        self.groups += 1;
        let seed = spec.seed;
        let width = spec.trials.saturating_sub(1).to_string().len().max(3);
        for trial in 0..spec.trials {
            let body = body.clone();
            self.fixed(format!("{label}-{trial:0width$}"), move || {
                let mut rng = trial_rng(seed, (group << 32) | trial);
                body(trial, &mut rng)
            });
        }
    }

    pub fn len(&self) -> usize {
        self.jobs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jobs.is_empty()
    }

    pub fn instances(&self) -> Vec<&str> {
        self.jobs.iter().map(|j| j.instance.as_str()).collect()
    }
}

pub fn plan(spec: &SuiteSpec) -> Plan {
    let mut plan = Plan::default();
    match spec.suite {
        Suite::Drisko => matching::drisko(spec, &mut plan),
        Suite::Gendrisko => matching::gendrisko(spec, &mut plan),
        Suite::Staircase => matching::staircase(spec, &mut plan),
        Suite::Clawfree => structure::clawfree(spec, &mut plan),
        Suite::Forbidden => structure::forbidden(spec, &mut plan),
        Suite::Chordal => structure::chordal(spec, &mut plan),
        Suite::Dag => structure::dag(spec, &mut plan),
        Suite::Colourable => bounds::colourable(spec, &mut plan),
        Suite::Degree12 => bounds::degree12(spec, &mut plan),
        Suite::Grid => bounds::grid(spec, &mut plan),
        Suite::Ramsey => bounds::ramsey(spec, &mut plan),
        Suite::Sunflower => bounds::sunflower(spec, &mut plan),
        Suite::FexactRegression => bounds::fexact_regression(spec, &mut plan),
    }
    plan
}

/// Runs every job of the suite on the current rayon pool. Rows are sorted by
/// instance id, whatever order the jobs finish in.
pub fn run(spec: &SuiteSpec) -> Vec<Row> {
    let suite = spec.suite.name();
    let mut rows: Vec<Row> = plan(spec)
        .jobs
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let out = (job.run)();
            Row {
                suite: suite.clone(),
                instance: job.instance.clone(),
                expected: out.expected,
                observed: out.observed,
                status: out.status,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect();
    rows.sort_by(|a, b| a.instance.cmp(&b.instance));
    rows
}

/// Re-checks every manifest entry of a construction.
pub(crate) fn certified<E: Display>(out: Result<ConstructionOutput, E>) -> Outcome {
    let out = match out {
        Ok(out) => out,
        Err(e) => return Outcome::error("manifest holds", e),
    };
    let checks = out.certify();
    let bad: Vec<String> = checks.iter().filter(|c| !c.holds).map(|c| format!("{:?}", c.property)).collect();
    if bad.is_empty() {
        Outcome::check("manifest holds", format!("{} entries hold", checks.len()), true)
    } else {
        Outcome::check("manifest holds", format!("fails: {}", bad.join("; ")), false)
    }
}

/// A witness algorithm's answer, which must be a valid rainbow `m`-set.
pub(crate) fn witness<E: Display>(got: Result<RainbowSelection, E>, family: &ColoredFamily, m: usize) -> Outcome {
    let expected = format!("rainbow {m}-set");
    match got {
        Ok(sel) if sel.len() != m => Outcome::check(expected, format!("{} vertices", sel.len()), false),
        Ok(sel) => match sel.validate(family) {
            Ok(()) => Outcome::check(expected, format!("valid {:?}", sel.image().to_vec()), true),
            Err(e) => Outcome::error(expected, e),
        },
        Err(e) => Outcome::error(expected, e),
    }
}

/// The solver's rainbow `m`-set as a vertex list (validated), or "none".
pub(crate) fn solved(family: &ColoredFamily, m: usize) -> Result<Option<String>, String> {
    match find_rainbow(family, m) {
        Some(sel) => sel
            .validate(family)
            .map(|()| Some(format!("{:?}", sel.image().to_vec())))
            .map_err(|e| e.to_string()),
        None => Ok(None),
    }
}

/// A proven bound: the solver must find a rainbow `m`-set.
pub(crate) fn must_solve(family: &ColoredFamily, m: usize) -> Outcome {
    let expected = format!("rainbow {m}-set");
    match solved(family, m) {
        Ok(got) => Outcome::check(expected, got.as_deref().unwrap_or("none"), got.is_some()),
        Err(e) => Outcome::error(expected, e),
    }
}

/// A conjectured bound: finding a rainbow `m`-set is consistent with it.
pub(crate) fn may_solve(family: &ColoredFamily, m: usize) -> Outcome {
    let expected = format!("rainbow {m}-set");
    match solved(family, m) {
        Ok(got) => Outcome::conjecture(expected, got.as_deref().unwrap_or("none"), got.is_some()),
        Err(e) => Outcome::error(expected, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(suite: Suite) -> SuiteSpec {
        SuiteSpec {
            suite,
            trials: 4,
            seed: 3,
            max_n: None,
            budget: 2_000_000,
        }
    }

    #[test]
    fn every_suite_passes_a_short_run() {
        for suite in Suite::value_variants() {
            let rows = run(&spec(*suite));
            assert!(!rows.is_empty(), "{suite:?}");
            for r in &rows {
                assert!(
                    matches!(r.status, Status::Pass | Status::ConsistentWith),
                    "{suite:?} {}: expected {} observed {}",
                    r.instance,
                    r.expected,
                    r.observed
                );
            }
        }
    }

    #[test]
    fn instance_ids_are_unique_and_trials_counted() {
        for suite in Suite::value_variants() {
            let p = plan(&spec(*suite));
            let mut ids = p.instances();
            let n = ids.len();
            ids.sort_unstable();
            ids.dedup();
            assert_eq!(ids.len(), n, "{suite:?}");
        }
        let chordal = plan(&SuiteSpec {
            trials: 200,
            ..spec(Suite::Chordal)
        });
        assert_eq!(chordal.len(), 200);
    }
}
