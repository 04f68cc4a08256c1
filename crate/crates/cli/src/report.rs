//! Suite rows and their CSV form.

use std::io::Write;

use anyhow::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A check against a conjectured bound that did not contradict it.
    ConsistentWith,
    /// A check against a conjectured bound that contradicted it. Reported,
    /// but not a failure of the implementation.
    Inconsistent,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConsistentWith => "consistent-with",
            Status::Inconsistent => "inconsistent",
        }
    }

    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn conjecture(ok: bool) -> Self {
        if ok {
            Status::ConsistentWith
        } else {
            Status::Inconsistent
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub suite: String,
    pub instance: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    pub millis: u128,
}

pub const HEADER: [&str; 5] = ["suite", "instance", "expected", "observed", "status"];

/// Writes the rows as CSV. Timings make the output machine dependent, so the
/// `millis` column is only present when asked for.
pub fn write_csv(rows: &[Row], timings: bool, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = HEADER.to_vec();
    if timings {
        header.push("millis");
    }
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            r.suite.clone(),
            r.instance.clone(),
            r.expected.clone(),
            r.observed.clone(),
            r.status.as_str().to_string(),
        ];
        if timings {
            rec.push(r.millis.to_string());
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub consistent: usize,
    pub inconsistent: usize,
}

pub fn summarize(rows: &[Row]) -> Summary {
    let mut s = Summary::default();
    for r in rows {
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::ConsistentWith => s.consistent += 1,
            Status::Inconsistent => s.inconsistent += 1,
        }
    }
    s
}
