//! Running one check over many instances and rendering the reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{verify_final, verify_theorem, VERIFY_FINAL, VERIFY_THEOREM};
use crate::instance::Instance;
use crate::report::{Report, Status};
use crate::resolution::{verify_resolution, VERIFY_RESOLUTION};
use crate::rewrite::{reduce, verify_trace, VERIFY_TRACE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Resolution,
    Final,
    Theorem,
    Trace,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Resolution, Check::Final, Check::Theorem, Check::Trace];

    pub fn name(self) -> &'static str {
        match self {
            Check::Resolution => VERIFY_RESOLUTION,
            Check::Final => VERIFY_FINAL,
            Check::Theorem => VERIFY_THEOREM,
            Check::Trace => VERIFY_TRACE,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command {s:?}"))
    }
}

/// An instance that loaded, or the reason it did not.
#[derive(Clone, Debug)]
pub enum SuiteInput {
    Loaded(Instance),
    Invalid { name: String, reason: String },
}

impl SuiteInput {
    fn name(&self) -> &str {
        match self {
            SuiteInput::Loaded(i) => i.name(),
            SuiteInput::Invalid { name, .. } => name,
        }
    }
}

/// Reports of `check` on one instance; instances of the wrong kind yield a
/// NOT-APPLICABLE report.
pub fn run_check(check: Check, inst: &Instance) -> Vec<Report> {
    let start = Instant::now();
    let mut reports = match (check, inst) {
        (Check::Resolution, _) => inst.space_pairs().iter().map(verify_resolution).collect(),
        (Check::Final, Instance::Cover(c)) => vec![verify_final(c)],
        (Check::Theorem, Instance::Cover(c)) => vec![verify_theorem(c)],
        (Check::Trace, Instance::Cover(c)) => vec![verify_trace(&reduce(c.r()), c)],
        (_, Instance::Pair(p)) => vec![Report::not_applicable(&p.name, check.name(), "not a cover instance")],
    };
    let elapsed = start.elapsed();
    for r in &mut reports {
        r.elapsed = Some(elapsed);
    }
    reports
}

/// Reports for every input, ordered by instance name regardless of scheduling.
pub fn run_suite(check: Check, inputs: &[SuiteInput], parallel: bool) -> Vec<Report> {
    let one = |input: &SuiteInput| match input {
        SuiteInput::Loaded(inst) => run_check(check, inst),
        SuiteInput::Invalid { name, reason } => vec![Report::invalid(name, check.name(), reason.clone())],
    };
    let mut order: Vec<&SuiteInput> = inputs.iter().collect();
    order.sort_by(|a, b| a.name().cmp(b.name()));
    let mut reports: Vec<Report> = if parallel {
        order.par_iter().flat_map_iter(|i| one(i)).collect()
    } else {
        order.iter().flat_map(|i| one(i)).collect()
    };
    reports.sort_by(|a, b| (&a.instance, &a.check).cmp(&(&b.instance, &b.check)));
    reports
}

/// 0 when every report is PASS or NOT-APPLICABLE, 1 otherwise.
pub fn exit_status(reports: &[Report]) -> i32 {
    if reports.iter().all(|r| r.status.is_ok()) {
        0
    } else {
        1
    }
}

fn summary(reports: &[Report]) -> BTreeMap<Status, usize> {
    let mut counts = BTreeMap::new();
    for r in reports {
        *counts.entry(r.status).or_insert(0) += 1;
    }
    counts
}

pub fn render_human(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        out += &format!("{r}\n");
    }
    let counts = summary(reports)
        .into_iter()
        .map(|(s, n)| format!("{n} {s}"))
        .collect::<Vec<_>>()
        .join(", ");
    out += &format!("{} reports: {counts}\n", reports.len());
    out
}

#[derive(Serialize)]
struct MachineOutput<'a> {
    command: &'a str,
    reports: &'a [Report],
    summary: BTreeMap<Status, usize>,
}

/// Pretty JSON without timing, stable across runs.
pub fn render_machine(command: &str, reports: &[Report]) -> String {
    let out = MachineOutput {
        command,
        reports,
        summary: summary(reports),
    };
    serde_json::to_string_pretty(&out).expect("reports serialize") + "\n"
}
