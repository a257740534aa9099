//! The built-in verification suite: one named check per acceptance
//! criterion, each reproducing the worked examples and sweeping exact
//! properties over generated data.

mod criteria;
pub mod data;
pub mod golden;

use rayon::prelude::*;
use serde::Serialize;

pub use golden::Golden;

/// Collects the evidence of one check: failures decide the verdict, notes
/// carry the witnesses that are printed either way.
#[derive(Debug, Default)]
pub struct Log {
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Log {
    pub fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.cases += 1;
        self.failures.push(msg.into());
    }
}

pub struct CheckDef {
    pub id: &'static str,
    pub criterion: u8,
    pub tags: &'static [&'static str],
    pub title: &'static str,
    run: fn(&Golden, &mut Log),
}

impl CheckDef {
    pub fn matches(&self, filter: &str) -> bool {
        self.id.contains(filter) || self.tags.contains(&filter) || self.criterion.to_string() == filter
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: &'static str,
    pub criterion: u8,
    pub tags: &'static [&'static str],
    pub title: &'static str,
    pub pass: bool,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Outcome {
    /// `PASS [3] ramify.product-formula (128 cases)`.
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {} ({} cases): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.criterion,
            self.id,
            self.cases,
            self.title
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Outcome>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub fn checks() -> &'static [CheckDef] {
    criteria::CHECKS
}

pub fn run_check(def: &CheckDef, golden: &Golden) -> Outcome {
    let mut log = Log::default();
    (def.run)(golden, &mut log);
    if log.cases == 0 {
        log.failures.push("no cases were checked".into());
    }
    Outcome {
        id: def.id,
        criterion: def.criterion,
        tags: def.tags,
        title: def.title,
        pass: log.failures.is_empty(),
        cases: log.cases,
        failures: log.failures,
        notes: log.notes,
    }
}

/// Runs every check matching `filter` (all when `None`); results come back
/// in registry order whatever the thread count.
pub fn run(filter: Option<&str>, golden: &Golden) -> Summary {
    let selected: Vec<&CheckDef> = checks()
        .iter()
        .filter(|c| filter.is_none_or(|f| c.matches(f)))
        .collect();
    let checks: Vec<Outcome> = selected.par_iter().map(|c| run_check(c, golden)).collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    Summary {
        passed,
        failed: checks.len() - passed,
        checks,
    }
}
