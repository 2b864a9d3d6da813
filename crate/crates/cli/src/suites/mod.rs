mod crystal;
mod hl;
mod lr;
mod ring;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

/// Parameters shared by all suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub quick: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 7, quick: false }
    }
}

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: u64,
    pub params: Value,
    pub counterexample: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Report of a named suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub quick: bool,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Suite names and the criteria each one runs.
pub const SUITES: &[(&str, &[u8])] = &[
    ("lr", &[1]),
    ("bicrystal", &[2]),
    ("duality-en", &[3]),
    ("pieri", &[4, 5]),
    ("s-action", &[6, 7, 9]),
    ("ore", &[8]),
    ("extremal", &[10]),
    ("annihilator", &[11]),
    ("hl", &[12, 13]),
];

pub fn suite_criteria(name: &str) -> Option<Vec<u8>> {
    if name == "all" {
        return Some((1..=13).collect());
    }
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, c)| c.to_vec())
}

/// Run one criterion by number.
pub fn criterion(n: u8, cfg: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let mut r = match n {
        1 => crystal::lr_oracle(cfg),
        2 => crystal::bicrystal_commutation(cfg),
        3 => crystal::duality_en(cfg),
        4 => lr::pieri(cfg),
        5 => lr::level_one(cfg),
        6 => ring::s_operator_identity(cfg),
        7 => ring::skew_expansion(cfg),
        8 => ring::ore(cfg),
        9 => ring::h_calculus(cfg),
        10 => lr::extremal(cfg),
        11 => ring::annihilator(cfg),
        12 => hl::kostka_foulkes_action(cfg),
        13 => hl::relations(cfg),
        _ => panic!("no criterion {n}"),
    };
    r.criterion = n;
    r.elapsed = start.elapsed();
    r
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    let checks: Vec<CheckResult> = suite_criteria(name)?.into_iter().map(|n| criterion(n, cfg)).collect();
    Some(SuiteReport {
        suite: name.to_string(),
        seed: cfg.seed,
        quick: cfg.quick,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Check every item in parallel; the counterexample reported is the first failing item
/// in input order, so the result does not depend on scheduling.
pub(crate) fn grid<T, F>(name: &str, params: Value, items: &[T], check: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T) -> Result<u64, Value> + Sync,
{
    let results: Vec<Result<u64, Value>> = items.par_iter().map(&check).collect();
    let mut checked = 0;
    let mut failures = 0;
    let mut counterexample = None;
    for r in results {
        match r {
            Ok(k) => checked += k,
            Err(v) => {
                checked += 1;
                failures += 1;
                counterexample.get_or_insert(v);
            }
        }
    }
    CheckResult {
        criterion: 0,
        name: name.to_string(),
        passed: failures == 0,
        checked,
        failures,
        params,
        counterexample,
        elapsed: Duration::ZERO,
    }
}

pub(crate) fn ensure(ok: bool, v: impl FnOnce() -> Value) -> Result<(), Value> {
    if ok {
        Ok(())
    } else {
        Err(v())
    }
}
