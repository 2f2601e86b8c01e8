//! Property-verification harness: seeded, trial-based suites for every
//! construction and correspondence in the toolkit.
//!
//! Each suite draws `trials` random instances at sizes bounded by
//! `max_n` and checks one family of properties exhaustively on each
//! instance. Per-trial seeds are `seed + trial_index`, so parallel and
//! serial runs produce identical reports, and every failure carries its
//! trial seed plus serialized artifacts for replay.

mod suites;

use rayon::prelude::*;
use serde::Serialize;

/// Scale knobs shared by all suites.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Scale {
    pub max_n: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for Scale {
    fn default() -> Self {
        Scale { max_n: 6, trials: 100, seed: 1 }
    }
}

/// One failed trial: the derived seed reproduces the instance, and the
/// detail embeds the serialized counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    pub detail: String,
}

/// Outcome of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub max_n: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

/// Runs `check` on `scale.trials` independent trials in parallel.
pub(crate) fn run_trials(
    suite: &str,
    scale: &Scale,
    check: impl Fn(u64) -> Result<(), String> + Sync,
) -> SuiteReport {
    let mut failures: Vec<Failure> = (0..scale.trials)
        .into_par_iter()
        .filter_map(|trial| {
            let seed = scale.seed.wrapping_add(trial as u64);
            check(seed).err().map(|detail| Failure { trial, seed, detail })
        })
        .collect();
    failures.sort_by_key(|f| f.trial);
    SuiteReport {
        suite: suite.to_string(),
        trials: scale.trials,
        max_n: scale.max_n,
        passed: failures.is_empty(),
        failures,
    }
}

/// The registered suites, in reporting order.
pub fn suite_names() -> Vec<&'static str> {
    suites::REGISTRY.iter().map(|(name, _)| *name).collect()
}

/// Runs one suite by name.
pub fn run_suite(name: &str, scale: &Scale) -> Option<SuiteReport> {
    suites::REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f(scale))
}

/// Runs every suite.
pub fn run_all(scale: &Scale) -> Vec<SuiteReport> {
    suites::REGISTRY.iter().map(|(_, f)| f(scale)).collect()
}
