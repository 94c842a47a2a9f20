//! Randomized theorem suites with replayable JSON reports.
//!
//! A suite is a list of named checks. Case `i` of suite `s` under seed `S`
//! draws from `ChaCha8Rng::seed_from_u64(S)` on stream `i`, so any single
//! case can be rerun in isolation. The first few indices of some suites run
//! fixed regressions instead of random draws.

pub mod convolution;
pub mod gen;
mod search;
mod suites;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::json::{point_to_json, poly_to_value, LinearOpJson, MoebiusJson};
use crate::moebius::MoebiusMap;
use crate::poly::{BiHomPoly, ProjPoint};
use crate::apolarity::LinearOp;
use crate::roots::default_precision;
use crate::stability::{StabilityOptions, Status, Verdict};

pub use convolution::{additive_convolution, multiplicative_convolution};
pub use gen::{gen_rooted, gen_stable};
pub use search::{search_grace_counterexample, SearchReport};

/// Sizes and budgets shared by every case of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub cases: usize,
    /// Sample points per multivariate falsification.
    pub budget: usize,
    pub precision: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { cases: 100, budget: 2000, precision: default_precision() }
    }
}

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    /// A falsification search spent its budget without finding a zero.
    Budgeted,
    Fail(String),
    Indeterminate(String),
}

impl Check {
    fn rank(&self) -> u8 {
        match self {
            Check::Pass => 0,
            Check::Budgeted => 1,
            Check::Indeterminate(_) => 2,
            Check::Fail(_) => 3,
        }
    }

    /// The more severe of the two.
    pub fn and(self, other: Check) -> Check {
        if other.rank() > self.rank() {
            other
        } else {
            self
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Check::Fail(_))
    }

    /// Reading of a falsification verdict: any zero fails.
    pub fn from_falsification(v: &Verdict, what: &str) -> Check {
        match v.status {
            Status::Stable => Check::Pass,
            Status::Unstable => Check::Fail(format!(
                "{what}: zero at {}",
                v.witness.as_ref().map_or_else(|| "?".into(), |w| serde_json::to_string(&point_to_json(w)).unwrap_or_default())
            )),
            Status::WeaklyZero => Check::Fail(format!("{what}: zero polynomial")),
            Status::Indeterminate if v.leaning_stable => Check::Budgeted,
            Status::Indeterminate => Check::Indeterminate(format!("{what}: undecided at this precision")),
        }
    }
}

/// Per-case state: the case RNG and the serialized inputs.
pub struct Ctx {
    pub rng: ChaCha8Rng,
    pub cfg: SuiteConfig,
    inputs: Map<String, Value>,
}

impl Ctx {
    fn new(seed: u64, index: usize, cfg: &SuiteConfig) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index as u64);
        Ctx { rng, cfg: cfg.clone(), inputs: Map::new() }
    }

    pub fn note(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    pub fn note_poly(&mut self, key: &str, p: &BiHomPoly) {
        self.note(key, poly_to_value(p));
    }

    pub fn note_point(&mut self, key: &str, z: &ProjPoint) {
        self.note(key, serde_json::to_value(point_to_json(z)).expect("plain data"));
    }

    pub fn note_map(&mut self, key: &str, m: &MoebiusMap) {
        self.note(key, serde_json::to_value(MoebiusJson::from(m)).expect("plain data"));
    }

    pub fn note_op(&mut self, key: &str, t: &LinearOp) {
        self.note(key, serde_json::to_value(LinearOpJson::from(t)).expect("plain data"));
    }

    /// Options for one stability call, with a fresh search seed.
    pub fn opts(&mut self) -> StabilityOptions {
        StabilityOptions { precision: self.cfg.precision, budget: self.cfg.budget, seed: self.rng.gen() }
    }
}

/// A failing or undecided case, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub index: usize,
    pub check: String,
    pub inputs: Value,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseResult {
    pub index: usize,
    pub check: String,
    pub inputs: Value,
    pub outcome: Check,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub config: SuiteConfig,
    pub cases: usize,
    pub passed: usize,
    /// Passing cases whose multivariate search found nothing within budget.
    pub budgeted: usize,
    /// Cases run per check name.
    pub checks: BTreeMap<String, usize>,
    pub failures: Vec<CaseRecord>,
    pub indeterminates: Vec<CaseRecord>,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn indeterminate_fraction(&self) -> f64 {
        if self.cases == 0 {
            0.0
        } else {
            self.indeterminates.len() as f64 / self.cases as f64
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// Serialization with the timing field zeroed, for byte comparison.
    pub fn to_json_untimed(&self) -> String {
        SuiteReport { wall_time_ms: 0, ..self.clone() }.to_json()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Names accepted by [`run_suite`].
pub fn suite_names() -> Vec<&'static str> {
    suites::CATALOG.iter().map(|s| s.name).collect()
}

fn lookup(name: &str) -> Result<&'static suites::SuiteDef> {
    suites::CATALOG.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| e.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

fn run_one(def: &suites::SuiteDef, seed: u64, index: usize, cfg: &SuiteConfig) -> CaseResult {
    let (name, f) = def.case(index);
    let mut ctx = Ctx::new(seed, index, cfg);
    let outcome = match catch_unwind(AssertUnwindSafe(|| f(&mut ctx))) {
        Ok(Ok(c)) => c,
        Ok(Err(e)) => Check::Fail(format!("error: {e}")),
        Err(e) => Check::Fail(format!("panic: {}", panic_message(e))),
    };
    CaseResult { index, check: name.to_string(), inputs: Value::Object(ctx.inputs), outcome }
}

/// Runs case `index` of `suite` on its own.
pub fn run_case(suite: &str, seed: u64, index: usize, cfg: &SuiteConfig) -> Result<CaseResult> {
    Ok(run_one(lookup(suite)?, seed, index, cfg))
}

/// Runs `cfg.cases` cases of the named suite in parallel.
pub fn run_suite(suite: &str, seed: u64, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let def = lookup(suite)?;
    let start = Instant::now();
    let results: Vec<CaseResult> = (0..cfg.cases).into_par_iter().map(|i| run_one(def, seed, i, cfg)).collect();
    let mut report = SuiteReport {
        suite: suite.to_string(),
        seed,
        config: cfg.clone(),
        cases: results.len(),
        passed: 0,
        budgeted: 0,
        checks: BTreeMap::new(),
        failures: Vec::new(),
        indeterminates: Vec::new(),
        wall_time_ms: 0,
    };
    for r in results {
        *report.checks.entry(r.check.clone()).or_default() += 1;
        let record = |detail: String| CaseRecord { index: r.index, check: r.check.clone(), inputs: r.inputs.clone(), detail };
        match &r.outcome {
            Check::Pass => report.passed += 1,
            Check::Budgeted => {
                report.passed += 1;
                report.budgeted += 1;
            }
            Check::Fail(d) => report.failures.push(record(d.clone())),
            Check::Indeterminate(d) => report.indeterminates.push(record(d.clone())),
        }
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Outcome of rerunning one recorded case.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Replay {
    pub index: usize,
    pub check: String,
    /// Same inputs and same detail as recorded.
    pub reproduced: bool,
    pub detail: String,
}

/// Reruns every failure and indeterminate case of a report.
pub fn replay_report(report: &SuiteReport) -> Result<Vec<Replay>> {
    let def = lookup(&report.suite)?;
    let recorded = report.failures.iter().chain(&report.indeterminates);
    Ok(recorded
        .map(|rec| {
            let r = run_one(def, report.seed, rec.index, &report.config);
            let detail = match &r.outcome {
                Check::Fail(d) | Check::Indeterminate(d) => d.clone(),
                Check::Pass | Check::Budgeted => "passed on replay".into(),
            };
            Replay { index: rec.index, check: r.check.clone(), reproduced: r.inputs == rec.inputs && detail == rec.detail, detail }
        })
        .collect())
}
