use crate::element::AlgebraElement;
use rayon::prelude::*;
use std::time::Instant;

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Failed, with a witness describing the first observed discrepancy.
    Fail(String),
    /// Not applicable under the current configuration, with the reason.
    Skip(String),
}

impl Verdict {
    /// Pass when the condition holds, otherwise fail with the witness.
    pub fn require(cond: bool, witness: impl Into<String>) -> Verdict {
        if cond {
            Verdict::Pass
        } else {
            Verdict::Fail(witness.into())
        }
    }

    /// Combines verdicts: failure dominates, then skip; among equals the
    /// earlier operand's witness wins.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail(w), _) => Verdict::Fail(w),
            (_, Verdict::Fail(w)) => Verdict::Fail(w),
            (Verdict::Skip(w), _) => Verdict::Skip(w),
            (_, Verdict::Skip(w)) => Verdict::Skip(w),
            (Verdict::Pass, Verdict::Pass) => Verdict::Pass,
        }
    }
}

/// Pass/fail status of a finished check, with failure and skip notes moved
/// into the witness field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// A finished check: its identifier, status, optional witness text, and
/// elapsed wall time.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

/// All checks of one named suite, in registration order.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    /// Whether no check failed (skips do not count against a suite).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    /// Counts of (pass, fail, skipped) checks.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => counts.0 += 1,
                CheckStatus::Fail => counts.1 += 1,
                CheckStatus::Skipped => counts.2 += 1,
            }
        }
        counts
    }

    /// Identifiers of the failing checks, in order.
    pub fn failing_ids(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.id.clone())
            .collect()
    }

    /// Looks up a check by id.
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

type BoxedCheck<'a> = Box<dyn FnOnce() -> Verdict + Send + 'a>;

/// Collects named checks and runs them independently in parallel. Results
/// keep registration order regardless of completion order.
pub struct SuiteBuilder<'a> {
    name: String,
    checks: Vec<(String, BoxedCheck<'a>)>,
}

impl<'a> SuiteBuilder<'a> {
    pub fn new(name: impl Into<String>) -> Self {
        SuiteBuilder { name: name.into(), checks: vec![] }
    }

    pub fn check(&mut self, id: impl Into<String>, f: impl FnOnce() -> Verdict + Send + 'a) {
        self.checks.push((id.into(), Box::new(f)));
    }

    pub fn run(self) -> SuiteReport {
        let checks = self
            .checks
            .into_par_iter()
            .map(|(id, f)| {
                let start = Instant::now();
                let verdict = f();
                let elapsed_ms = start.elapsed().as_millis();
                let (status, witness) = match verdict {
                    Verdict::Pass => (CheckStatus::Pass, None),
                    Verdict::Fail(w) => (CheckStatus::Fail, Some(w)),
                    Verdict::Skip(w) => (CheckStatus::Skipped, Some(w)),
                };
                CheckResult { id, status, witness, elapsed_ms }
            })
            .collect();
        SuiteReport { name: self.name, checks }
    }
}

/// Element equality as a verdict, witnessing the first differing basis
/// coefficient on failure.
pub fn expect_elements_equal(lhs: &AlgebraElement, rhs: &AlgebraElement) -> Verdict {
    match lhs.first_difference(rhs) {
        None => Verdict::Pass,
        Some((b, l, r)) => Verdict::Fail(format!(
            "at {}: left {}, right {}",
            lhs.handle().basis_label(b),
            l,
            r
        )),
    }
}

/// Zero test as a verdict, witnessing the first nonzero coefficient.
pub fn expect_element_zero(x: &AlgebraElement) -> Verdict {
    match x.iter().next() {
        None => Verdict::Pass,
        Some((b, c)) => {
            Verdict::Fail(format!("at {}: residual {}", x.handle().basis_label(b), c))
        }
    }
}
