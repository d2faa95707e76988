//! Pass/fail reports shared by the verifiers.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub x: String,
    pub y: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one named check over a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub window: usize,
    pub pairs_tested: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, window: usize) -> CheckReport {
        CheckReport { check: check.into(), window, pairs_tested: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one case and records a failure when `expected != got`.
    pub fn compare<T: PartialEq + std::fmt::Display>(&mut self, x: impl ToString, y: impl ToString, expected: T, got: T) {
        self.pairs_tested += 1;
        if expected != got {
            self.failures.push(Failure { x: x.to_string(), y: y.to_string(), expected: expected.to_string(), got: got.to_string() });
        }
    }

    pub fn fail(&mut self, x: impl ToString, y: impl ToString, expected: impl ToString, got: impl ToString) {
        self.failures.push(Failure { x: x.to_string(), y: y.to_string(), expected: expected.to_string(), got: got.to_string() });
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.pairs_tested += other.pairs_tested;
        self.failures.extend(other.failures);
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} ({} cases, {} failures, window {})",
            self.check,
            if self.passed() { "PASS" } else { "FAIL" },
            self.pairs_tested,
            self.failures.len(),
            self.window
        )?;
        for fl in self.failures.iter().take(5) {
            write!(f, "\n  x={} y={} expected {} got {}", fl.x, fl.y, fl.expected, fl.got)?;
        }
        Ok(())
    }
}
