use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of a bounded exhaustive check.
///
/// A failed report always carries a counterexample, given as element text
/// forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<Vec<String>>,
    pub note: String,
}

impl VerificationReport {
    pub fn pass(checked: u64, note: impl Into<String>) -> Self {
        VerificationReport {
            passed: true,
            checked,
            counterexample: None,
            note: note.into(),
        }
    }

    pub fn fail(checked: u64, counterexample: Vec<String>, note: impl Into<String>) -> Self {
        VerificationReport {
            passed: false,
            checked,
            counterexample: Some(counterexample),
            note: note.into(),
        }
    }

    /// Combines reports: passes iff all pass; the first failure wins.
    pub fn all(
        reports: impl IntoIterator<Item = VerificationReport>,
        note: impl Into<String>,
    ) -> Self {
        let mut checked = 0;
        let mut notes = vec![note.into()];
        for r in reports {
            checked += r.checked;
            if !r.passed {
                return VerificationReport { checked, ..r };
            }
            if !r.note.is_empty() {
                notes.push(r.note);
            }
        }
        VerificationReport::pass(checked, notes.join("; "))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{verdict} (checked {})", self.checked)?;
        if let Some(cx) = &self.counterexample {
            write!(f, " counterexample [{}]", cx.join(", "))?;
        }
        if !self.note.is_empty() {
            write!(f, ": {}", self.note)?;
        }
        Ok(())
    }
}

/// Counts checks and keeps the first counterexample.
#[derive(Debug, Default)]
pub(crate) struct Sweep {
    checked: u64,
    counterexample: Option<Vec<String>>,
}

impl Sweep {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one check. Returns `ok`; the counterexample is built only on
    /// the first failure.
    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Vec<String>) -> bool {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(counterexample());
        }
        ok
    }

    pub fn finish(self, note: impl Into<String>) -> VerificationReport {
        match self.counterexample {
            None => VerificationReport::pass(self.checked, note),
            Some(cx) => VerificationReport::fail(self.checked, cx, note),
        }
    }
}
