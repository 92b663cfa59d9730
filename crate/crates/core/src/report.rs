//! Named pass/fail checks with witnesses.

use std::fmt;

use crate::scalar::Scalar;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Basis indices of the offending argument tuple (empty on success).
    pub witness: Vec<usize>,
    /// Defect at the witness, rendered in the scalar backend's notation.
    pub defect: Option<String>,
    /// Largest defect magnitude seen over all tested tuples.
    pub max_defect: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_defect(&self) -> f64 {
        self.checks.iter().map(|c| c.max_defect).fold(0.0, f64::max)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// Starts accumulating a check; see [`CheckBuilder`].
    pub fn begin<S: Scalar>(&mut self, name: impl Into<String>) -> CheckBuilder<'_, S> {
        CheckBuilder { report: self, name: name.into(), tolerance: None, failure: None, max_defect: 0.0, _s: Default::default() }
    }

    /// Like [`VerificationReport::begin`], but a defect fails only when its
    /// magnitude exceeds `tolerance` instead of the backend's zero test.
    pub fn begin_with_tolerance<S: Scalar>(&mut self, name: impl Into<String>, tolerance: f64) -> CheckBuilder<'_, S> {
        CheckBuilder { report: self, name: name.into(), tolerance: Some(tolerance), failure: None, max_defect: 0.0, _s: Default::default() }
    }

    /// Records a check with a boolean verdict and no numeric defect.
    pub fn record(&mut self, name: impl Into<String>, passed: bool, witness: Vec<usize>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: if passed { Vec::new() } else { witness },
            defect: None,
            max_defect: 0.0,
        });
    }
}

/// Accumulates defects over argument tuples; the first nonzero defect becomes the witness.
pub struct CheckBuilder<'a, S> {
    report: &'a mut VerificationReport,
    name: String,
    tolerance: Option<f64>,
    failure: Option<(Vec<usize>, String)>,
    max_defect: f64,
    _s: std::marker::PhantomData<S>,
}

impl<S: Scalar> CheckBuilder<'_, S> {
    pub fn observe(&mut self, witness: &[usize], defect: S) {
        self.max_defect = self.max_defect.max(defect.magnitude());
        let bad = match self.tolerance {
            Some(tol) => defect.magnitude() > tol,
            None => !defect.is_zero(),
        };
        if self.failure.is_none() && bad {
            self.failure = Some((witness.to_vec(), defect.to_string()));
        }
    }

    pub fn finish(self) -> bool {
        let passed = self.failure.is_none();
        let (witness, defect) = match self.failure {
            Some((w, d)) => (w, Some(d)),
            None => (Vec::new(), None),
        };
        self.report.checks.push(Check { name: self.name, passed, witness, defect, max_defect: self.max_defect });
        passed
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<_> = self.checks.iter().filter(|c| !c.passed).collect();
        if failed.is_empty() {
            return write!(f, "all {} checks passed", self.checks.len());
        }
        let names: Vec<_> = failed
            .iter()
            .map(|c| format!("{} at {:?}", c.name, c.witness))
            .collect();
        write!(f, "{} of {} checks failed: {}", failed.len(), self.checks.len(), names.join("; "))
    }
}
