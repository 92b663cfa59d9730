//! Machine-readable report document and the human one-line-per-check rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tasaki_core::contact::InferredParameters;
use tasaki_core::{Scalar, VerificationReport};

use crate::document::ScalarText;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    pub witness: Vec<usize>,
    pub defect: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParametersEntry {
    /// `None` when every nonzero `α` fits (trivial horizontal space).
    pub alpha: Option<ScalarText>,
    pub delta: ScalarText,
}

impl ParametersEntry {
    pub fn of<S: Scalar>(p: &InferredParameters<S>) -> Self {
        ParametersEntry { alpha: p.alpha.as_ref().map(ScalarText::of), delta: ScalarText::of(&p.delta) }
    }

    pub fn describe(&self) -> String {
        match &self.alpha {
            Some(a) => format!("alpha = {}, delta = {}", a.0, self.delta.0),
            None => format!("alpha = any nonzero value (horizontal space is trivial), delta = {}", self.delta.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub overall: Status,
    pub checks: Vec<CheckEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inferred_parameters: Option<ParametersEntry>,
}

impl ReportDocument {
    pub fn new(report: &VerificationReport, inferred: Option<ParametersEntry>) -> Self {
        ReportDocument {
            overall: Status::of(report.passed()),
            checks: report
                .checks
                .iter()
                .map(|c| CheckEntry {
                    name: c.name.clone(),
                    status: Status::of(c.passed),
                    witness: c.witness.clone(),
                    defect: c.defect.clone(),
                })
                .collect(),
            inferred_parameters: inferred,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// One line per check: status, name, the identity it tests, and the
    /// first offending basis indices with their defect.
    pub fn render(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = write!(out, "{status}  {:<width$}  {}", c.name, equation_tag(&c.name));
            if c.status == Status::Fail {
                if !c.witness.is_empty() {
                    let _ = write!(out, "  at {:?}", c.witness);
                }
                if let Some(d) = &c.defect {
                    let _ = write!(out, "  defect {d}");
                }
            }
            out.push('\n');
        }
        if let Some(p) = &self.inferred_parameters {
            let _ = writeln!(out, "inferred: {}", p.describe());
        }
        let _ = writeln!(out, "overall: {}", if self.passed() { "pass" } else { "fail" });
        out
    }
}

/// The identity a named check tests.
pub fn equation_tag(name: &str) -> &'static str {
    let suffix = name.rsplit_once('.').map_or(name, |(_, s)| s);
    match (name, suffix) {
        ("Jacobi identity", _) => "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0",
        ("metric.positive_definite", _) => "g(X,X) > 0 for X != 0",
        ("split.orthogonal", _) => "g(V, H) = 0",
        ("split.dimension", _) => "dim V = 3, dim H = 4n",
        ("reeb.commute", _) => "[xi_i, xi_j] = 0",
        ("parameters.inferred", _) => "parameters recoverable from the structure",
        ("parameters.degenerate", _) => "delta = 0",
        (n, "unit") if n.starts_with("acms") => "g(xi, xi) = 1",
        (n, "dual") if n.starts_with("acms") => "eta = g(xi, .)",
        (n, "phi_xi") if n.starts_with("acms") => "phi xi = 0",
        (_, "phi_squared") => "phi^2 = -id + xi (x) eta",
        (_, "compatible_metric") => "g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)",
        (n, "phi_xi") if n.starts_with("compat") => "phi_i xi_j = xi_k",
        (_, "eta_phi") => "eta_i o phi_j = eta_k",
        (_, "phi_phi") => "phi_i phi_j = phi_k + xi_i (x) eta_j",
        (n, "structure_equation") if n.starts_with("sasakian") => "d eta_i = 2 alpha Phi_i + 2(alpha - delta) eta_j ^ eta_k",
        (n, "structure_equation") if n.starts_with("degenerate") => "d eta_i = 2 alpha Phi_i^H",
        (_, "kernel") => "ker d eta_i = V",
        ("iso.invertible", _) => "psi invertible",
        ("iso.bracket", _) => "psi[X,Y] = [psi X, psi Y]",
        ("iso.metric", _) => "g(psi X, psi Y) = g(X,Y)",
        ("iso.reeb", _) => "psi xi_i = xi_i",
        ("iso.eta", _) => "eta_i o psi = eta_i",
        ("iso.phi", _) => "psi o phi_i = phi_i o psi",
        _ => "",
    }
}
