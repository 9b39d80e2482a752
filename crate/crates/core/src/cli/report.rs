use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            residual: None,
            certificate: None,
        }
    }

    pub fn fail(name: impl Into<String>, residual: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            residual: Some(residual.into()),
            certificate: None,
        }
    }

    /// A value reported without pass/fail semantics.
    pub fn info(name: impl Into<String>, value: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Info,
            residual: None,
            certificate: Some(value.into()),
        }
    }

    pub fn with_certificate(mut self, c: impl Into<String>) -> Self {
        self.certificate = Some(c.into());
        self
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, "nonzero")
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            checks: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Records a failed mathematical check from an error.
    pub fn push_err(&mut self, name: &str, e: &Error) {
        self.checks.push(Check::fail(name, e.to_string()));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "    ",
            };
            let _ = write!(out, "{tag} {}", c.name);
            if let Some(x) = &c.certificate {
                let _ = write!(out, ": {x}");
            }
            if let Some(r) = &c.residual {
                let _ = write!(out, " [{r}]");
            }
            out.push('\n');
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed {ms} ms");
        }
        out
    }
}
