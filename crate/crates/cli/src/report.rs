//! The canonical report format. Field order is fixed by the struct
//! definitions and every map is ordered, so equal jobs give equal bytes.

use std::collections::BTreeMap;

use qhowe_core::fock::CheckReport;
use serde::Serialize;
use serde_json::Value;

use crate::config::JobConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    /// The statement the check instantiates.
    pub instantiates: String,
    pub space: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

impl CheckEntry {
    pub fn from_report(report: CheckReport, instantiates: &str) -> Self {
        let pass = report.pass();
        Self {
            name: report.name,
            instantiates: instantiates.into(),
            space: report.space,
            checked: report.checked,
            failures: report.failures,
            pass,
        }
    }

    /// A single yes/no check.
    pub fn flag(name: &str, instantiates: &str, space: &str, ok: bool) -> Self {
        Self {
            name: name.into(),
            instantiates: instantiates.into(),
            space: space.into(),
            checked: 1,
            failures: if ok { Vec::new() } else { vec![format!("{name} failed")] },
            pass: ok,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub job: JobConfig,
    pub checks: Vec<CheckEntry>,
    pub details: BTreeMap<String, Value>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(job: &JobConfig) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            command: job.command.name().into(),
            job: job.clone(),
            checks: Vec::new(),
            details: BTreeMap::new(),
            notes: Vec::new(),
            pass: true,
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) -> anyhow::Result<()> {
        self.details.insert(key.into(), serde_json::to_value(value)?);
        Ok(())
    }

    /// Seals the report: `pass` is the conjunction of every check.
    pub fn finish(mut self) -> Self {
        self.pass = self.checks.iter().all(|c| c.pass);
        self
    }

    pub fn to_text(&self) -> anyhow::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
