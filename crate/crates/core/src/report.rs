//! Machine-readable verification reports.
//!
//! Every suite emits one record per checked identity, each carrying a stable
//! id, an anchor label for auditing, a pass/fail status, and a witness on
//! failure. Records are sorted by id so output is byte-for-byte deterministic.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Record {
    pub fn pass(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Record {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        anchor: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        Record {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn check(
        id: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Record::pass(id, anchor)
        } else {
            Record::fail(id, anchor, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(
        suite: impl Into<String>,
        params: &[(&str, String)],
        mut records: Vec<Record>,
    ) -> Self {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = records.iter().filter(|r| r.passed()).count();
        let summary = Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        };
        Report {
            suite: suite.into(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            records,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// One human line per record plus a totals line.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {}\n", self.suite));
        for (k, v) in &self.params {
            out.push_str(&format!("  param {k} = {v}\n"));
        }
        for rec in &self.records {
            let status = if rec.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{status}] {:<28} {}\n", rec.id, rec.anchor));
            if let Some(w) = &rec.witness {
                out.push_str(&format!("         witness: {w}\n"));
            }
        }
        out.push_str(&format!(
            "  {}/{} passed\n",
            self.summary.passed, self.summary.total
        ));
        out
    }
}
