//! Self-describing JSON documents for verification and scan results.
//!
//! Everything except the `timings` section is a pure function of the
//! command and the tool version, so two runs of the same command produce
//! byte-identical documents once timings are left out.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::enumeration::ExtremalReport;
use crate::error::{Error, Result};
use crate::index::EPS;
use crate::verify::Verdict;

pub const TOOL: &str = "eus-lab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub claim: String,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    pub eps: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scans: Vec<ExtremalReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

impl ReportDocument {
    pub fn new(command: Vec<String>) -> Self {
        ReportDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            command,
            eps: EPS,
            notes: Vec::new(),
            summary: None,
            verdicts: Vec::new(),
            scans: Vec::new(),
            timings: None,
        }
    }

    pub fn with_verdicts(mut self, verdicts: Vec<Verdict>, timings: bool) -> Self {
        let mut summary = Summary::default();
        for v in &verdicts {
            if v.is_confirmed() {
                summary.confirmed += 1;
            } else if v.is_refuted() {
                summary.refuted += 1;
            } else {
                summary.skipped += 1;
            }
        }
        if verdicts
            .iter()
            .any(|v| v.note.as_deref() == Some(crate::verify::CONNECTED_CLASS_NOTE))
        {
            self.notes.push(format!(
                "connected-min: {}",
                crate::verify::CONNECTED_CLASS_NOTE
            ));
        }
        if timings {
            self.timings = Some(
                verdicts
                    .iter()
                    .map(|v| Timing {
                        claim: v.claim.clone(),
                        millis: v.elapsed.as_secs_f64() * 1e3,
                    })
                    .collect(),
            );
        }
        self.summary = Some(summary);
        self.verdicts = verdicts;
        self
    }

    pub fn has_refuted(&self) -> bool {
        self.verdicts.iter().any(Verdict::is_refuted)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report documents always serialize");
        s.push('\n');
        s
    }

    /// Parses a document, restoring verdict durations from `timings`.
    pub fn from_json(text: &str) -> Result<Self> {
        let mut doc: ReportDocument = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParams(format!("report document: {e}")))?;
        if let Some(timings) = &doc.timings {
            for v in &mut doc.verdicts {
                if let Some(t) = timings.iter().find(|t| t.claim == v.claim) {
                    v.elapsed = Duration::from_secs_f64(t.millis / 1e3);
                }
            }
        }
        Ok(doc)
    }
}
