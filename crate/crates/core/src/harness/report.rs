use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Outcome of one check on one algebra. A non-finite `max_residual`
/// (a sample raised an error) serializes as `null` and never passes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub algebra: String,
    pub seed: u64,
    pub samples_run: usize,
    pub samples_rejected: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub wall_time_ms: u64,
    /// First sample error, for diagnostics only.
    #[serde(skip)]
    pub first_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    pub wall_time_ms: u64,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

pub fn summarize(reports: &[CheckReport]) -> Summary {
    let passed = reports.iter().filter(|r| r.pass).count();
    Summary {
        checks: reports.len(),
        passed,
        failed: reports.len() - passed,
        pass: passed == reports.len(),
        wall_time_ms: reports.iter().map(|r| r.wall_time_ms).sum(),
    }
}

/// One JSON object per report, then `{"summary": {...}}`.
pub fn write_jsonl<W: Write>(mut w: W, reports: &[CheckReport]) -> Result<()> {
    let ser = |e: serde_json::Error| crate::error::Error::Io(e.to_string());
    for r in reports {
        serde_json::to_writer(&mut w, r).map_err(ser)?;
        w.write_all(b"\n")?;
    }
    serde_json::to_writer(&mut w, &SummaryLine { summary: &summarize(reports) }).map_err(ser)?;
    w.write_all(b"\n")?;
    Ok(())
}

/// Drops every `wall_time_ms` field so two report streams can be compared.
pub fn strip_timing(jsonl: &str) -> String {
    fn strip(v: &mut serde_json::Value) {
        match v {
            serde_json::Value::Object(m) => {
                m.remove("wall_time_ms");
                m.values_mut().for_each(strip);
            }
            serde_json::Value::Array(a) => a.iter_mut().for_each(strip),
            _ => {}
        }
    }
    jsonl
        .lines()
        .map(|line| match serde_json::from_str::<serde_json::Value>(line) {
            Ok(mut v) => {
                strip(&mut v);
                v.to_string()
            }
            Err(_) => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}
