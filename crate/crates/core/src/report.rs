//! Check results and their JSON / markdown rendering.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub elapsed_ms: u64,
}

impl CheckResult {
    /// Pass iff the two values serialize to the same JSON.
    pub fn compare(id: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> Self {
        let (e, a) = (to_value(expected), to_value(actual));
        let status = if e == a { Status::Pass } else { Status::Fail };
        CheckResult { check_id: id.into(), status, expected: e, actual: a, elapsed_ms: 0 }
    }

    /// Pass iff `ok`; used when the expectation is a predicate such as
    /// "rank < 4" rather than a value.
    pub fn predicate(id: impl Into<String>, ok: bool, expected: impl Serialize, actual: impl Serialize) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        CheckResult { check_id: id.into(), status, expected: to_value(expected), actual: to_value(actual), elapsed_ms: 0 }
    }

    pub fn skip(id: impl Into<String>, reason: &str) -> Self {
        CheckResult {
            check_id: id.into(),
            status: Status::Skip,
            expected: Value::Null,
            actual: Value::String(reason.to_string()),
            elapsed_ms: 0,
        }
    }

    pub fn with_elapsed(mut self, ms: u64) -> Self {
        self.elapsed_ms = ms;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or_else(|e| Value::String(format!("unserializable: {e}")))
}

/// Run `f`, stamping the wall time on every result it returns.
pub fn timed(f: impl FnOnce() -> Vec<CheckResult>) -> Vec<CheckResult> {
    let t = Instant::now();
    let mut out = f();
    let ms = t.elapsed().as_millis() as u64;
    let share = if out.is_empty() { 0 } else { ms / out.len() as u64 };
    for r in &mut out {
        r.elapsed_ms = share;
    }
    out
}

/// A data table shown in markdown output, e.g. `vector | weight`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Section {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub trailer: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.sections.extend(other.sections);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Md,
}

/// Separates the markdown body from the timing footer.
pub const TIMING_MARKER: &str = "<!-- timing -->";

/// JSON: an array of check results. Markdown: a results table, the data
/// sections, then a timing footer after [`TIMING_MARKER`].
pub fn emit_report(results: &[CheckResult], format: Format) -> Vec<u8> {
    emit(&Report { checks: results.to_vec(), sections: Vec::new() }, format)
}

pub fn emit(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.checks).expect("serializable");
            s.push('\n');
            s.into_bytes()
        }
        Format::Md => markdown(report).into_bytes(),
    }
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let s = s.replace('|', "\\|");
    if s.chars().count() > 120 {
        let cut: String = s.chars().take(117).collect();
        format!("{cut}...")
    } else {
        s
    }
}

fn table(out: &mut String, headers: &[&str], rows: impl IntoIterator<Item = Vec<String>>) {
    out.push_str(&format!("| {} |\n", headers.join(" | ")));
    out.push_str(&format!("|{}\n", headers.iter().map(|_| "---|").collect::<String>()));
    for r in rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
}

fn markdown(report: &Report) -> String {
    let mut out = String::new();
    if !report.checks.is_empty() {
        let passed = report.checks.iter().filter(|c| c.status == Status::Pass).count();
        let failed = report.checks.iter().filter(|c| c.status == Status::Fail).count();
        out.push_str(&format!("{} checks: {passed} pass, {failed} fail\n\n", report.checks.len()));
        table(
            &mut out,
            &["check", "status", "expected", "actual"],
            report.checks.iter().map(|c| {
                let st = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skip => "skip",
                };
                vec![c.check_id.clone(), st.into(), cell(&c.expected), cell(&c.actual)]
            }),
        );
    }
    for s in &report.sections {
        out.push_str(&format!("\n### {}\n\n", s.title));
        let h: Vec<&str> = s.headers.iter().map(String::as_str).collect();
        table(&mut out, &h, s.rows.iter().cloned());
        if let Some(t) = &s.trailer {
            out.push_str(&format!("\n{t}\n"));
        }
    }
    out.push_str(&format!("\n{TIMING_MARKER}\n"));
    let total: u64 = report.checks.iter().map(|c| c.elapsed_ms).sum();
    out.push_str(&format!("elapsed: {total} ms\n"));
    out
}

/// The part of a report that must be identical across runs: markdown up to
/// the timing footer, JSON with every `elapsed_ms` set to zero.
pub fn comparison_body(bytes: &[u8], format: Format) -> Vec<u8> {
    match format {
        Format::Md => {
            let s = String::from_utf8_lossy(bytes);
            s.split(TIMING_MARKER).next().unwrap_or_default().as_bytes().to_vec()
        }
        Format::Json => match serde_json::from_slice::<Vec<CheckResult>>(bytes) {
            Ok(mut v) => {
                for r in &mut v {
                    r.elapsed_ms = 0;
                }
                emit_report(&v, Format::Json)
            }
            Err(_) => bytes.to_vec(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_json_is_an_empty_array() {
        assert_eq!(emit_report(&[], Format::Json), b"[]\n");
    }

    #[test]
    fn single_pass_row() {
        let r = CheckResult::compare("rank.0123", 4, 4);
        assert_eq!(r.status, Status::Pass);
        let md = String::from_utf8(emit_report(&[r], Format::Md)).unwrap();
        let rows: Vec<&str> = md.lines().filter(|l| l.starts_with("| rank")).collect();
        assert_eq!(rows, ["| rank.0123 | pass | 4 | 4 |"]);
    }

    #[test]
    fn fail_keeps_both_values() {
        let r = CheckResult::compare("x", 1, 2);
        assert_eq!(r.status, Status::Fail);
        assert_ne!(r.expected, r.actual);
    }

    #[test]
    fn timing_is_outside_the_body() {
        let a = CheckResult::compare("x", 1, 1).with_elapsed(5);
        let b = CheckResult::compare("x", 1, 1).with_elapsed(9);
        for f in [Format::Md, Format::Json] {
            let (ea, eb) = (emit_report(std::slice::from_ref(&a), f), emit_report(std::slice::from_ref(&b), f));
            assert_ne!(ea, eb);
            assert_eq!(comparison_body(&ea, f), comparison_body(&eb, f));
        }
    }
}
