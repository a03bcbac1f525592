//! Fixture runner: every fixture file names a criterion and lists command
//! lines with the subset of the result they must produce.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Parser;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::{Cli, Command};
use crate::config::RunConfig;
use crate::error::{CliError, Result};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    pub criterion: u32,
    pub title: String,
    pub cases: Vec<FixtureCase>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureCase {
    pub name: String,
    #[serde(default)]
    pub note: Option<String>,
    /// arguments after the program name; `{fixtures}` expands to the fixture directory
    pub args: Vec<String>,
    pub expect: Value,
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn load_dir(dir: &Path) -> Result<Vec<(String, FixtureFile)>> {
    let entries = std::fs::read_dir(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut files = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.clone(), source })?;
        let file: FixtureFile = serde_json::from_str(&text).map_err(|source| CliError::Json { what: path.display().to_string(), source })?;
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        files.push((stem, file));
    }
    Ok(files)
}

/// Every place where `actual` fails to contain `expected`, as `path: expected .., got ..` lines.
pub fn diff(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff_at("$", expected, actual, &mut out);
    out
}

fn diff_at(path: &str, expected: &Value, actual: &Value, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, v) in e {
                match a.get(k) {
                    Some(x) => diff_at(&format!("{path}.{k}"), v, x, out),
                    None => out.push(format!("{path}.{k}: expected {v}, missing")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            for (i, (v, x)) in e.iter().zip(a).enumerate() {
                diff_at(&format!("{path}[{i}]"), v, x, out);
            }
        }
        _ if expected != actual => out.push(format!("{path}: expected {expected}, got {actual}")),
        _ => {}
    }
}

struct Selected<'a> {
    stem: &'a str,
    file: &'a FixtureFile,
    case: &'a FixtureCase,
}

fn matches(only: &[String], s: &Selected) -> bool {
    let hay = format!("{} {} {} criterion {}", s.stem, s.file.title, s.case.name, s.file.criterion).to_lowercase();
    only.is_empty() || only.iter().any(|o| hay.contains(&o.to_lowercase()))
}

fn run_case(case: &FixtureCase, dir: &Path, base: &RunConfig) -> (Vec<String>, u128) {
    let start = Instant::now();
    let dir_text = dir.display().to_string();
    let argv = std::iter::once("toric".to_string()).chain(case.args.iter().map(|a| a.replace("{fixtures}", &dir_text)));
    let outcome = Cli::try_parse_from(argv)
        .map_err(|e| CliError::Usage(e.to_string()))
        .and_then(|cli| {
            if matches!(cli.command, Command::Reproduce { .. }) {
                return Err(CliError::Usage("fixtures cannot run reproduce".into()));
            }
            let cfg = crate::resolve_config(&cli.global, base.clone())?;
            crate::execute_timed(&cli.command, &cfg)
        });
    let diffs = match outcome {
        Ok(result) => diff(&case.expect, &result),
        Err(e) => vec![format!("error: {e}")],
    };
    (diffs, start.elapsed().as_millis())
}

/// Runs the selected fixtures concurrently; rows keep file and case order.
pub fn run(dir: Option<&Path>, only: &[String], cfg: &RunConfig) -> Result<Value> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(default_dir);
    let files = load_dir(&dir)?;
    let selected: Vec<Selected> = files
        .iter()
        .flat_map(|(stem, file)| file.cases.iter().map(move |case| Selected { stem, file, case }))
        .filter(|s| matches(only, s))
        .collect();
    if selected.is_empty() {
        return Err(CliError::Usage(format!("no fixtures match {only:?}")));
    }
    let outcomes: Vec<(Vec<String>, u128)> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected.iter().map(|s| scope.spawn(|| run_case(s.case, &dir, cfg))).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| (vec!["panicked".into()], 0))).collect()
    });
    let rows: Vec<Value> = selected
        .iter()
        .zip(&outcomes)
        .map(|(s, (diffs, ms))| {
            json!({
                "criterion": s.file.criterion,
                "fixture": format!("{}/{}", s.stem, s.case.name),
                "passed": diffs.is_empty(),
                "millis": ms,
                "diff": diffs,
            })
        })
        .collect();
    let failed = rows.iter().filter(|r| r["passed"] == json!(false)).count();
    let report = json!({ "rows": rows, "total": rows.len(), "failed": failed, "passed": rows.len() - failed });
    eprintln!("{}", table(&report));
    Ok(report)
}

/// Fixed-width pass/fail table with timings and diffs under failing rows.
pub fn table(report: &Value) -> String {
    let mut lines = vec![format!("{:<4} {:>4}  {:<56} {:>8}", "", "crit", "fixture", "ms")];
    for row in report["rows"].as_array().into_iter().flatten() {
        let status = if row["passed"] == json!(true) { "PASS" } else { "FAIL" };
        lines.push(format!(
            "{status:<4} {:>4}  {:<56} {:>8}",
            row["criterion"].to_string(),
            row["fixture"].as_str().unwrap_or(""),
            row["millis"].to_string()
        ));
        for d in row["diff"].as_array().into_iter().flatten() {
            lines.push(format!("            {}", d.as_str().unwrap_or("")));
        }
    }
    lines.push(format!("{} passed, {} failed", report["passed"], report["failed"]));
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_diff() {
        let actual = json!({ "H2": 2, "dims": [1, 0, 2], "extra": true });
        assert!(diff(&json!({ "H2": 2 }), &actual).is_empty());
        assert!(diff(&json!({ "dims": [1, 0, 2] }), &actual).is_empty());
        assert_eq!(diff(&json!({ "H2": 3 }), &actual), vec!["$.H2: expected 3, got 2"]);
        assert_eq!(diff(&json!({ "H1": 0 }), &actual), vec!["$.H1: expected 0, missing"]);
        assert_eq!(diff(&json!({ "dims": [1, 0] }), &actual).len(), 1);
    }

    #[test]
    fn shipped_fixtures_parse() {
        let files = load_dir(&default_dir()).unwrap();
        let criteria: std::collections::BTreeSet<u32> = files.iter().map(|(_, f)| f.criterion).collect();
        assert_eq!(criteria, (1..=12).collect());
        for (_, f) in &files {
            for case in &f.cases {
                let argv = std::iter::once("toric".to_string()).chain(case.args.iter().cloned());
                assert!(Cli::try_parse_from(argv).is_ok(), "{} does not parse", case.name);
            }
        }
    }
}
