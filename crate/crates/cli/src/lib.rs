//! Library side of the `toric` command: argument grammar, configuration,
//! command handlers and the fixture runner.

pub mod args;
pub mod checks;
pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod reproduce;

use std::sync::mpsc;
use std::time::Duration;

use serde_json::{json, Value};

use crate::args::{Cli, Command, GlobalArgs};
use crate::config::{OutputFormat, RunConfig};
use crate::error::{CliError, Result};

/// What the binary prints and how it exits.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: Value,
    pub exit_code: i32,
}

/// Configuration file (if any) overlaid with command-line flags.
pub fn resolve_config(global: &GlobalArgs, base: RunConfig) -> Result<RunConfig> {
    let mut cfg = match &global.config {
        Some(path) => RunConfig::load(path)?,
        None => base,
    };
    if let Some(s) = global.seed {
        cfg.seed = s;
    }
    if let Some(f) = &global.field {
        cfg.field = f.clone();
    }
    if let Some(o) = &global.order {
        cfg.order = o.clone();
    }
    if let Some(b) = global.budget_pairs {
        cfg.budgets.pairs = b;
    }
    if let Some(b) = global.budget_nodes {
        cfg.budgets.nodes = b;
    }
    if let Some(b) = global.budget_points {
        cfg.budgets.points = b;
    }
    if let Some(b) = global.budget_seconds {
        cfg.budgets.seconds = b;
    }
    if let Some(f) = global.format {
        cfg.format = f;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Runs `command` on a worker thread, giving up after the wall-clock budget.
pub fn execute_timed(command: &Command, cfg: &RunConfig) -> Result<Value> {
    let (tx, rx) = mpsc::channel();
    let (command, worker_cfg) = (command.clone(), cfg.clone());
    std::thread::Builder::new()
        .name("toric-command".into())
        .spawn(move || {
            let _ = tx.send(commands::execute(&command, &worker_cfg));
        })
        .expect("spawn worker thread");
    match rx.recv_timeout(Duration::from_secs(cfg.budgets.seconds)) {
        Ok(result) => result,
        Err(mpsc::RecvTimeoutError::Timeout) => Err(CliError::Timeout(cfg.budgets.seconds)),
        Err(mpsc::RecvTimeoutError::Disconnected) => Err(CliError::Usage("command thread panicked".into())),
    }
}

fn envelope(command: &str, argv: &[String], cfg: &RunConfig, body: (&str, Value)) -> Value {
    let mut out = json!({
        "command": command,
        "argv": argv,
        "config": serde_json::to_value(cfg).expect("config serializes"),
    });
    out[body.0] = body.1;
    out
}

fn error_value(e: &CliError) -> Value {
    let kind = match e {
        CliError::Usage(_) => "usage",
        CliError::Io { .. } => "io",
        CliError::Json { .. } => "json",
        CliError::Toric(_) => "module",
        CliError::Mismatch(_) => "mismatch",
        CliError::Timeout(_) => "timeout",
        CliError::FixturesFailed { .. } => "fixtures",
    };
    json!({ "kind": kind, "message": e.to_string() })
}

/// Runs a parsed command line; `argv` excludes the program name and is echoed in the output.
pub fn run(cli: &Cli, argv: &[String]) -> Outcome {
    let cfg = match resolve_config(&cli.global, RunConfig::default()) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let output = envelope(cli.command.name(), argv, &RunConfig::default(), ("error", error_value(&e)));
            return Outcome { output, exit_code: code };
        }
    };
    let result = match &cli.command {
        Command::Reproduce { only, fixtures } => reproduce::run(fixtures.as_deref(), only, &cfg),
        other => execute_timed(other, &cfg),
    };
    match result {
        Ok(value) => {
            let failed = cli.command.name() == "reproduce" && value["failed"].as_u64().unwrap_or(0) > 0
                || value.get("passed") == Some(&Value::Bool(false));
            let output = envelope(cli.command.name(), argv, &cfg, ("result", value));
            Outcome { output, exit_code: i32::from(failed) }
        }
        Err(e) => Outcome { exit_code: e.exit_code(), output: envelope(cli.command.name(), argv, &cfg, ("error", error_value(&e))) },
    }
}

/// Pretty JSON, or `key: value` lines for the text format.
pub fn render(output: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(output).expect("values serialize"),
        OutputFormat::Text => {
            if output["command"] == "reproduce" {
                if let Some(table) = output["result"].get("rows").map(|_| reproduce::table(&output["result"])) {
                    return table;
                }
            }
            let mut lines = vec![format!("{} (seed {})", output["command"].as_str().unwrap_or("?"), output["config"]["seed"])];
            let body = output.get("result").or_else(|| output.get("error"));
            if let Some(Value::Object(map)) = body {
                for (k, v) in map {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    lines.push(format!("{k}: {shown}"));
                }
            }
            lines.join("\n")
        }
    }
}

/// Format requested by flags or the config file, for printing before the config resolves.
pub fn requested_format(cli: &Cli) -> OutputFormat {
    resolve_config(&cli.global, RunConfig::default()).map(|c| c.format).unwrap_or_default()
}
