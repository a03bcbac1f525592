//! Reading JSON arguments given inline or as file paths.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use toric::cuts::Graph;
use toric::fans::{Fan, FanSpec, WeilDivisor};
use toric::matroids::Matroid;
use toric::polyhedra::PointConfig;

use crate::error::{CliError, Result};

/// Parses `arg` as JSON when it starts like a JSON value, otherwise reads it as a file.
pub fn load_json<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    let trimmed = arg.trim_start();
    let (text, origin) = if trimmed.starts_with(['[', '{']) {
        (arg.to_string(), format!("{what} argument"))
    } else {
        let path = Path::new(arg);
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        (text, arg.to_string())
    };
    serde_json::from_str(&text).map_err(|source| CliError::Json { what: origin, source })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointsSpec {
    Bare(Vec<Vec<i64>>),
    Config(PointConfig),
}

pub fn points(arg: &str) -> Result<PointConfig> {
    match load_json::<PointsSpec>(arg, "points")? {
        PointsSpec::Config(c) => Ok(PointConfig::new(c.ambient_rank, c.points)?),
        PointsSpec::Bare(pts) => {
            let rank = pts.first().map(Vec::len).ok_or_else(|| CliError::Usage("empty point list; use the object form for rank".into()))?;
            Ok(PointConfig::new(rank, pts)?)
        }
    }
}

pub fn fan(arg: &str) -> Result<Fan> {
    Ok(Fan::from_spec(&load_json::<FanSpec>(arg, "fan")?)?)
}

pub fn fan_and_divisor(fan_arg: &str, coefficients: &[i64]) -> Result<(Fan, WeilDivisor)> {
    let fan = fan(fan_arg)?;
    let d = WeilDivisor::new(&fan, coefficients.to_vec())?;
    Ok((fan, d))
}

pub fn graph(arg: &str) -> Result<Graph> {
    load_json(arg, "graph")
}

pub fn matroid(arg: &str) -> Result<Matroid> {
    load_json(arg, "matroid")
}
