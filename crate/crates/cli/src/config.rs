//! Run configuration shared by every subcommand.

use std::path::Path;

use serde::{Deserialize, Serialize};
use toric::ideals::{Field, TermOrder, DEFAULT_PAIR_BUDGET};
use toric::phylo::DEFAULT_TABLE_BUDGET;
use toric::polyhedra::DEFAULT_POINT_BUDGET;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    /// S-pairs per Groebner basis computation
    pub pairs: usize,
    /// nodes (multisets, tables) visited by exchange and move searches
    pub nodes: usize,
    /// lattice points examined by saturation tests
    pub points: u64,
    /// wall-clock seconds for one command
    pub seconds: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { pairs: DEFAULT_PAIR_BUDGET, nodes: DEFAULT_TABLE_BUDGET, points: DEFAULT_POINT_BUDGET, seconds: 600 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub field: String,
    pub order: String,
    /// half-width of the character box for cohomology; derived from the divisor when absent
    pub box_radius: Option<i64>,
    pub budgets: Budgets,
    pub format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: "QQ".into(),
            order: "grevlex".into(),
            box_radius: None,
            budgets: Budgets::default(),
            format: OutputFormat::Json,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        serde_json::from_str(&text).map_err(|source| CliError::Json { what: path.display().to_string(), source })
    }

    pub fn validate(&self) -> Result<()> {
        self.field()?;
        self.term_order()?;
        let b = &self.budgets;
        if b.pairs == 0 || b.nodes == 0 || b.points == 0 || b.seconds == 0 {
            return Err(CliError::Usage("budgets must be positive".into()));
        }
        if self.box_radius.is_some_and(|r| r < 0) {
            return Err(CliError::Usage("box radius must be nonnegative".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> Result<Field> {
        Ok(self.field.parse::<Field>()?)
    }

    pub fn term_order(&self) -> Result<TermOrder> {
        Ok(TermOrder::parse(&self.order)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate_and_round_trip() {
        let c = RunConfig::default();
        c.validate().unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&text).unwrap(), c);
    }

    #[test]
    fn partial_files_fill_defaults() {
        let c: RunConfig = serde_json::from_str(r#"{"seed": 7, "budgets": {"seconds": 5}}"#).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.budgets.seconds, 5);
        assert_eq!(c.budgets.pairs, DEFAULT_PAIR_BUDGET);
        assert!(serde_json::from_str::<RunConfig>(r#"{"sed": 7}"#).is_err());
    }

    #[test]
    fn rejects_bad_values() {
        let mut c = RunConfig { field: "GF(4)".into(), ..RunConfig::default() };
        assert!(c.validate().is_err());
        c.field = "GF(2)".into();
        c.budgets.nodes = 0;
        assert!(c.validate().is_err());
    }
}
