//! Sweep configuration and validation.

use std::fmt;

use serde::Serialize;

/// Hard cap on matrix order: keeps exact elimination tractable.
pub const MAX_ORDER: usize = 64;

/// Checks executed when `--checks` is not given. The `identities` check draws
/// pseudo-random triples, so it stays opt-in; everything else is fully
/// deterministic from the grid.
pub const DEFAULT_CHECKS: [&str; 7] = [
    "det_g", "det_s", "eig_g", "eig_s", "norm_g", "norm_s", "presets",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Everything a sweep needs: the inclusive parameter ranges, the order range,
/// tolerances, the selected checks, and output routing.
#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub p_min: i64,
    pub p_max: i64,
    pub q_min: i64,
    pub q_max: i64,
    pub r_min: i64,
    pub r_max: i64,
    pub n_max: usize,
    pub tolerance_rel: f64,
    pub det_tolerance_rel: f64,
    pub checks: Vec<String>,
    pub output_format: OutputFormat,
    pub output_path: Option<String>,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            p_min: -2,
            p_max: 3,
            q_min: -2,
            q_max: 3,
            r_min: -2,
            r_max: 3,
            n_max: 12,
            tolerance_rel: 1e-8,
            det_tolerance_rel: 1e-6,
            checks: DEFAULT_CHECKS.iter().map(|s| s.to_string()).collect(),
            output_format: OutputFormat::Json,
            output_path: None,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, lo, hi) in [
            ("p", self.p_min, self.p_max),
            ("q", self.q_min, self.q_max),
            ("r", self.r_min, self.r_max),
        ] {
            if lo > hi {
                return Err(ConfigError(format!(
                    "{name} range is empty: {lo} > {hi}"
                )));
            }
        }
        if self.n_max < 1 || self.n_max > MAX_ORDER {
            return Err(ConfigError(format!(
                "n_max must be in 1..={MAX_ORDER}, got {}",
                self.n_max
            )));
        }
        for (name, tol) in [
            ("tol", self.tolerance_rel),
            ("det-tol", self.det_tolerance_rel),
        ] {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(ConfigError(format!(
                    "{name} must be a positive finite number, got {tol}"
                )));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for check in &self.checks {
            if crate::checks::find(check).is_none() {
                return Err(ConfigError(format!(
                    "unknown check '{check}' (known: {})",
                    crate::checks::names().join(", ")
                )));
            }
            if !seen.insert(check.as_str()) {
                return Err(ConfigError(format!("duplicate check '{check}'")));
            }
        }
        Ok(())
    }
}
