//! Spectral-norm checks. Cells outside the non-negative-row guard are swept
//! and reported as `skipped_guard` with both values recorded; the closed
//! form's validity there is contested, so they never count as failures.

use rayon::prelude::*;
use tricirc_core::circulant::CirculantMatrix;
use tricirc_core::closed;
use tricirc_core::error::Error;
use tricirc_core::params::RecurrenceParams;

use super::{grid_params, Check};
use crate::config::SweepConfig;
use crate::record::{Value, VerificationRecord};

fn run_norm(name: &'static str, cfg: &SweepConfig, is_s: bool) -> Vec<VerificationRecord> {
    grid_params(cfg)
        .par_iter()
        .flat_map_iter(|params| norm_records(name, cfg, params, is_s))
        .collect()
}

fn norm_records(
    name: &'static str,
    cfg: &SweepConfig,
    params: &RecurrenceParams,
    is_s: bool,
) -> Vec<VerificationRecord> {
    let mut records = Vec::with_capacity(cfg.n_max);
    let skip_all = |records: &mut Vec<VerificationRecord>, reason: &str| {
        for n in 1..=cfg.n_max {
            records.push(VerificationRecord::skipped_degenerate(
                name,
                Some(params),
                n,
                None,
                reason,
                None,
            ));
        }
    };

    if is_s && params.r == 0 {
        skip_all(&mut records, "ZeroRCoefficient");
        return records;
    }
    if !params.has_distinct_roots() {
        skip_all(&mut records, "RepeatedRoots");
        return records;
    }

    for n in 1..=cfg.n_max {
        let matrix = if is_s {
            CirculantMatrix::s(params, n).expect("r != 0 checked")
        } else {
            CirculantMatrix::g(params, n)
        };
        let oracle = Value::Real(matrix.spectral_norm());

        let raw = if is_s {
            closed::s_norm_value(params, n)
        } else {
            closed::g_norm_value(params, n)
        };
        let record = match raw {
            Err(Error::SingularParameterSum) => VerificationRecord::skipped_degenerate(
                name,
                Some(params),
                n,
                None,
                "SingularParameterSum",
                Some(oracle),
            ),
            Err(other) => unreachable!("norm check hit {other:?}"),
            Ok(value) => {
                let closed_value = Value::Real(value.to_f64());
                if matrix.is_entrywise_nonnegative() {
                    VerificationRecord::comparison(
                        name,
                        Some(params),
                        n,
                        None,
                        closed_value,
                        oracle,
                        cfg.tolerance_rel,
                    )
                } else {
                    VerificationRecord::skipped_guard(
                        name,
                        Some(params),
                        n,
                        None,
                        "NegativeEntriesUnsupported",
                        closed_value,
                        oracle,
                    )
                }
            }
        };
        records.push(record);
    }
    records
}

pub struct NormG;

impl Check for NormG {
    fn name(&self) -> &'static str {
        "norm_g"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        run_norm(self.name(), cfg, false)
    }

    fn record_count(&self, cfg: &SweepConfig) -> usize {
        grid_params(cfg).len() * cfg.n_max
    }
}

pub struct NormS;

impl Check for NormS {
    fn name(&self) -> &'static str {
        "norm_s"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        run_norm(self.name(), cfg, true)
    }

    fn record_count(&self, cfg: &SweepConfig) -> usize {
        grid_params(cfg).len() * cfg.n_max
    }
}
