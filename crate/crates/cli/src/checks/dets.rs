//! Determinant checks: closed forms against exact fraction-free elimination.

use rayon::prelude::*;
use tricirc_core::circulant::CirculantMatrix;
use tricirc_core::closed;
use tricirc_core::error::Error;
use tricirc_core::params::RecurrenceParams;

use super::{grid_params, Check};
use crate::config::{SweepConfig, MAX_ORDER};
use crate::record::{Value, VerificationRecord};

fn run_det(name: &'static str, cfg: &SweepConfig, is_s: bool) -> Vec<VerificationRecord> {
    grid_params(cfg)
        .par_iter()
        .flat_map_iter(|params| det_records(name, cfg, params, is_s))
        .collect()
}

fn det_records(
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
        let oracle = Value::Real(
            matrix
                .det_exact(MAX_ORDER)
                .expect("n_max <= MAX_ORDER is validated")
                .to_f64(),
        );

        let closed_value = if is_s {
            closed::s_determinant(params, n)
        } else {
            closed::g_determinant(params, n)
        };
        let record = match closed_value {
            Ok(value) => VerificationRecord::comparison(
                name,
                Some(params),
                n,
                None,
                Value::Complex(value),
                oracle,
                cfg.det_tolerance_rel,
            ),
            Err(Error::DegenerateDenominator) => VerificationRecord::skipped_degenerate(
                name,
                Some(params),
                n,
                None,
                "DegenerateDenominator",
                Some(oracle),
            ),
            Err(other) => unreachable!("determinant check hit {other:?}"),
        };
        records.push(record);
    }
    records
}

pub struct DetG;

impl Check for DetG {
    fn name(&self) -> &'static str {
        "det_g"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        run_det(self.name(), cfg, false)
    }

    fn record_count(&self, cfg: &SweepConfig) -> usize {
        grid_params(cfg).len() * cfg.n_max
    }
}

pub struct DetS;

impl Check for DetS {
    fn name(&self) -> &'static str {
        "det_s"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        run_det(self.name(), cfg, true)
    }

    fn record_count(&self, cfg: &SweepConfig) -> usize {
        grid_params(cfg).len() * cfg.n_max
    }
}
