//! Eigenvalue checks: closed forms against the DFT oracle, one record per
//! (params, n, j).

use rayon::prelude::*;
use tricirc_core::circulant::CirculantMatrix;
use tricirc_core::closed;
use tricirc_core::error::Error;
use tricirc_core::params::RecurrenceParams;

use super::{grid_params, Check};
use crate::config::SweepConfig;
use crate::record::{Value, VerificationRecord};

fn cells_per_grid_point(n_max: usize) -> usize {
    n_max * (n_max + 1) / 2
}

fn run_eig(
    name: &'static str,
    cfg: &SweepConfig,
    is_s: bool,
) -> Vec<VerificationRecord> {
    grid_params(cfg)
        .par_iter()
        .flat_map_iter(|params| eig_records(name, cfg, params, is_s))
        .collect()
}

fn eig_records(
    name: &'static str,
    cfg: &SweepConfig,
    params: &RecurrenceParams,
    is_s: bool,
) -> Vec<VerificationRecord> {
    let mut records = Vec::with_capacity(cells_per_grid_point(cfg.n_max));
    let skip_all = |records: &mut Vec<VerificationRecord>, reason: &str| {
        for n in 1..=cfg.n_max {
            for j in 0..n {
                records.push(VerificationRecord::skipped_degenerate(
                    name,
                    Some(params),
                    n,
                    Some(j),
                    reason,
                    None,
                ));
            }
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
        let spectrum = if is_s {
            CirculantMatrix::s(params, n).expect("r != 0 checked").eigenvalues()
        } else {
            CirculantMatrix::g(params, n).eigenvalues()
        };
        for j in 0..n {
            let closed = if is_s {
                closed::s_eigenvalue(params, n, j)
            } else {
                closed::g_eigenvalue(params, n, j)
            };
            let record = match closed {
                Ok(value) => VerificationRecord::comparison(
                    name,
                    Some(params),
                    n,
                    Some(j),
                    Value::Complex(value),
                    Value::Complex(spectrum.values[j]),
                    cfg.tolerance_rel,
                ),
                Err(Error::DegenerateCharacter { .. }) => {
                    VerificationRecord::skipped_degenerate(
                        name,
                        Some(params),
                        n,
                        Some(j),
                        "DegenerateCharacter",
                        Some(Value::Complex(spectrum.values[j])),
                    )
                }
                Err(other) => unreachable!("eigenvalue check hit {other:?}"),
            };
            records.push(record);
        }
    }
    records
}

pub struct EigG;

impl Check for EigG {
    fn name(&self) -> &'static str {
        "eig_g"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        run_eig(self.name(), cfg, false)
    }

    fn record_count(&self, cfg: &SweepConfig) -> usize {
        grid_params(cfg).len() * cells_per_grid_point(cfg.n_max)
    }
}

pub struct EigS;

impl Check for EigS {
    fn name(&self) -> &'static str {
        "eig_s"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        run_eig(self.name(), cfg, true)
    }

    fn record_count(&self, cfg: &SweepConfig) -> usize {
        grid_params(cfg).len() * cells_per_grid_point(cfg.n_max)
    }
}
