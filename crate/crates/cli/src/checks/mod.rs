//! The check registry: every verification family implements [`Check`] and is
//! registered here by name, so the CLI selects strategies at runtime from
//! `--checks`.

use tricirc_core::params::RecurrenceParams;

use crate::config::SweepConfig;
use crate::record::VerificationRecord;

mod dets;
mod eig;
mod identities;
mod norms;
mod presets;

pub use identities::{IDENTITY_N_MAX, IDENTITY_TOLERANCE, IDENTITY_TRIALS};
pub use presets::{preset_instances, run_preset_identities, PRESET_TOLERANCE};

/// One verification strategy, selectable by name.
pub trait Check: Sync {
    fn name(&self) -> &'static str;

    /// Runs the check over its whole domain, emitting one record per cell.
    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord>;

    /// Number of records `run` will emit for this configuration; the report
    /// layer uses it to guarantee nothing is silently dropped.
    fn record_count(&self, cfg: &SweepConfig) -> usize;
}

/// All known checks, in canonical (lexicographic) name order.
pub static REGISTRY: &[&dyn Check] = &[
    &dets::DetG,
    &dets::DetS,
    &eig::EigG,
    &eig::EigS,
    &identities::Identities,
    &norms::NormG,
    &norms::NormS,
    &presets::Presets,
];

pub fn find(name: &str) -> Option<&'static dyn Check> {
    REGISTRY.iter().copied().find(|c| c.name() == name)
}

pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name()).collect()
}

/// Grid cells in lexicographic (p, q, r) order.
pub fn grid_params(cfg: &SweepConfig) -> Vec<RecurrenceParams> {
    let mut cells = Vec::new();
    for p in cfg.p_min..=cfg.p_max {
        for q in cfg.q_min..=cfg.q_max {
            for r in cfg.r_min..=cfg.r_max {
                cells.push(RecurrenceParams::new(p, q, r));
            }
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_complete() {
        let names = names();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(names, sorted);
        assert_eq!(
            names,
            vec![
                "det_g",
                "det_s",
                "eig_g",
                "eig_s",
                "identities",
                "norm_g",
                "norm_s",
                "presets"
            ]
        );
    }

    #[test]
    fn lookup_by_name() {
        assert!(find("eig_g").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn grid_order_is_lexicographic() {
        let cfg = SweepConfig {
            p_min: 0,
            p_max: 1,
            q_min: 0,
            q_max: 0,
            r_min: 5,
            r_max: 6,
            ..SweepConfig::default()
        };
        let cells = grid_params(&cfg);
        assert_eq!(
            cells,
            vec![
                RecurrenceParams::new(0, 0, 5),
                RecurrenceParams::new(0, 0, 6),
                RecurrenceParams::new(1, 0, 5),
                RecurrenceParams::new(1, 0, 6),
            ]
        );
    }
}
