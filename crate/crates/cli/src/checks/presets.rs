//! Specialization-bullet checks: for every named preset, the classical
//! identity value is compared against both the general closed-form norm and
//! the spectral oracle.

use rayon::prelude::*;
use tricirc_core::circulant::CirculantMatrix;
use tricirc_core::closed;
use tricirc_core::params::{PresetName, SequenceKind, SequencePreset};
use tricirc_core::resolve_preset;

use super::Check;
use crate::config::SweepConfig;
use crate::record::{Value, VerificationRecord};

/// The bullet identities hold exactly at integer scale; this pinned tolerance
/// only absorbs float rendering.
pub const PRESET_TOLERANCE: f64 = 1e-10;

/// The presets under sweep, with the k-Fibonacci family instantiated at
/// k = 1, 2, 3.
pub fn preset_instances() -> Vec<(String, SequencePreset)> {
    let mut instances = Vec::new();
    for name in PresetName::ALL {
        if name == PresetName::KFibonacci {
            for k in 1..=3 {
                instances.push((
                    format!("{}_k{k}", name.as_str()),
                    SequencePreset::k_fibonacci(k),
                ));
            }
        } else {
            instances.push((name.as_str().to_string(), SequencePreset::new(name)));
        }
    }
    instances
}

/// Two records per (preset, n): the identity against the closed-form norm,
/// and the identity against the DFT oracle.
pub fn run_preset_identities(n_max: usize) -> Vec<VerificationRecord> {
    assert!(n_max >= 1);
    preset_instances()
        .par_iter()
        .flat_map_iter(|(label, preset)| preset_records(label, preset, n_max))
        .collect()
}

fn preset_records(
    label: &str,
    preset: &SequencePreset,
    n_max: usize,
) -> Vec<VerificationRecord> {
    let (params, kind) = resolve_preset(preset).expect("fixed presets are well-formed");
    let mut records = Vec::with_capacity(2 * n_max);
    for n in 1..=n_max {
        let identity = closed::special_norm_identity(preset, n)
            .expect("bullet indices are admissible for n >= 1");
        let (closed_norm, oracle_norm) = match kind {
            SequenceKind::G => (
                closed::g_spectral_norm(&params, n).expect("preset norms are guarded-valid"),
                CirculantMatrix::g(&params, n).spectral_norm(),
            ),
            SequenceKind::S => (
                closed::s_spectral_norm(&params, n).expect("preset norms are guarded-valid"),
                CirculantMatrix::s(&params, n)
                    .expect("S presets have r != 0")
                    .spectral_norm(),
            ),
        };
        records.push(VerificationRecord::comparison(
            format!("presets/{label}/closed"),
            Some(&params),
            n,
            None,
            Value::Real(identity),
            Value::Real(closed_norm),
            PRESET_TOLERANCE,
        ));
        records.push(VerificationRecord::comparison(
            format!("presets/{label}/oracle"),
            Some(&params),
            n,
            None,
            Value::Real(identity),
            Value::Real(oracle_norm),
            PRESET_TOLERANCE,
        ));
    }
    records
}

pub struct Presets;

impl Check for Presets {
    fn name(&self) -> &'static str {
        "presets"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        run_preset_identities(cfg.n_max)
    }

    fn record_count(&self, cfg: &SweepConfig) -> usize {
        preset_instances().len() * cfg.n_max * 2
    }
}
