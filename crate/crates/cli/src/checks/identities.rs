//! Product-identity checks behind the determinant closed forms:
//!
//!   prod_{k=0}^{n-1} (x - y w^{-k})              == x^n - y^n
//!   prod_{k=0}^{n-1} (x - y w^{-k} + z w^{-2k})  == x^n (1 - K^n)(1 - L^n)
//!
//! for pseudo-random complex triples, with the brute-force product as the
//! oracle side. Randomized, therefore not part of the default check set; the
//! stream is fully determined by `--seed`.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tricirc_core::circulant::twiddle;
use tricirc_core::closed::quadratic_factor_product;

use super::Check;
use crate::config::SweepConfig;
use crate::record::{Value, VerificationRecord};

pub const IDENTITY_TOLERANCE: f64 = 1e-9;
pub const IDENTITY_N_MAX: usize = 16;
pub const IDENTITY_TRIALS: usize = 100;

fn trial_rng(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(n as u64),
    )
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
}

/// One (x, y, z) triple with x bounded away from zero so the quadratic form
/// stays well-conditioned.
fn random_triple(rng: &mut ChaCha8Rng) -> (Complex64, Complex64, Complex64) {
    let mut x = random_complex(rng);
    while x.norm() < 0.25 {
        x = random_complex(rng);
    }
    (x, random_complex(rng), random_complex(rng))
}

fn linear_product(x: Complex64, y: Complex64, n: usize) -> Complex64 {
    (0..n)
        .map(|k| x - y * twiddle(n, k))
        .fold(Complex64::new(1.0, 0.0), |acc, f| acc * f)
}

fn quadratic_product(x: Complex64, y: Complex64, z: Complex64, n: usize) -> Complex64 {
    (0..n)
        .map(|k| x - y * twiddle(n, k) + z * twiddle(n, 2 * k))
        .fold(Complex64::new(1.0, 0.0), |acc, f| acc * f)
}

fn records_for_order(seed: u64, n: usize) -> Vec<VerificationRecord> {
    let mut rng = trial_rng(seed, n);
    let mut records = Vec::with_capacity(2 * IDENTITY_TRIALS);
    for trial in 0..IDENTITY_TRIALS {
        let (x, y, z) = random_triple(&mut rng);

        let closed_lin = x.powu(n as u32) - y.powu(n as u32);
        let brute_lin = linear_product(x, y, n);
        records.push(VerificationRecord::comparison(
            "identities/linear",
            None,
            n,
            Some(trial),
            Value::Complex(closed_lin),
            Value::Complex(brute_lin),
            IDENTITY_TOLERANCE,
        ));

        let closed_quad = quadratic_factor_product(x, y, z, n as u32);
        let brute_quad = quadratic_product(x, y, z, n);
        records.push(VerificationRecord::comparison(
            "identities/quadratic",
            None,
            n,
            Some(trial),
            Value::Complex(closed_quad),
            Value::Complex(brute_quad),
            IDENTITY_TOLERANCE,
        ));
    }
    records
}

pub struct Identities;

impl Check for Identities {
    fn name(&self) -> &'static str {
        "identities"
    }

    fn run(&self, cfg: &SweepConfig) -> Vec<VerificationRecord> {
        (1..=IDENTITY_N_MAX)
            .collect::<Vec<_>>()
            .par_iter()
            .flat_map_iter(|&n| records_for_order(cfg.seed, n))
            .collect()
    }

    fn record_count(&self, _cfg: &SweepConfig) -> usize {
        IDENTITY_N_MAX * IDENTITY_TRIALS * 2
    }
}
