//! Recurrence parameters and the named sequence presets.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// The integer triple (P, Q, R) of the third-order recurrence
/// `a_{n+3} = P a_{n+2} + Q a_{n+1} + R a_n` and of the characteristic cubic
/// `x^3 - P x^2 - Q x - R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecurrenceParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl RecurrenceParams {
    pub fn new(p: i64, q: i64, r: i64) -> Self {
        RecurrenceParams { p, q, r }
    }

    /// Exact integer discriminant of the characteristic cubic:
    /// P^2 Q^2 + 4 Q^3 - 4 P^3 R - 18 P Q R - 27 R^2.
    ///
    /// Zero exactly when the cubic has a repeated root.
    pub fn discriminant(&self) -> BigInt {
        let p = BigInt::from(self.p);
        let q = BigInt::from(self.q);
        let r = BigInt::from(self.r);
        &p * &p * &q * &q + 4 * &q * &q * &q
            - 4 * &p * &p * &p * &r
            - 18 * &p * &q * &r
            - 27 * &r * &r
    }

    /// True when the three characteristic roots are pairwise distinct.
    pub fn has_distinct_roots(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// P + Q + R - 1, the denominator of both norm closed forms.
    pub fn char_at_one(&self) -> i128 {
        self.p as i128 + self.q as i128 + self.r as i128 - 1
    }
}

impl std::fmt::Display for RecurrenceParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.r)
    }
}

/// Which of the two companion sequences a preset selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Generalized Tribonacci: seeds 0, 0, 1.
    G,
    /// Generalized Tribonacci-Lucas: seeds -Q/R, 3, P.
    S,
}

/// Names of the classical specializations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresetName {
    Tribonacci,
    Padovan,
    Fibonacci,
    KFibonacci,
    Pell,
    Jacobsthal,
    TribonacciLucas,
    Perrin,
}

impl PresetName {
    pub const ALL: [PresetName; 8] = [
        PresetName::Tribonacci,
        PresetName::Padovan,
        PresetName::Fibonacci,
        PresetName::KFibonacci,
        PresetName::Pell,
        PresetName::Jacobsthal,
        PresetName::TribonacciLucas,
        PresetName::Perrin,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PresetName::Tribonacci => "tribonacci",
            PresetName::Padovan => "padovan",
            PresetName::Fibonacci => "fibonacci",
            PresetName::KFibonacci => "k_fibonacci",
            PresetName::Pell => "pell",
            PresetName::Jacobsthal => "jacobsthal",
            PresetName::TribonacciLucas => "tribonacci_lucas",
            PresetName::Perrin => "perrin",
        }
    }
}

/// A named specialization, with `k` for the k-Fibonacci family only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequencePreset {
    pub name: PresetName,
    pub k: Option<i64>,
}

impl SequencePreset {
    pub fn new(name: PresetName) -> Self {
        SequencePreset { name, k: None }
    }

    pub fn k_fibonacci(k: i64) -> Self {
        SequencePreset {
            name: PresetName::KFibonacci,
            k: Some(k),
        }
    }
}

/// Maps a preset to its parameter triple and sequence kind:
/// tribonacci (1,1,1,G), padovan (0,1,1,G), fibonacci (1,1,0,G),
/// k_fibonacci (k,1,0,G), pell (2,1,0,G), jacobsthal (1,2,0,G),
/// tribonacci_lucas (1,1,1,S), perrin (0,1,1,S).
pub fn resolve_preset(preset: &SequencePreset) -> Result<(RecurrenceParams, SequenceKind)> {
    use PresetName::*;
    if preset.name != KFibonacci && preset.k.is_some() {
        return Err(Error::UnexpectedK);
    }
    let triple = match preset.name {
        Tribonacci => (RecurrenceParams::new(1, 1, 1), SequenceKind::G),
        Padovan => (RecurrenceParams::new(0, 1, 1), SequenceKind::G),
        Fibonacci => (RecurrenceParams::new(1, 1, 0), SequenceKind::G),
        KFibonacci => {
            let k = preset.k.ok_or(Error::MissingK)?;
            (RecurrenceParams::new(k, 1, 0), SequenceKind::G)
        }
        Pell => (RecurrenceParams::new(2, 1, 0), SequenceKind::G),
        Jacobsthal => (RecurrenceParams::new(1, 2, 0), SequenceKind::G),
        TribonacciLucas => (RecurrenceParams::new(1, 1, 1), SequenceKind::S),
        Perrin => (RecurrenceParams::new(0, 1, 1), SequenceKind::S),
    };
    Ok(triple)
}
