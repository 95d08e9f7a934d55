//! Circulant matrices whose entries come from third-order linear recurrences,
//! together with closed-form eigenvalues, spectral norms, and determinants
//! and the independent oracles needed to cross-validate every closed form.
//!
//! The two sequence families are the generalized Tribonacci numbers G
//! (seeds 0, 0, 1) and the generalized Tribonacci-Lucas numbers S
//! (seeds -Q/R, 3, P), both driven by `a_{n+3} = P a_{n+2} + Q a_{n+1} + R a_n`.
//!
//! Layout:
//! - [`scalar`]: exact rational arithmetic.
//! - [`params`]: the (P, Q, R) triple, its cubic discriminant, and the named
//!   presets (Fibonacci, Pell, Perrin, ...).
//! - [`recurrence`]: exact generation of G, S, and the root power sums.
//! - [`classical`]: the classical sequences coded from their own recurrences,
//!   kept independent of [`recurrence`] on purpose.
//! - [`roots`]: characteristic cubic roots and both Binet forms.
//! - [`circulant`]: matrix construction and the oracle computations (DFT
//!   eigenvalues, max-modulus norm, spectral and exact determinants).
//! - [`closed`]: every closed-form expression, plus the specialization
//!   identities.

pub mod circulant;
pub mod classical;
pub mod closed;
pub mod error;
pub mod params;
pub mod recurrence;
pub mod roots;
pub mod scalar;

pub use circulant::{CirculantMatrix, Spectrum, DEFAULT_EXACT_DET_CAP};
pub use error::{Error, Result};
pub use params::{resolve_preset, PresetName, RecurrenceParams, SequenceKind, SequencePreset};
pub use roots::{binet_g, binet_s, solve_characteristic, CharRoots};
pub use scalar::ExactScalar;
