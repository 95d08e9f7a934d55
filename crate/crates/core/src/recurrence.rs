//! Exact generation of the generalized Tribonacci sequence G, the
//! generalized Tribonacci-Lucas sequence S, and the root power sums they
//! share.
//!
//! Indexing convention: position `i` of every returned vector holds the term
//! with subscript `i` (G_0 sits at position 0). Generation is a plain
//! iterative pass over exact rationals; nothing is memoized across calls.

use crate::error::{Error, Result};
use crate::params::RecurrenceParams;
use crate::scalar::ExactScalar;

fn iterate(params: &RecurrenceParams, seeds: [ExactScalar; 3], count: usize) -> Vec<ExactScalar> {
    let p = ExactScalar::from(params.p);
    let q = ExactScalar::from(params.q);
    let r = ExactScalar::from(params.r);
    let mut terms: Vec<ExactScalar> = seeds.into_iter().take(count).collect();
    while terms.len() < count {
        let m = terms.len();
        let next = &p * &terms[m - 1] + &q * &terms[m - 2] + &r * &terms[m - 3];
        terms.push(next);
    }
    terms
}

/// G_0 .. G_{count-1} with seeds G_0 = 0, G_1 = 0, G_2 = 1.
///
/// Total for every integer parameter triple; every term is an integer.
pub fn gen_g(params: &RecurrenceParams, count: usize) -> Vec<ExactScalar> {
    assert!(count >= 1, "count must be positive");
    iterate(
        params,
        [ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one()],
        count,
    )
}

/// S_0 .. S_{count-1} with seeds S_0 = -Q/R, S_1 = 3, S_2 = P.
///
/// Requires R != 0; S_0 is the only possibly non-integer term.
pub fn gen_s(params: &RecurrenceParams, count: usize) -> Result<Vec<ExactScalar>> {
    assert!(count >= 1, "count must be positive");
    if params.r == 0 {
        return Err(Error::ZeroRCoefficient);
    }
    Ok(iterate(
        params,
        [
            ExactScalar::ratio(-params.q, params.r),
            ExactScalar::from(3),
            ExactScalar::from(params.p),
        ],
        count,
    ))
}

/// Power sums of the characteristic roots: position `m` holds
/// alpha^m + beta^m + gamma^m.
///
/// Defined for every integer triple (unlike S, no division by R is needed);
/// seeds are 3, P, P^2 + 2Q by Newton's identities. For R != 0 this is the
/// S-sequence shifted by one: `power_sums(..)[m] == gen_s(..)[m + 1]`.
pub fn power_sums(params: &RecurrenceParams, count: usize) -> Vec<ExactScalar> {
    assert!(count >= 1, "count must be positive");
    let p = ExactScalar::from(params.p);
    let p2_2q = &p * &p + ExactScalar::from(2) * ExactScalar::from(params.q);
    iterate(params, [ExactScalar::from(3), p, p2_2q], count)
}
