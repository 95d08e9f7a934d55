//! Closed-form eigenvalues, spectral norms, and determinants of the G- and
//! S-circulants, plus the classical specialization identities.
//!
//! Everything here is a direct function of (P, Q, R) and n. Sequence-valued
//! coefficients are carried in exact arithmetic and only dropped to floating
//! point at the boundary, so closed-vs-oracle comparisons measure the formula
//! and not the evaluation.
//!
//! Determinant evaluation note: the quadratic-factor product
//! `prod_k (x - y w^{-k} + z w^{-2k})` equals `x^n - t_n + z^n` where
//! `t_m = y t_{m-1} - x z t_{m-2}`, `t_0 = 2`, `t_1 = y` (the power sums
//! K^m + L^m of the quadratic roots, rescaled by x^m). This polynomial form
//! is exact over the rationals and stays defined when x vanishes, where the
//! K/L radical expressions themselves break down.

use num_complex::Complex64;
use num_traits::Signed;

use crate::classical;
use crate::circulant::twiddle;
use crate::error::{Error, Result};
use crate::params::{resolve_preset, PresetName, RecurrenceParams, SequencePreset};
use crate::recurrence::{gen_g, gen_s, power_sums};
use crate::scalar::ExactScalar;

/// A character is treated as degenerate when the eigenvalue denominator has
/// modulus at or below this bound. Integer parameters make true zeros land
/// many orders of magnitude below it.
pub const DEGENERATE_CHARACTER_EPS: f64 = 1e-12;

/// P w^{-j} + Q w^{-2j} + R w^{-3j} - 1, the shared eigenvalue denominator.
fn character_denominator(params: &RecurrenceParams, n: usize, j: usize) -> Complex64 {
    params.p as f64 * twiddle(n, j) + params.q as f64 * twiddle(n, 2 * j)
        + params.r as f64 * twiddle(n, 3 * j)
        - 1.0
}

fn p_q_r(params: &RecurrenceParams) -> (ExactScalar, ExactScalar, ExactScalar) {
    (
        ExactScalar::from(params.p),
        ExactScalar::from(params.q),
        ExactScalar::from(params.r),
    )
}

/// P + Q + R - 1 as an exact scalar, or the singular-sum error when zero.
fn norm_denominator(params: &RecurrenceParams) -> Result<ExactScalar> {
    let (p, q, r) = p_q_r(params);
    let den = p + q + r - ExactScalar::one();
    if den.is_zero() {
        return Err(Error::SingularParameterSum);
    }
    Ok(den)
}

fn entries_nonnegative(terms: &[ExactScalar]) -> bool {
    terms.iter().all(|t| !t.numer().is_negative())
}

/// j-th eigenvalue of circ(G_1..G_n):
/// [G_{n+1} + (G_{n+2} - P G_{n+1} - 1) w^{-j} + R G_n w^{-2j}] / denominator.
pub fn g_eigenvalue(params: &RecurrenceParams, n: usize, j: usize) -> Result<Complex64> {
    assert!(n >= 1 && j < n, "need 1 <= n and j in [0, n-1]");
    let den = character_denominator(params, n, j);
    if den.norm() <= DEGENERATE_CHARACTER_EPS {
        return Err(Error::DegenerateCharacter { j });
    }
    let g = gen_g(params, n + 3);
    let (p, _, r) = p_q_r(params);
    let c0 = g[n + 1].to_f64();
    let c1 = (&g[n + 2] - &(&p * &g[n + 1]) - ExactScalar::one()).to_f64();
    let c2 = (&r * &g[n]).to_f64();
    let num = c0 + c1 * twiddle(n, j) + c2 * twiddle(n, 2 * j);
    Ok(num / den)
}

/// j-th eigenvalue of circ(S_1..S_n):
/// [S_{n+1} - 3 + (S_{n+2} - P S_{n+1} + 2P) w^{-j} + (R S_n + Q) w^{-2j}] / denominator.
pub fn s_eigenvalue(params: &RecurrenceParams, n: usize, j: usize) -> Result<Complex64> {
    assert!(n >= 1 && j < n, "need 1 <= n and j in [0, n-1]");
    if params.r == 0 {
        return Err(Error::ZeroRCoefficient);
    }
    let den = character_denominator(params, n, j);
    if den.norm() <= DEGENERATE_CHARACTER_EPS {
        return Err(Error::DegenerateCharacter { j });
    }
    let s = gen_s(params, n + 3)?;
    let (p, q, r) = p_q_r(params);
    let two_p = &p + &p;
    let c0 = (&s[n + 1] - ExactScalar::from(3)).to_f64();
    let c1 = (&s[n + 2] - &(&p * &s[n + 1]) + two_p).to_f64();
    let c2 = (&r * &s[n] + q).to_f64();
    let num = c0 + c1 * twiddle(n, j) + c2 * twiddle(n, 2 * j);
    Ok(num / den)
}

/// Raw norm formula [G_{n+2} + (1 - P) G_{n+1} + R G_n - 1] / (P + Q + R - 1)
/// as an exact rational, with no positivity guard. Used both by the guarded
/// norm and by sweeps that report guard-failing cells.
pub fn g_norm_value(params: &RecurrenceParams, n: usize) -> Result<ExactScalar> {
    assert!(n >= 1);
    let den = norm_denominator(params)?;
    let g = gen_g(params, n + 3);
    let (p, _, r) = p_q_r(params);
    let num =
        &g[n + 2] + (ExactScalar::one() - p) * &g[n + 1] + r * &g[n] - ExactScalar::one();
    Ok(num / den)
}

/// Raw norm formula [S_{n+2} + (1 - P) S_{n+1} + R S_n + 2P + Q - 3] / (P + Q + R - 1).
pub fn s_norm_value(params: &RecurrenceParams, n: usize) -> Result<ExactScalar> {
    assert!(n >= 1);
    if params.r == 0 {
        return Err(Error::ZeroRCoefficient);
    }
    let den = norm_denominator(params)?;
    let s = gen_s(params, n + 3)?;
    let (p, q, _) = p_q_r(params);
    let r = ExactScalar::from(params.r);
    let two_p = &p + &p;
    let num = &s[n + 2] + (ExactScalar::one() - p) * &s[n + 1] + r * &s[n] + two_p + q
        - ExactScalar::from(3);
    Ok(num / den)
}

/// Spectral norm of circ(G_1..G_n) in closed form.
///
/// Guarded: the formula equals the true norm when the first row is entrywise
/// non-negative (then the j = 0 eigenvalue attains the maximum modulus).
/// Negative rows get `NegativeEntriesUnsupported`; the spectral oracle still
/// applies there.
pub fn g_spectral_norm(params: &RecurrenceParams, n: usize) -> Result<f64> {
    let value = g_norm_value(params, n)?;
    let g = gen_g(params, n + 1);
    if !entries_nonnegative(&g[1..]) {
        return Err(Error::NegativeEntriesUnsupported);
    }
    Ok(value.to_f64())
}

/// Spectral norm of circ(S_1..S_n) in closed form, under the same guard.
pub fn s_spectral_norm(params: &RecurrenceParams, n: usize) -> Result<f64> {
    let value = s_norm_value(params, n)?;
    let s = gen_s(params, n + 1)?;
    if !entries_nonnegative(&s[1..]) {
        return Err(Error::NegativeEntriesUnsupported);
    }
    Ok(value.to_f64())
}

/// Coefficients and roots of the quadratic factor behind the determinant
/// closed forms, together with the second elementary symmetric function of
/// the n-th root powers.
///
/// For the G-case: x = G_{n+1}, y = P G_{n+1} - G_{n+2} + 1, z = R G_n.
/// For the S-case: x = S_{n+1} - 3, y = -(S_{n+2} - P S_{n+1} + 2P),
/// z = R S_n + Q. `k_root`/`l_root` are the roots of x t^2 - y t + z taken
/// with the principal square root; `sym2` is
/// alpha^n beta^n + beta^n gamma^n + alpha^n gamma^n, evaluated exactly via
/// the power-sum identity (p_n^2 - p_{2n}) / 2.
#[derive(Debug, Clone, PartialEq)]
pub struct DetFactors {
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub z: ExactScalar,
    pub k_root: Complex64,
    pub l_root: Complex64,
    pub sym2: ExactScalar,
}

impl DetFactors {
    pub fn for_g(params: &RecurrenceParams, n: usize) -> Result<Self> {
        assert!(n >= 1);
        let g = gen_g(params, n + 3);
        let (p, _, r) = p_q_r(params);
        let x = g[n + 1].clone();
        let y = &(&p * &g[n + 1]) - &g[n + 2] + ExactScalar::one();
        let z = &r * &g[n];
        Self::build(params, n, x, y, z)
    }

    pub fn for_s(params: &RecurrenceParams, n: usize) -> Result<Self> {
        assert!(n >= 1);
        if params.r == 0 {
            return Err(Error::ZeroRCoefficient);
        }
        let s = gen_s(params, n + 3)?;
        let (p, q, r) = p_q_r(params);
        let two_p = &p + &p;
        let x = &s[n + 1] - ExactScalar::from(3);
        let y = -(&s[n + 2] - &(&p * &s[n + 1]) + two_p);
        let z = &r * &s[n] + q;
        Self::build(params, n, x, y, z)
    }

    fn build(
        params: &RecurrenceParams,
        n: usize,
        x: ExactScalar,
        y: ExactScalar,
        z: ExactScalar,
    ) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroLeadingTerm);
        }
        let (k_root, l_root) = quadratic_roots(x.to_complex(), y.to_complex(), z.to_complex());
        let sym2 = second_symmetric_of_powers(params, n);
        Ok(DetFactors {
            x,
            y,
            z,
            k_root,
            l_root,
            sym2,
        })
    }
}

/// Roots (y -+ sqrt(y^2 - 4xz)) / (2x) of x t^2 - y t + z, principal branch.
pub fn quadratic_roots(x: Complex64, y: Complex64, z: Complex64) -> (Complex64, Complex64) {
    let root = (y * y - 4.0 * x * z).sqrt();
    ((y - root) / (2.0 * x), (y + root) / (2.0 * x))
}

/// prod_{k=0}^{n-1} (x - y w^{-k} + z w^{-2k}) evaluated through the
/// quadratic roots: x^n (1 - K^n)(1 - L^n). Requires x != 0.
pub fn quadratic_factor_product(x: Complex64, y: Complex64, z: Complex64, n: u32) -> Complex64 {
    let (k, l) = quadratic_roots(x, y, z);
    let one = Complex64::new(1.0, 0.0);
    x.powu(n) * (one - k.powu(n)) * (one - l.powu(n))
}

/// alpha^n beta^n + beta^n gamma^n + alpha^n gamma^n as an exact rational,
/// via the Newton-identity consequence (p_n^2 - p_{2n}) / 2 on the root power
/// sums. Defined for every integer triple, including R = 0.
pub fn second_symmetric_of_powers(params: &RecurrenceParams, n: usize) -> ExactScalar {
    let ps = power_sums(params, 2 * n + 1);
    (&ps[n] * &ps[n] - &ps[2 * n]) / ExactScalar::from(2)
}

/// x^n (K^n + L^n) for the quadratic roots of x t^2 - y t + z, by the
/// three-term recurrence t_m = y t_{m-1} - x z t_{m-2}. Exact, and defined
/// even when x = 0.
fn scaled_quadratic_power_sum(
    x: &ExactScalar,
    y: &ExactScalar,
    z: &ExactScalar,
    n: usize,
) -> ExactScalar {
    let xz = x * z;
    let mut prev = ExactScalar::from(2);
    if n == 0 {
        return prev;
    }
    let mut cur = y.clone();
    for _ in 1..n {
        let next = y * &cur - &xz * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Shared determinant quotient: [x^n - t_n + z^n] / [(-1)^n (1 - p_n - R^n + sym2)].
fn determinant_from_quadratic(
    params: &RecurrenceParams,
    n: usize,
    x: &ExactScalar,
    y: &ExactScalar,
    z: &ExactScalar,
) -> Result<Complex64> {
    let ps = power_sums(params, 2 * n + 1);
    let sym2 = (&ps[n] * &ps[n] - &ps[2 * n]) / ExactScalar::from(2);
    let r_pow = ExactScalar::from(params.r).pow(n as u32);
    let den = ExactScalar::one() - &ps[n] - r_pow + sym2;
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let den = if n % 2 == 1 { -den } else { den };
    let num = x.pow(n as u32) - scaled_quadratic_power_sum(x, y, z, n) + z.pow(n as u32);
    Ok((num / den).to_complex())
}

/// det circ(G_1..G_n) in closed form:
/// (G_{n+1})^n (1 - K^n - L^n + K^n L^n) / [(-1)^n (1 - S_{n+1} - R^n + M)].
///
/// The numerator is evaluated in the polynomial form x^n - t_n + z^n (see the
/// module docs), which agrees with the K/L expression wherever both are
/// defined and extends it continuously across G_{n+1} = 0.
pub fn g_determinant(params: &RecurrenceParams, n: usize) -> Result<Complex64> {
    assert!(n >= 1);
    if !params.has_distinct_roots() {
        return Err(Error::RepeatedRoots);
    }
    let g = gen_g(params, n + 3);
    let (p, _, r) = p_q_r(params);
    let x = g[n + 1].clone();
    let y = &(&p * &g[n + 1]) - &g[n + 2] + ExactScalar::one();
    let z = &r * &g[n];
    determinant_from_quadratic(params, n, &x, &y, &z)
}

/// det circ(S_1..S_n) in closed form:
/// (S_{n+1} - 3)^n (1 - C^n - D^n + C^n D^n) / [(-1)^n (1 - S_{n+1} - R^n + E)],
/// with the same polynomial-form evaluation of the numerator.
pub fn s_determinant(params: &RecurrenceParams, n: usize) -> Result<Complex64> {
    assert!(n >= 1);
    if params.r == 0 {
        return Err(Error::ZeroRCoefficient);
    }
    if !params.has_distinct_roots() {
        return Err(Error::RepeatedRoots);
    }
    let s = gen_s(params, n + 3)?;
    let (p, q, r) = p_q_r(params);
    let two_p = &p + &p;
    let x = &s[n + 1] - ExactScalar::from(3);
    let y = -(&s[n + 2] - &(&p * &s[n + 1]) + two_p);
    let z = &r * &s[n] + q;
    determinant_from_quadratic(params, n, &x, &y, &z)
}

/// Right-hand side of the specialization bullet for `preset` at order n,
/// computed from the independent classical generators in [`crate::classical`]:
///
/// - tribonacci: (T_{n+1} + T_{n-1} - 1) / 2
/// - padovan: A_{n+1} - 1
/// - fibonacci: F_{n+1} - 1
/// - k-Fibonacci: (F_{k,n} + F_{k,n-1} - 1) / k
/// - pell: (B_{n+1} - B_n - 1) / 2
/// - jacobsthal: (J_{n+1} - 1) / 2
/// - tribonacci-lucas: (Y_{n+1} + Y_{n-1}) / 2
/// - perrin: Z_{n+4} - 2
pub fn special_norm_identity(preset: &SequencePreset, n: usize) -> Result<f64> {
    resolve_preset(preset)?;
    use PresetName::*;
    let value = match preset.name {
        Tribonacci => {
            if n == 0 {
                return Err(Error::IndexUnderflow);
            }
            let t = classical::tribonacci(n + 2);
            (t[n + 1] + t[n - 1] - 1) as f64 / 2.0
        }
        Padovan => {
            let a = classical::padovan(n + 2);
            (a[n + 1] - 1) as f64
        }
        Fibonacci => {
            let f = classical::fibonacci(n + 2);
            (f[n + 1] - 1) as f64
        }
        KFibonacci => {
            if n == 0 {
                return Err(Error::IndexUnderflow);
            }
            let k = preset.k.expect("validated by resolve_preset");
            let fk = classical::k_fibonacci(k, n + 1);
            (fk[n] + fk[n - 1] - 1) as f64 / k as f64
        }
        Pell => {
            let b = classical::pell(n + 2);
            (b[n + 1] - b[n] - 1) as f64 / 2.0
        }
        Jacobsthal => {
            let j = classical::jacobsthal(n + 2);
            (j[n + 1] - 1) as f64 / 2.0
        }
        TribonacciLucas => {
            if n == 0 {
                return Err(Error::IndexUnderflow);
            }
            let y = classical::tribonacci_lucas(n + 2);
            (y[n + 1] + y[n - 1]) as f64 / 2.0
        }
        Perrin => {
            let z = classical::perrin(n + 5);
            (z[n + 4] - 2) as f64
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantMatrix;

    fn params(p: i64, q: i64, r: i64) -> RecurrenceParams {
        RecurrenceParams::new(p, q, r)
    }

    fn assert_close(actual: Complex64, expected: Complex64, tol: f64) {
        let scale = expected.norm().max(1.0);
        assert!(
            (actual - expected).norm() <= tol * scale,
            "{actual} vs {expected}"
        );
    }

    #[test]
    fn g_eigenvalue_examples() {
        let t = params(1, 1, 1);
        assert_close(g_eigenvalue(&t, 2, 0).unwrap(), Complex64::new(1.0, 0.0), 1e-12);
        assert_close(g_eigenvalue(&t, 2, 1).unwrap(), Complex64::new(-1.0, 0.0), 1e-12);
        assert_close(g_eigenvalue(&t, 1, 0).unwrap(), Complex64::new(0.0, 0.0), 1e-12);
    }

    #[test]
    fn g_eigenvalue_degenerate_character() {
        // x^3 = 1 has the cube roots of unity as characteristic roots, so at
        // n = 3 every character coincides with a root.
        let unit = params(0, 0, 1);
        assert_eq!(
            g_eigenvalue(&unit, 3, 0),
            Err(Error::DegenerateCharacter { j: 0 })
        );
    }

    #[test]
    fn s_eigenvalue_examples() {
        let perrin = params(0, 1, 1);
        assert_close(s_eigenvalue(&perrin, 2, 0).unwrap(), Complex64::new(3.0, 0.0), 1e-12);
        assert_close(s_eigenvalue(&perrin, 2, 1).unwrap(), Complex64::new(3.0, 0.0), 1e-12);
        let t = params(1, 1, 1);
        assert_close(s_eigenvalue(&t, 1, 0).unwrap(), Complex64::new(3.0, 0.0), 1e-12);
        assert_eq!(s_eigenvalue(&params(1, 1, 0), 2, 0), Err(Error::ZeroRCoefficient));
    }

    #[test]
    fn g_norm_examples() {
        let t = params(1, 1, 1);
        assert_eq!(g_spectral_norm(&t, 2).unwrap(), 1.0);
        assert_eq!(g_spectral_norm(&t, 1).unwrap(), 0.0);
        assert_eq!(g_spectral_norm(&params(1, 1, 0), 3).unwrap(), 2.0);
    }

    #[test]
    fn g_norm_errors() {
        // P + Q + R = 1.
        assert_eq!(
            g_spectral_norm(&params(1, 1, -1), 3),
            Err(Error::SingularParameterSum)
        );
        // G_3 = P = -2 puts a negative entry in the first row at n >= 3.
        assert_eq!(
            g_spectral_norm(&params(-2, 1, 1), 3),
            Err(Error::NegativeEntriesUnsupported)
        );
    }

    #[test]
    fn s_norm_examples() {
        assert_eq!(s_spectral_norm(&params(0, 1, 1), 2).unwrap(), 3.0);
        assert_eq!(s_spectral_norm(&params(1, 1, 1), 1).unwrap(), 3.0);
        // Tribonacci-Lucas bullet at n = 3: (Y_4 + Y_2) / 2 = (11 + 3) / 2 = 7,
        // which is also the row sum of circ(3, 1, 3).
        let value = s_spectral_norm(&params(1, 1, 1), 3).unwrap();
        assert_eq!(value, 7.0);
        let oracle = CirculantMatrix::s(&params(1, 1, 1), 3).unwrap().spectral_norm();
        assert!((value - oracle).abs() <= 1e-12 * oracle.max(1.0));
    }

    #[test]
    fn g_determinant_examples() {
        assert_close(
            g_determinant(&params(1, 1, 1), 2).unwrap(),
            Complex64::new(-1.0, 0.0),
            1e-12,
        );
        assert_close(
            g_determinant(&params(1, 1, 1), 1).unwrap(),
            Complex64::new(0.0, 0.0),
            1e-12,
        );
        // circ(0, 1, 1) arises from the Fibonacci parameters at n = 3;
        // the exact oracle gives 2.
        let fib = params(1, 1, 0);
        let oracle = CirculantMatrix::g(&fib, 3).det_exact(64).unwrap().to_f64();
        assert_eq!(oracle, 2.0);
        assert_close(g_determinant(&fib, 3).unwrap(), Complex64::new(2.0, 0.0), 1e-12);
        // The Padovan parameters at n = 3 give the 3-cycle circ(0, 1, 0).
        let pad = params(0, 1, 1);
        let oracle = CirculantMatrix::g(&pad, 3).det_exact(64).unwrap().to_f64();
        assert_eq!(oracle, 1.0);
        assert_close(g_determinant(&pad, 3).unwrap(), Complex64::new(1.0, 0.0), 1e-12);
    }

    #[test]
    fn g_determinant_survives_zero_leading_coefficient() {
        // Padovan parameters at n = 2: G_3 = 0, yet the polynomial form still
        // reproduces det circ(0, 1) = -1.
        let pad = params(0, 1, 1);
        assert_close(g_determinant(&pad, 2).unwrap(), Complex64::new(-1.0, 0.0), 1e-12);
        // The K/L radical form is genuinely undefined there.
        assert_eq!(DetFactors::for_g(&pad, 2), Err(Error::ZeroLeadingTerm));
    }

    #[test]
    fn g_determinant_errors() {
        assert_eq!(g_determinant(&params(2, -1, 0), 3), Err(Error::RepeatedRoots));
        // x^3 = 1: all roots are cube roots of unity, so at n = 3 the
        // denominator (1 - a^n)(1 - b^n)(1 - c^n) vanishes.
        assert_eq!(
            g_determinant(&params(0, 0, 1), 3),
            Err(Error::DegenerateDenominator)
        );
    }

    #[test]
    fn s_determinant_examples() {
        assert_close(
            s_determinant(&params(0, 1, 1), 2).unwrap(),
            Complex64::new(9.0, 0.0),
            1e-12,
        );
        // det circ(3, 1) = 8; here S_3 = 3 so the leading coefficient
        // vanishes and the polynomial form carries the value.
        assert_close(
            s_determinant(&params(1, 1, 1), 2).unwrap(),
            Complex64::new(8.0, 0.0),
            1e-12,
        );
        assert_close(
            s_determinant(&params(1, 1, 1), 1).unwrap(),
            Complex64::new(3.0, 0.0),
            1e-12,
        );
        assert_eq!(s_determinant(&params(1, 1, 0), 2), Err(Error::ZeroRCoefficient));
    }

    #[test]
    fn det_factors_vieta_on_quadratic() {
        for (p, q, r, n) in [(1, 1, 1, 4), (2, 1, 0, 5), (0, 1, 1, 6), (1, 2, 0, 3)] {
            let pr = params(p, q, r);
            let f = DetFactors::for_g(&pr, n).unwrap();
            let x = f.x.to_f64();
            let sum = f.k_root + f.l_root;
            let prod = f.k_root * f.l_root;
            assert_close(sum, Complex64::new(f.y.to_f64() / x, 0.0), 1e-9);
            assert_close(prod, Complex64::new(f.z.to_f64() / x, 0.0), 1e-9);
        }
        let f = DetFactors::for_s(&params(1, 1, 1), 3).unwrap();
        let x = f.x.to_f64();
        assert_close(f.k_root + f.l_root, Complex64::new(f.y.to_f64() / x, 0.0), 1e-9);
        assert_close(f.k_root * f.l_root, Complex64::new(f.z.to_f64() / x, 0.0), 1e-9);
    }

    #[test]
    fn sym2_matches_root_evaluation() {
        use crate::roots::solve_characteristic;
        for p in -2..=3i64 {
            for q in -2..=3i64 {
                for r in -2..=3i64 {
                    let pr = params(p, q, r);
                    let roots = solve_characteristic(&pr);
                    for n in 1..=8usize {
                        let exact = second_symmetric_of_powers(&pr, n).to_f64();
                        let [a, b, c] = roots.all();
                        let (an, bn, cn) =
                            (a.powu(n as u32), b.powu(n as u32), c.powu(n as u32));
                        let float = an * bn + bn * cn + an * cn;
                        assert_close(float, Complex64::new(exact, 0.0), 1e-8);
                    }
                }
            }
        }
    }

    #[test]
    fn quadratic_branch_symmetry() {
        // Swapping K and L cannot change x^n (1 - K^n)(1 - L^n).
        let x = Complex64::new(1.3, -0.4);
        let y = Complex64::new(-0.7, 2.1);
        let z = Complex64::new(0.9, 0.5);
        let (k, l) = quadratic_roots(x, y, z);
        let n = 7u32;
        let one = Complex64::new(1.0, 0.0);
        let a = x.powu(n) * (one - k.powu(n)) * (one - l.powu(n));
        let b = x.powu(n) * (one - l.powu(n)) * (one - k.powu(n));
        assert_close(a, b, 1e-12);
        assert_close(quadratic_factor_product(x, y, z, n), a, 1e-12);
    }

    #[test]
    fn special_identity_examples() {
        let perrin = SequencePreset::new(PresetName::Perrin);
        assert_eq!(special_norm_identity(&perrin, 2).unwrap(), 3.0);
        let fib = SequencePreset::new(PresetName::Fibonacci);
        assert_eq!(special_norm_identity(&fib, 3).unwrap(), 2.0);
        let jac = SequencePreset::new(PresetName::Jacobsthal);
        assert_eq!(special_norm_identity(&jac, 3).unwrap(), 2.0);
    }

    #[test]
    fn special_identity_index_underflow() {
        let trib = SequencePreset::new(PresetName::Tribonacci);
        assert_eq!(special_norm_identity(&trib, 0), Err(Error::IndexUnderflow));
        let kfib = SequencePreset::k_fibonacci(2);
        assert_eq!(special_norm_identity(&kfib, 0), Err(Error::IndexUnderflow));
    }

    #[test]
    fn identity_equals_closed_norm_for_presets() {
        let presets = [
            SequencePreset::new(PresetName::Tribonacci),
            SequencePreset::new(PresetName::Padovan),
            SequencePreset::new(PresetName::Fibonacci),
            SequencePreset::k_fibonacci(1),
            SequencePreset::k_fibonacci(2),
            SequencePreset::k_fibonacci(3),
            SequencePreset::new(PresetName::Pell),
            SequencePreset::new(PresetName::Jacobsthal),
            SequencePreset::new(PresetName::TribonacciLucas),
            SequencePreset::new(PresetName::Perrin),
        ];
        for preset in presets {
            let (pr, kind) = resolve_preset(&preset).unwrap();
            for n in 1..=10usize {
                let identity = special_norm_identity(&preset, n).unwrap();
                let closed = match kind {
                    crate::params::SequenceKind::G => g_spectral_norm(&pr, n).unwrap(),
                    crate::params::SequenceKind::S => s_spectral_norm(&pr, n).unwrap(),
                };
                assert!(
                    (identity - closed).abs() <= 1e-10 * closed.abs().max(1.0),
                    "{preset:?} n={n}: identity {identity} vs closed {closed}"
                );
            }
        }
    }
}
