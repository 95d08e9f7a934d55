//! Circulant matrices over exact first rows, plus the oracle computations the
//! closed forms are validated against: DFT eigenvalues, max-modulus spectral
//! norm, the spectral determinant, and an exact fraction-free determinant.
//!
//! The oracles deliberately avoid every sequence identity used by the closed
//! forms; they only see the first row.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::params::RecurrenceParams;
use crate::recurrence::{gen_g, gen_s};
use crate::scalar::ExactScalar;

/// Default cap on the order accepted by exact elimination.
pub const DEFAULT_EXACT_DET_CAP: usize = 64;

/// w^{-exponent} for w = e^{2 pi i / n}, reduced mod n so the angle never
/// exceeds one turn.
pub fn twiddle(n: usize, exponent: usize) -> Complex64 {
    let m = exponent % n;
    if m == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let angle = -2.0 * std::f64::consts::PI * (m as f64) / (n as f64);
    Complex64::from_polar(1.0, angle)
}

/// Order-n circulant matrix, stored as its first row (c_0 .. c_{n-1}).
///
/// Entry (i, j), 0-based, is `c_{(j - i) mod n}`; the full matrix is only
/// materialized when an operation needs it.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantMatrix {
    first_row: Vec<ExactScalar>,
}

/// DFT eigenvalues of a circulant: values[j] = sum_k c_k w^{-jk}.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<Complex64>,
}

impl Spectrum {
    /// Largest eigenvalue modulus.
    pub fn max_modulus(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Smallest index attaining the maximum modulus.
    pub fn argmax_modulus(&self) -> usize {
        let max = self.max_modulus();
        self.values
            .iter()
            .position(|z| z.norm() == max)
            .unwrap_or(0)
    }
}

impl CirculantMatrix {
    pub fn from_first_row(first_row: Vec<ExactScalar>) -> Self {
        assert!(!first_row.is_empty(), "circulant order must be positive");
        CirculantMatrix { first_row }
    }

    /// circ(G_1, G_2, ..., G_n) for the given parameters.
    pub fn g(params: &RecurrenceParams, n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        let terms = gen_g(params, n + 1);
        CirculantMatrix {
            first_row: terms[1..].to_vec(),
        }
    }

    /// circ(S_1, S_2, ..., S_n); requires R != 0. S_0 is never used, so every
    /// entry is integral.
    pub fn s(params: &RecurrenceParams, n: usize) -> Result<Self> {
        assert!(n >= 1, "order must be positive");
        let terms = gen_s(params, n + 1)?;
        Ok(CirculantMatrix {
            first_row: terms[1..].to_vec(),
        })
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[ExactScalar] {
        &self.first_row
    }

    /// Exact entry at 0-based position (i, j).
    pub fn entry(&self, i: usize, j: usize) -> &ExactScalar {
        let n = self.order();
        debug_assert!(i < n && j < n);
        &self.first_row[(j + n - i) % n]
    }

    /// Exact sum of the first row (equals the j = 0 eigenvalue).
    pub fn row_sum(&self) -> ExactScalar {
        self.first_row
            .iter()
            .fold(ExactScalar::zero(), |acc, c| acc + c)
    }

    /// True when every first-row entry is >= 0.
    pub fn is_entrywise_nonnegative(&self) -> bool {
        self.first_row.iter().all(|c| !c.numer().is_negative())
    }

    /// Full n x n matrix in exact arithmetic.
    pub fn materialize(&self) -> Vec<Vec<ExactScalar>> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    /// All n DFT eigenvalues by direct summation.
    ///
    /// The j = 0 value is formed by exact summation of the first row so it is
    /// bit-comparable with `row_sum()`.
    pub fn eigenvalues(&self) -> Spectrum {
        let n = self.order();
        let row: Vec<f64> = self.first_row.iter().map(|c| c.to_f64()).collect();
        let mut values = Vec::with_capacity(n);
        values.push(Complex64::new(self.row_sum().to_f64(), 0.0));
        for j in 1..n {
            let mut acc = Complex64::zero();
            for (k, &c) in row.iter().enumerate() {
                acc += c * twiddle(n, j * k);
            }
            values.push(acc);
        }
        Spectrum { values }
    }

    /// Spectral norm as the maximum eigenvalue modulus. Valid because every
    /// circulant is normal; the maximum is taken over all j rather than
    /// assuming j = 0 attains it.
    pub fn spectral_norm(&self) -> f64 {
        self.eigenvalues().max_modulus()
    }

    /// Determinant as the product of the DFT eigenvalues. The imaginary part
    /// is rounding noise for real first rows.
    pub fn det_spectral(&self) -> Complex64 {
        self.eigenvalues()
            .values
            .iter()
            .fold(Complex64::one(), |acc, v| acc * v)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Denominators are cleared up front so the elimination runs over
    /// integers; the result is bit-exact.
    pub fn det_exact(&self, cap: usize) -> Result<ExactScalar> {
        let n = self.order();
        if n > cap {
            return Err(Error::OrderCapExceeded { n, cap });
        }

        let lcm = self
            .first_row
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .first_row
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| scaled[(j + n - i) % n].clone()).collect())
            .collect();

        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(swap) => {
                        m.swap(k, swap);
                        sign = -sign;
                    }
                    None => return Ok(ExactScalar::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }

        let det_scaled = BigInt::from(sign) * m[n - 1][n - 1].clone();
        let denom = lcm.pow(n as u32);
        Ok(ExactScalar::from(num_rational::BigRational::new(
            det_scaled, denom,
        )))
    }

    /// Exact normality check: M Mt == Mt M over the rationals.
    pub fn commutes_with_transpose(&self) -> bool {
        let m = self.materialize();
        let n = self.order();
        let mt: Vec<Vec<ExactScalar>> = (0..n)
            .map(|i| (0..n).map(|j| m[j][i].clone()).collect())
            .collect();
        mat_mul(&m, &mt) == mat_mul(&mt, &m)
    }
}

fn mat_mul(a: &[Vec<ExactScalar>], b: &[Vec<ExactScalar>]) -> Vec<Vec<ExactScalar>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(ExactScalar::zero(), |acc, k| acc + &a[i][k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circ(values: &[i64]) -> CirculantMatrix {
        CirculantMatrix::from_first_row(values.iter().map(|&v| ExactScalar::from(v)).collect())
    }

    #[test]
    fn g_first_rows() {
        let m = CirculantMatrix::g(&RecurrenceParams::new(1, 1, 1), 4);
        assert_eq!(m.first_row(), circ(&[0, 1, 1, 2]).first_row());
        let m = CirculantMatrix::g(&RecurrenceParams::new(1, 1, 1), 1);
        assert_eq!(m.first_row(), circ(&[0]).first_row());
        let m = CirculantMatrix::g(&RecurrenceParams::new(2, 1, 0), 3);
        assert_eq!(m.first_row(), circ(&[0, 1, 2]).first_row());
    }

    #[test]
    fn s_first_rows() {
        let m = CirculantMatrix::s(&RecurrenceParams::new(1, 1, 1), 4).unwrap();
        assert_eq!(m.first_row(), circ(&[3, 1, 3, 7]).first_row());
        let m = CirculantMatrix::s(&RecurrenceParams::new(0, 1, 1), 2).unwrap();
        assert_eq!(m.first_row(), circ(&[3, 0]).first_row());
        let m = CirculantMatrix::s(&RecurrenceParams::new(-2, 5, 3), 1).unwrap();
        assert_eq!(m.first_row(), circ(&[3]).first_row());
        assert_eq!(
            CirculantMatrix::s(&RecurrenceParams::new(1, 1, 0), 2),
            Err(Error::ZeroRCoefficient)
        );
    }

    #[test]
    fn entry_rule_wraps() {
        let m = circ(&[10, 20, 30]);
        // Row 1 is the cyclic right shift of row 0.
        assert_eq!(m.entry(1, 0), &ExactScalar::from(30));
        assert_eq!(m.entry(1, 1), &ExactScalar::from(10));
        assert_eq!(m.entry(1, 2), &ExactScalar::from(20));
        assert_eq!(m.entry(2, 0), &ExactScalar::from(20));
    }

    #[test]
    fn eigenvalues_of_shift() {
        let spectrum = circ(&[0, 1]).eigenvalues();
        assert!((spectrum.values[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((spectrum.values[1] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn eigenvalues_of_scaled_identity() {
        let spectrum = circ(&[3, 0]).eigenvalues();
        for v in &spectrum.values {
            assert!((v - Complex64::new(3.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn eigenvalues_tribonacci_order_four() {
        // circ(0, 1, 1, 2): lambda_0 = 4, lambda_2 = 0 - 1 + 1 - 2 = -2.
        let spectrum = circ(&[0, 1, 1, 2]).eigenvalues();
        assert!((spectrum.values[0] - Complex64::new(4.0, 0.0)).norm() < 1e-12);
        assert!((spectrum.values[2] - Complex64::new(-2.0, 0.0)).norm() < 1e-12);
        // Direct summation at w = i for j = 1: -i - 1 + 2i = -1 + i.
        assert!((spectrum.values[1] - Complex64::new(-1.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn row_sum_eigenvalue_bit_exact() {
        let m = circ(&[5, -3, 11, 7, -2]);
        let spectrum = m.eigenvalues();
        assert_eq!(spectrum.values[0].re.to_bits(), m.row_sum().to_f64().to_bits());
        assert_eq!(spectrum.values[0].im.to_bits(), 0.0f64.to_bits());
    }

    #[test]
    fn spectral_norms() {
        assert!((circ(&[0, 1]).spectral_norm() - 1.0).abs() < 1e-15);
        assert!((circ(&[3, 0]).spectral_norm() - 3.0).abs() < 1e-15);
        assert!((circ(&[0, 1, 1]).spectral_norm() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn spectral_determinants() {
        assert!((circ(&[0, 1]).det_spectral() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((circ(&[3, 0]).det_spectral() - Complex64::new(9.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn exact_determinants() {
        assert_eq!(
            circ(&[0, 1]).det_exact(DEFAULT_EXACT_DET_CAP).unwrap(),
            ExactScalar::from(-1)
        );
        // Hand cofactor expansion: det [[0,1,1],[1,0,1],[1,1,0]] = 2.
        assert_eq!(
            circ(&[0, 1, 1]).det_exact(DEFAULT_EXACT_DET_CAP).unwrap(),
            ExactScalar::from(2)
        );
        assert_eq!(
            circ(&[1, 2]).det_exact(1),
            Err(Error::OrderCapExceeded { n: 2, cap: 1 })
        );
    }

    #[test]
    fn exact_determinant_with_rational_entries() {
        let m = CirculantMatrix::from_first_row(vec![
            ExactScalar::ratio(1, 2),
            ExactScalar::ratio(1, 3),
        ]);
        // det [[1/2, 1/3], [1/3, 1/2]] = 1/4 - 1/9 = 5/36.
        assert_eq!(
            m.det_exact(DEFAULT_EXACT_DET_CAP).unwrap(),
            ExactScalar::ratio(5, 36)
        );
    }

    #[test]
    fn oracle_agreement_spectral_vs_exact() {
        let m = circ(&[0, 1, 1, 2]);
        let spectral = m.det_spectral();
        let exact = m.det_exact(DEFAULT_EXACT_DET_CAP).unwrap().to_f64();
        assert!((spectral.re - exact).abs() <= 1e-9 * exact.abs().max(1.0));
        assert!(spectral.im.abs() <= 1e-9 * exact.abs().max(1.0));
    }

    #[test]
    fn singular_matrix_exact_determinant() {
        // circ(1, 1): rank 1, det 0 — exercises the no-pivot path.
        assert_eq!(
            circ(&[1, 1]).det_exact(DEFAULT_EXACT_DET_CAP).unwrap(),
            ExactScalar::zero()
        );
    }

    #[test]
    fn normality_exact() {
        for row in [&[0i64, 1, 1, 2][..], &[3, 1, 3, 7], &[5, -3, 11, 7, -2]] {
            assert!(circ(row).commutes_with_transpose());
        }
    }
}
