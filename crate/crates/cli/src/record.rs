//! One closed-form-vs-oracle comparison outcome, plus the value formatting
//! that keeps reports byte-stable.

use std::cmp::Ordering;

use num_complex::Complex64;
use serde::Serialize;
use tricirc_core::params::RecurrenceParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedDegenerate,
    SkippedGuard,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedDegenerate => "skipped_degenerate",
            Verdict::SkippedGuard => "skipped_guard",
        }
    }
}

/// A closed or oracle value: real checks format without an imaginary part,
/// complex checks carry both components.
#[derive(Debug, Clone, Copy)]
pub enum Value {
    Real(f64),
    Complex(Complex64),
}

impl Value {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Value::Real(x) => Complex64::new(x, 0.0),
            Value::Complex(z) => z,
        }
    }

    pub fn render(self) -> String {
        match self {
            Value::Real(x) => sig17(x),
            Value::Complex(z) => {
                let im = normalize_zero(z.im);
                if im >= 0.0 {
                    format!("{}+{}i", sig17(z.re), sig17(im))
                } else {
                    format!("{}{}i", sig17(z.re), sig17(im))
                }
            }
        }
    }
}

fn normalize_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Decimal-string rendering with 17 significant digits, so reports never
/// depend on platform float printing defaults.
pub fn sig17(x: f64) -> String {
    format!("{:.16e}", normalize_zero(x))
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub r: Option<i64>,
    pub n: usize,
    pub j: Option<usize>,
    pub check: String,
    pub closed_value: Option<String>,
    pub oracle_value: Option<String>,
    pub abs_error: Option<f64>,
    pub rel_error: Option<f64>,
    pub verdict: Verdict,
    pub skip_reason: Option<String>,
}

impl VerificationRecord {
    /// Pass/fail comparison of a closed value against its oracle. The
    /// relative error is |closed - oracle| / max(1, |oracle|) so zero oracles
    /// stay meaningful.
    pub fn comparison(
        check: impl Into<String>,
        params: Option<&RecurrenceParams>,
        n: usize,
        j: Option<usize>,
        closed: Value,
        oracle: Value,
        tolerance: f64,
    ) -> Self {
        let abs = (closed.to_complex() - oracle.to_complex()).norm();
        let rel = abs / oracle.to_complex().norm().max(1.0);
        let verdict = if rel <= tolerance {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationRecord {
            p: params.map(|x| x.p),
            q: params.map(|x| x.q),
            r: params.map(|x| x.r),
            n,
            j,
            check: check.into(),
            closed_value: Some(closed.render()),
            oracle_value: Some(oracle.render()),
            abs_error: Some(abs),
            rel_error: Some(rel),
            verdict,
            skip_reason: None,
        }
    }

    /// A cell whose closed form is inapplicable; the oracle value is recorded
    /// when it exists.
    pub fn skipped_degenerate(
        check: impl Into<String>,
        params: Option<&RecurrenceParams>,
        n: usize,
        j: Option<usize>,
        reason: impl Into<String>,
        oracle: Option<Value>,
    ) -> Self {
        VerificationRecord {
            p: params.map(|x| x.p),
            q: params.map(|x| x.q),
            r: params.map(|x| x.r),
            n,
            j,
            check: check.into(),
            closed_value: None,
            oracle_value: oracle.map(Value::render),
            abs_error: None,
            rel_error: None,
            verdict: Verdict::SkippedDegenerate,
            skip_reason: Some(reason.into()),
        }
    }

    /// A norm cell outside the non-negative-row guard: both values are still
    /// recorded so the discrepancy set stays measurable, but the cell cannot
    /// fail.
    pub fn skipped_guard(
        check: impl Into<String>,
        params: Option<&RecurrenceParams>,
        n: usize,
        j: Option<usize>,
        reason: impl Into<String>,
        closed: Value,
        oracle: Value,
    ) -> Self {
        let abs = (closed.to_complex() - oracle.to_complex()).norm();
        let rel = abs / oracle.to_complex().norm().max(1.0);
        VerificationRecord {
            p: params.map(|x| x.p),
            q: params.map(|x| x.q),
            r: params.map(|x| x.r),
            n,
            j,
            check: check.into(),
            closed_value: Some(closed.render()),
            oracle_value: Some(oracle.render()),
            abs_error: Some(abs),
            rel_error: Some(rel),
            verdict: Verdict::SkippedGuard,
            skip_reason: Some(reason.into()),
        }
    }

    /// Canonical report order: (check, p, q, r, n, j), with absent fields
    /// first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        (
            &self.check,
            self.p,
            self.q,
            self.r,
            self.n,
            self.j,
        )
            .cmp(&(&other.check, other.p, other.q, other.r, other.n, other.j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig17_is_fixed_width_scientific() {
        assert_eq!(sig17(4.0), "4.0000000000000000e0");
        assert_eq!(sig17(-2.0), "-2.0000000000000000e0");
        assert_eq!(sig17(0.0), "0.0000000000000000e0");
        assert_eq!(sig17(-0.0), "0.0000000000000000e0");
        assert_eq!(sig17(0.1), "1.0000000000000001e-1");
    }

    #[test]
    fn complex_rendering() {
        assert_eq!(
            Value::Complex(Complex64::new(1.0, -2.0)).render(),
            "1.0000000000000000e0-2.0000000000000000e0i"
        );
        assert_eq!(
            Value::Complex(Complex64::new(-1.5, 0.0)).render(),
            "-1.5000000000000000e0+0.0000000000000000e0i"
        );
    }

    #[test]
    fn verdict_depends_on_relative_error() {
        let params = RecurrenceParams::new(1, 1, 1);
        let rec = VerificationRecord::comparison(
            "norm_g",
            Some(&params),
            3,
            None,
            Value::Real(2.0),
            Value::Real(2.0 + 1e-12),
            1e-8,
        );
        assert_eq!(rec.verdict, Verdict::Pass);
        let rec = VerificationRecord::comparison(
            "norm_g",
            Some(&params),
            3,
            None,
            Value::Real(2.1),
            Value::Real(2.0),
            1e-8,
        );
        assert_eq!(rec.verdict, Verdict::Fail);
    }

    #[test]
    fn zero_oracle_uses_absolute_floor() {
        let params = RecurrenceParams::new(1, 1, 1);
        let rec = VerificationRecord::comparison(
            "det_g",
            Some(&params),
            1,
            None,
            Value::Real(1e-14),
            Value::Real(0.0),
            1e-8,
        );
        assert_eq!(rec.verdict, Verdict::Pass);
    }

    #[test]
    fn canonical_order_sorts_absent_params_first() {
        let a = VerificationRecord::skipped_degenerate("x", None, 1, None, "r", None);
        let params = RecurrenceParams::new(-2, 0, 0);
        let b = VerificationRecord::skipped_degenerate("x", Some(&params), 1, None, "r", None);
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
    }
}
