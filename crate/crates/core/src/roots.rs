//! Roots of the characteristic cubic x^3 - P x^2 - Q x - R and the two
//! Binet-style closed forms built on them.
//!
//! The solver uses the standard trigonometric/Cardano split on the depressed
//! cubic, then polishes each root with complex Newton steps against the exact
//! integer coefficients. Multiplicity is decided by the exact integer
//! discriminant, not by comparing floating roots: a relative separation
//! threshold alone cannot distinguish a true double root from a near-double
//! one.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::params::RecurrenceParams;

/// Roots are "distinct" only when the minimum pairwise distance clears this
/// relative threshold (and the exact discriminant is nonzero).
pub const DISTINCTNESS_REL_THRESHOLD: f64 = 1e-8;

/// The three complex roots of the characteristic cubic, with multiplicity
/// metadata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharRoots {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    /// f64 image of the exact integer discriminant of the cubic.
    pub discriminant: f64,
    /// True when all three roots are pairwise distinct.
    pub distinct: bool,
    /// Minimum pairwise distance between the computed roots.
    pub separation: f64,
}

impl CharRoots {
    pub fn all(&self) -> [Complex64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

fn depressed_cubic_roots(p: f64, q: f64, r: f64) -> [Complex64; 3] {
    // Monic form x^3 + a x^2 + b x + c.
    let a = -p;
    let b = -q;
    let c = -r;

    let qq = (a * a - 3.0 * b) / 9.0;
    let rr = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
    let shift = a / 3.0;

    if rr * rr < qq * qq * qq {
        // Three real roots: trigonometric branch.
        let theta = (rr / (qq * qq * qq).sqrt()).clamp(-1.0, 1.0).acos();
        let scale = -2.0 * qq.sqrt();
        let root = |angle: f64| Complex64::new(scale * angle.cos() - shift, 0.0);
        [
            root(theta / 3.0),
            root((theta + 2.0 * std::f64::consts::PI) / 3.0),
            root((theta - 2.0 * std::f64::consts::PI) / 3.0),
        ]
    } else {
        // One real root plus a conjugate pair (possibly collapsed).
        let sign = if rr < 0.0 { -1.0 } else { 1.0 };
        let big_a = -sign * (rr.abs() + (rr * rr - qq * qq * qq).sqrt()).cbrt();
        let big_b = if big_a == 0.0 { 0.0 } else { qq / big_a };
        let real = big_a + big_b - shift;
        let re_pair = -0.5 * (big_a + big_b) - shift;
        let im_pair = 3.0f64.sqrt() / 2.0 * (big_a - big_b);
        [
            Complex64::new(real, 0.0),
            Complex64::new(re_pair, im_pair),
            Complex64::new(re_pair, -im_pair),
        ]
    }
}

fn newton_polish(params: &RecurrenceParams, z0: Complex64) -> Complex64 {
    let p = params.p as f64;
    let q = params.q as f64;
    let r = params.r as f64;
    let mut z = z0;
    for _ in 0..4 {
        let f = ((z - p) * z - q) * z - r;
        let df = (3.0 * z - 2.0 * p) * z - q;
        let guard = 1e-12 * (1.0 + z.norm_sqr());
        if df.norm() <= guard {
            break;
        }
        z -= f / df;
    }
    z
}

/// Solves x^3 - P x^2 - Q x - R = 0 over the complex numbers.
///
/// Roots come back sorted by (real part, imaginary part) descending so that
/// equal parameters always yield bitwise-identical results.
pub fn solve_characteristic(params: &RecurrenceParams) -> CharRoots {
    let mut roots = depressed_cubic_roots(params.p as f64, params.q as f64, params.r as f64);
    for root in &mut roots {
        *root = newton_polish(params, *root);
    }
    roots.sort_by(|a, b| {
        b.re.total_cmp(&a.re).then_with(|| b.im.total_cmp(&a.im))
    });

    let separation = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| (roots[i] - roots[j]).norm())
        .fold(f64::INFINITY, f64::min);
    let max_modulus = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);

    let exact_disc = params.discriminant();
    let distinct =
        !exact_disc.is_zero() && separation > DISTINCTNESS_REL_THRESHOLD * max_modulus.max(1.0);

    // Representable exactly for desk-scale parameters; rounds for huge ones.
    let discriminant = bigint_to_f64(&exact_disc);

    CharRoots {
        alpha: roots[0],
        beta: roots[1],
        gamma: roots[2],
        discriminant,
        distinct,
        separation,
    }
}

fn bigint_to_f64(value: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::INFINITY)
}

/// G_n by the three-term partial-fraction Binet form:
/// alpha^n / ((alpha-beta)(alpha-gamma)) + (cyclic).
///
/// Requires distinct roots; the imaginary part of the result is rounding
/// noise for integer parameters.
pub fn binet_g(_params: &RecurrenceParams, n: u32, roots: &CharRoots) -> Result<Complex64> {
    if !roots.distinct {
        return Err(Error::RepeatedRoots);
    }
    let [a, b, c] = roots.all();
    let term = |x: Complex64, y: Complex64, z: Complex64| x.powu(n) / ((x - y) * (x - z));
    Ok(term(a, b, c) + term(b, a, c) + term(c, a, b))
}

/// S_n as the root power sum alpha^{n-1} + beta^{n-1} + gamma^{n-1}.
///
/// At n = 0 this needs negative powers, which is only defined when no root is
/// zero, i.e. when R != 0.
pub fn binet_s(params: &RecurrenceParams, n: u32, roots: &CharRoots) -> Result<Complex64> {
    if n == 0 && params.r == 0 {
        return Err(Error::ZeroRootNegativePower);
    }
    let e = n as i32 - 1;
    Ok(roots.alpha.powi(e) + roots.beta.powi(e) + roots.gamma.powi(e))
}
