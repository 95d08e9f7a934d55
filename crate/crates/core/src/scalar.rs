//! Exact rational scalars backing every sequence term and matrix entry.
//!
//! All sequence generation and exact-determinant work happens over
//! arbitrary-precision rationals so that no operation ever rounds. The one
//! genuinely non-integer value in the whole domain is the zeroth
//! Tribonacci-Lucas term -Q/R; everything else stays at denominator 1.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar. Exact under `+ - * /`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    /// Exact ratio `numer / denom`. Panics when `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExactScalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(value: BigInt) -> Self {
        ExactScalar(BigRational::from_integer(value))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True when the reduced denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    /// Exact non-negative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        ExactScalar(self.0.pow(exp as i32))
    }

    /// Nearest `f64` image of the exact value.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational magnitude exceeds f64 range")
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for ExactScalar {
    fn from(value: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<BigRational> for ExactScalar {
    fn from(value: BigRational) -> Self {
        ExactScalar(value)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({})", self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }

        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(&rhs.0))
            }
        }

        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}
