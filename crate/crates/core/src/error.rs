use thiserror::Error;

/// Everything that can go wrong when a precondition of a sequence,
/// root-finding, or closed-form operation is violated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The Tribonacci-Lucas sequence is undefined when R = 0 (its zeroth
    /// term divides by R).
    #[error("R coefficient is zero: the S-sequence is undefined")]
    ZeroRCoefficient,

    /// The k-Fibonacci preset needs its `k`.
    #[error("k-Fibonacci preset requires the parameter k")]
    MissingK,

    /// `k` was supplied for a preset that does not take one.
    #[error("parameter k is only valid for the k-Fibonacci preset")]
    UnexpectedK,

    /// The characteristic cubic has a repeated root, so the three-term
    /// partial-fraction expansions do not apply.
    #[error("characteristic cubic has a repeated root")]
    RepeatedRoots,

    /// A zero characteristic root cannot be raised to a negative power
    /// (S-Binet at n = 0 with R = 0).
    #[error("zero characteristic root raised to a negative power")]
    ZeroRootNegativePower,

    /// The eigenvalue closed form divides by P w^{-j} + Q w^{-2j} + R w^{-3j} - 1,
    /// which vanishes when w^j happens to be a characteristic root.
    #[error("eigenvalue denominator vanishes at character index {j}")]
    DegenerateCharacter { j: usize },

    /// The norm closed forms divide by P + Q + R - 1.
    #[error("P + Q + R - 1 = 0: norm closed form undefined")]
    SingularParameterSum,

    /// The norm closed forms are only guaranteed when the first row is
    /// entrywise non-negative; callers may still use the spectral oracle.
    #[error("first row has negative entries: norm closed form not guaranteed")]
    NegativeEntriesUnsupported,

    /// The determinant closed form divides by the leading quadratic
    /// coefficient (G_{n+1}, or S_{n+1} - 3).
    #[error("leading quadratic coefficient is zero: determinant closed form inapplicable")]
    ZeroLeadingTerm,

    /// Some characteristic root is an n-th root of unity, so the closed-form
    /// determinant denominator vanishes.
    #[error("determinant closed-form denominator vanishes")]
    DegenerateDenominator,

    /// A specialization bullet references a classical term with negative index.
    #[error("classical sequence index would be negative")]
    IndexUnderflow,

    /// Exact elimination was asked for an order above the configured cap.
    #[error("matrix order {n} exceeds the exact-determinant cap {cap}")]
    OrderCapExceeded { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
