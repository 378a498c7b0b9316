//! Exact univariate polynomial arithmetic over big integers and rationals, and
//! truncated exponential generating functions with a formal logarithm.

mod egf;
mod int;
mod rat;

pub use egf::EgfSeries;
pub use int::IntPoly;
pub use rat::RatPoly;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("series has the wrong constant term for this operation")]
    BadConstantTerm,
    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
}

/// `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!`.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
