//! Small numeric helpers shared across the crate: exact factorials,
//! log-space factorials, and the 1/3 display clamp.

use crate::{Error, Result};

/// The one-dimensional Bohr radius; multi-dimensional radii never
/// exceed it, so displayed upper bounds are clamped here.
pub const ONE_THIRD: f64 = 1.0 / 3.0;

/// Largest `k` with `k!` representable in `u128`.
pub const MAX_EXACT_FACTORIAL: u32 = 34;

/// Exact `k!` in 128-bit arithmetic (`k <= 34`).
pub fn factorial_u128(k: u32) -> Result<u128> {
    if k > MAX_EXACT_FACTORIAL {
        return Err(Error::IntegerOverflow {
            context: "factorial",
        });
    }
    let mut acc: u128 = 1;
    for i in 2..=k as u128 {
        acc *= i;
    }
    Ok(acc)
}

/// `ln(k!)`.
///
/// Exact-factorial logarithms up to 20, then accumulated `ln` terms, so
/// small arguments (the regime the bound formulas use) carry no
/// summation error at all.
pub fn ln_factorial(k: u32) -> f64 {
    const EXACT_LIMIT: u32 = 20;
    if k <= EXACT_LIMIT {
        let mut acc: u64 = 1;
        for i in 2..=k as u64 {
            acc *= i;
        }
        return (acc as f64).ln();
    }
    let mut acc = ln_factorial(EXACT_LIMIT);
    for i in (EXACT_LIMIT + 1)..=k {
        acc += (i as f64).ln();
    }
    acc
}

/// Exact binomial coefficient `C(n, k)` in `u128`, multiplying and
/// dividing incrementally so every intermediate value is an integer.
pub fn binomial_u128(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or(Error::IntegerOverflow {
                context: "binomial coefficient",
            })?;
        acc /= i as u128;
    }
    Ok(acc)
}

/// Clamp a displayed upper bound to the one-dimensional ceiling 1/3.
pub fn clamp_to_univariate(x: f64) -> f64 {
    x.min(ONE_THIRD)
}
