//! Multi-indices, the `l_p` ball domain, multinomial coefficients, and
//! monomial suprema.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numeric::{binomial_u128, factorial_u128, MAX_EXACT_FACTORIAL};
use crate::{Error, Result};

/// Exponent vector of a monomial `z^alpha`.
///
/// The ordering is graded lexicographic — lower total degree first,
/// then within a degree the index with the lexicographically larger
/// exponent vector comes first, so `(1,0) < (0,1)`. This total order
/// makes map keys, summation order, and serialization canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    /// Zero multi-index (the constant monomial) in `n` variables.
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// `k * e_j` in `n` variables.
    pub fn axis(n: usize, j: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[j] = k;
        MultiIndex(e)
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|alpha|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// `ln(alpha^alpha)` with the convention `0^0 = 1`.
    pub fn ln_self_power(&self) -> f64 {
        self.0
            .iter()
            .filter(|&&a| a > 0)
            .map(|&a| a as f64 * (a as f64).ln())
            .sum()
    }

    /// `ln(alpha!)`.
    pub fn ln_factorial(&self) -> f64 {
        self.0.iter().map(|&a| crate::numeric::ln_factorial(a)).sum()
    }

    /// Exact `alpha!` (errors on 128-bit overflow).
    pub fn factorial_exact(&self) -> Result<u128> {
        let mut acc: u128 = 1;
        for &a in &self.0 {
            acc = acc
                .checked_mul(factorial_u128(a)?)
                .ok_or(Error::IntegerOverflow {
                    context: "multi-index factorial",
                })?;
        }
        Ok(acc)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        MultiIndex(v.to_vec())
    }
}

/// All multi-indices in `n` variables with total degree exactly `k`,
/// in graded-lex order. The count is `C(n+k-1, k)`.
pub fn enumerate_multiindices(n: usize, k: u32) -> Vec<MultiIndex> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, k);
    out
}

fn fill(out: &mut Vec<MultiIndex>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(MultiIndex(current.clone()));
        return;
    }
    // Largest leading exponent first matches the graded-lex order.
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Exact multinomial coefficient `d! / alpha!` for `|alpha| = d`.
///
/// Computed as a product of binomials over prefix sums so every
/// intermediate value is an integer; exact through at least `d = 34`
/// and checked against 128-bit overflow beyond that.
pub fn multinomial(d: u32, alpha: &MultiIndex) -> Result<u128> {
    let total = alpha.degree();
    if total != d {
        return Err(Error::DegreeMismatch {
            expected: d,
            got: total,
        });
    }
    if d <= MAX_EXACT_FACTORIAL {
        return Ok(factorial_u128(d)? / alpha.factorial_exact()?);
    }
    let mut acc: u128 = 1;
    let mut used: u64 = 0;
    for &a in alpha.exponents() {
        used += a as u64;
        acc = acc
            .checked_mul(binomial_u128(used, a as u64)?)
            .ok_or(Error::IntegerOverflow {
                context: "multinomial coefficient",
            })?;
    }
    Ok(acc)
}

/// The exponent of an `l_p` norm; infinity is a first-class case so the
/// polydisc never goes through a large-float exponent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PNorm {
    Finite(f64),
    Infinity,
}

impl PNorm {
    /// Validated constructor; `p` must be at least 1.
    pub fn new(p: f64) -> Result<Self> {
        if p.is_infinite() && p > 0.0 {
            return Ok(PNorm::Infinity);
        }
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::ParameterOutOfRange {
                name: "p",
                value: p,
                constraint: "[1, inf]",
            });
        }
        Ok(PNorm::Finite(p))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, PNorm::Infinity)
    }

    /// `1/p`, with `1/inf = 0`.
    pub fn recip(self) -> f64 {
        match self {
            PNorm::Finite(p) => 1.0 / p,
            PNorm::Infinity => 0.0,
        }
    }

    /// `m(p) = min(p, 2)`.
    pub fn m_small(self) -> f64 {
        match self {
            PNorm::Finite(p) => p.min(2.0),
            PNorm::Infinity => 2.0,
        }
    }

    /// `1/M(p)` with `M(p) = max(p, 2)`; zero for the polydisc.
    pub fn recip_m_large(self) -> f64 {
        match self {
            PNorm::Finite(p) => 1.0 / p.max(2.0),
            PNorm::Infinity => 0.0,
        }
    }
}

impl fmt::Display for PNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PNorm::Finite(p) => write!(f, "{p}"),
            PNorm::Infinity => write!(f, "inf"),
        }
    }
}

/// The domain `B_p^n`: the open unit ball of `l_p^n` in `C^n` (its
/// closure is used wherever a supremum is attained on the boundary).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    pub n: usize,
    pub p: PNorm,
}

impl BallSpec {
    pub fn new(n: usize, p: PNorm) -> Result<Self> {
        if n < 1 {
            return Err(Error::ParameterOutOfRange {
                name: "n",
                value: n as f64,
                constraint: "n >= 1",
            });
        }
        Ok(BallSpec { n, p })
    }

    /// `l_p` norm of a vector of moduli.
    pub fn norm_of_moduli(&self, moduli: &[f64]) -> f64 {
        match self.p {
            PNorm::Infinity => moduli.iter().cloned().fold(0.0, f64::max),
            PNorm::Finite(p) => moduli.iter().map(|m| m.powf(p)).sum::<f64>().powf(1.0 / p),
        }
    }
}

impl fmt::Display for BallSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_{}^{}", self.p, self.n)
    }
}

/// `sup { |z^alpha| : z in the closed unit ball of l_p^n }`, which is
/// `(alpha^alpha / |alpha|^|alpha|)^(1/p)` with `0^0 = 1`; equal to 1
/// for the zero index and on the polydisc.
pub fn monomial_sup(alpha: &MultiIndex, ball: &BallSpec) -> Result<f64> {
    if alpha.len() != ball.n {
        return Err(Error::DimensionMismatch {
            expected: ball.n,
            got: alpha.len(),
        });
    }
    let d = alpha.degree();
    if d == 0 || ball.p.is_infinite() {
        return Ok(1.0);
    }
    let ln_ratio = alpha.ln_self_power() - d as f64 * (d as f64).ln();
    Ok((ball.p.recip() * ln_ratio).exp())
}
