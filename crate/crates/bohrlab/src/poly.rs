//! Sparse multi-variable polynomials over complex coefficients.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::multiindex::MultiIndex;
use crate::{Error, Result};

/// A finite sum `sum_alpha c_alpha z^alpha` stored sparsely.
///
/// Keys are kept in graded-lex order (the `MultiIndex` ordering), zero
/// coefficients are never stored, and every key has length `dim`, so
/// evaluation and serialization order is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct SparsePolynomial {
    dim: usize,
    terms: BTreeMap<MultiIndex, Complex64>,
}

impl SparsePolynomial {
    /// The zero polynomial in `dim` variables.
    pub fn zero(dim: usize) -> Self {
        SparsePolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Build from `(alpha, coefficient)` pairs; duplicate indices are
    /// summed and zero coefficients dropped.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Complex64)>,
    {
        let mut poly = SparsePolynomial::zero(dim);
        for (alpha, c) in terms {
            poly.add_term(alpha, c)?;
        }
        Ok(poly)
    }

    /// Add `c * z^alpha` into the polynomial.
    pub fn add_term(&mut self, alpha: MultiIndex, c: Complex64) -> Result<()> {
        if alpha.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: alpha.len(),
            });
        }
        let entry = self.terms.entry(alpha).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if entry.norm_sqr() == 0.0 {
            // Re-borrow immutably to find the key we just zeroed.
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.norm_sqr() == 0.0)
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum total degree over stored terms (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(MultiIndex::degree).max().unwrap_or(0)
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Complex64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Complex64 {
        self.terms.get(alpha).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// The constant term `c_0`.
    pub fn constant_term(&self) -> Complex64 {
        self.coefficient(&MultiIndex::zero(self.dim))
    }

    /// Whether every stored degree equals `degree()`; the zero
    /// polynomial counts as homogeneous.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let d = self.degree();
        for alpha in self.terms.keys() {
            if alpha.degree() != d {
                return Err(Error::NotHomogeneous(d, alpha.degree()));
            }
        }
        Ok(d)
    }

    /// Evaluate at `z` by iterated powers, summing in graded-lex order.
    pub fn eval(&self, z: &[Complex64]) -> Result<Complex64> {
        if z.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: z.len(),
            });
        }
        let powers = PowerTable::new(self, z);
        Ok(self
            .terms
            .iter()
            .map(|(alpha, c)| c * powers.monomial(alpha))
            .fold(Complex64::new(0.0, 0.0), |acc, t| acc + t))
    }

    /// Evaluate assuming real non-negative coefficients at a real
    /// non-negative point (the majorant fast path).
    pub fn eval_nonneg(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let max_deg: Vec<u32> = self.max_exponents();
        let tables: Vec<Vec<f64>> = x
            .iter()
            .zip(&max_deg)
            .map(|(&xi, &d)| {
                let mut t = Vec::with_capacity(d as usize + 1);
                t.push(1.0);
                for e in 1..=d {
                    t.push(t[e as usize - 1] * xi);
                }
                t
            })
            .collect();
        Ok(self
            .terms
            .iter()
            .map(|(alpha, c)| {
                let mono: f64 = alpha
                    .exponents()
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| tables[j][e as usize])
                    .product();
                c.re * mono
            })
            .sum())
    }

    /// Per-variable maximum exponent over the support.
    fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.dim];
        for alpha in self.terms.keys() {
            for (j, &e) in alpha.exponents().iter().enumerate() {
                m[j] = m[j].max(e);
            }
        }
        m
    }

    /// The majorant: same support, every coefficient replaced by its
    /// modulus. Idempotent.
    pub fn majorant(&self) -> SparsePolynomial {
        SparsePolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(alpha, c)| (alpha.clone(), Complex64::new(c.norm(), 0.0)))
                .collect(),
        }
    }

    /// Scale every coefficient.
    pub fn scaled(&self, factor: f64) -> SparsePolynomial {
        SparsePolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| (*c * factor).norm_sqr() != 0.0)
                .map(|(alpha, c)| (alpha.clone(), c * factor))
                .collect(),
        }
    }

    /// Partial derivative with respect to variable `j`.
    pub fn partial_derivative(&self, j: usize) -> SparsePolynomial {
        let mut terms = BTreeMap::new();
        for (alpha, c) in &self.terms {
            let e = alpha.exponents()[j];
            if e == 0 {
                continue;
            }
            let mut exps = alpha.exponents().to_vec();
            exps[j] = e - 1;
            terms.insert(MultiIndex::new(exps), c * e as f64);
        }
        SparsePolynomial { dim: self.dim, terms }
    }

    /// Product of polynomials living on disjoint variable slots of a
    /// common `dim`-variable space (term-by-term cartesian product).
    pub fn product_disjoint(dim: usize, factors: &[SparsePolynomial]) -> Result<SparsePolynomial> {
        let mut acc = SparsePolynomial::from_terms(
            dim,
            [(MultiIndex::zero(dim), Complex64::new(1.0, 0.0))],
        )?;
        for f in factors {
            if f.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: f.dim,
                });
            }
            let mut next = SparsePolynomial::zero(dim);
            for (a, ca) in &acc.terms {
                for (b, cb) in &f.terms {
                    let exps: Vec<u32> = a
                        .exponents()
                        .iter()
                        .zip(b.exponents())
                        .map(|(x, y)| x + y)
                        .collect();
                    next.add_term(MultiIndex::new(exps), ca * cb)?;
                }
            }
            acc = next;
        }
        Ok(acc)
    }
}

/// Per-variable power tables for one evaluation point.
struct PowerTable {
    tables: Vec<Vec<Complex64>>,
}

impl PowerTable {
    fn new(poly: &SparsePolynomial, z: &[Complex64]) -> Self {
        let max_deg = poly.max_exponents();
        let tables = z
            .iter()
            .zip(&max_deg)
            .map(|(&zi, &d)| {
                let mut t = Vec::with_capacity(d as usize + 1);
                t.push(Complex64::new(1.0, 0.0));
                for e in 1..=d {
                    t.push(t[e as usize - 1] * zi);
                }
                t
            })
            .collect();
        PowerTable { tables }
    }

    fn monomial(&self, alpha: &MultiIndex) -> Complex64 {
        alpha
            .exponents()
            .iter()
            .enumerate()
            .fold(Complex64::new(1.0, 0.0), |acc, (j, &e)| {
                acc * self.tables[j][e as usize]
            })
    }
}

/// Serialized form: `{"dim": n, "terms": [{"alpha": [...], "re": x, "im": y}, ...]}`
/// with terms in graded-lex order.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    dim: usize,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    alpha: Vec<u32>,
    re: f64,
    im: f64,
}

impl Serialize for SparsePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(alpha, c)| TermRepr {
                    alpha: alpha.exponents().to_vec(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        if repr.dim == 0 {
            return Err(serde::de::Error::custom("polynomial dim must be >= 1"));
        }
        let mut poly = SparsePolynomial::zero(repr.dim);
        for t in repr.terms {
            poly.add_term(MultiIndex::new(t.alpha), Complex64::new(t.re, t.im))
                .map_err(serde::de::Error::custom)?;
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiindex::{enumerate_multiindices, multinomial};
    use crate::rngutil;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn empty_polynomial_evaluates_to_zero() {
        let p = SparsePolynomial::zero(3);
        let z = vec![c(1.0, 2.0), c(0.5, 0.0), c(-1.0, 1.0)];
        assert_eq!(p.eval(&z).unwrap(), c(0.0, 0.0));
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn single_cross_term() {
        let p = SparsePolynomial::from_terms(2, [(MultiIndex::from([1, 1]), c(1.0, 0.0))]).unwrap();
        let v = p.eval(&[c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        assert_eq!(v, c(6.0, 0.0));
    }

    #[test]
    fn full_binomial_row_sums_to_power() {
        // sum over |alpha| = 2 of binom(2, alpha) z^alpha at z = (1, 1) is n^d = 4.
        let n = 2usize;
        let d = 2u32;
        let p = SparsePolynomial::from_terms(
            n,
            enumerate_multiindices(n, d)
                .into_iter()
                .map(|a| {
                    let coeff = multinomial(d, &a).unwrap() as f64;
                    (a, c(coeff, 0.0))
                })
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let v = p.eval(&[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((v - c(4.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut p = SparsePolynomial::zero(1);
        p.add_term(MultiIndex::from([2]), c(1.5, 0.0)).unwrap();
        p.add_term(MultiIndex::from([2]), c(-1.5, 0.0)).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn majorant_flips_negative_constant() {
        let p = SparsePolynomial::from_terms(
            1,
            [
                (MultiIndex::from([0]), c(-0.5, 0.0)),
                (MultiIndex::from([1]), c(0.75, 0.0)),
            ],
        )
        .unwrap();
        let m = p.majorant();
        assert_eq!(m.coefficient(&MultiIndex::from([0])), c(0.5, 0.0));
        assert_eq!(m.coefficient(&MultiIndex::from([1])), c(0.75, 0.0));
        // Fixed point on an all-positive polynomial, idempotent in general.
        assert_eq!(m.majorant(), m);
    }

    #[test]
    fn majorant_dominates_on_the_polydisc() {
        // |f(z)| <= Mf(r, ..., r) whenever every |z_j| <= r.
        let mut rng = rngutil::stream_rng(11, 0);
        for _ in 0..50 {
            let dim = 2;
            let mut p = SparsePolynomial::zero(dim);
            for alpha in enumerate_multiindices(dim, 2) {
                p.add_term(
                    alpha,
                    c(
                        rngutil::uniform(&mut rng, -1.0, 1.0),
                        rngutil::uniform(&mut rng, -1.0, 1.0),
                    ),
                )
                .unwrap();
            }
            for alpha in enumerate_multiindices(dim, 3) {
                p.add_term(
                    alpha,
                    c(
                        rngutil::uniform(&mut rng, -1.0, 1.0),
                        rngutil::uniform(&mut rng, -1.0, 1.0),
                    ),
                )
                .unwrap();
            }
            let r = rngutil::uniform(&mut rng, 0.1, 0.9);
            let z: Vec<Complex64> = (0..dim)
                .map(|_| {
                    let theta = rngutil::uniform(&mut rng, 0.0, std::f64::consts::TAU);
                    let rad = r * rngutil::uniform01(&mut rng);
                    c(rad * theta.cos(), rad * theta.sin())
                })
                .collect();
            let lhs = p.eval(&z).unwrap().norm();
            let rhs = p
                .majorant()
                .eval(&vec![c(r, 0.0); dim])
                .unwrap()
                .re;
            assert!(lhs <= rhs + 1e-9, "lhs={lhs} rhs={rhs}");
        }
    }

    #[test]
    fn json_schema_round_trip_in_graded_lex_order() {
        let p = SparsePolynomial::from_terms(
            2,
            [
                (MultiIndex::from([0, 1]), c(0.0, -2.0)),
                (MultiIndex::from([1, 0]), c(3.0, 0.0)),
                (MultiIndex::from([0, 0]), c(-1.0, 0.5)),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            "{\"dim\":2,\"terms\":[{\"alpha\":[0,0],\"re\":-1.0,\"im\":0.5},\
             {\"alpha\":[1,0],\"re\":3.0,\"im\":0.0},{\"alpha\":[0,1],\"re\":0.0,\"im\":-2.0}]}"
        );
        let back: SparsePolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn eval_nonneg_matches_complex_eval() {
        let p = SparsePolynomial::from_terms(
            2,
            [
                (MultiIndex::from([0, 0]), c(0.5, 0.0)),
                (MultiIndex::from([2, 1]), c(1.25, 0.0)),
            ],
        )
        .unwrap();
        let x = [0.3, 0.7];
        let a = p.eval_nonneg(&x).unwrap();
        let b = p.eval(&[c(0.3, 0.0), c(0.7, 0.0)]).unwrap().re;
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn product_disjoint_multiplies_supports() {
        // (1 + z1) * (1 + z2) over dim 2.
        let f = SparsePolynomial::from_terms(
            2,
            [
                (MultiIndex::from([0, 0]), c(1.0, 0.0)),
                (MultiIndex::from([1, 0]), c(1.0, 0.0)),
            ],
        )
        .unwrap();
        let g = SparsePolynomial::from_terms(
            2,
            [
                (MultiIndex::from([0, 0]), c(1.0, 0.0)),
                (MultiIndex::from([0, 1]), c(1.0, 0.0)),
            ],
        )
        .unwrap();
        let prod = SparsePolynomial::product_disjoint(2, &[f, g]).unwrap();
        assert_eq!(prod.term_count(), 4);
        let v = prod.eval(&[c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        assert!((v - c(12.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn partial_derivative_drops_and_scales() {
        let p = SparsePolynomial::from_terms(
            2,
            [
                (MultiIndex::from([3, 1]), c(2.0, 0.0)),
                (MultiIndex::from([0, 2]), c(1.0, 0.0)),
            ],
        )
        .unwrap();
        let d0 = p.partial_derivative(0);
        assert_eq!(d0.coefficient(&MultiIndex::from([2, 1])), c(6.0, 0.0));
        assert_eq!(d0.term_count(), 1);
    }
}
