//! Numerical toolkit for majorant power series in one and several
//! complex variables.
//!
//! The library revolves around the majorant of a power series (replace
//! every coefficient by its modulus) and the two radii it defines for
//! the unit ball of `l_p^n`:
//!
//! * the Bohr radius `K`: the largest scaling factor `r` such that a
//!   sup-norm bound of 1 on the ball forces the majorant to stay below 1
//!   on the ball shrunk by `r`;
//! * the second radius `B`: the analogous largest `r` when every term is
//!   maximized separately before summing (always `B <= K`, with equality
//!   on polydiscs).
//!
//! Functionality is split into:
//!
//! * [`multiindex`] / [`poly`] — multi-index enumeration, multinomial
//!   coefficients, monomial suprema over `l_p` balls, sparse polynomial
//!   arithmetic and JSON serialization;
//! * [`univariate`] — the one-variable theory: the extremal Moebius
//!   family, the sharp 1/3 radius, the Caratheodory coefficient test,
//!   the `inf Mf(r)/r` functional with its Hardy-space bound 2, and
//!   root-of-unity averaging of coefficients;
//! * [`bounds`] — closed-form lower/upper bounds for `K` and `B` on
//!   `l_p^n` balls, the tree-function constant `1/(3*cbrt(e))`, and the
//!   Chernoff/covering constants behind the probabilistic upper bound;
//! * [`randpoly`] — random symmetric sign tensors, their multilinear
//!   forms and `±multinomial` homogeneous polynomials, and seeded
//!   sup-norm estimation on `l_p` balls;
//! * [`estimator`] — empirical two-sided bracketing of both radii for
//!   small dimensions;
//! * [`selfcheck`] — the named runtime invariant suites driven by the
//!   CLI `verify` subcommand.
//!
//! All operations are pure functions of their inputs (plus an explicit
//! seed where randomness is involved), so results are reproducible
//! bit-for-bit and safe to evaluate in parallel.

pub mod bounds;
mod error;
pub mod estimator;
pub mod multiindex;
pub mod numeric;
pub mod optimize;
pub mod poly;
pub mod randpoly;
pub mod rngutil;
pub mod selfcheck;
pub mod univariate;

pub use error::Error;
pub use multiindex::{enumerate_multiindices, monomial_sup, multinomial, BallSpec, MultiIndex, PNorm};
pub use poly::SparsePolynomial;
pub use univariate::UnivariateSeries;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
