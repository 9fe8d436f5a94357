//! Exact computations with exponential Riordan arrays for the 1/k-Eulerian
//! polynomials `A_n^(k)(x)` and the Savage-Viswanathan polynomials `F_n(x, y)`.
//!
//! Everything works over the rationals in the three indeterminates `x`, `y`,
//! `k`; truncated power series in `z` carry [`MultiPoly`] coefficients.
//!
//! * [`exactalg`]: rationals and sparse polynomials in `x, y, k`.
//! * [`series`]: truncated power series (product, composition, reversion,
//!   log/exp, symbolic powers).
//! * [`riordan`]: `[g, f]` pairs, realization, group law, named families.
//! * [`production`]: production matrices computed from `Z`/`A` and from
//!   `L^-1 * L-bar`, tridiagonality and recurrence extraction.
//! * [`orthopoly`]: three-term recurrences, J- and S-fractions, the Deleham
//!   construction and orthogonality checks.
//! * [`hankel`]: Hankel determinants and their product formulas.
//! * [`combinat`]: permutation enumeration and Stirling-number oracles.
//! * [`verify`]: the claim registry driven by the command line tool.

pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod hankel;
pub mod matrix;
pub mod orthopoly;
pub mod production;
pub mod riordan;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{MultiPoly, Rational, Var};
pub use matrix::{Matrix, TriMatrix};
pub use riordan::{Family, RiordanPair};
pub use series::TruncSeries;

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 10;
