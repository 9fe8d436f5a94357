//! Production matrices of exponential Riordan arrays.
//!
//! The production matrix `P` of `L = [g, f]` satisfies `L P = L-bar`, where
//! `L-bar` is `L` without its top row. It is computed here two ways: from
//! the series `A(z) = f'(fbar(z))` and `Z(z) = g'(fbar(z))/g(fbar(z))`
//! through the bivariate generating function `e^(zw) (Z(z) + A(z) w)`, and
//! directly as `L^-1 L-bar`.

use crate::error::{Error, Result};
use crate::exactalg::MultiPoly;
use crate::matrix::Matrix;
use crate::riordan::RiordanPair;
use crate::series::{factorial, TruncSeries};

/// The pair `(Z, A)` determining a production matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZAForms {
    pub a: TruncSeries,
    pub z: TruncSeries,
}

/// Coefficients of a monic three-term recurrence
/// `p_{n+1} = (t - alpha_n) p_n - beta_n p_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TtrData {
    /// `alpha_0, alpha_1, ...`
    pub alpha: Vec<MultiPoly>,
    /// `beta_1, beta_2, ...` (index 0 holds `beta_1`)
    pub beta: Vec<MultiPoly>,
}

impl TtrData {
    pub fn new(alpha: Vec<MultiPoly>, beta: Vec<MultiPoly>) -> Self {
        TtrData { alpha, beta }
    }

    /// `beta_n`, 1-based.
    pub fn beta(&self, n: usize) -> &MultiPoly {
        &self.beta[n - 1]
    }

    /// Index of the first vanishing `beta_n`, if any. Formal orthogonality
    /// needs every `beta_n` nonzero.
    pub fn first_zero_beta(&self) -> Option<usize> {
        self.beta.iter().position(MultiPoly::is_zero).map(|i| i + 1)
    }
}

/// `A(z) = f'(fbar(z))` and `Z(z) = g'(fbar(z)) / g(fbar(z))`.
///
/// Both come out one order shorter than the pair.
pub fn compute_za(p: &RiordanPair) -> Result<ZAForms> {
    let fbar = p.f().reversion()?;
    let a = p.f().derivative().compose(&fbar)?;
    let g_at = p.g().compose(&fbar)?;
    let z = p.g().derivative().compose(&fbar)?.div(&g_at)?;
    Ok(ZAForms { a, z })
}

/// `n x n` production matrix read off `e^(zw) (Z(z) + A(z) w)`:
/// entry `(r, c)` is `r!` times the coefficient of `z^r w^c`.
pub fn production_analytic(za: &ZAForms, n: usize) -> Result<Matrix> {
    let have = za.a.order().min(za.z.order());
    let need = n.saturating_sub(1);
    if have < need {
        return Err(Error::InsufficientOrder { have, need });
    }
    // e^(zw) contributes z^j w^j / j!; Z contributes z^m; A w contributes z^m w.
    let coeff = |r: usize, c: usize| -> MultiPoly {
        let mut out = MultiPoly::zero();
        if r >= c {
            out += &za.z.coeff(r - c).scale(&factorial(c).recip());
        }
        if c >= 1 && r + 1 >= c {
            out += &za.a.coeff(r + 1 - c).scale(&factorial(c - 1).recip());
        }
        out.scale(&factorial(r))
    };
    Ok(Matrix::from_fn(n, n, coeff))
}

/// `n x n` production matrix as `L^-1 L-bar`, with `L` realized at
/// `n + 1` rows.
pub fn production_ladder(p: &RiordanPair, n: usize) -> Result<Matrix> {
    let l = p.realize(n + 1)?.to_matrix();
    let linv = l.block(n, n).unit_lower_inverse()?;
    let lbar = l.without_top_row().block(n, n);
    Ok(linv.mul(&lbar))
}

/// First entry, in row-major order, with `|r - c| >= 2` that is nonzero.
pub fn tridiagonal_witness(m: &Matrix) -> Option<(usize, usize)> {
    for r in 0..m.n_rows() {
        for c in 0..m.n_cols() {
            if r.abs_diff(c) >= 2 && !m.get(r, c).is_zero() {
                return Some((r, c));
            }
        }
    }
    None
}

pub fn is_tridiagonal(m: &Matrix) -> bool {
    tridiagonal_witness(m).is_none()
}

/// `alpha_n = P[n][n]`, `beta_n = P[n][n-1]`; the superdiagonal must be
/// identically 1.
pub fn extract_ttr(m: &Matrix) -> Result<TtrData> {
    if let Some((row, col)) = tridiagonal_witness(m) {
        return Err(Error::NotTridiagonal { row, col });
    }
    let n = m.n_rows().min(m.n_cols());
    for r in 0..n.saturating_sub(1) {
        let v = m.get(r, r + 1);
        if !v.is_one() {
            return Err(Error::NonMonicSuperdiagonal {
                row: r,
                col: r + 1,
                value: v.to_string(),
            });
        }
    }
    let alpha = (0..n).map(|i| m.get(i, i).clone()).collect();
    let beta = (1..n).map(|i| m.get(i, i - 1).clone()).collect();
    Ok(TtrData { alpha, beta })
}

/// Recurrence data of a moment array, computed through `Z` and `A`.
pub fn ttr_of(p: &RiordanPair, n: usize) -> Result<TtrData> {
    extract_ttr(&production_analytic(&compute_za(p)?, n)?)
}
