//! Exponential Riordan arrays `[g, f]`.
//!
//! Column `c` of `[g, f]` has exponential generating function
//! `g(z) f(z)^c / c!`. Arrays are stored as their `(g, f)` pair; matrices
//! are produced on demand by [`RiordanPair::realize`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Var};
use crate::matrix::TriMatrix;
use crate::series::{factorial, GfKind, TruncSeries};

/// Number of rows realized when no size is given.
pub const DEFAULT_SIZE: usize = 8;

#[derive(Clone, PartialEq, Eq)]
pub struct RiordanPair {
    g: TruncSeries,
    f: TruncSeries,
    label: String,
}

impl RiordanPair {
    /// Checks `g(0) = 1`, `f(0) = 0` and `f'(0) = 1`.
    pub fn new(g: TruncSeries, f: TruncSeries, label: impl Into<String>) -> Result<Self> {
        if !g.coeff(0).is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        if !f.coeff(0).is_zero() || f.order() < 1 || !f.coeff(1).is_one() {
            return Err(Error::BadLowOrderTerms);
        }
        Ok(RiordanPair {
            g,
            f,
            label: label.into(),
        })
    }

    pub fn g(&self) -> &TruncSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncSeries {
        &self.f
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `[1, z]`.
    pub fn identity(order: usize) -> Self {
        RiordanPair {
            g: TruncSeries::one(order),
            f: TruncSeries::z(order),
            label: "identity".into(),
        }
    }

    /// Pascal's triangle `[e^z, z]`.
    pub fn binomial(order: usize) -> Self {
        RiordanPair {
            g: TruncSeries::exp_linear(&MultiPoly::one(), order),
            f: TruncSeries::z(order),
            label: "binomial".into(),
        }
    }

    /// `[1, (e^(a z) - 1)/a]`: entry `(n, c)` is `S(n, c) a^(n - c)`.
    pub fn stirling2_generalized(a: &MultiPoly, order: usize) -> Result<Self> {
        let mut e = TruncSeries::exp_linear(a, order);
        e = e.sub(&TruncSeries::one(order));
        let f = e.exact_div_poly(a)?;
        RiordanPair::new(
            TruncSeries::one(order),
            f,
            format!("[1, (e^(({a})z) - 1)/({a})]"),
        )
    }

    /// Unsigned Stirling numbers of the first kind, `[1, ln(1/(1 - z))]`.
    pub fn stirling1_unsigned(order: usize) -> Self {
        let one_minus_z = TruncSeries::polynomial(&[MultiPoly::one(), MultiPoly::int(-1)], order);
        let f = one_minus_z.log().expect("unit constant term").neg();
        RiordanPair {
            g: TruncSeries::one(order),
            f,
            label: "[1, ln(1/(1 - z))]".into(),
        }
    }

    /// Entry `(r, c) = r! [z^r] g f^c / c!` for `0 <= c <= r < n_rows`.
    pub fn realize(&self, n_rows: usize) -> Result<TriMatrix> {
        let need = n_rows.saturating_sub(1);
        if self.order() < need {
            return Err(Error::InsufficientOrder {
                have: self.order(),
                need,
            });
        }
        let g = self.g.truncate(need);
        let f = self.f.truncate(need);
        let mut columns: Vec<TruncSeries> = Vec::with_capacity(n_rows);
        let mut col = g;
        for c in 0..n_rows {
            if c > 0 {
                col = col.mul(&f);
            }
            columns.push(col.clone());
        }
        Ok(TriMatrix::from_fn(n_rows, |r, c| {
            columns[c].coeff(r).scale(&(factorial(r) / factorial(c)))
        }))
    }

    /// Group law `[g, f] [h, l] = [g (h o f), l o f]`.
    pub fn multiply(&self, other: &RiordanPair) -> Result<RiordanPair> {
        let g = self.g.mul(&other.g.compose(&self.f)?);
        let f = other.f.compose(&self.f)?;
        RiordanPair::new(g, f, format!("{} * {}", self.label, other.label))
    }

    /// `[g, f]^-1 = [1/(g o fbar), fbar]`.
    pub fn inverse(&self) -> Result<RiordanPair> {
        let fbar = self.f.reversion()?;
        let g = self.g.compose(&fbar)?.inverse()?;
        RiordanPair::new(g, fbar, format!("({})^-1", self.label))
    }

    /// Matrix-vector product of the realized array with `u`.
    pub fn apply_sequence(&self, u: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        Ok(self.realize(u.len())?.to_matrix().mul_vec(u))
    }

    /// The same product through generating functions: `g(z) U(f(z))`.
    pub fn apply_sequence_egf(&self, u: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        let n = u.len().saturating_sub(1).min(self.order());
        let ugf = GfKind::Egf.encode(&u[..=n]);
        let out = self.g.truncate(n).mul(&ugf.compose(&self.f.truncate(n))?);
        Ok(GfKind::Egf.sequence(&out))
    }

    /// First `n + 1` entries of column 0, the moments when the production
    /// matrix is tridiagonal.
    pub fn moment_column(&self, n: usize) -> Result<Vec<MultiPoly>> {
        Ok(self.realize(n + 1)?.column(0))
    }

    pub fn substitute(&self, v: Var, value: &MultiPoly) -> RiordanPair {
        RiordanPair {
            g: self.g.substitute(v, value),
            f: self.f.substitute(v, value),
            label: format!("{} at {v} = {value}", self.label),
        }
    }
}

impl fmt::Debug for RiordanPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RiordanPair")
            .field("label", &self.label)
            .field("g", &self.g)
            .field("f", &self.f)
            .finish()
    }
}

/// The named arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `[(1+kz)^(-1/k), ln((1+kz)/(1+kxz)) / (k(1-x))]`
    KeulerCoeff,
    /// `[((1-x)/(e^(kz(x-1)) - x))^(1/k), (e^(kz) - e^(kxz))/(k(e^(kxz) - x e^(kz)))]`
    KeulerMoment,
    /// `[(1+z)^(-y), ln((1+z)/(1+xz)) / (1-x)]`
    SvCoeff,
    /// `[((1-x)/(e^(z(x-1)) - x))^y, (e^z - e^(xz))/(e^(xz) - x e^z)]`
    SvMoment,
    KeulerShiftedCoeff,
    KeulerShiftedMoment,
    SvShiftedCoeff,
    SvShiftedMoment,
    /// `[1, z - ln((e^(xz) - x e^z)/(1-x))]`
    StirlingBridge,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::KeulerCoeff,
        Family::KeulerMoment,
        Family::SvCoeff,
        Family::SvMoment,
        Family::KeulerShiftedCoeff,
        Family::KeulerShiftedMoment,
        Family::SvShiftedCoeff,
        Family::SvShiftedMoment,
        Family::StirlingBridge,
    ];

    /// The four moment arrays.
    pub const MOMENTS: [Family; 4] = [
        Family::KeulerMoment,
        Family::SvMoment,
        Family::KeulerShiftedMoment,
        Family::SvShiftedMoment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::KeulerCoeff => "KEULER_COEFF",
            Family::KeulerMoment => "KEULER_MOMENT",
            Family::SvCoeff => "SV_COEFF",
            Family::SvMoment => "SV_MOMENT",
            Family::KeulerShiftedCoeff => "KEULER_SHIFTED_COEFF",
            Family::KeulerShiftedMoment => "KEULER_SHIFTED_MOMENT",
            Family::SvShiftedCoeff => "SV_SHIFTED_COEFF",
            Family::SvShiftedMoment => "SV_SHIFTED_MOMENT",
            Family::StirlingBridge => "STIRLING_BRIDGE",
        }
    }

    /// Coefficient array paired with a moment array, and vice versa.
    pub fn partner(self) -> Option<Family> {
        Some(match self {
            Family::KeulerCoeff => Family::KeulerMoment,
            Family::KeulerMoment => Family::KeulerCoeff,
            Family::SvCoeff => Family::SvMoment,
            Family::SvMoment => Family::SvCoeff,
            Family::KeulerShiftedCoeff => Family::KeulerShiftedMoment,
            Family::KeulerShiftedMoment => Family::KeulerShiftedCoeff,
            Family::SvShiftedCoeff => Family::SvShiftedMoment,
            Family::SvShiftedMoment => Family::SvShiftedCoeff,
            Family::StirlingBridge => return None,
        })
    }

    pub fn is_moment(self) -> bool {
        Family::MOMENTS.contains(&self)
    }

    pub fn build(self, order: usize) -> Result<RiordanPair> {
        family(self, order)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the upper-case names as well as lower-case, dash-separated
    /// spellings (`sv-shifted-moment`). `keuler` and `sv` alone pick the
    /// moment arrays; `bridge` picks the Stirling bridge.
    fn from_str(s: &str) -> Result<Family> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        let fam = match norm.as_str() {
            "KEULER" => Family::KeulerMoment,
            "SV" => Family::SvMoment,
            "KEULER_SHIFTED" => Family::KeulerShiftedMoment,
            "SV_SHIFTED" => Family::SvShiftedMoment,
            "BRIDGE" => Family::StirlingBridge,
            other => match Family::ALL.iter().find(|f| f.name() == other) {
                Some(f) => *f,
                None => return Err(Error::UnknownFamily(s.to_string())),
            },
        };
        Ok(fam)
    }
}

fn poly(s: &str) -> MultiPoly {
    s.parse().expect("built-in polynomial literal")
}

fn linear(c0: &str, c1: &str, order: usize) -> TruncSeries {
    TruncSeries::polynomial(&[poly(c0), poly(c1)], order)
}

/// `(e^(c (x-1) z) - x)/(1 - x)`, the reciprocal of the base of the moment
/// generating functions (`c = 1` or `c = k`).
fn moment_denominator(c: &MultiPoly, order: usize) -> Result<TruncSeries> {
    let rate = c * &poly("x - 1");
    let num =
        TruncSeries::exp_linear(&rate, order).sub(&TruncSeries::constant(MultiPoly::x(), order));
    num.exact_div_poly(&poly("1 - x"))
}

/// `(e^(cz) - e^(cxz)) / (c (e^(cxz) - x e^(cz)))`.
fn moment_f(c: &MultiPoly, order: usize) -> Result<TruncSeries> {
    let ec = TruncSeries::exp_linear(c, order);
    let ecx = TruncSeries::exp_linear(&(c * &MultiPoly::x()), order);
    let one_minus_x = poly("1 - x");
    let num = ec.sub(&ecx).exact_div_poly(&(c * &one_minus_x))?;
    let den = ecx
        .sub(&ec.scale(&MultiPoly::x()))
        .exact_div_poly(&one_minus_x)?;
    num.div(&den)
}

/// `ln((1 + cz)/(1 + cxz)) / (c (1 - x))`.
fn coeff_f(c: &MultiPoly, order: usize) -> Result<TruncSeries> {
    let a = TruncSeries::polynomial(&[MultiPoly::one(), c.clone()], order);
    let b = TruncSeries::polynomial(&[MultiPoly::one(), c * &MultiPoly::x()], order);
    a.div(&b)?.log()?.exact_div_poly(&(c * &poly("1 - x")))
}

/// Builds a named array with symbolic `x`, `y`, `k`, truncated at `order`.
pub fn family(name: Family, order: usize) -> Result<RiordanPair> {
    let k = MultiPoly::k();
    let one = MultiPoly::one();
    let (g, f) = match name {
        Family::KeulerCoeff => {
            let g = linear("1", "k", order).inverse()?.pow_recip_k()?;
            (g, coeff_f(&k, order)?)
        }
        Family::KeulerMoment => {
            let g = moment_denominator(&k, order)?.inverse()?.pow_recip_k()?;
            (g, moment_f(&k, order)?)
        }
        Family::SvCoeff => {
            let g = linear("1", "1", order).pow_sym(&poly("-y"))?;
            (g, coeff_f(&one, order)?)
        }
        Family::SvMoment => {
            let g = moment_denominator(&one, order)?
                .inverse()?
                .pow_sym(&MultiPoly::y())?;
            (g, moment_f(&one, order)?)
        }
        Family::KeulerShiftedCoeff => {
            let base = family(Family::KeulerCoeff, order)?;
            let g = base.g.div(&linear("1", "k*x", order))?;
            (g, base.f)
        }
        Family::KeulerShiftedMoment => {
            let base = family(Family::KeulerMoment, order)?;
            let d = moment_denominator(&k, order)?;
            let e = TruncSeries::exp_linear(&poly("k*(x - 1)"), order);
            (e.mul(&base.g).div(&d)?, base.f)
        }
        Family::SvShiftedCoeff => {
            let base = family(Family::SvCoeff, order)?;
            let g = base.g.div(&linear("1", "x", order))?;
            (g, base.f)
        }
        Family::SvShiftedMoment => {
            let base = family(Family::SvMoment, order)?;
            let d = moment_denominator(&one, order)?;
            // e^((x-1)z) D^-(y+1), i.e. (1/y) d/dz of the SV moment g
            let e = TruncSeries::exp_linear(&poly("x - 1"), order);
            (e.mul(&base.g).div(&d)?, base.f)
        }
        Family::StirlingBridge => {
            let ex = TruncSeries::exp_linear(&MultiPoly::x(), order);
            let e1 = TruncSeries::exp_linear(&one, order);
            let inner = ex
                .sub(&e1.scale(&MultiPoly::x()))
                .exact_div_poly(&poly("1 - x"))?;
            let f = TruncSeries::z(order).sub(&inner.log()?);
            (TruncSeries::one(order), f)
        }
    };
    RiordanPair::new(g, f, name.name())
}
