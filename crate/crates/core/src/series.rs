//! Truncated power series in `z` with [`MultiPoly`] coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{int, MultiPoly, Rational, Var};

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)))
}

/// Coefficient convention of a generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfKind {
    /// `sum a_n z^n / n!`
    Egf,
    /// `sum a_n z^n`
    Ogf,
}

impl GfKind {
    /// The `n`-th sequence term encoded by `s`.
    pub fn extract(self, s: &TruncSeries, n: usize) -> MultiPoly {
        match self {
            GfKind::Ogf => s.coeff(n).clone(),
            GfKind::Egf => s.coeff(n).scale(&factorial(n)),
        }
    }

    /// All sequence terms `0..=order`.
    pub fn sequence(self, s: &TruncSeries) -> Vec<MultiPoly> {
        (0..=s.order()).map(|n| self.extract(s, n)).collect()
    }

    /// Builds the generating function of `terms`.
    pub fn encode(self, terms: &[MultiPoly]) -> TruncSeries {
        assert!(!terms.is_empty(), "empty sequence");
        let coeffs = terms
            .iter()
            .enumerate()
            .map(|(n, t)| match self {
                GfKind::Ogf => t.clone(),
                GfKind::Egf => t.scale(&factorial(n).recip()),
            })
            .collect();
        TruncSeries::new(coeffs)
    }
}

/// Power series known through `z^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncSeries {
    /// Series whose order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<MultiPoly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        TruncSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> MultiPoly) -> Self {
        TruncSeries::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries::from_fn(order, |_| MultiPoly::zero())
    }

    pub fn constant(c: MultiPoly, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(MultiPoly::one(), order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        TruncSeries::polynomial(&[MultiPoly::zero(), MultiPoly::one()], order)
    }

    /// A polynomial in `z`, padded or cut to `order`.
    pub fn polynomial(coeffs: &[MultiPoly], order: usize) -> Self {
        TruncSeries::from_fn(order, |n| coeffs.get(n).cloned().unwrap_or_default())
    }

    /// `exp(c z)`.
    pub fn exp_linear(c: &MultiPoly, order: usize) -> Self {
        let mut power = MultiPoly::one();
        TruncSeries::from_fn(order, |n| {
            let out = power.scale(&factorial(n).recip());
            power = &power * c;
            out
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries::new(self.coeffs[..=order].to_vec())
    }

    pub fn map(&self, f: impl FnMut(&MultiPoly) -> MultiPoly) -> Self {
        TruncSeries::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        self.map(|a| a * c)
    }

    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        self.map(|a| a.substitute(v, value))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncSeries::from_fn(n, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncSeries::from_fn(n, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncSeries::from_fn(n, |i| {
            (0..=i)
                .filter(|&j| !self.coeffs[j].is_zero() && !other.coeffs[i - j].is_zero())
                .map(|j| &self.coeffs[j] * &other.coeffs[i - j])
                .sum()
        })
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = match self.coeffs[0].as_constant() {
            Some(c) if !c.is_zero() => c.recip(),
            _ => return Err(Error::NonUnitConstantTerm),
        };
        let mut out: Vec<MultiPoly> = Vec::with_capacity(self.coeffs.len());
        out.push(MultiPoly::constant(c0.clone()));
        for n in 1..=self.order() {
            let s: MultiPoly = (1..=n).map(|j| &self.coeffs[j] * &out[n - j]).sum();
            out.push(s.scale(&-c0.clone()));
        }
        Ok(TruncSeries::new(out))
    }

    /// `self / other`, with `other` having a nonzero rational constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Coefficientwise exact division by a polynomial.
    pub fn exact_div_poly(&self, d: &MultiPoly) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.exact_div(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncSeries::new(coeffs))
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = TruncSeries::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Compositional inverse of `f = z + f_2 z^2 + ...`.
    ///
    /// Solves `f(g(z)) = z` one coefficient at a time: with `g` correct
    /// through `z^(n-1)`, the `z^n` coefficient of `f(g)` is `g_n` plus
    /// terms already fixed, so `g_n` is its negated residue.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() < 1 || !self.coeffs[1].is_one() {
            return Err(Error::BadLowOrderTerms);
        }
        let n = self.order();
        let mut g = TruncSeries::z(n);
        for i in 2..=n {
            let residue = self.compose(&g)?.coeffs[i].clone();
            g.coeffs[i] = -residue;
        }
        Ok(g)
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return TruncSeries::zero(0);
        }
        TruncSeries::from_fn(self.order() - 1, |n| {
            self.coeffs[n + 1].scale(&int(n as i64 + 1))
        })
    }

    /// Antiderivative with zero constant term; order rises by one.
    pub fn integral(&self) -> Self {
        TruncSeries::from_fn(self.order() + 1, |n| {
            if n == 0 {
                MultiPoly::zero()
            } else {
                self.coeffs[n - 1].scale(&Rational::new(1.into(), (n as i64).into()))
            }
        })
    }

    /// `ln(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        if self.order() == 0 {
            return Ok(TruncSeries::zero(0));
        }
        Ok(self.derivative().mul(&self.inverse()?).integral())
    }

    /// `exp(self)` for a series with zero constant term.
    ///
    /// Uses `n e_n = sum_{j=1}^n j s_j e_{n-j}`, which follows from `e' = s' e`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out: Vec<MultiPoly> = vec![MultiPoly::one()];
        for n in 1..=self.order() {
            let s: MultiPoly = (1..=n)
                .filter(|&j| !self.coeffs[j].is_zero())
                .map(|j| (&self.coeffs[j] * &out[n - j]).scale(&int(j as i64)))
                .sum();
            out.push(s.scale(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(TruncSeries::new(out))
    }

    /// `self^e = exp(e * ln(self))` for a symbolic exponent `e`.
    pub fn pow_sym(&self, e: &MultiPoly) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// `self^(1/k)`, staying inside the polynomial ring.
    ///
    /// Each coefficient of `ln(self)` must be exactly divisible by `k`,
    /// which holds whenever `self` is a series in `k z`.
    pub fn pow_recip_k(&self) -> Result<Self> {
        self.log()?.exact_div_poly(&MultiPoly::k())?.exp()
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[{self}]")
    }
}
