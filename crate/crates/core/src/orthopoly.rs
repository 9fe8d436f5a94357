//! Monic orthogonal polynomials, J-fractions and S-fractions.

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Var};
use crate::matrix::TriMatrix;
use crate::production::TtrData;
use crate::series::TruncSeries;

/// Polynomial in the orthogonality variable `t`; entry `j` is the
/// coefficient of `t^j`.
pub type UniPoly = Vec<MultiPoly>;

/// `P_0, ..., P_n` generated by a three-term recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoPolySeq {
    pub polys: Vec<UniPoly>,
    /// `beta_1, ..., beta_n`: the recurrence coefficients, including the
    /// one that fixes the norm of the last polynomial when it was supplied.
    pub beta: Vec<MultiPoly>,
}

/// Partial numerators `c_1, c_2, ...` of `1/(1 - c_1 z/(1 - c_2 z/(1 - ...)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SFraction {
    pub c: Vec<MultiPoly>,
}

impl SFraction {
    pub fn new(c: Vec<MultiPoly>) -> Self {
        SFraction { c }
    }
}

fn shift_mul_sub(p: &UniPoly, alpha: &MultiPoly, beta: &MultiPoly, prev: &UniPoly) -> UniPoly {
    // (t - alpha) p - beta prev
    let mut out = vec![MultiPoly::zero(); p.len() + 1];
    for (j, c) in p.iter().enumerate() {
        out[j + 1] += c;
        out[j] -= &(alpha * c);
    }
    for (j, c) in prev.iter().enumerate() {
        out[j] -= &(beta * c);
    }
    out
}

/// `P_0 = 1`, `P_1 = t - alpha_0`, `P_{m+1} = (t - alpha_m) P_m - beta_m P_{m-1}`.
pub fn ttr_polynomials(t: &TtrData, n: usize) -> Result<OrthoPolySeq> {
    if n > 0 && (t.alpha.len() < n || t.beta.len() < n - 1) {
        return Err(Error::InsufficientData(format!(
            "degree {n} needs {n} alphas and {} betas",
            n - 1
        )));
    }
    let mut polys: Vec<UniPoly> = vec![vec![MultiPoly::one()]];
    if n >= 1 {
        polys.push(vec![-&t.alpha[0], MultiPoly::one()]);
    }
    for m in 1..n {
        let next = shift_mul_sub(&polys[m], &t.alpha[m], &t.beta[m - 1], &polys[m - 1]);
        polys.push(next);
    }
    let beta = t.beta[..n.min(t.beta.len())].to_vec();
    Ok(OrthoPolySeq { polys, beta })
}

/// `mu_0, ..., mu_n` from the J-fraction
/// `1/(1 - alpha_0 z - beta_1 z^2/(1 - alpha_1 z - ...))`.
///
/// `mu_m` only sees `alpha_h` for `2h + 1 <= m` and `beta_h` for `2h <= m`,
/// so `(n + 1)/2` alphas and `n/2` betas suffice.
pub fn jfraction_moments(t: &TtrData, n: usize) -> Result<Vec<MultiPoly>> {
    let need_alpha = n.div_ceil(2);
    let need_beta = n / 2;
    if t.alpha.len() < need_alpha || t.beta.len() < need_beta {
        return Err(Error::InsufficientData(format!(
            "order {n} needs {need_alpha} alphas and {need_beta} betas"
        )));
    }
    let alpha = |h: usize| {
        if h < need_alpha {
            t.alpha[h].clone()
        } else {
            MultiPoly::zero()
        }
    };
    let beta = |h: usize| {
        if h >= 1 && h <= need_beta {
            t.beta[h - 1].clone()
        } else {
            MultiPoly::zero()
        }
    };
    // evaluate bottom-up: J_h = 1/(1 - alpha_h z - beta_{h+1} z^2 J_{h+1})
    let mut tail = TruncSeries::one(n);
    for h in (0..=need_beta).rev() {
        let mut den = TruncSeries::polynomial(&[MultiPoly::one(), -alpha(h)], n);
        let b = beta(h + 1);
        if !b.is_zero() {
            let z2 = TruncSeries::polynomial(&[MultiPoly::zero(), MultiPoly::zero(), -b], n);
            den = den.add(&z2.mul(&tail));
        }
        tail = den.inverse()?;
    }
    Ok(tail.coeffs().to_vec())
}

/// `mu_0, ..., mu_n` of an S-fraction; needs `c_1 .. c_n`.
pub fn sfraction_moments(s: &SFraction, n: usize) -> Result<Vec<MultiPoly>> {
    if s.c.len() < n {
        return Err(Error::InsufficientData(format!(
            "order {n} needs {n} partial numerators, have {}",
            s.c.len()
        )));
    }
    let mut tail = TruncSeries::one(n);
    for i in (0..n).rev() {
        let cz = TruncSeries::polynomial(&[MultiPoly::zero(), -&s.c[i]], n);
        tail = TruncSeries::one(n).add(&cz.mul(&tail)).inverse()?;
    }
    Ok(tail.coeffs().to_vec())
}

/// Even contraction: `alpha_0 = c_1`, `beta_n = c_{2n-1} c_{2n}`,
/// `alpha_n = c_{2n} + c_{2n+1}`.
pub fn contract_sfraction(s: &SFraction) -> Result<TtrData> {
    let c = &s.c;
    if c.is_empty() {
        return Err(Error::InsufficientData("empty S-fraction".into()));
    }
    let n_alpha = c.len().div_ceil(2);
    let n_beta = c.len() / 2;
    let mut alpha = vec![c[0].clone()];
    for n in 1..n_alpha {
        alpha.push(&c[2 * n - 1] + &c[2 * n]);
    }
    let beta = (1..=n_beta)
        .map(|n| &c[2 * n - 2] * &c[2 * n - 1])
        .collect();
    Ok(TtrData::new(alpha, beta))
}

/// Deleham's construction `[r_1, r_2, ...] DELTA [s_1, s_2, ...]`.
///
/// Row `m` of the triangle lists the coefficients in `t` of `mu_m` for the
/// S-fraction with partial numerators `r_i + s_i t`. The marker `t` is
/// carried by the indeterminate `x`, so `r` and `s` must be free of `x`.
/// Returns rows `0..=n`.
pub fn deleham_delta(r: &[MultiPoly], s: &[MultiPoly], n: usize) -> Result<TriMatrix> {
    if r.len() < n || s.len() < n {
        return Err(Error::InsufficientData(format!(
            "{n} rows need {n} entries in both lists"
        )));
    }
    if r.iter().chain(s).any(|p| p.contains(Var::X)) {
        return Err(Error::InsufficientData(
            "Deleham lists must not contain x, which marks the column".into(),
        ));
    }
    let c = (0..n).map(|i| &r[i] + &(&s[i] * &MultiPoly::x())).collect();
    let moments = sfraction_moments(&SFraction::new(c), n)?;
    Ok(TriMatrix::from_fn(n + 1, |row, col| {
        moments[row].coeff_of(Var::X, col as u32)
    }))
}

/// Row polynomials `sum_j T(m, j) t^j` of a triangle, with `t = x`.
pub fn row_polynomials(t: &TriMatrix) -> Vec<MultiPoly> {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, c)| c * &MultiPoly::x().pow(j as u32))
                .sum()
        })
        .collect()
}

/// First failure of an orthogonality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoWitness {
    pub n: usize,
    pub m: usize,
    pub value: MultiPoly,
}

/// `L(P_n t^m)` where `L(t^j) = mu_j`.
pub fn functional(p: &UniPoly, m: usize, moments: &[MultiPoly]) -> MultiPoly {
    p.iter().enumerate().map(|(j, c)| c * &moments[j + m]).sum()
}

/// Checks `L(P_n t^m) = 0` for `m < n` and `L(P_n t^n) = beta_1 ... beta_n`
/// for every `P_n` in `polys`. The witness reports the first failing pair.
pub fn orthogonality_check(
    polys: &OrthoPolySeq,
    moments: &[MultiPoly],
) -> Result<std::result::Result<(), OrthoWitness>> {
    let top = polys.polys.len().saturating_sub(1);
    if moments.len() < 2 * top + 1 {
        return Err(Error::InsufficientMoments {
            have: moments.len().saturating_sub(1),
            need: 2 * top,
        });
    }
    if polys.beta.len() < top {
        return Err(Error::InsufficientData(format!(
            "norm of P_{top} needs beta_{top}"
        )));
    }
    let mut norm = MultiPoly::one();
    for (n, p) in polys.polys.iter().enumerate() {
        if n >= 1 {
            norm = &norm * &polys.beta[n - 1];
        }
        for m in 0..=n {
            let v = functional(p, m, moments);
            let ok = if m < n { v.is_zero() } else { v == norm };
            if !ok {
                return Ok(Err(OrthoWitness { n, m, value: v }));
            }
        }
    }
    Ok(Ok(()))
}

/// The S-fraction coefficients of the 1/k-Eulerian moments:
/// `1, kx, k + 1, 2kx, 2k + 1, 3kx, ...`.
pub fn keuler_sfraction(len: usize) -> SFraction {
    let k = MultiPoly::k();
    let kx = &k * &MultiPoly::x();
    SFraction::new(
        (0..len)
            .map(|i| {
                let j = (i / 2) as i64;
                if i % 2 == 0 {
                    &k * &MultiPoly::int(j) + MultiPoly::one()
                } else {
                    kx.scale(&crate::exactalg::int(j + 1))
                }
            })
            .collect(),
    )
}

/// The S-fraction coefficients of `F_n(x, y)`: `y, x, y + 1, 2x, y + 2, 3x, ...`.
pub fn sv_sfraction(len: usize) -> SFraction {
    SFraction::new(
        (0..len)
            .map(|i| {
                let j = (i / 2) as i64;
                if i % 2 == 0 {
                    MultiPoly::y() + MultiPoly::int(j)
                } else {
                    MultiPoly::x().scale(&crate::exactalg::int(j + 1))
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn ps(list: &[&str]) -> Vec<MultiPoly> {
        list.iter().map(|s| p(s)).collect()
    }

    fn sv_ttr(n: usize) -> TtrData {
        TtrData::new(
            (0..n).map(|i| p(&format!("y + {i}*(1 + x)"))).collect(),
            (1..n).map(|i| p(&format!("{i}*x*(y + {i} - 1)"))).collect(),
        )
    }

    #[test]
    fn recurrence_polynomials() {
        let seq = ttr_polynomials(&sv_ttr(4), 3).unwrap();
        assert_eq!(seq.polys[1], ps(&["-y", "1"]));
        // Q_2 = (t - (y + 1 + x))(t - y) - xy
        assert_eq!(
            seq.polys[2],
            ps(&["y*(y + 1 + x) - x*y", "-(2y + 1 + x)", "1"])
        );
        let cheb = TtrData::new(vec![MultiPoly::zero(); 3], vec![MultiPoly::one(); 2]);
        assert_eq!(
            ttr_polynomials(&cheb, 2).unwrap().polys[2],
            ps(&["-1", "0", "1"])
        );
        assert!(ttr_polynomials(&cheb, 5).is_err());
    }

    #[test]
    fn jfraction_examples() {
        let mu = jfraction_moments(&sv_ttr(4), 3).unwrap();
        assert_eq!(mu[2], p("y*(x + y)"));
        let t = TtrData::new(
            vec![MultiPoly::zero(); 4],
            vec![MultiPoly::one(), MultiPoly::zero(), MultiPoly::zero()],
        );
        assert_eq!(
            jfraction_moments(&t, 5).unwrap(),
            ps(&["1", "0", "1", "0", "1", "0"])
        );
        assert!(jfraction_moments(&TtrData::new(vec![], vec![]), 2).is_err());
        assert_eq!(
            jfraction_moments(&TtrData::new(vec![], vec![]), 0).unwrap(),
            ps(&["1"])
        );
    }

    #[test]
    fn sfraction_examples() {
        let mu = sfraction_moments(&sv_sfraction(4), 2).unwrap();
        assert_eq!(mu, ps(&["1", "y", "y(y + x)"]));
        let mu = sfraction_moments(&keuler_sfraction(4), 2).unwrap();
        assert_eq!(mu[2], p("k*x + 1"));
        let cat = SFraction::new(vec![MultiPoly::one(); 4]);
        assert_eq!(
            sfraction_moments(&cat, 4).unwrap(),
            ps(&["1", "1", "2", "5", "14"])
        );
        assert!(sfraction_moments(&cat, 5).is_err());
    }

    #[test]
    fn contraction() {
        let t = contract_sfraction(&sv_sfraction(5)).unwrap();
        assert_eq!(t.alpha[0], p("y"));
        assert_eq!(t.beta[0], p("x*y"));
        assert_eq!(t.alpha[1], p("x + y + 1"));
        let t = contract_sfraction(&keuler_sfraction(5)).unwrap();
        assert_eq!(t.beta[0], p("k*x"));
        assert_eq!(t.alpha[1], p("k*x + k + 1"));
        let t = contract_sfraction(&SFraction::new(vec![MultiPoly::one(); 7])).unwrap();
        assert_eq!(t.alpha, ps(&["1", "2", "2", "2"]));
        assert_eq!(t.beta, ps(&["1", "1", "1"]));
    }

    #[test]
    fn deleham_a079641() {
        let r = ps(&["0", "2", "1", "4", "2", "6", "3", "8"]);
        let s = ps(&["1", "0", "1", "0", "1", "0", "1", "0"]);
        let t = deleham_delta(&r, &s, 6).unwrap();
        assert_eq!(t.rows()[4], ps(&["0", "26", "36", "12", "1"]));
        assert_eq!(
            t.rows()[6],
            ps(&["0", "1082", "2040", "1230", "300", "30", "1"])
        );
        assert!(deleham_delta(&ps(&["x"]), &ps(&["1"]), 1).is_err());
    }

    #[test]
    fn orthogonality_negative_control() {
        let seq = ttr_polynomials(&sv_ttr(5), 4).unwrap();
        let mu = jfraction_moments(&sv_ttr(5), 8).unwrap();
        assert_eq!(orthogonality_check(&seq, &mu).unwrap(), Ok(()));
        let wrong = sfraction_moments(&keuler_sfraction(8), 8).unwrap();
        let w = orthogonality_check(&seq, &wrong).unwrap().unwrap_err();
        assert_eq!((w.n, w.m), (1, 0));
        assert!(orthogonality_check(&seq, &mu[..5]).is_err());
    }
}
