//! Hankel determinants `h_n = det(mu_{i+j})_{0 <= i, j <= n}`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactalg::{int, MultiPoly};
use crate::matrix::Matrix;
use crate::series::factorial;

/// A determinant together with the product formula it should equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelResult {
    pub n: usize,
    pub determinant: MultiPoly,
    pub closed_form: MultiPoly,
    pub matches: bool,
}

impl HankelResult {
    pub fn new(n: usize, determinant: MultiPoly, closed_form: MultiPoly) -> Self {
        let matches = (&determinant - &closed_form).is_zero();
        HankelResult {
            n,
            determinant,
            closed_form,
            matches,
        }
    }
}

/// The `(n+1) x (n+1)` Hankel matrix of `moments`.
pub fn hankel_matrix(moments: &[MultiPoly], n: usize) -> Result<Matrix> {
    if moments.len() < 2 * n + 1 {
        return Err(Error::InsufficientMoments {
            have: moments.len().saturating_sub(1),
            need: 2 * n,
        });
    }
    Ok(Matrix::from_fn(n + 1, n + 1, |i, j| moments[i + j].clone()))
}

/// Largest `n` evaluated by cofactor expansion; beyond it the
/// fraction-free elimination takes over.
const COFACTOR_MAX_N: usize = 5;

pub fn hankel_det(moments: &[MultiPoly], n: usize) -> Result<MultiPoly> {
    let m = hankel_matrix(moments, n)?;
    if n <= COFACTOR_MAX_N {
        Ok(det_cofactor(&m))
    } else {
        det_bareiss(&m)
    }
}

/// Laplace expansion along successive rows, memoized on the set of
/// remaining columns.
pub fn det_cofactor(m: &Matrix) -> MultiPoly {
    let n = m.n_rows();
    assert_eq!(n, m.n_cols(), "determinant of a non-square matrix");
    assert!(n < 32, "cofactor expansion limited to 31 rows");
    if n == 0 {
        return MultiPoly::one();
    }
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    minor(m, (1u32 << n) - 1, &mut memo)
}

fn minor(m: &Matrix, cols: u32, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
    let n = m.n_rows();
    let row = n - cols.count_ones() as usize;
    if row == n {
        return MultiPoly::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = MultiPoly::zero();
    let mut sign_positive = true;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let a = m.get(row, c);
        if !a.is_zero() {
            let sub = minor(m, cols & !(1 << c), memo);
            let t = a * &sub;
            if sign_positive {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Bareiss fraction-free elimination. Every division is exact, which
/// [`MultiPoly::exact_div`] checks.
pub fn det_bareiss(m: &Matrix) -> Result<MultiPoly> {
    let n = m.n_rows();
    assert_eq!(n, m.n_cols(), "determinant of a non-square matrix");
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut a: Vec<Vec<MultiPoly>> = m.rows().to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

fn binom2(n: usize) -> u32 {
    (n * (n + 1) / 2) as u32
}

/// `(kx)^C(n+1,2) * prod_{j=0}^n j! * prod_{i=1}^n (ik+1)^(n-i)`.
pub fn hankel_closed_keuler(n: usize) -> MultiPoly {
    let kx: MultiPoly = "k*x".parse().expect("literal");
    let superfactorial: MultiPoly = (0..=n).map(|j| MultiPoly::constant(factorial(j))).product();
    let rest: MultiPoly = (1..=n)
        .map(|i| (&MultiPoly::k().scale(&int(i as i64)) + &MultiPoly::one()).pow((n - i) as u32))
        .product();
    &(&kx.pow(binom2(n)) * &superfactorial) * &rest
}

/// `(kx)^C(n+1,2) * prod_{i=1}^n i (ik+1)^(n-i)`, read with the usual
/// precedence, so the leading factors multiply to `n!`.
///
/// Agrees with [`hankel_closed_keuler`] only for `n <= 2`; kept so the two
/// printed forms can be compared.
pub fn hankel_closed_keuler_alt(n: usize) -> MultiPoly {
    let kx: MultiPoly = "k*x".parse().expect("literal");
    let prod: MultiPoly = (1..=n)
        .map(|i| {
            let base = &MultiPoly::k().scale(&int(i as i64)) + &MultiPoly::one();
            &MultiPoly::int(i as i64) * &base.pow((n - i) as u32)
        })
        .product();
    &kx.pow(binom2(n)) * &prod
}

/// `x^C(n+1,2) y^n prod_{i=1}^n ((i+1)(i+y))^(n-i)`.
pub fn hankel_closed_sv(n: usize) -> MultiPoly {
    let lead = &MultiPoly::x().pow(binom2(n)) * &MultiPoly::y().pow(n as u32);
    let prod: MultiPoly = (1..=n)
        .map(|i| {
            let f = &MultiPoly::int(i as i64 + 1) * &(&MultiPoly::y() + &MultiPoly::int(i as i64));
            f.pow((n - i) as u32)
        })
        .product();
    &lead * &prod
}

/// `h_n = prod_{k=1}^n beta_k^(n+1-k)` for a J-fraction with `mu_0 = 1`.
/// `betas[0]` holds `beta_1`.
pub fn hankel_from_betas(betas: &[MultiPoly], n: usize) -> Result<MultiPoly> {
    if betas.len() < n {
        return Err(Error::InsufficientData(format!(
            "h_{n} needs beta_1 .. beta_{n}, have {}",
            betas.len()
        )));
    }
    Ok((1..=n)
        .map(|k| betas[k - 1].pow((n + 1 - k) as u32))
        .product())
}
