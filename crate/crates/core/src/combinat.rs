//! Combinatorial oracles: permutation statistics and Stirling numbers.
//!
//! These are computed without series or Riordan machinery (apart from the
//! generalized Stirling triangle, which is realized from its array on
//! purpose), so they serve as independent checks of the algebraic side.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{int, Monomial, MultiPoly, Rational, Var};
use crate::matrix::TriMatrix;
use crate::riordan::{family, Family, RiordanPair};
use crate::series::{factorial, GfKind};

/// Largest `n` for which `S_n` is enumerated.
pub const ENUMERATION_BOUND: usize = 8;

/// Joint distribution of excedances and cycles over `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermStats {
    pub n: usize,
    /// `(exc, cyc) -> number of permutations`
    pub histogram: BTreeMap<(u32, u32), u64>,
}

impl PermStats {
    pub fn total(&self) -> u64 {
        self.histogram.values().sum()
    }

    /// `sum_pi x^exc(pi) y^cyc(pi)`.
    pub fn polynomial(&self) -> MultiPoly {
        self.histogram
            .iter()
            .map(|(&(e, c), &count)| {
                MultiPoly::term(Rational::from_integer(count.into()), Monomial([e, c, 0]))
            })
            .sum()
    }
}

fn excedances(perm: &[usize]) -> u32 {
    perm.iter().enumerate().filter(|&(i, &p)| p > i).count() as u32
}

fn cycles(perm: &[usize]) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    count
}

/// Advances to the next permutation in lexicographic order.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Enumerates all of `S_n` in one-line notation.
pub fn perm_stats(n: usize) -> Result<PermStats> {
    if n > ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            n,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut histogram = BTreeMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        *histogram
            .entry((excedances(&perm), cycles(&perm)))
            .or_insert(0) += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(PermStats { n, histogram })
}

/// `F_n(x, y)` by brute force over `S_n`.
pub fn sv_oracle(n: usize) -> Result<MultiPoly> {
    Ok(perm_stats(n)?.polynomial())
}

/// Unsigned first-kind triangle `|s(n, k)|` by its recurrence.
pub fn stirling1_unsigned(n: usize) -> Vec<Vec<u128>> {
    let mut t = vec![vec![0u128; n + 1]; n + 1];
    t[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1] + (i as u128 - 1) * t[i - 1][j];
        }
    }
    t
}

/// Second-kind triangle `S(n, k)` by `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize) -> Vec<Vec<u128>> {
    let mut t = vec![vec![0u128; n + 1]; n + 1];
    t[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            t[i][j] = j as u128 * t[i - 1][j] + t[i - 1][j - 1];
        }
    }
    t
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTables {
    pub s1_unsigned: Vec<Vec<u128>>,
    /// `S(n, k) (x - 1)^(n - k)`, realized from `[1, (e^((x-1)z) - 1)/(x - 1)]`.
    pub s2_generalized: TriMatrix,
}

/// Tables for rows `0..=n`.
pub fn stirling_triangles(n: usize) -> Result<StirlingTables> {
    let a: MultiPoly = "x - 1".parse().expect("literal");
    let s2 = RiordanPair::stirling2_generalized(&a, n.max(1))?.realize(n + 1)?;
    Ok(StirlingTables {
        s1_unsigned: stirling1_unsigned(n),
        s2_generalized: s2,
    })
}

fn from_u128(v: u128) -> MultiPoly {
    MultiPoly::constant(Rational::from_integer(v.into()))
}

/// `F_n(x, y) = sum_k sum_j S(n, j) (x - 1)^(n - j) |s(j, k)| y^k`.
pub fn sv_from_stirling(n: usize) -> Result<MultiPoly> {
    let t = stirling_triangles(n)?;
    let mut out = MultiPoly::zero();
    for k in 0..=n {
        let mut c = MultiPoly::zero();
        for j in 0..=n {
            let s1 = t.s1_unsigned[j][k];
            if s1 != 0 {
                c += &(&t.s2_generalized.get(n, j) * &from_u128(s1));
            }
        }
        out += &(&c * &MultiPoly::y().pow(k as u32));
    }
    Ok(out)
}

/// `A_n^(k)(x) = sum_m sum_j S(n, j) (x - 1)^(n - j) |s(j, m)| k^(n - m)`.
pub fn keuler_from_stirling(n: usize) -> Result<MultiPoly> {
    let t = stirling_triangles(n)?;
    let mut out = MultiPoly::zero();
    for m in 0..=n {
        let mut c = MultiPoly::zero();
        for j in 0..=n {
            let s1 = t.s1_unsigned[j][m];
            if s1 != 0 {
                c += &(&t.s2_generalized.get(n, j) * &from_u128(s1));
            }
        }
        out += &(&c * &MultiPoly::k().pow((n - m) as u32));
    }
    Ok(out)
}

/// `y (y + 1) ... (y + n - 1)`.
pub fn rising_factorial_y(n: usize) -> MultiPoly {
    (0..n)
        .map(|i| &MultiPoly::y() + &MultiPoly::int(i as i64))
        .product()
}

/// Fubini numbers `sum_j S(n, j) j!`, counted as surjections.
pub fn fubini(n: usize) -> Vec<Rational> {
    let s2 = stirling2(n);
    (0..=n)
        .map(|m| {
            (0..=m)
                .map(|j| Rational::from_integer(s2[m][j].into()) * factorial(j))
                .sum()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationCheck {
    pub name: &'static str,
    pub witness: Option<String>,
}

impl SpecializationCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn eval_sv(f: &[MultiPoly], x: i64, y: i64) -> Vec<Rational> {
    f.iter()
        .map(|p| p.eval(&int(x), &int(y), &int(0)))
        .collect()
}

/// Checks the named specializations of `F_n(x, y)`, taking `F_n` from the
/// moment column of the SV moment array, for `n <= n_max`.
pub fn specialization_checks(n_max: usize) -> Result<Vec<SpecializationCheck>> {
    if n_max > ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            n: n_max,
            bound: ENUMERATION_BOUND,
        });
    }
    let f = family(Family::SvMoment, n_max.max(1))?.moment_column(n_max)?;
    let mut out = Vec::new();

    let f21 = eval_sv(&f, 2, 1);
    let fub = fubini(n_max);
    out.push(SpecializationCheck {
        name: "F_n(2,1) = sum_j S(n,j) j!",
        witness: (0..=n_max)
            .find(|&n| f21[n] != fub[n])
            .map(|n| format!("n = {n}: {} vs {}", f21[n], fub[n])),
    });

    let f22: Vec<MultiPoly> = eval_sv(&f, 2, 2)
        .into_iter()
        .map(MultiPoly::constant)
        .collect();
    let f21p: Vec<MultiPoly> = f21.iter().cloned().map(MultiPoly::constant).collect();
    let sq = GfKind::Egf.encode(&f21p);
    let sq = GfKind::Egf.sequence(&sq.mul(&sq));
    out.push(SpecializationCheck {
        name: "EGF of F_n(2,2) = (EGF of F_n(2,1))^2",
        witness: (0..=n_max)
            .find(|&n| f22[n] != sq[n])
            .map(|n| format!("n = {n}: {} vs {}", f22[n], sq[n])),
    });

    out.push(SpecializationCheck {
        name: "F_n(1,y) = y(y+1)...(y+n-1)",
        witness: (0..=n_max).find_map(|n| {
            let got = f[n].substitute_rational(Var::X, &int(1));
            let want = rising_factorial_y(n);
            (got != want).then(|| format!("n = {n}: {got} vs {want}"))
        }),
    });

    let f10 = eval_sv(&f, 1, 0);
    out.push(SpecializationCheck {
        name: "F_n(1,0) = [n = 0]",
        witness: (0..=n_max)
            .find(|&n| f10[n] != int(i64::from(n == 0)))
            .map(|n| format!("n = {n}: {}", f10[n])),
    });

    let f12 = eval_sv(&f, 1, 2);
    out.push(SpecializationCheck {
        name: "F_n(1,2) = (n+1)!",
        witness: (0..=n_max)
            .find(|&n| f12[n] != factorial(n + 1))
            .map(|n| format!("n = {n}: {}", f12[n])),
    });
    Ok(out)
}
