//! Registry of symbolic checks, one per claim about the two polynomial
//! families, and a runner that reports them in registry order.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::combinat::{keuler_from_stirling, sv_from_stirling, sv_oracle, ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::exactalg::MultiPoly;
use crate::hankel::{hankel_closed_keuler, hankel_closed_sv, hankel_det, hankel_from_betas};
use crate::matrix::{render_row, TriMatrix};
use crate::orthopoly::{
    contract_sfraction, deleham_delta, jfraction_moments, keuler_sfraction, orthogonality_check,
    row_polynomials, sfraction_moments, sv_sfraction, ttr_polynomials,
};
use crate::production::{compute_za, extract_ttr, production_ladder, ttr_of, TtrData};
use crate::riordan::{family, Family, RiordanPair};
use crate::series::TruncSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one claim. `status` is `Fail` exactly when `witness` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub claim: &'static str,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed: Duration,
}

impl VerifyReport {
    fn new(claim: &'static str, witness: Option<String>, elapsed: Duration) -> Self {
        let status = if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        VerifyReport {
            claim,
            status,
            witness,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Identifiers of the registered claims, in registry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    P1,
    C2,
    C3,
    C4,
    P5,
    C6,
    C7,
    C8,
    S5Keuler,
    S5Sv,
    Stirling4,
    HankelAlphaIndep,
    Deleham,
}

type ClaimRow = (
    &'static str,
    usize,
    Option<usize>,
    fn(usize) -> usize,
    fn(usize) -> Result<Option<String>>,
);

/// A registered check. `n` is the claim's size parameter; its meaning is
/// given in `description`.
pub struct Claim {
    pub id: ClaimId,
    pub description: &'static str,
    pub default_n: usize,
    pub max_n: Option<usize>,
    required_order: fn(usize) -> usize,
    check: fn(usize) -> Result<Option<String>>,
}

impl Claim {
    /// Truncation order the check needs at size `n`.
    pub fn required_order(&self, n: usize) -> usize {
        (self.required_order)(n)
    }
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::P1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::P5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::S5Keuler,
        ClaimId::S5Sv,
        ClaimId::Stirling4,
        ClaimId::HankelAlphaIndep,
        ClaimId::Deleham,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::P1 => "p1",
            ClaimId::C2 => "c2",
            ClaimId::C3 => "c3",
            ClaimId::C4 => "c4",
            ClaimId::P5 => "p5",
            ClaimId::C6 => "c6",
            ClaimId::C7 => "c7",
            ClaimId::C8 => "c8",
            ClaimId::S5Keuler => "s5-keuler",
            ClaimId::S5Sv => "s5-sv",
            ClaimId::Stirling4 => "stirling4",
            ClaimId::HankelAlphaIndep => "hankel-alpha-indep",
            ClaimId::Deleham => "deleham",
        }
    }

    pub fn claim(self) -> Claim {
        let (description, default_n, max_n, required_order, check): ClaimRow = match self {
            ClaimId::P1 => (
                "1/k-Eulerian moment array: tridiagonal n x n production matrix, Z and A, inverse pairing",
                7,
                None,
                |n| n,
                |n| production_claim(Family::KeulerMoment, n),
            ),
            ClaimId::C2 => (
                "1/k-Eulerian three-term recurrence: polynomials of degree <= n",
                5,
                None,
                |n| 2 * n,
                |n| recurrence_claim(Family::KeulerMoment, n),
            ),
            ClaimId::C3 => (
                "1/k-Eulerian continued fractions: moments 0..=n four ways",
                7,
                None,
                |n| n,
                |n| fraction_claim(Family::KeulerMoment, n),
            ),
            ClaimId::C4 => (
                "1/k-Eulerian Hankel transform h_0..=h_n",
                5,
                None,
                |n| 2 * n,
                |n| hankel_claim(Family::KeulerMoment, n),
            ),
            ClaimId::P5 => (
                "Savage-Viswanathan moment array: tridiagonal n x n production matrix, Z and A, inverse pairing",
                7,
                None,
                |n| n,
                |n| production_claim(Family::SvMoment, n),
            ),
            ClaimId::C6 => (
                "Savage-Viswanathan three-term recurrence: polynomials of degree <= n",
                5,
                None,
                |n| 2 * n,
                |n| recurrence_claim(Family::SvMoment, n),
            ),
            ClaimId::C7 => (
                "Savage-Viswanathan continued fractions: moments 0..=n four ways",
                7,
                None,
                |n| n,
                |n| fraction_claim(Family::SvMoment, n),
            ),
            ClaimId::C8 => (
                "Savage-Viswanathan Hankel transform h_0..=h_n",
                5,
                None,
                |n| 2 * n,
                |n| hankel_claim(Family::SvMoment, n),
            ),
            ClaimId::S5Keuler => (
                "once-shifted 1/k-Eulerian: recurrence data and J-fraction moments 0..=n",
                6,
                None,
                |n| n + 1,
                |n| shifted_claim(Family::KeulerShiftedMoment, n),
            ),
            ClaimId::S5Sv => (
                "once-shifted Savage-Viswanathan: recurrence data and J-fraction moments 0..=n",
                6,
                None,
                |n| n + 1,
                |n| shifted_claim(Family::SvShiftedMoment, n),
            ),
            ClaimId::Stirling4 => (
                "Stirling double sums for n <= N and the bridge factorization at N + 1 rows",
                7,
                Some(ENUMERATION_BOUND),
                |n| n,
                stirling_claim,
            ),
            ClaimId::HankelAlphaIndep => (
                "Hankel determinants h_0..=h_n ignore alpha and the binomial transform",
                5,
                None,
                |n| 2 * n,
                alpha_independence_claim,
            ),
            ClaimId::Deleham => (
                "Deleham triangles for both families and the x = 2 bridge, rows 0..=n",
                6,
                None,
                |n| n,
                deleham_claim,
            ),
        };
        Claim {
            id: self,
            description,
            default_n,
            max_n,
            required_order,
            check,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClaimId> {
        let s = s.trim().to_ascii_lowercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(Error::UnknownClaim(s))
    }
}

/// Parses a comma-separated list of claim ids; `all` expands to the whole
/// registry. The result follows registry order without duplicates.
pub fn parse_claims(spec: &str) -> Result<Vec<ClaimId>> {
    let mut wanted = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            wanted.extend(ClaimId::ALL);
        } else {
            wanted.push(part.parse()?);
        }
    }
    if wanted.is_empty() {
        return Err(Error::UnknownClaim(spec.to_string()));
    }
    Ok(ClaimId::ALL
        .into_iter()
        .filter(|c| wanted.contains(c))
        .collect())
}

/// Runs one claim at size `n` (or its default), refusing sizes that need
/// more than `order` terms.
pub fn run_claim(id: ClaimId, n: Option<usize>, order: usize) -> Result<VerifyReport> {
    let claim = id.claim();
    let n = n.unwrap_or(claim.default_n);
    if let Some(max) = claim.max_n {
        if n > max {
            return Err(Error::TooLarge { n, bound: max });
        }
    }
    let need = claim.required_order(n);
    if need > order {
        return Err(Error::InsufficientOrder { have: order, need });
    }
    let start = Instant::now();
    let witness = (claim.check)(n)?;
    Ok(VerifyReport::new(id.name(), witness, start.elapsed()))
}

/// Runs several claims, optionally on one thread each. Reports come back
/// in the order of `ids` either way.
pub fn run_claims(
    ids: &[ClaimId],
    n: Option<usize>,
    order: usize,
    parallel: bool,
) -> Result<Vec<VerifyReport>> {
    if !parallel {
        return ids.iter().map(|&id| run_claim(id, n, order)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| scope.spawn(move || run_claim(id, n, order)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("claim thread panicked"))
            .collect()
    })
}

fn poly(s: &str) -> MultiPoly {
    s.parse().expect("built-in polynomial literal")
}

/// Substitutes `n` for the letter `n` in a template before parsing.
fn at(template: &str, n: usize) -> MultiPoly {
    poly(&template.replace('n', &format!("({n})")))
}

fn first_mismatch(what: &str, got: &[MultiPoly], want: &[MultiPoly]) -> Option<String> {
    first_mismatch_from(what, 0, got, want)
}

/// Like [`first_mismatch`], labelling entry `i` as `what[base + i]`.
fn first_mismatch_from(
    what: &str,
    base: usize,
    got: &[MultiPoly],
    want: &[MultiPoly],
) -> Option<String> {
    if got.len() != want.len() {
        return Some(format!("{what}: {} entries vs {}", got.len(), want.len()));
    }
    got.iter()
        .zip(want)
        .position(|(a, b)| a != b)
        .map(|i| format!("{what}[{}]: {} vs {}", base + i, got[i], want[i]))
}

fn first_row_mismatch(what: &str, got: &TriMatrix, want: &TriMatrix) -> Option<String> {
    got.rows()
        .iter()
        .zip(want.rows())
        .position(|(a, b)| a != b)
        .map(|r| {
            format!(
                "{what} row {r}: {} vs {}",
                render_row(&got.rows()[r]),
                render_row(&want.rows()[r])
            )
        })
}

fn series_mismatch(what: &str, got: &TruncSeries, want: &str) -> Option<String> {
    first_mismatch(what, got.coeffs(), poly_series(want, got.order()).coeffs())
}

/// A polynomial in `z`, written with `z` as the series variable.
fn poly_series(s: &str, order: usize) -> TruncSeries {
    let coeffs: Vec<MultiPoly> = s.split(';').map(poly).collect();
    TruncSeries::polynomial(&coeffs, order)
}

/// Closed forms the claims compare against: `alpha_n`, `beta_n` as
/// templates in `n`, and `Z`, `A` as `;`-separated coefficient lists in `z`.
struct Forms {
    alpha: &'static str,
    beta: &'static str,
    z: &'static str,
    a: &'static str,
}

fn forms(f: Family) -> Forms {
    match f {
        Family::KeulerMoment => Forms {
            alpha: "k n (x + 1) + 1",
            beta: "n k x (k (n - 1) + 1)",
            z: "1; k x",
            a: "1; k x + k; k^2 x",
        },
        Family::SvMoment => Forms {
            alpha: "y + n (1 + x)",
            beta: "n x (y + n - 1)",
            z: "y; x y",
            a: "1; x + 1; x",
        },
        Family::KeulerShiftedMoment => Forms {
            alpha: "(n + 1) k x + n k + 1",
            beta: "n k x (n k + 1)",
            z: "k x + 1; k x (k + 1)",
            a: "1; k x + k; k^2 x",
        },
        Family::SvShiftedMoment => Forms {
            alpha: "(n + 1) x + y + n",
            beta: "n x (y + n)",
            z: "x + y; x (1 + y)",
            a: "1; x + 1; x",
        },
        other => unreachable!("no closed forms registered for {other}"),
    }
}

fn ttr_from_forms(fm: &Forms, n_alpha: usize, n_beta: usize) -> TtrData {
    TtrData::new(
        (0..n_alpha).map(|i| at(fm.alpha, i)).collect(),
        (1..=n_beta).map(|i| at(fm.beta, i)).collect(),
    )
}

fn ttr_mismatch(got: &TtrData, want: &TtrData) -> Option<String> {
    let na = got.alpha.len().min(want.alpha.len());
    let nb = got.beta.len().min(want.beta.len());
    first_mismatch("alpha", &got.alpha[..na], &want.alpha[..na])
        .or_else(|| first_mismatch_from("beta", 1, &got.beta[..nb], &want.beta[..nb]))
}

/// Production matrix by `L^-1 L-bar`, its recurrence data, `Z` and `A`, and
/// the moment array as the inverse of its coefficient partner.
fn production_claim(moment: Family, n: usize) -> Result<Option<String>> {
    let fm = forms(moment);
    let l = family(moment, n.max(1))?;
    let p = production_ladder(&l, n)?;
    let ttr = match extract_ttr(&p) {
        Ok(t) => t,
        Err(e @ (Error::NotTridiagonal { .. } | Error::NonMonicSuperdiagonal { .. })) => {
            return Ok(Some(e.to_string()))
        }
        Err(e) => return Err(e),
    };
    if let Some(w) = ttr_mismatch(&ttr, &ttr_from_forms(&fm, n, n.saturating_sub(1))) {
        return Ok(Some(w));
    }
    let za = compute_za(&l)?;
    if let Some(w) = series_mismatch("Z", &za.z, fm.z).or_else(|| series_mismatch("A", &za.a, fm.a))
    {
        return Ok(Some(w));
    }
    let coeff = family(
        moment.partner().expect("moment arrays have partners"),
        n.max(1),
    )?;
    Ok(first_row_mismatch(
        "inverse of coefficient array",
        &coeff.inverse()?.realize(n + 1)?,
        &l.realize(n + 1)?,
    ))
}

/// The printed recurrence against the extracted one, the rows of the
/// coefficient array, and orthogonality against the moment column.
fn recurrence_claim(moment: Family, n: usize) -> Result<Option<String>> {
    // The printed recurrences index P_n by its degree, so alpha_{n-1} and
    // beta_{n-1} appear with n - 1 substituted into these templates.
    let (alpha, beta) = match moment {
        Family::KeulerMoment => ("k n (1 + x) + 1", "k^2 x ((n+1)^2 - 3(n+1) + 2) + k x n"),
        Family::SvMoment => ("y + n (1 + x)", "n (x y + (n - 1) x)"),
        other => unreachable!("no printed recurrence for {other}"),
    };
    let printed = TtrData::new(
        (0..n).map(|i| at(alpha, i)).collect(),
        (1..=n).map(|i| at(beta, i)).collect(),
    );
    let l = family(moment, (2 * n).max(1))?;
    let extracted = ttr_of(&l, n + 1)?;
    if let Some(w) = ttr_mismatch(&extracted, &printed) {
        return Ok(Some(w));
    }
    let seq = ttr_polynomials(&printed, n)?;
    let coeff = family(
        moment.partner().expect("moment arrays have partners"),
        n.max(1),
    )?
    .realize(n + 1)?;
    for (m, row) in coeff.rows().iter().enumerate() {
        if let Some(w) = first_mismatch(&format!("P_{m} coefficients"), &seq.polys[m], row) {
            return Ok(Some(w));
        }
    }
    let moments = l.moment_column(2 * n)?;
    Ok(orthogonality_check(&seq, &moments)?
        .err()
        .map(|w| format!("L(P_{} t^{}) = {}", w.n, w.m, w.value)))
}

/// S-fraction, contracted J-fraction, inverse of the coefficient array and
/// the permutation oracle, for moments `0..=n`.
fn fraction_claim(moment: Family, n: usize) -> Result<Option<String>> {
    let (s, jf) = match moment {
        Family::KeulerMoment => (keuler_sfraction(n), forms(Family::KeulerMoment)),
        Family::SvMoment => (sv_sfraction(n), forms(Family::SvMoment)),
        other => unreachable!("no continued fractions registered for {other}"),
    };
    let from_s = sfraction_moments(&s, n)?;
    let contracted = contract_sfraction(&s).ok();
    if let Some(t) = &contracted {
        if let Some(w) = ttr_mismatch(t, &ttr_from_forms(&jf, n, n)) {
            return Ok(Some(format!("contraction: {w}")));
        }
    }
    let from_j = match &contracted {
        Some(t) => jfraction_moments(t, n)?,
        None => vec![MultiPoly::one()],
    };
    let coeff = family(
        moment.partner().expect("moment arrays have partners"),
        n.max(1),
    )?;
    let from_inverse = coeff.inverse()?.moment_column(n)?;
    let oracle: Vec<MultiPoly> = (0..=n.min(ENUMERATION_BOUND))
        .map(|m| {
            let f = sv_oracle(m)?;
            match moment {
                Family::KeulerMoment => f.homogenize_y(m as u32),
                _ => Ok(f),
            }
        })
        .collect::<Result<_>>()?;
    Ok(first_mismatch("S-fraction vs J-fraction", &from_s, &from_j)
        .or_else(|| first_mismatch("S-fraction vs inverse array", &from_s, &from_inverse))
        .or_else(|| {
            first_mismatch(
                "S-fraction vs permutations",
                &from_s[..oracle.len()],
                &oracle,
            )
        }))
}

/// Determinants, the product formula and the beta product, `h_0..=h_n`.
fn hankel_claim(moment: Family, n: usize) -> Result<Option<String>> {
    let closed: fn(usize) -> MultiPoly = match moment {
        Family::KeulerMoment => hankel_closed_keuler,
        Family::SvMoment => hankel_closed_sv,
        other => unreachable!("no Hankel formula registered for {other}"),
    };
    let l = family(moment, (2 * n).max(1))?;
    let moments = l.moment_column(2 * n)?;
    let ttr = ttr_of(&l, n + 1)?;
    let dets = (0..=n)
        .map(|m| hankel_det(&moments, m))
        .collect::<Result<Vec<_>>>()?;
    let formula: Vec<MultiPoly> = (0..=n).map(closed).collect();
    let betas = (0..=n)
        .map(|m| hankel_from_betas(&ttr.beta, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(first_mismatch("h vs product formula", &dets, &formula)
        .or_else(|| first_mismatch("h vs beta product", &dets, &betas)))
}

/// Recurrence data read off the shifted production matrix, and the printed
/// continued fraction with `z^2` numerators against the shifted moments.
fn shifted_claim(moment: Family, n: usize) -> Result<Option<String>> {
    let fm = forms(moment);
    let l = family(moment, n + 1)?;
    let p = production_ladder(&l, n + 1)?;
    let ttr = match extract_ttr(&p) {
        Ok(t) => t,
        Err(e @ (Error::NotTridiagonal { .. } | Error::NonMonicSuperdiagonal { .. })) => {
            return Ok(Some(e.to_string()))
        }
        Err(e) => return Err(e),
    };
    let printed = ttr_from_forms(&fm, n + 1, n);
    if let Some(w) = ttr_mismatch(&ttr, &printed) {
        return Ok(Some(w));
    }
    let from_cf = jfraction_moments(&printed, n)?;
    let column = l.moment_column(n)?;
    let unshifted = match moment {
        Family::KeulerShiftedMoment => {
            family(Family::KeulerMoment, n + 1)?.moment_column(n + 1)?[1..].to_vec()
        }
        _ => family(Family::SvMoment, n + 1)?.moment_column(n + 1)?[1..]
            .iter()
            .map(|f| f.exact_div(&MultiPoly::y()))
            .collect::<Result<_>>()?,
    };
    Ok(
        first_mismatch("J-fraction vs moment column", &from_cf, &column)
            .or_else(|| first_mismatch("J-fraction vs shifted moments", &from_cf, &unshifted)),
    )
}

fn stirling_claim(n: usize) -> Result<Option<String>> {
    for m in 0..=n {
        let oracle = sv_oracle(m)?;
        let sv = sv_from_stirling(m)?;
        if sv != oracle {
            return Ok(Some(format!(
                "F_{m}: double sum {sv} vs permutations {oracle}"
            )));
        }
        let ke = keuler_from_stirling(m)?;
        let hom = oracle.homogenize_y(m as u32)?;
        if ke != hom {
            return Ok(Some(format!("A_{m}: double sum {ke} vs homogenized {hom}")));
        }
    }
    let bridge = family(Family::StirlingBridge, n.max(1))?.realize(n + 1)?;
    let product = RiordanPair::stirling2_generalized(&poly("x - 1"), n.max(1))?
        .multiply(&RiordanPair::stirling1_unsigned(n.max(1)))?
        .realize(n + 1)?;
    Ok(first_row_mismatch(
        "bridge vs Stirling product",
        &bridge,
        &product,
    ))
}

/// For both families: zeroing or shifting every alpha, or taking the
/// binomial transform of the moments, leaves `h_0..=h_n` unchanged.
fn alpha_independence_claim(n: usize) -> Result<Option<String>> {
    for moment in [Family::KeulerMoment, Family::SvMoment] {
        let l = family(moment, (2 * n).max(1))?;
        let moments = l.moment_column(2 * n)?;
        let ttr = ttr_of(&l, n + 1)?;
        let zeroed = TtrData::new(vec![MultiPoly::zero(); n + 1], ttr.beta.clone());
        let shifted = TtrData::new(
            ttr.alpha.iter().map(|a| a + &MultiPoly::one()).collect(),
            ttr.beta.clone(),
        );
        let binomial = RiordanPair::binomial((2 * n).max(1)).apply_sequence(&moments)?;
        let dets = |mu: &[MultiPoly]| {
            (0..=n)
                .map(|m| hankel_det(mu, m))
                .collect::<Result<Vec<_>>>()
        };
        let base = dets(&moments)?;
        let variants = [
            ("alpha = 0", dets(&jfraction_moments(&zeroed, 2 * n)?)?),
            ("alpha + 1", dets(&jfraction_moments(&shifted, 2 * n)?)?),
            ("binomial transform", dets(&binomial)?),
        ];
        for (what, d) in variants {
            if let Some(w) = first_mismatch(&format!("{moment} h under {what}"), &d, &base) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn alternating(
    even: impl Fn(usize) -> String,
    odd: impl Fn(usize) -> String,
    len: usize,
) -> Vec<MultiPoly> {
    (0..len)
        .map(|i| poly(&if i % 2 == 0 { even(i / 2) } else { odd(i / 2) }))
        .collect()
}

fn deleham_claim(n: usize) -> Result<Option<String>> {
    let ke = deleham_delta(
        &alternating(|j| format!("{j} k + 1"), |_| "0".into(), n),
        &alternating(|_| "0".into(), |j| format!("{} k", j + 1), n),
        n,
    )?;
    let ke_moments = family(Family::KeulerMoment, n.max(1))?.moment_column(n)?;
    if let Some(w) = first_mismatch(
        "1/k-Eulerian Delta rows",
        &row_polynomials(&ke),
        &ke_moments,
    ) {
        return Ok(Some(w));
    }
    let sv = deleham_delta(
        &alternating(|j| format!("y + {j}"), |_| "0".into(), n),
        &alternating(|_| "0".into(), |j| format!("{}", j + 1), n),
        n,
    )?;
    let sv_moments = family(Family::SvMoment, n.max(1))?.moment_column(n)?;
    if let Some(w) = first_mismatch(
        "Savage-Viswanathan Delta rows",
        &row_polynomials(&sv),
        &sv_moments,
    ) {
        return Ok(Some(w));
    }
    let a079641 = deleham_delta(
        &alternating(|j| format!("{j}"), |j| format!("{}", 2 * (j + 1)), n),
        &alternating(|_| "1".into(), |_| "0".into(), n),
        n,
    )?;
    let bridge = family(Family::StirlingBridge, n.max(1))?
        .realize(n + 1)?
        .substitute_rational(crate::exactalg::Var::X, &crate::exactalg::int(2));
    Ok(first_row_mismatch(
        "x = 2 Delta vs bridge",
        &a079641,
        &bridge,
    ))
}
