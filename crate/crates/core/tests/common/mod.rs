//! Helpers shared by the integration test targets: fixture loading,
//! proptest strategies, and property bodies that both the proptest suite and
//! the acceptance runner execute.

#![allow(dead_code)]

use std::path::PathBuf;

use eulerian_moments::exactalg::{int, ratio, Monomial};
use eulerian_moments::hankel::hankel_det;
use eulerian_moments::matrix::render_row;
use eulerian_moments::orthopoly::jfraction_moments;
use eulerian_moments::production::TtrData;
use eulerian_moments::{Matrix, MultiPoly, Rational, RiordanPair, TriMatrix, TruncSeries, Var};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn fixture_text(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

/// One polynomial per line.
pub fn fixture_list(name: &str) -> Vec<MultiPoly> {
    fixture_text(name)
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.parse().unwrap_or_else(|e| panic!("{name}: `{l}`: {e}")))
        .collect()
}

/// Rows of a typeset array: entries separated by `&`, rows ending in `\\`.
pub fn fixture_array(name: &str) -> Vec<Vec<MultiPoly>> {
    fixture_text(name)
        .lines()
        .filter(|l| l.contains('&'))
        .map(|l| {
            l.trim()
                .trim_end_matches("\\\\")
                .split('&')
                .map(|e| {
                    e.trim()
                        .parse()
                        .unwrap_or_else(|err| panic!("{name}: `{e}`: {err}"))
                })
                .collect()
        })
        .collect()
}

pub fn render_list(list: &[MultiPoly]) -> Vec<String> {
    list.iter().map(MultiPoly::to_string).collect()
}

pub fn render_rows(rows: &[Vec<MultiPoly>]) -> Vec<String> {
    rows.iter().map(|r| render_row(r)).collect()
}

/// A lower-triangular array padded with zeros to a square, as typeset.
pub fn square_rows(t: &TriMatrix) -> Vec<Vec<MultiPoly>> {
    t.to_matrix().rows().to_vec()
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<MultiPoly>> {
    m.rows().to_vec()
}

pub fn p(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

// Strategies. Sizes are kept small so that a hundred cases of symbolic
// series work finish in well under a second each.

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

pub fn arb_poly_with(max_terms: usize, max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(
        (arb_rational(), [0..=max_exp, 0..=max_exp, 0..=max_exp]),
        0..=max_terms,
    )
    .prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, e)| MultiPoly::term(c, Monomial(e)))
            .sum()
    })
}

pub fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    arb_poly_with(4, 2)
}

/// Polynomials in `x` and `y` only.
pub fn arb_poly_xy() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((arb_rational(), [0..=2u32, 0..=3]), 0..=4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, [ex, ey])| MultiPoly::term(c, Monomial([ex, ey, 0])))
            .sum()
    })
}

pub fn arb_nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    arb_poly().prop_filter("nonzero divisor", |p| !p.is_zero())
}

/// Coefficients for series: at most two terms of degree at most one in
/// each variable.
pub fn arb_coeff() -> impl Strategy<Value = MultiPoly> {
    arb_poly_with(2, 1)
}

pub const SERIES_ORDER: usize = 5;

/// `c_1 z + c_2 z^2 + ...` with zero constant term.
pub fn arb_series_zero_const() -> impl Strategy<Value = TruncSeries> {
    proptest::collection::vec(arb_coeff(), SERIES_ORDER).prop_map(|cs| {
        let mut all = vec![MultiPoly::zero()];
        all.extend(cs);
        TruncSeries::new(all)
    })
}

/// `1 + c_1 z + ...`
pub fn arb_series_unit() -> impl Strategy<Value = TruncSeries> {
    arb_series_zero_const().prop_map(|s| s.add(&TruncSeries::one(SERIES_ORDER)))
}

/// `z + c_2 z^2 + ...`
pub fn arb_series_reversible() -> impl Strategy<Value = TruncSeries> {
    proptest::collection::vec(arb_coeff(), SERIES_ORDER - 1).prop_map(|cs| {
        let mut all = vec![MultiPoly::zero(), MultiPoly::one()];
        all.extend(cs);
        TruncSeries::new(all)
    })
}

pub fn arb_pair() -> impl Strategy<Value = RiordanPair> {
    (arb_series_unit(), arb_series_reversible())
        .prop_map(|(g, f)| RiordanPair::new(g, f, "random").expect("valid pair"))
}

/// Recurrence data with `count` alphas and betas.
pub fn arb_ttr(count: usize) -> impl Strategy<Value = TtrData> {
    (
        proptest::collection::vec(arb_coeff(), count),
        proptest::collection::vec(arb_coeff(), count),
    )
        .prop_map(|(a, b)| TtrData::new(a, b))
}

pub fn arb_sequence(len: usize) -> impl Strategy<Value = Vec<MultiPoly>> {
    proptest::collection::vec(arb_coeff(), len)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn lift<T>(r: eulerian_moments::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

// Property bodies.

pub fn ring_axioms(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> Result<(), TestCaseError> {
    ensure(a + b == b + a, || format!("a + b != b + a for {a}, {b}"))?;
    ensure(a * b == b * a, || format!("ab != ba for {a}, {b}"))?;
    ensure(&(a + b) + c == a + &(b + c), || {
        "addition not associative".into()
    })?;
    ensure(&(a * b) * c == a * &(b * c), || {
        "multiplication not associative".into()
    })?;
    ensure(a * &(b + c) == &(a * b) + &(a * c), || {
        "not distributive".into()
    })?;
    ensure(a + &MultiPoly::zero() == *a, || "p + 0 != p".into())?;
    ensure(a * &MultiPoly::one() == *a, || "p * 1 != p".into())?;
    #[allow(clippy::eq_op)]
    let diff = a - a;
    ensure(diff.is_zero(), || "p - p != 0".into())
}

pub fn exact_div_round_trip(a: &MultiPoly, d: &MultiPoly) -> Result<(), TestCaseError> {
    let q = lift((a * d).exact_div(d))?;
    ensure(q == *a, || format!("({a})({d}) / ({d}) = {q}"))
}

pub fn homogenize_at_k1(p: &MultiPoly) -> Result<(), TestCaseError> {
    let n = p.degree_in(Var::Y).unwrap_or(0) + 1;
    let h = lift(p.homogenize_y(n))?;
    let lhs = h.substitute_rational(Var::K, &int(1));
    let rhs = p.substitute_rational(Var::Y, &int(1));
    ensure(lhs == rhs, || {
        format!("homogenize({p}, {n}) at k = 1 is {lhs}, p at y = 1 is {rhs}")
    })
}

pub fn print_parse_round_trip(p: &MultiPoly) -> Result<(), TestCaseError> {
    let s = p.to_string();
    let back: MultiPoly = lift(s.parse())?;
    ensure(back == *p, || format!("`{s}` parsed back as {back}"))
}

pub fn exp_log_round_trip(
    unit: &TruncSeries,
    zero_const: &TruncSeries,
) -> Result<(), TestCaseError> {
    let back = lift(lift(unit.log())?.exp())?;
    ensure(back == *unit, || format!("exp(log(s)) != s for s = {unit}"))?;
    let back = lift(lift(zero_const.exp())?.log())?;
    ensure(back == *zero_const, || {
        format!("log(exp(t)) != t for t = {zero_const}")
    })
}

pub fn compose_reversion(f: &TruncSeries) -> Result<(), TestCaseError> {
    let fbar = lift(f.reversion())?;
    let z = TruncSeries::z(f.order());
    ensure(lift(f.compose(&fbar))? == z, || {
        format!("f(fbar) != z for f = {f}")
    })?;
    ensure(lift(fbar.compose(f))? == z, || {
        format!("fbar(f) != z for f = {f}")
    })
}

pub fn group_law(a: &RiordanPair, b: &RiordanPair) -> Result<(), TestCaseError> {
    let size = a.order().min(b.order()) + 1;
    let lhs = lift(lift(a.multiply(b))?.realize(size))?.to_matrix();
    let rhs = lift(a.realize(size))?
        .to_matrix()
        .mul(&lift(b.realize(size))?.to_matrix());
    ensure(lhs == rhs, || "realize(ab) != realize(a) realize(b)".into())
}

pub fn inverse_law(a: &RiordanPair) -> Result<(), TestCaseError> {
    let size = a.order() + 1;
    let prod = lift(a.realize(size))?
        .to_matrix()
        .mul(&lift(lift(a.inverse())?.realize(size))?.to_matrix());
    ensure(prod == Matrix::identity(size), || {
        format!("L L^-1 != I for {}", a.label())
    })
}

/// Adding 1 to every alpha, and replacing the alphas altogether, leaves the
/// Hankel determinants `h_0 ..= h_n` unchanged.
pub fn alpha_independence(
    t: &TtrData,
    other_alpha: &[MultiPoly],
    n: usize,
) -> Result<(), TestCaseError> {
    let dets = |t: &TtrData| -> Result<Vec<MultiPoly>, TestCaseError> {
        let mu = lift(jfraction_moments(t, 2 * n))?;
        (0..=n).map(|m| lift(hankel_det(&mu, m))).collect()
    };
    let base = dets(t)?;
    let shifted = TtrData::new(
        t.alpha.iter().map(|a| a + &MultiPoly::one()).collect(),
        t.beta.clone(),
    );
    ensure(dets(&shifted)? == base, || {
        "alpha + 1 changed the Hankel determinants".into()
    })?;
    let replaced = TtrData::new(other_alpha.to_vec(), t.beta.clone());
    ensure(dets(&replaced)? == base, || {
        "new alphas changed the Hankel determinants".into()
    })
}

/// `h_0 ..= h_n` of a sequence and of its binomial transform agree.
pub fn binomial_invariance(mu: &[MultiPoly], n: usize) -> Result<(), TestCaseError> {
    let transformed = lift(RiordanPair::binomial(mu.len() - 1).apply_sequence(mu))?;
    for m in 0..=n {
        let a = lift(hankel_det(mu, m))?;
        let b = lift(hankel_det(&transformed, m))?;
        ensure(a == b, || {
            format!("h_{m}: {a} vs {b} after binomial transform")
        })?;
    }
    Ok(())
}
