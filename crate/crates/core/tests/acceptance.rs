//! Acceptance criteria 1 to 9, run in order with one PASS/FAIL line each.
//! All comparisons are exact polynomial identities; there are no
//! tolerances. The process exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use eulerian_moments::combinat::{
    fubini, keuler_from_stirling, perm_stats, rising_factorial_y, sv_from_stirling, sv_oracle,
};
use eulerian_moments::exactalg::int;
use eulerian_moments::hankel::{
    hankel_closed_keuler, hankel_closed_keuler_alt, hankel_closed_sv, hankel_det, hankel_from_betas,
};
use eulerian_moments::orthopoly::{
    contract_sfraction, jfraction_moments, keuler_sfraction, sfraction_moments, sv_sfraction,
};
use eulerian_moments::production::{
    compute_za, extract_ttr, production_analytic, production_ladder, ttr_of, TtrData,
};
use eulerian_moments::riordan::family;
use eulerian_moments::series::GfKind;
use eulerian_moments::{Family, Matrix, MultiPoly, RiordanPair, TruncSeries, Var};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

/// Outcome of one sub-check: `Err` carries the first mismatch.
type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ok_if(cond: bool, witness: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn lists_equal(what: &str, got: &[MultiPoly], want: &[MultiPoly]) -> Check {
    if got.len() != want.len() {
        return Err(format!("{what}: {} entries vs {}", got.len(), want.len()));
    }
    match got.iter().zip(want).position(|(a, b)| a != b) {
        None => Ok(()),
        Some(i) => Err(format!("{what}[{i}]: {} vs {}", got[i], want[i])),
    }
}

fn strings_equal(what: &str, got: &[String], want: &[String]) -> Check {
    match got.iter().zip(want).position(|(a, b)| a != b) {
        None if got.len() == want.len() => Ok(()),
        None => Err(format!("{what}: {} lines vs {}", got.len(), want.len())),
        Some(i) => Err(format!("{what} line {i}: `{}` vs `{}`", got[i], want[i])),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn built(f: Family, order: usize) -> Result<RiordanPair, String> {
    family(f, order).map_err(err)
}

// Criterion 1: published lists and matrices, byte for byte.
fn displays() -> Check {
    let col = |f: Family, n: usize| -> Result<Vec<MultiPoly>, String> {
        built(f, n.max(1))?.moment_column(n).map_err(err)
    };
    for (f, n, name) in [
        (Family::SvMoment, 4, "sv_moments.txt"),
        (Family::KeulerMoment, 4, "keuler_moments.txt"),
        (Family::KeulerShiftedMoment, 2, "keuler_shifted_moments.txt"),
        (Family::SvShiftedMoment, 3, "sv_shifted_moments.txt"),
    ] {
        strings_equal(
            name,
            &render_list(&col(f, n)?),
            &render_list(&fixture_list(name)),
        )?;
    }
    for (f, name) in [
        (Family::KeulerMoment, "production_keuler.txt"),
        (Family::SvMoment, "production_sv.txt"),
    ] {
        let m = production_ladder(&built(f, 7)?, 7).map_err(err)?;
        strings_equal(
            name,
            &render_rows(&matrix_rows(&m)),
            &render_rows(&fixture_array(name)),
        )?;
    }
    let bridge = built(Family::StirlingBridge, 6)?.realize(7).map_err(err)?;
    strings_equal(
        "bridge_general.txt",
        &render_rows(&square_rows(&bridge)),
        &render_rows(&fixture_array("bridge_general.txt")),
    )?;
    for x in 0..=3 {
        let at = square_rows(&bridge.substitute_rational(Var::X, &int(x)));
        let want = if x == 0 {
            matrix_rows(&Matrix::identity(7))
        } else {
            fixture_array(&format!("bridge_x{x}.txt"))
        };
        strings_equal(
            &format!("bridge at x = {x}"),
            &render_rows(&at),
            &render_rows(&want),
        )?;
    }
    Ok(())
}

// Criterion 2: tridiagonal production matrices and closed-form Z, A.
fn tridiagonal_and_za() -> Check {
    for (f, z, a) in [
        (
            Family::KeulerMoment,
            ["1", "k x"],
            ["1", "k x + k", "k^2 x"],
        ),
        (Family::SvMoment, ["y", "x y"], ["1", "x + 1", "x"]),
    ] {
        let pair = built(f, 9)?;
        let m = production_ladder(&pair, 7).map_err(err)?;
        extract_ttr(&m).map_err(|e| format!("{f}: {e}"))?;
        let za = compute_za(&pair).map_err(err)?;
        ok_if(za.z.order() >= 8 && za.a.order() >= 8, || {
            format!("{f}: Z, A only to order {}", za.z.order())
        })?;
        let z_want = TruncSeries::polynomial(&z.map(p), za.z.order());
        let a_want = TruncSeries::polynomial(&a.map(p), za.a.order());
        lists_equal(&format!("{f} Z"), za.z.coeffs(), z_want.coeffs())?;
        lists_equal(&format!("{f} A"), za.a.coeffs(), a_want.coeffs())?;
        // Cross-check the expanded A against its factored form.
        let factored = match f {
            Family::KeulerMoment => TruncSeries::polynomial(&[p("1"), p("k")], 8)
                .mul(&TruncSeries::polynomial(&[p("1"), p("k x")], 8)),
            _ => TruncSeries::polynomial(&[p("1"), p("1")], 8)
                .mul(&TruncSeries::polynomial(&[p("1"), p("x")], 8)),
        };
        lists_equal(
            &format!("{f} A factored"),
            &za.a.coeffs()[..=8],
            factored.coeffs(),
        )?;
    }
    Ok(())
}

// Criterion 3: both production constructions, all nine arrays, size 6.
fn cross_method() -> Check {
    for f in Family::ALL {
        let pair = built(f, 6)?;
        let analytic = production_analytic(&compute_za(&pair).map_err(err)?, 6).map_err(err)?;
        let ladder = production_ladder(&pair, 6).map_err(err)?;
        for r in 0..6 {
            lists_equal(
                &format!("{f} row {r}"),
                &analytic.rows()[r],
                &ladder.rows()[r],
            )?;
        }
    }
    Ok(())
}

// Criterion 4: four independent routes to the moments, n <= 7.
fn four_ways() -> Check {
    let n = 7;
    let start = Instant::now();
    let stats = perm_stats(n).map_err(err)?;
    let elapsed = start.elapsed();
    ok_if(stats.total() == 5040, || {
        format!("enumerated {} permutations", stats.total())
    })?;
    ok_if(elapsed < Duration::from_secs(1), || {
        format!("oracle at n = 7 took {elapsed:?}")
    })?;
    for (coeff, s) in [
        (Family::SvCoeff, sv_sfraction(n)),
        (Family::KeulerCoeff, keuler_sfraction(n)),
    ] {
        let from_s = sfraction_moments(&s, n).map_err(err)?;
        let from_j = jfraction_moments(&contract_sfraction(&s).map_err(err)?, n).map_err(err)?;
        let from_inverse = built(coeff, n)?
            .inverse()
            .map_err(err)?
            .moment_column(n)
            .map_err(err)?;
        let oracle = (0..=n)
            .map(|m| {
                let f = sv_oracle(m)?;
                if coeff == Family::KeulerCoeff {
                    f.homogenize_y(m as u32)
                } else {
                    Ok(f)
                }
            })
            .collect::<eulerian_moments::Result<Vec<_>>>()
            .map_err(err)?;
        lists_equal(&format!("{coeff}: S vs J"), &from_s, &from_j)?;
        lists_equal(
            &format!("{coeff}: S vs inverse array"),
            &from_s,
            &from_inverse,
        )?;
        lists_equal(&format!("{coeff}: S vs permutations"), &from_s, &oracle)?;
    }
    Ok(())
}

// Criterion 5: Hankel determinants against the product formulas and the
// beta products, then the two printed product formulas against each other.
fn hankel() -> Check {
    let mut failures = Vec::new();
    for (f, closed) in [
        (
            Family::KeulerMoment,
            hankel_closed_keuler as fn(usize) -> MultiPoly,
        ),
        (Family::SvMoment, hankel_closed_sv),
    ] {
        let pair = built(f, 10)?;
        let mu = pair.moment_column(10).map_err(err)?;
        let t = ttr_of(&pair, 6).map_err(err)?;
        for n in 0..=5 {
            let det = hankel_det(&mu, n).map_err(err)?;
            if det != closed(n) {
                failures.push(format!("{f} h_{n} = {det}, formula gives {}", closed(n)));
            }
            let beta = hankel_from_betas(&t.beta, n).map_err(err)?;
            if det != beta {
                failures.push(format!("{f} h_{n} = {det}, beta product gives {beta}"));
            }
        }
    }
    if let Some(n) = (0..=6).find(|&n| hankel_closed_keuler(n) != hankel_closed_keuler_alt(n)) {
        failures.push(format!(
            "printed forms differ at n = {n}: {} vs {} (ratio {})",
            hankel_closed_keuler(n),
            hankel_closed_keuler_alt(n),
            ratio_of(&hankel_closed_keuler(n), &hankel_closed_keuler_alt(n)),
        ));
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn ratio_of(a: &MultiPoly, b: &MultiPoly) -> String {
    match (a.leading(), b.leading()) {
        (Some((ma, ca)), Some((mb, cb))) if ma == mb => {
            let r = ca / cb;
            if b.scale(&r) == *a {
                r.to_string()
            } else {
                "not a constant".into()
            }
        }
        _ => "not a constant".into(),
    }
}

// Criterion 6: Stirling double sums and the bridge factorization.
fn stirling() -> Check {
    for n in 0..=7 {
        let oracle = sv_oracle(n).map_err(err)?;
        let sv = sv_from_stirling(n).map_err(err)?;
        ok_if(sv == oracle, || format!("F_{n}: {sv} vs {oracle}"))?;
        let ke = keuler_from_stirling(n).map_err(err)?;
        let hom = oracle.homogenize_y(n as u32).map_err(err)?;
        ok_if(ke == hom, || format!("A_{n}: {ke} vs {hom}"))?;
    }
    let bridge = built(Family::StirlingBridge, 6)?.realize(7).map_err(err)?;
    let product = RiordanPair::stirling2_generalized(&p("x - 1"), 6)
        .and_then(|s2| s2.multiply(&RiordanPair::stirling1_unsigned(6)))
        .and_then(|prod| prod.realize(7))
        .map_err(err)?;
    for r in 0..7 {
        lists_equal(
            &format!("bridge row {r}"),
            &bridge.rows()[r],
            &product.rows()[r],
        )?;
    }
    Ok(())
}

// Criterion 7: the once-shifted families.
fn shifted() -> Check {
    let n = 6;
    for (f, a0, b1, alpha, beta) in [
        (
            Family::KeulerShiftedMoment,
            "k x + 1",
            "k x (k + 1)",
            "(n + 1) k x + n k + 1",
            "n k x (n k + 1)",
        ),
        (
            Family::SvShiftedMoment,
            "x + y",
            "x (y + 1)",
            "(n + 1) x + y + n",
            "n x (y + n)",
        ),
    ] {
        let pair = built(f, n + 1)?;
        let t = extract_ttr(&production_ladder(&pair, n + 1).map_err(err)?)
            .map_err(|e| format!("{f}: {e}"))?;
        ok_if(t.alpha[0] == p(a0), || {
            format!("{f}: alpha_0 = {}", t.alpha[0])
        })?;
        ok_if(t.beta[0] == p(b1), || {
            format!("{f}: beta_1 = {}", t.beta[0])
        })?;
        // The continued fraction as printed, every partial numerator read
        // with z^2.
        let at = |tpl: &str, i: usize| p(&tpl.replace('n', &format!("({i})")));
        let printed = TtrData::new(
            (0..=n).map(|i| at(alpha, i)).collect(),
            (1..=n).map(|i| at(beta, i)).collect(),
        );
        let from_cf = jfraction_moments(&printed, n).map_err(err)?;
        let shifted_list: Vec<MultiPoly> = match f {
            Family::KeulerShiftedMoment => built(Family::KeulerMoment, n + 1)?
                .moment_column(n + 1)
                .map_err(err)?[1..]
                .to_vec(),
            _ => built(Family::SvMoment, n + 1)?
                .moment_column(n + 1)
                .map_err(err)?[1..]
                .iter()
                .map(|q| q.exact_div(&p("y")))
                .collect::<eulerian_moments::Result<_>>()
                .map_err(err)?,
        };
        lists_equal(
            &format!("{f}: printed fraction vs shifted list"),
            &from_cf,
            &shifted_list,
        )?;
        lists_equal(
            &format!("{f}: printed fraction vs moment column"),
            &from_cf,
            &pair.moment_column(n).map_err(err)?,
        )?;
    }
    Ok(())
}

// Criterion 8: specializations of F_n(x, y).
fn specializations() -> Check {
    let f = built(Family::SvMoment, 8)?.moment_column(8).map_err(err)?;
    let at = |x: i64, y: i64| -> Vec<MultiPoly> {
        f.iter()
            .map(|q| MultiPoly::constant(q.eval(&int(x), &int(y), &int(0))))
            .collect()
    };
    let fub: Vec<MultiPoly> = fubini(8).into_iter().map(MultiPoly::constant).collect();
    lists_equal("F_n(2,1) vs surjection count", &at(2, 1), &fub)?;
    let e = GfKind::Egf.encode(&at(2, 1));
    lists_equal("EGF square", &GfKind::Egf.sequence(&e.mul(&e)), &at(2, 2))?;
    for (n, q) in f.iter().enumerate().take(8) {
        let got = q.substitute_rational(Var::X, &int(1));
        ok_if(got == rising_factorial_y(n), || {
            format!("F_{n}(1,y) = {got}")
        })?;
    }
    Ok(())
}

// Criterion 9: property suites on random instances and named families.
const CASES: u32 = 100;

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Check
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn properties() -> Check {
    run_property(
        "ring axioms",
        (arb_poly(), arb_poly(), arb_poly()),
        |(a, b, c)| ring_axioms(&a, &b, &c),
    )?;
    run_property(
        "exp/log",
        (arb_series_unit(), arb_series_zero_const()),
        |(s, t)| exp_log_round_trip(&s, &t),
    )?;
    run_property("compose/reversion", arb_series_reversible(), |f| {
        compose_reversion(&f)
    })?;
    run_property("group law", (arb_pair(), arb_pair()), |(a, b)| {
        group_law(&a, &b)
    })?;
    run_property("inverse law", arb_pair(), |a| inverse_law(&a))?;
    run_property(
        "alpha independence",
        (arb_ttr(4), arb_sequence(4)),
        |(t, other)| alpha_independence(&t, &other, 3),
    )?;
    run_property("binomial invariance", arb_sequence(7), |mu| {
        binomial_invariance(&mu, 3)
    })?;

    let named = |r: Result<(), TestCaseError>, what: String| r.map_err(|e| format!("{what}: {e}"));
    for f in Family::ALL {
        let pair = built(f, 8)?;
        named(compose_reversion(pair.f()), format!("{f} reversion"))?;
        named(inverse_law(&pair), format!("{f} inverse law"))?;
    }
    for f in Family::MOMENTS {
        let pair = built(f, 8)?;
        let s = pair.g().log().map_err(err)?;
        named(exp_log_round_trip(pair.g(), &s), format!("{f} exp/log"))?;
    }
    named(
        group_law(&RiordanPair::binomial(8), &built(Family::SvMoment, 8)?),
        "binomial times SV".into(),
    )?;
    for f in [Family::KeulerMoment, Family::SvMoment] {
        let pair = built(f, 8)?;
        let t = ttr_of(&pair, 5).map_err(err)?;
        named(
            alpha_independence(&t, &vec![MultiPoly::zero(); 5], 4),
            format!("{f} alpha independence"),
        )?;
        named(
            binomial_invariance(&pair.moment_column(8).map_err(err)?, 4),
            format!("{f} binomial invariance"),
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("paper displays reproduced exactly", displays),
        (
            "tridiagonal production matrices, closed-form Z and A",
            tridiagonal_and_za,
        ),
        (
            "analytic and ladder production matrices agree",
            cross_method,
        ),
        (
            "continued fractions, inverse arrays and permutations agree",
            four_ways,
        ),
        ("Hankel determinants and product formulas", hankel),
        ("Stirling formulas and bridge factorization", stirling),
        ("once-shifted families", shifted),
        ("specializations of F_n(x, y)", specializations),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {title} ({secs:.2} s)", i + 1),
            Err(w) => {
                failed += 1;
                println!("criterion {}: FAIL  {title} ({secs:.2} s): {w}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
