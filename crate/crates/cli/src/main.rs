//! `emoments`: emit, inspect and verify the moment arrays from the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a usage
//! error (bad flags, unknown names, sizes beyond `--order`).

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eulerian_moments::combinat::perm_stats;
use eulerian_moments::hankel::{
    hankel_closed_keuler, hankel_closed_sv, hankel_det, hankel_from_betas,
};
use eulerian_moments::matrix::render_row;
use eulerian_moments::production::{
    compute_za, production_analytic, production_ladder, tridiagonal_witness, ttr_of,
};
use eulerian_moments::verify::{parse_claims, run_claims, ClaimId};
use eulerian_moments::{
    Error, Family, Matrix, MultiPoly, Rational, RiordanPair, TriMatrix, Var, DEFAULT_ORDER,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "emoments",
    version,
    about = "Exact moment computations for 1/k-Eulerian and Savage-Viswanathan polynomials"
)]
struct Cli {
    /// Truncation order for all series; every size is validated against it.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Clone, Default)]
struct Subs {
    /// Substitute a rational value for x.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Substitute a rational value for y.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Substitute a rational value for k.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the initial column of a named array (the moments, for moment arrays).
    Emit {
        #[arg(long)]
        family: String,
        /// Last index printed.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        subs: Subs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run claims from the registry (comma-separated ids, or `all`).
    Verify {
        #[arg(long, default_value = "all")]
        claim: String,
        /// Size parameter passed to every selected claim instead of its default.
        #[arg(long)]
        n: Option<usize>,
        /// Run the selected claims on separate threads.
        #[arg(long)]
        parallel: bool,
        /// Include elapsed times in the report.
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the claim registry.
    Claims,
    /// Print rows 0..=n of a triangle.
    Triangle {
        /// bridge, stirling1, stirling2, a079641-product, x3-product,
        /// production-keuler, production-sv, or any family name.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        subs: Subs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the n x n production matrix of a named array.
    Production {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Analytic)]
        method: Method,
        #[command(flatten)]
        subs: Subs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hankel determinants h_0..=h_n of a moment array's moments.
    Hankel {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Excedance/cycle histogram over all permutations of n letters.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Analytic,
    Ladder,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let order = cli.order;
    match cli.command {
        Command::Emit {
            family,
            n,
            subs,
            format,
        } => emit(order, &family, n, &subs, format),
        Command::Verify {
            claim,
            n,
            parallel,
            timings,
            format,
        } => verify(order, &claim, n, parallel, timings, format),
        Command::Claims => {
            for id in ClaimId::ALL {
                let c = id.claim();
                println!("{:<20} n = {:<2} {}", id.name(), c.default_n, c.description);
            }
            Ok(())
        }
        Command::Triangle {
            name,
            n,
            subs,
            format,
        } => triangle(order, &name, n, &subs, format),
        Command::Production {
            family,
            n,
            method,
            subs,
            format,
        } => production(order, &family, n, method, &subs, format),
        Command::Hankel { family, n, format } => hankel(order, &family, n, format),
        Command::Oracle { n, format } => oracle(n, format),
    }
}

fn check_order(order: usize, need: usize) -> CmdResult {
    if need > order {
        return Err(Error::InsufficientOrder { have: order, need }.into());
    }
    Ok(())
}

/// Parsed substitutions, in `x, y, k` order.
fn parse_subs(subs: &Subs) -> Result<Vec<(Var, Rational)>, Failure> {
    let mut out = Vec::new();
    for (v, s) in [(Var::X, &subs.x), (Var::Y, &subs.y), (Var::K, &subs.k)] {
        if let Some(s) = s {
            let value = s.parse::<MultiPoly>()?.as_constant().ok_or_else(|| {
                Failure::Usage(format!("--{v} expects a rational number, got `{s}`"))
            })?;
            out.push((v, value));
        }
    }
    Ok(out)
}

fn apply(p: &MultiPoly, subs: &[(Var, Rational)]) -> MultiPoly {
    subs.iter()
        .fold(p.clone(), |acc, (v, r)| acc.substitute_rational(*v, r))
}

fn subs_json(subs: &[(Var, Rational)]) -> BTreeMap<String, String> {
    subs.iter()
        .map(|(v, r)| (v.to_string(), r.to_string()))
        .collect()
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

#[derive(Serialize)]
struct EmitOutput {
    family: String,
    n: usize,
    entries: Vec<String>,
    substitutions: BTreeMap<String, String>,
}

fn emit(order: usize, family: &str, n: usize, subs: &Subs, format: Format) -> CmdResult {
    let fam: Family = family.parse()?;
    let subs = parse_subs(subs)?;
    check_order(order, n)?;
    let column = fam.build(n.max(1))?.moment_column(n)?;
    let entries: Vec<String> = column.iter().map(|p| apply(p, &subs).to_string()).collect();
    match format {
        Format::Text => entries.iter().for_each(|e| println!("{e}")),
        Format::Json => print_json(&EmitOutput {
            family: fam.name().to_string(),
            n,
            entries,
            substitutions: subs_json(&subs),
        }),
    }
    Ok(())
}

#[derive(Serialize)]
struct ReportJson {
    claim: String,
    status: String,
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

fn verify(
    order: usize,
    claim: &str,
    n: Option<usize>,
    parallel: bool,
    timings: bool,
    format: Format,
) -> CmdResult {
    let ids = parse_claims(claim)?;
    let reports = run_claims(&ids, n, order, parallel)?;
    let all_pass = reports.iter().all(|r| r.passed());
    match format {
        Format::Text => {
            for r in &reports {
                let mut line = format!("{:<20} {}", r.claim, r.status);
                if timings {
                    line.push_str(&format!(" ({:.1} ms)", r.elapsed.as_secs_f64() * 1e3));
                }
                if let Some(w) = &r.witness {
                    line.push_str(&format!(": {w}"));
                }
                println!("{line}");
            }
        }
        Format::Json => print_json(
            &reports
                .iter()
                .map(|r| ReportJson {
                    claim: r.claim.to_string(),
                    status: r.status.to_string(),
                    witness: r.witness.clone(),
                    elapsed_ms: timings.then_some(r.elapsed.as_secs_f64() * 1e3),
                })
                .collect::<Vec<_>>(),
        ),
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct RowsOutput {
    name: String,
    n: usize,
    rows: Vec<Vec<String>>,
    substitutions: BTreeMap<String, String>,
}

fn print_rows(
    name: &str,
    n: usize,
    rows: &[Vec<MultiPoly>],
    subs: &[(Var, Rational)],
    format: Format,
) {
    let rows: Vec<Vec<MultiPoly>> = rows
        .iter()
        .map(|r| r.iter().map(|p| apply(p, subs)).collect())
        .collect();
    match format {
        Format::Text => rows.iter().for_each(|r| println!("{}", render_row(r))),
        Format::Json => print_json(&RowsOutput {
            name: name.to_string(),
            n,
            rows: rows
                .iter()
                .map(|r| r.iter().map(MultiPoly::to_string).collect())
                .collect(),
            substitutions: subs_json(subs),
        }),
    }
}

fn lower_triangle(t: &TriMatrix) -> Vec<Vec<MultiPoly>> {
    t.rows().to_vec()
}

fn full_rows(m: &Matrix) -> Vec<Vec<MultiPoly>> {
    m.rows().to_vec()
}

fn triangle(order: usize, name: &str, n: usize, subs: &Subs, format: Format) -> CmdResult {
    let subs = parse_subs(subs)?;
    let o = n.max(1);
    let product = |a: i64| -> Result<TriMatrix, Failure> {
        Ok(RiordanPair::stirling2_generalized(&MultiPoly::int(a), o)?
            .multiply(&RiordanPair::stirling1_unsigned(o))?
            .realize(n + 1)?)
    };
    let rows = match name {
        "stirling1" => {
            check_order(order, n)?;
            lower_triangle(&RiordanPair::stirling1_unsigned(o).realize(n + 1)?)
        }
        "stirling2" => {
            check_order(order, n)?;
            let a: MultiPoly = "x - 1".parse()?;
            lower_triangle(&RiordanPair::stirling2_generalized(&a, o)?.realize(n + 1)?)
        }
        "a079641-product" => {
            check_order(order, n)?;
            lower_triangle(&product(1)?)
        }
        "x3-product" => {
            check_order(order, n)?;
            lower_triangle(&product(2)?)
        }
        "production-keuler" | "production-sv" => {
            check_order(order, n + 1)?;
            let fam = if name == "production-keuler" {
                Family::KeulerMoment
            } else {
                Family::SvMoment
            };
            full_rows(&production_analytic(
                &compute_za(&fam.build(n + 1)?)?,
                n + 1,
            )?)
        }
        other => {
            let fam: Family = other.parse()?;
            check_order(order, n)?;
            lower_triangle(&fam.build(o)?.realize(n + 1)?)
        }
    };
    print_rows(name, n, &rows, &subs, format);
    Ok(())
}

fn production(
    order: usize,
    family: &str,
    n: usize,
    method: Method,
    subs: &Subs,
    format: Format,
) -> CmdResult {
    let fam: Family = family.parse()?;
    let subs = parse_subs(subs)?;
    check_order(order, n)?;
    let pair = fam.build(n.max(1))?;
    let p = match method {
        Method::Analytic => production_analytic(&compute_za(&pair)?, n)?,
        Method::Ladder => production_ladder(&pair, n)?,
    };
    print_rows(fam.name(), n, &full_rows(&p), &subs, format);
    if let Format::Text = format {
        match tridiagonal_witness(&p) {
            None => println!("tridiagonal: yes"),
            Some((r, c)) => println!("tridiagonal: no, entry ({r}, {c}) is {}", p.get(r, c)),
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct HankelJson {
    family: String,
    n: usize,
    determinants: Vec<String>,
    beta_products: Vec<String>,
    closed_forms: Option<Vec<String>>,
}

fn hankel(order: usize, family: &str, n: usize, format: Format) -> CmdResult {
    let fam: Family = family.parse()?;
    check_order(order, 2 * n)?;
    let pair = fam.build((2 * n).max(1))?;
    let moments = pair.moment_column(2 * n)?;
    let dets = (0..=n)
        .map(|m| hankel_det(&moments, m))
        .collect::<Result<Vec<_>, _>>()?;
    let betas = match ttr_of(&pair, n + 1) {
        Ok(t) => (0..=n)
            .map(|m| hankel_from_betas(&t.beta, m))
            .collect::<Result<Vec<_>, _>>()?,
        Err(e) => return Err(Failure::Usage(format!("{fam} has no recurrence data: {e}"))),
    };
    let closed: Option<Vec<MultiPoly>> = match fam {
        Family::KeulerMoment => Some((0..=n).map(hankel_closed_keuler).collect()),
        Family::SvMoment => Some((0..=n).map(hankel_closed_sv).collect()),
        _ => None,
    };
    let consistent = dets == betas && closed.as_ref().is_none_or(|c| *c == dets);
    match format {
        Format::Text => {
            for (m, d) in dets.iter().enumerate() {
                println!("h{m} = {d}");
            }
            println!(
                "beta product: {}",
                if dets == betas { "match" } else { "MISMATCH" }
            );
            if let Some(c) = &closed {
                println!(
                    "closed form: {}",
                    if *c == dets { "match" } else { "MISMATCH" }
                );
            }
        }
        Format::Json => print_json(&HankelJson {
            family: fam.name().to_string(),
            n,
            determinants: dets.iter().map(MultiPoly::to_string).collect(),
            beta_products: betas.iter().map(MultiPoly::to_string).collect(),
            closed_forms: closed.map(|c| c.iter().map(MultiPoly::to_string).collect()),
        }),
    }
    if consistent {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct OracleJson {
    n: usize,
    histogram: Vec<(u32, u32, u64)>,
    polynomial: String,
}

fn oracle(n: usize, format: Format) -> CmdResult {
    let stats = perm_stats(n)?;
    match format {
        Format::Text => {
            println!("exc cyc count");
            for (&(e, c), count) in &stats.histogram {
                println!("{e:>3} {c:>3} {count:>5}");
            }
            println!("F_{n} = {}", stats.polynomial());
        }
        Format::Json => print_json(&OracleJson {
            n,
            histogram: stats
                .histogram
                .iter()
                .map(|(&(e, c), &count)| (e, c, count))
                .collect(),
            polynomial: stats.polynomial().to_string(),
        }),
    }
    Ok(())
}
