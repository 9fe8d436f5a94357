//! Browser bindings. Every exported function returns a JSON string, either
//! the result or `{"error": "..."}`, so the page never has to catch.
//!
//! Substitution arguments are rational literals such as `2` or `-1/3`; an
//! empty string leaves the variable symbolic.

use eulerian_moments::production::{compute_za, production_analytic, tridiagonal_witness};
use eulerian_moments::{Family, MultiPoly, Rational, Var};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest size the page may request; keeps symbolic work interactive.
pub const MAX_N: usize = 10;

#[derive(Serialize)]
struct ErrorJson {
    error: String,
}

#[derive(Serialize)]
struct MomentsJson {
    family: &'static str,
    n: usize,
    entries: Vec<String>,
}

#[derive(Serialize)]
struct MatrixJson {
    family: &'static str,
    n: usize,
    rows: Vec<Vec<String>>,
    tridiagonal: bool,
}

#[derive(Serialize)]
struct TriangleJson {
    n: usize,
    rows: Vec<Vec<String>>,
}

fn respond<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&ErrorJson { error }),
    }
    .expect("serializable response")
}

fn check_n(n: usize) -> Result<(), String> {
    if n > MAX_N {
        return Err(format!("n = {n} is above the demo limit {MAX_N}"));
    }
    Ok(())
}

fn parse_subs(x: &str, y: &str, k: &str) -> Result<Vec<(Var, Rational)>, String> {
    let mut out = Vec::new();
    for (v, s) in [(Var::X, x), (Var::Y, y), (Var::K, k)] {
        let s = s.trim();
        if s.is_empty() {
            continue;
        }
        let value = s
            .parse::<MultiPoly>()
            .map_err(|e| e.to_string())?
            .as_constant()
            .ok_or_else(|| format!("{v} must be a rational number, got `{s}`"))?;
        out.push((v, value));
    }
    Ok(out)
}

fn apply(p: &MultiPoly, subs: &[(Var, Rational)]) -> String {
    subs.iter()
        .fold(p.clone(), |acc, (v, r)| acc.substitute_rational(*v, r))
        .to_string()
}

/// Moments `0..=n` of a named array (its initial column).
#[wasm_bindgen]
pub fn moments(family: &str, n: usize, x: &str, y: &str, k: &str) -> String {
    respond((|| {
        check_n(n)?;
        let fam: Family = family
            .parse()
            .map_err(|e: eulerian_moments::Error| e.to_string())?;
        let subs = parse_subs(x, y, k)?;
        let column = fam
            .build(n.max(1))
            .and_then(|p| p.moment_column(n))
            .map_err(|e| e.to_string())?;
        Ok(MomentsJson {
            family: fam.name(),
            n,
            entries: column.iter().map(|p| apply(p, &subs)).collect(),
        })
    })())
}

/// The `n x n` production matrix of a named array.
#[wasm_bindgen]
pub fn production_matrix(family: &str, n: usize, x: &str, y: &str, k: &str) -> String {
    respond((|| {
        check_n(n)?;
        let fam: Family = family
            .parse()
            .map_err(|e: eulerian_moments::Error| e.to_string())?;
        let subs = parse_subs(x, y, k)?;
        let p = fam
            .build(n.max(1))
            .and_then(|pair| compute_za(&pair))
            .and_then(|za| production_analytic(&za, n))
            .map_err(|e| e.to_string())?;
        Ok(MatrixJson {
            family: fam.name(),
            n,
            tridiagonal: tridiagonal_witness(&p).is_none(),
            rows: p
                .rows()
                .iter()
                .map(|r| r.iter().map(|e| apply(e, &subs)).collect())
                .collect(),
        })
    })())
}

/// Rows `0..=n` of the bridge array `[1, z - ln((e^(xz) - x e^z)/(1 - x))]`,
/// the coefficients in `y` of the Savage-Viswanathan polynomials.
#[wasm_bindgen]
pub fn bridge_triangle(n: usize, x: &str) -> String {
    respond((|| {
        check_n(n)?;
        let subs = parse_subs(x, "", "")?;
        let t = Family::StirlingBridge
            .build(n.max(1))
            .and_then(|p| p.realize(n + 1))
            .map_err(|e| e.to_string())?;
        Ok(TriangleJson {
            n,
            rows: t
                .rows()
                .iter()
                .map(|r| r.iter().map(|e| apply(e, &subs)).collect())
                .collect(),
        })
    })())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::{json, Value};

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn moments_json() {
        let v = parse(moments("sv", 3, "", "", ""));
        assert_eq!(
            v["entries"],
            json!(["1", "y", "x*y + y^2", "x^2*y + 3*x*y^2 + y^3 + x*y"])
        );
        let v = parse(moments("keuler", 2, "", "", "1"));
        assert_eq!(v["entries"], json!(["1", "1", "x + 1"]));
        let v = parse(moments("sv", 4, "2", "1", ""));
        assert_eq!(v["entries"], json!(["1", "1", "3", "13", "75"]));
    }

    #[test]
    fn production_json() {
        let v = parse(production_matrix("keuler", 3, "", "", ""));
        assert_eq!(v["tridiagonal"], true);
        assert_eq!(v["rows"][1], json!(["x*k", "x*k + k + 1", "1"]));
        let v = parse(production_matrix("bridge", 4, "", "", ""));
        assert_eq!(v["tridiagonal"], false);
    }

    #[test]
    fn bridge_json() {
        let v = parse(bridge_triangle(6, "2"));
        assert_eq!(
            v["rows"][6],
            json!(["0", "1082", "2040", "1230", "300", "30", "1"])
        );
        let v = parse(bridge_triangle(2, ""));
        assert_eq!(v["rows"][2], json!(["0", "x", "1"]));
    }

    #[test]
    fn errors_are_json() {
        assert!(parse(moments("nope", 2, "", "", ""))["error"].is_string());
        assert!(parse(moments("sv", 2, "q", "", ""))["error"].is_string());
        assert!(parse(bridge_triangle(11, ""))["error"].is_string());
    }
}
