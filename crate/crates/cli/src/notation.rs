//! Textual input and output forms: label parsing and compact coefficients.

use anyhow::{bail, ensure, Context, Result};
use qhowe_core::fock::ModuleVector;
use qhowe_core::indexsets::{Flavor, IndexMatrix};
use qhowe_core::ring::LaurentScalar;

/// Parses a label either as JSON rows (`[[0,0],[1,1]]`, B/C rows listed from
/// the lowest index) or as an E-sum (`3E00`, `E00+E01^θ`, `E-1,1^θ`).
pub fn parse_label(flavor: Flavor, m: usize, n: usize, text: &str) -> Result<IndexMatrix> {
    let text = text.trim();
    let rows: Vec<Vec<u32>> = if text.starts_with('[') {
        serde_json::from_str(text).with_context(|| format!("label {text:?} is not a JSON row list"))?
    } else {
        ensure!(flavor.is_symmetric(), "E-sum labels are only accepted for B/C flavors");
        e_sum_rows(m, n, text)?
    };
    let a = IndexMatrix::from_rows(flavor, &rows)?;
    ensure!(a.m() == m && a.n() == n, "label {text:?} does not have shape {m}x{n}");
    Ok(a)
}

fn e_sum_rows(m: usize, n: usize, text: &str) -> Result<Vec<Vec<u32>>> {
    let (mi, ni) = (m as i32, n as i32);
    let mut rows = vec![vec![0u32; 2 * n + 1]; 2 * m + 1];
    for term in text.split('+') {
        let term = term.trim();
        let body = term.strip_suffix("^θ").unwrap_or(term);
        let (coef, idx) = body
            .split_once('E')
            .with_context(|| format!("term {term:?} has no E"))?;
        let coef: u32 = if coef.is_empty() { 1 } else { coef.parse()? };
        let (i, j): (i32, i32) = match idx.split_once(',') {
            Some((i, j)) => (i.parse()?, j.parse()?),
            None => {
                let digits: Vec<i32> = idx
                    .chars()
                    .map(|c| c.to_digit(10).map(|x| x as i32))
                    .collect::<Option<_>>()
                    .with_context(|| format!("bad index in {term:?}"))?;
                match digits.as_slice() {
                    [i, j] => (*i, *j),
                    _ => bail!("index in {term:?} needs two digits or a comma"),
                }
            }
        };
        ensure!(i.abs() <= mi && j.abs() <= ni, "index ({i},{j}) out of range");
        let mut put = |i: i32, j: i32| rows[(i + mi) as usize][(j + ni) as usize] += coef;
        put(i, j);
        if (i, j) != (0, 0) {
            put(-i, -j);
        }
    }
    Ok(rows)
}

/// `[n]`, `q^k`, `-q^k*[n]`, ... when the coefficient has that shape, and
/// the parenthesized canonical form otherwise.
pub fn compact(c: &LaurentScalar) -> String {
    let Some((x, s, n)) = c.as_quantum_integer() else {
        return format!("({c})");
    };
    let mut parts = Vec::new();
    let unit = x == 1.into() || x == (-1).into();
    if !unit {
        parts.push(x.to_string());
    }
    if s != 0 {
        parts.push(format!("q^{s}"));
    }
    if n > 1 {
        parts.push(format!("[{n}]"));
    }
    if parts.is_empty() {
        parts.push("1".into());
    }
    let body = parts.join("*");
    if x < 0.into() && unit {
        format!("-{body}")
    } else {
        body
    }
}

/// Renders Σ c·prefix(label), with type-A labels already bracketed.
pub fn render(v: &ModuleVector, prefix: &str) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.terms()
        .map(|(a, c)| {
            let label = a.label();
            let body = match (prefix, a.flavor()) {
                ("", Flavor::A) => label,
                ("", _) => format!("[{label}]"),
                (p, _) => format!("{p}({label})"),
            };
            if c.is_one() {
                body
            } else {
                format!("{} * {body}", compact(c))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
