//! Solution files: `{"n": 4, "g": [[...], ...], "f": [[...], ...]}` with
//! 1-based images, `g[x-1]` the images of `g_x` and `f[y-1]` those of `f_y`.
//!
//! [`write_solution`] emits the canonical layout; parsing and re-writing a
//! canonical file reproduces it byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::solution::YbeSolution;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn table(obj: &serde_json::Map<String, Value>, name: &str, n: usize) -> Result<Vec<Permutation>> {
    let rows = obj
        .get(name)
        .ok_or_else(|| parse_err(format!("missing field \"{name}\"")))?
        .as_array()
        .ok_or_else(|| parse_err(format!("{name}: expected an array of rows")))?;
    if rows.len() != n {
        return Err(Error::Dimension(format!(
            "{name}: expected {n} rows, found {}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let field = format!("{name}[{}]", i + 1);
        let row = row
            .as_array()
            .ok_or_else(|| parse_err(format!("{field}: expected an array")))?;
        if row.len() != n {
            return Err(Error::Dimension(format!(
                "{field}: expected {n} entries, found {}",
                row.len()
            )));
        }
        let mut images = Vec::with_capacity(n);
        for v in row {
            let k = v
                .as_i64()
                .ok_or_else(|| parse_err(format!("{field}: entry {v} is not an integer")))?;
            if k < 1 || k > n as i64 {
                return Err(Error::OutOfRange {
                    field: field.clone(),
                    value: k,
                    n,
                });
            }
            if images.contains(&(k as usize)) {
                return Err(Error::NotBijective {
                    field,
                    detail: format!("duplicate image {k}"),
                });
            }
            images.push(k as usize);
        }
        out.push(Permutation::from_one_based(&images)?);
    }
    Ok(out)
}

/// Parses a solution file. Only the schema is checked here; the axioms are
/// left to [`YbeSolution::validate`].
pub fn parse_solution(text: &str) -> Result<YbeSolution> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| parse_err("expected a JSON object"))?;
    if let Some(key) = obj.keys().find(|k| !["n", "g", "f"].contains(&k.as_str())) {
        return Err(parse_err(format!("unknown field \"{key}\"")));
    }
    let n = obj
        .get("n")
        .ok_or_else(|| parse_err("missing field \"n\""))?
        .as_u64()
        .ok_or_else(|| parse_err("n: expected a positive integer"))?;
    if n == 0 || n > u8::MAX as u64 {
        return Err(Error::Dimension(format!("n = {n} outside 1..=255")));
    }
    let n = n as usize;
    let g = table(obj, "g", n)?;
    let f = table(obj, "f", n)?;
    YbeSolution::from_gf_tables(n, &g, &f)
}

pub fn read_solution(path: &Path) -> Result<YbeSolution> {
    let text =
        std::fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    parse_solution(&text)
}

fn write_table(out: &mut String, table: &[Vec<u8>]) {
    out.push_str("[\n");
    for (i, row) in table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|&v| (v + 1).to_string()).collect();
        let sep = if i + 1 < table.len() { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
    }
    out.push_str("  ]");
}

/// Canonical text of a solution file.
pub fn write_solution(sol: &YbeSolution) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\n  \"n\": {},\n  \"g\": ", sol.n());
    write_table(&mut out, sol.g_table());
    out.push_str(",\n  \"f\": ");
    write_table(&mut out, sol.f_table());
    out.push_str("\n}\n");
    out
}
