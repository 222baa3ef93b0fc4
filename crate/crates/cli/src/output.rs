// SPDX-License-Identifier: Apache-2.0

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde_json::Value;

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Writes through a temporary file in the destination directory so readers
/// never see a partial file.
pub fn write_output(path: Option<&Path>, contents: &str) -> Result<()> {
    let Some(path) = path else {
        std::io::stdout().write_all(contents.as_bytes())?;
        return Ok(());
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("writing {}", path.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Requirement rows against test columns, with the support counts.
pub fn render_matrix(matrix: &Value) -> String {
    let columns: Vec<&str> = matrix
        .get("columns")
        .and_then(Value::as_array)
        .map(|c| c.iter().filter_map(Value::as_str).collect())
        .unwrap_or_default();
    let mut table: Vec<Vec<String>> = vec![std::iter::once(String::new())
        .chain(columns.iter().map(|c| c.to_string()))
        .collect()];
    if let Some(rows) = matrix.get("rows").and_then(Value::as_object) {
        for (r, cells) in rows {
            let mut line = vec![r.clone()];
            for c in &columns {
                let grade = cells.get(*c).and_then(Value::as_str).unwrap_or("-");
                let support = matrix
                    .pointer(&format!("/support/{r}/{}", c.replace('~', "~0").replace('/', "~1")))
                    .and_then(Value::as_str);
                line.push(match support {
                    Some(s) if grade != "none" => format!("{grade} {s}"),
                    _ => grade.to_string(),
                });
            }
            table.push(line);
        }
    }
    let widths: Vec<usize> = (0..=columns.len())
        .map(|i| table.iter().map(|row| row[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &table {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        out += cells.join("  ").trim_end();
        out += "\n";
    }
    if let Some(ok) = matrix.get("meets_reference").and_then(Value::as_bool) {
        out += &format!("reference table: {}\n", if ok { "met" } else { "NOT met" });
    }
    out
}
