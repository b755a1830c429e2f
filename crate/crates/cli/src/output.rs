use std::fmt::Display;

use heckeform::exact::Coeff;
use heckeform::linalg::Matrix;
use serde::Serialize;

use crate::CliError;

pub fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Output(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Output(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

#[derive(Serialize)]
struct Entry {
    i: usize,
    j: usize,
    value: String,
}

/// One CSV row per nonzero entry.
pub fn matrix_csv<C: Coeff + Display>(m: &Matrix<C>) -> Result<String, CliError> {
    let rows: Vec<Entry> = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !m.get(i, j).is_zero())
        .map(|(i, j)| Entry {
            i,
            j,
            value: m.get(i, j).to_string(),
        })
        .collect();
    csv_rows(&rows)
}

/// Column-aligned text rendering.
pub fn matrix_pretty<C: Coeff + Display>(m: &Matrix<C>) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str("[ ");
        out.push_str(&line.join("  "));
        out.push_str(" ]\n");
    }
    out
}
