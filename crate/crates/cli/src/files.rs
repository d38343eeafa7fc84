//! File formats: matrices and coordinate lists as UTF-8 JSON with strict
//! rational entries ("p" or "p/q", q > 0 — never floats).

use serde::Deserialize;
use std::path::Path;
use wronsky::scalar::parse_rat;
use wronsky::{Error, MatQ, Rat, Result};

#[derive(Deserialize)]
struct MatrixFile {
    n: usize,
    m: usize,
    rows: Vec<Vec<String>>,
}

pub fn read_matrix(path: &Path) -> Result<MatQ> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad matrix file {}: {e}", path.display())))?;
    if file.rows.len() != file.n {
        return Err(Error::Parse(format!(
            "matrix file declares n={} but has {} rows",
            file.n,
            file.rows.len()
        )));
    }
    let mut entries: Vec<Rat> = Vec::with_capacity(file.n * file.m);
    for (i, row) in file.rows.iter().enumerate() {
        if row.len() != file.m {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected m={}",
                i + 1,
                row.len(),
                file.m
            )));
        }
        for cell in row {
            entries.push(parse_rat(cell)?);
        }
    }
    MatQ::new(file.n, file.m, entries)
}

pub fn read_coords(path: &Path) -> Result<Vec<Rat>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let raw: Vec<String> = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad coordinates file {}: {e}", path.display())))?;
    raw.iter().map(|s| parse_rat(s)).collect()
}
