//! Reproduction of a parameter table of symmetric hypergraph product codes
//! `HGP_sy(H^T H)` from a directory of seed matrices.
//!
//! The directory holds `row<N>.txt` seed matrices and an `expected.json`
//! listing `{name, n, k, rate, d, w}` per row.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2linalg::BinaryMatrix;
use crate::hgp::{CodeParams, HgpCode};

/// The printed rate carries two decimals, so it is compared to within one
/// unit of the last digit; `n`, `k`, `d` and `w` are compared exactly.
pub const RATE_TOLERANCE: f64 = 0.01;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub rate: f64,
    pub d: usize,
    pub w: usize,
}

#[derive(Deserialize)]
struct ExpectedFile {
    rows: Vec<ExpectedRow>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RowReport {
    pub name: String,
    pub seed_shape: (usize, usize),
    pub expected: ExpectedRow,
    pub computed: CodeParams,
    pub matches: bool,
    pub mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableReport {
    pub rows: Vec<RowReport>,
    pub matched: usize,
    pub total: usize,
    pub rate_tolerance: f64,
}

impl TableReport {
    pub fn all_match(&self) -> bool {
        self.matched == self.total
    }
}

pub fn read_matrix(path: &Path) -> Result<BinaryMatrix> {
    fs::read_to_string(path)?.parse()
}

/// Compares the parameters of `HGP_sy(H^T H)` for `seed` with `expected`.
pub fn check_row(seed: &BinaryMatrix, expected: &ExpectedRow) -> Result<RowReport> {
    let code = HgpCode::symmetric_square(seed);
    let computed = code.params(true)?;
    let mut mismatches = Vec::new();
    let mut notes = Vec::new();
    let mut exact = |what: &str, want: usize, got: Option<usize>| {
        if got != Some(want) {
            let got = got.map_or_else(|| "none".to_string(), |g| g.to_string());
            mismatches.push(format!("{what}: expected {want}, computed {got}"));
        }
    };
    exact("n", expected.n, Some(computed.n));
    exact("k", expected.k, Some(computed.k));
    exact("d", expected.d, computed.d.and_then(|d| d.finite()));
    exact("w", expected.w, Some(computed.max_stab_weight));
    if (computed.rate - expected.rate).abs() >= RATE_TOLERANCE {
        mismatches.push(format!(
            "k/n: expected {:.2}, computed {:.4}",
            expected.rate, computed.rate
        ));
    } else if format!("{:.2}", computed.rate) != format!("{:.2}", expected.rate) {
        notes.push(format!(
            "k/n = {}/{} = {:.5} rounds to {:.2}, listed as {:.2}",
            computed.k, computed.n, computed.rate, computed.rate, expected.rate
        ));
    }
    Ok(RowReport {
        name: expected.name.clone(),
        seed_shape: seed.shape(),
        expected: expected.clone(),
        matches: mismatches.is_empty(),
        computed,
        mismatches,
        notes,
    })
}

/// Recomputes every row listed in `dir/expected.json` from `dir/<name>.txt`.
pub fn reproduce_table(dir: &Path) -> Result<TableReport> {
    let listing = dir.join("expected.json");
    if !listing.is_file() {
        return Err(Error::Fixture(format!("{} not found", listing.display())));
    }
    let expected: ExpectedFile = serde_json::from_str(&fs::read_to_string(&listing)?)?;
    if expected.rows.is_empty() {
        return Err(Error::Fixture(format!(
            "{} lists no rows",
            listing.display()
        )));
    }
    let rows = expected
        .rows
        .iter()
        .map(|e| check_row(&read_matrix(&dir.join(format!("{}.txt", e.name)))?, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableReport {
        matched: rows.iter().filter(|r| r.matches).count(),
        total: rows.len(),
        rows,
        rate_tolerance: RATE_TOLERANCE,
    })
}

/// The bundled fixture directory.
pub fn fixture_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/seed_table"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_row() {
        let seed = read_matrix(&fixture_dir().join("row1.txt")).unwrap();
        let want = ExpectedRow {
            name: "row1".into(),
            n: 98,
            k: 32,
            rate: 0.33,
            d: 3,
            w: 8,
        };
        let r = check_row(&seed, &want).unwrap();
        assert!(r.matches, "{:?}", r.mismatches);
        let wrong = ExpectedRow { k: 30, ..want };
        assert_eq!(check_row(&seed, &wrong).unwrap().mismatches.len(), 1);
    }

    #[test]
    fn missing_listing() {
        let dir = std::env::temp_dir().join("hgp-core-empty-table");
        fs::create_dir_all(&dir).unwrap();
        assert!(matches!(reproduce_table(&dir), Err(Error::Fixture(_))));
    }
}
