//! Workloads shared by the benchmarks.

use hgp_core::table::{fixture_dir, read_matrix};
use hgp_core::{canonical_basis, seeds, BinaryMatrix, CanonicalBasis, HgpCode};

/// Seed matrix of a bundled table row, `row` counted from 1.
pub fn table_seed(row: usize) -> BinaryMatrix {
    read_matrix(&fixture_dir().join(format!("row{row}.txt"))).expect("bundled fixture")
}

/// The symmetric code built from the 4x7 Hamming check matrix, with its basis.
pub fn symmetric_hamming() -> (HgpCode, CanonicalBasis) {
    let code = HgpCode::symmetric_square(&seeds::h_tilde());
    let basis = canonical_basis(&code);
    (code, basis)
}
