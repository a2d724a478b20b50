//! Named seed matrices used throughout the examples and tests.

use crate::f2linalg::BinaryMatrix;

fn m<const C: usize>(rows: &[[u8; C]]) -> BinaryMatrix {
    BinaryMatrix::from_rows(rows).expect("static seed matrix is well formed")
}

/// Full-rank parity checks of the length-3 repetition code, `[3, 1, 3]`.
pub fn h_rep() -> BinaryMatrix {
    m(&[[1, 1, 0], [0, 1, 1]])
}

/// 3x3 circulant whose square product is the distance-3 toric code.
pub fn h_toric() -> BinaryMatrix {
    m(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]])
}

/// The rows of [`h_toric`] reordered so that the matrix equals its transpose;
/// it yields the same toric code.
pub fn h_toric_symmetric() -> BinaryMatrix {
    m(&[[1, 1, 0], [1, 0, 1], [0, 1, 1]])
}

/// Non-full-rank 4x7 parity-check matrix of a `[7, 4, 3]` Hamming code.
pub fn h_tilde() -> BinaryMatrix {
    m(&[
        [1, 1, 0, 1, 1, 0, 0],
        [1, 0, 1, 1, 0, 1, 0],
        [0, 1, 1, 1, 0, 0, 1],
        [1, 0, 1, 0, 1, 0, 1],
    ])
}

/// Full-rank 3x7 parity-check matrix of the `[7, 4, 3]` Hamming code.
pub fn hamming() -> BinaryMatrix {
    m(&[
        [1, 1, 1, 0, 1, 0, 0],
        [1, 0, 1, 1, 0, 1, 0],
        [0, 1, 1, 1, 0, 0, 1],
    ])
}

/// `H^T H`, which is symmetric for any `H`.
pub fn gram(h: &BinaryMatrix) -> BinaryMatrix {
    h.transpose().mul(h).expect("shapes agree")
}
