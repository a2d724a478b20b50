#![allow(dead_code)]

pub mod dense;

use hgp_core::BinaryMatrix;
use proptest::prelude::*;

/// Rank by textbook row reduction over plain byte rows.
pub fn oracle_rank(rows: &[Vec<u8>]) -> usize {
    oracle_rref(rows).1.len()
}

/// Reduced row echelon form and its pivot columns.
pub fn oracle_rref(rows: &[Vec<u8>]) -> (Vec<Vec<u8>>, Vec<usize>) {
    let mut a: Vec<Vec<u8>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] == 1) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && a[i][c] == 1 {
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Kernel basis from the reduced echelon form: one vector per free column.
pub fn oracle_kernel(rows: &[Vec<u8>], cols: usize) -> Vec<Vec<u8>> {
    let (rref, pivots) = oracle_rref(rows);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u8; cols];
            v[free] = 1;
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = row[free];
            }
            v
        })
        .collect()
}

pub fn to_rows(m: &BinaryMatrix) -> Vec<Vec<u8>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| u8::from(m.get(r, c))).collect())
        .collect()
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    proptest::collection::vec(proptest::collection::vec(0u8..2, cols), rows)
        .prop_map(|r| BinaryMatrix::from_rows(&r).unwrap())
}

pub fn any_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| matrix(r, c))
}

/// The three correctness points of the strongly lower triangular reduction,
/// checked against the byte-row oracle: independent columns form a basis of
/// the column span, the kernel vectors form a basis of the kernel, and the
/// unit vectors at the pivots complement the row space.
pub fn reduction_points(h: &BinaryMatrix) -> Result<(), String> {
    let t = hgp_core::strong_triangular_reduce(h);
    let rows = to_rows(h);
    let r = oracle_rank(&rows);
    let cols: Vec<usize> = t.independent_columns().iter().map(|c| c - 1).collect();
    if cols.len() != r || oracle_rank(&to_rows(&h.select_columns(&cols))) != r {
        return Err("independent columns are not a basis of the column span".into());
    }
    let kernel: Vec<Vec<u8>> = t
        .kernel_basis()
        .iter()
        .map(|v| v.iter().map(u8::from).collect())
        .collect();
    let in_kernel = t
        .kernel_basis()
        .iter()
        .all(|v| h.mul_vec(v).unwrap().is_zero());
    if !in_kernel || kernel.len() != h.cols() - r || oracle_rank(&kernel) != kernel.len() {
        return Err("kernel vectors are not a basis of the kernel".into());
    }
    let mut stacked = rows;
    stacked.extend(
        t.complement_basis()
            .iter()
            .map(|v| v.iter().map(u8::from).collect::<Vec<u8>>()),
    );
    if oracle_rank(&stacked) != h.cols() {
        return Err("pivot unit vectors do not complement the row space".into());
    }
    Ok(())
}

pub fn random_matrix(rng: &mut impl rand::Rng, rows: usize, cols: usize) -> BinaryMatrix {
    let rows: Vec<Vec<u8>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..2)).collect())
        .collect();
    BinaryMatrix::from_rows(&rows).unwrap()
}

/// Minimum weight of a nontrivial X- or Z-type logical operator, by
/// enumerating every vector of the ambient space.
pub fn brute_force_quantum_distance(code: &hgp_core::HgpCode) -> usize {
    use hgp_core::{BitVector, RowSpace};
    let n = code.n_qubits();
    let (hx, hz) = (code.hx(), code.hz());
    let zs = RowSpace::new(n, hz.row_vectors().iter().cloned());
    let xs = RowSpace::new(n, hx.row_vectors().iter().cloned());
    let mut best = usize::MAX;
    for m in 1u64..1 << n {
        let w = m.count_ones() as usize;
        if w >= best {
            continue;
        }
        let v = BitVector::from_bits((0..n).map(|q| m >> q & 1 == 1));
        let z_logical = hx.mul_vec(&v).unwrap().is_zero() && !zs.contains(&v);
        let x_logical = hz.mul_vec(&v).unwrap().is_zero() && !xs.contains(&v);
        if z_logical || x_logical {
            best = w;
        }
    }
    best
}
