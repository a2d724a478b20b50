//! Dense linear algebra over GF(2).
//!
//! Besides the usual rank and Kronecker product, this module implements the
//! strongly lower triangular reduction used to build canonical logical bases:
//! a Gaussian reduction on columns that returns a kernel basis in which every
//! vector has a distinct lowest one (its pivot) and every pivot row is zero in
//! all other basis vectors.

use std::fmt;
use std::str::FromStr;

use crate::bitvec::BitVector;
use crate::error::{Error, Result};

/// A dense binary matrix stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from 0/1 entries. Every row must have the same length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("row has {} entries, expected {cols}", row.len()),
                });
            }
            if let Some(bad) = row.iter().find(|&&b| b > 1) {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("non-binary entry {bad}"),
                });
            }
            data.push(BitVector::from_bits(row.iter().map(|&b| b == 1)));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_row_vectors(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: format!("rows of length {cols}"),
                found: format!("row of length {}", bad.len()),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_column_vectors(rows: usize, columns: &[BitVector]) -> Result<Self> {
        Ok(Self::from_row_vectors(rows, columns.to_vec())?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(r, c)`.
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_bits((0..self.rows).map(|r| self.get(r, c)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn max_row_weight(&self) -> usize {
        self.data.iter().map(BitVector::weight).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows on the right", self.cols),
                found: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: format!("vector of length {}", self.cols),
                found: format!("length {}", v.len()),
            });
        }
        Ok(BitVector::from_bits(self.data.iter().map(|row| row.dot(v))))
    }

    /// A solution `x` of `a x = b`, if one exists.
    pub fn solve(a: &BinaryMatrix, b: &BitVector) -> Option<BitVector> {
        assert_eq!(b.len(), a.rows(), "right-hand side length");
        let n = a.cols();
        // Eliminate on rows augmented with the right-hand side bit.
        let mut rows: Vec<(BitVector, bool)> =
            a.row_vectors().iter().cloned().zip(b.iter()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].0.get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let (pv, pb) = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.0.get(c) {
                    row.0.xor_assign(&pv);
                    row.1 ^= pb;
                }
            }
            pivots.push(c);
            r += 1;
        }
        if rows[r..].iter().any(|(_, bit)| *bit) {
            return None;
        }
        let mut x = BitVector::zeros(n);
        for (t, &c) in pivots.iter().enumerate() {
            x.set(c, rows[t].1);
        }
        Some(x)
    }

    /// Kronecker product. Entry `(i*rows_b + r, j*cols_b + c)` is `a[i,j] & b[r,c]`.
    pub fn kron(&self, other: &BinaryMatrix) -> BinaryMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in self.data[i].ones() {
                for r in 0..other.rows {
                    let dst = &mut out.data[i * other.rows + r];
                    for c in other.data[r].ones() {
                        dst.set(j * other.cols + c, true);
                    }
                }
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows", self.rows),
                found: format!("{} rows", other.rows),
            });
        }
        let cols = self.cols + other.cols;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut row = BitVector::zeros(cols);
                row.splice(0, a);
                row.splice(self.cols, b);
                row
            })
            .collect();
        Ok(Self {
            rows: self.rows,
            cols,
            data,
        })
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{} columns", self.cols),
                found: format!("{} columns", other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps only the listed columns (0-based), in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> BinaryMatrix {
        let data = self
            .data
            .iter()
            .map(|row| BitVector::from_bits(columns.iter().map(|&c| row.get(c))))
            .collect();
        Self {
            rows: self.rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn rank(&self) -> usize {
        RowSpace::new(self.cols, self.data.iter().cloned()).rank()
    }

    pub fn row_space(&self) -> RowSpace {
        RowSpace::new(self.cols, self.data.iter().cloned())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

/// Text form: a `rows cols` header followed by rows of space-separated bits.
impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for row in &self.data {
            let line: Vec<&str> = row.iter().map(|b| if b { "1" } else { "0" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    /// Parses the text form. Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `rows cols` header".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line: hline,
                message: format!("bad dimension {t:?}"),
            })
        };
        let (rows, cols) = match dims.as_slice() {
            [r, c] => (parse_dim(r)?, parse_dim(c)?),
            _ => {
                return Err(Error::Parse {
                    line: hline,
                    message: "header must be `rows cols`".into(),
                })
            }
        };

        let mut data = Vec::with_capacity(rows);
        for (line, text) in lines {
            let mut row = BitVector::zeros(cols);
            let mut count = 0;
            for tok in text.split_whitespace() {
                match tok {
                    "0" => {}
                    "1" if count < cols => row.set(count, true),
                    "1" => {}
                    other => {
                        return Err(Error::Parse {
                            line,
                            message: format!("non-binary symbol {other:?}"),
                        })
                    }
                }
                count += 1;
            }
            if count != cols {
                return Err(Error::Parse {
                    line,
                    message: format!("row has {count} entries, expected {cols}"),
                });
            }
            data.push(row);
        }
        if data.len() != rows {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {rows} rows, found {}", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }
}

/// A row space kept in reduced echelon form, for rank and membership queries.
#[derive(Clone, Debug)]
pub struct RowSpace {
    len: usize,
    basis: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new<I: IntoIterator<Item = BitVector>>(len: usize, vectors: I) -> Self {
        let mut space = Self {
            len,
            basis: Vec::new(),
            pivots: Vec::new(),
        };
        for v in vectors {
            space.insert(v);
        }
        space
    }

    /// Adds a vector; returns whether it increased the dimension.
    pub fn insert(&mut self, mut v: BitVector) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        self.reduce(&mut v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for b in &mut self.basis {
            if b.get(p) {
                b.xor_assign(&v);
            }
        }
        self.basis.push(v);
        self.pivots.push(p);
        true
    }

    /// Reduces `v` modulo the space in place; the result is zero iff `v` was a member.
    pub fn reduce(&self, v: &mut BitVector) {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(b);
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }
}

/// GF(2) rank.
pub fn rank(m: &BinaryMatrix) -> usize {
    m.rank()
}

/// A solution `x` of `a x = b`, if one exists.
pub fn solve(a: &BinaryMatrix, b: &BitVector) -> Option<BitVector> {
    assert_eq!(b.len(), a.rows(), "right-hand side length");
    let n = a.cols();
    // Eliminate on rows augmented with the right-hand side bit.
    let mut rows: Vec<(BitVector, bool)> = a.row_vectors().iter().cloned().zip(b.iter()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0.get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let (pv, pb) = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0.get(c) {
                row.0.xor_assign(&pv);
                row.1 ^= pb;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|(_, bit)| *bit) {
        return None;
    }
    let mut x = BitVector::zeros(n);
    for (t, &c) in pivots.iter().enumerate() {
        x.set(c, rows[t].1);
    }
    Some(x)
}

/// Kronecker product.
pub fn kron(a: &BinaryMatrix, b: &BinaryMatrix) -> BinaryMatrix {
    a.kron(b)
}

/// Output of the strongly lower triangular reduction of a matrix `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularKernel {
    n: usize,
    kernel: Vec<BitVector>,
    pivots: Vec<usize>,
    dependent_columns: Vec<usize>,
}

impl TriangularKernel {
    /// Length of the kernel vectors (number of columns of `h`).
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.kernel.len()
    }

    pub fn kernel_basis(&self) -> &[BitVector] {
        &self.kernel
    }

    /// Pivot rows, 1-based and ascending; `pivot_set()[t]` belongs to `kernel_basis()[t]`.
    pub fn pivot_set(&self) -> &[usize] {
        &self.pivots
    }

    /// The kernel vector whose pivot is the 1-based row `pivot`.
    pub fn vector_for_pivot(&self, pivot: usize) -> Option<&BitVector> {
        self.pivots
            .iter()
            .position(|&p| p == pivot)
            .map(|t| &self.kernel[t])
    }

    /// Unit vectors at the pivot positions, spanning a complement of the row space.
    pub fn complement_basis(&self) -> Vec<BitVector> {
        self.pivots
            .iter()
            .map(|&p| BitVector::unit(self.n, p - 1))
            .collect()
    }

    /// 1-based indices of the columns of `h` that are not pivots; they form a
    /// basis of the column span of `h`.
    pub fn independent_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p - 1] = true;
        }
        (1..=self.n).filter(|&j| !is_pivot[j - 1]).collect()
    }

    /// The kernel basis as the columns of an `n x dim` matrix.
    pub fn kernel_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::from_column_vectors(self.n, &self.kernel)
            .expect("kernel vectors share the ambient length")
    }

    #[doc(hidden)]
    pub fn dependent_columns(&self) -> &[usize] {
        &self.dependent_columns
    }
}

/// Strongly lower triangular Gaussian reduction.
///
/// Sweeps the columns of `h` left to right. For column `j` the pivot search
/// starts again from the first row; if column `j` (as reduced so far) has a one
/// in row `i`, it is added to every later column with a one in row `i`, and the
/// same column operation is mirrored on an identity matrix `K`. Columns that are
/// already zero when reached are the pivots: the matching columns of `K` span
/// the kernel, each with its lowest one on its own index.
pub fn strong_triangular_reduce(h: &BinaryMatrix) -> TriangularKernel {
    let (m, n) = h.shape();
    // Columns of h and of K, each stored as a bit vector.
    let mut hcols: Vec<BitVector> = (0..n).map(|j| h.column(j)).collect();
    let mut kcols: Vec<BitVector> = (0..n).map(|j| BitVector::unit(n, j)).collect();
    let mut is_pivot = vec![true; n];

    for j in 0..n {
        let Some(i) = (0..m).find(|&i| hcols[j].get(i)) else {
            continue;
        };
        is_pivot[j] = false;
        let (head, tail) = hcols.split_at_mut(j + 1);
        let (khead, ktail) = kcols.split_at_mut(j + 1);
        let hj = &head[j];
        let kj = &khead[j];
        for (hl, kl) in tail.iter_mut().zip(ktail.iter_mut()) {
            if hl.get(i) {
                hl.xor_assign(hj);
                kl.xor_assign(kj);
            }
        }
    }

    let pivots: Vec<usize> = (0..n).filter(|&j| is_pivot[j]).collect();
    TriangularKernel {
        n,
        kernel: pivots.iter().map(|&j| kcols[j].clone()).collect(),
        pivots: pivots.iter().map(|&j| j + 1).collect(),
        dependent_columns: (0..n).filter(|&j| !is_pivot[j]).map(|j| j + 1).collect(),
    }
}

/// Pivot rows (1-based, one per column) if `m` is strongly lower triangular.
///
/// Point 3 of the definition allows reordering columns; the check is done
/// without reordering: for a pivot at `(p, j)`, every column whose pivot row is
/// below `p` must have a zero in row `p`.
pub fn strongly_lower_triangular_pivots(m: &BinaryMatrix) -> Option<Vec<usize>> {
    let cols: Vec<BitVector> = (0..m.cols()).map(|c| m.column(c)).collect();
    let mut pivots = Vec::with_capacity(cols.len());
    for col in &cols {
        pivots.push(col.last_one()?);
    }
    let mut seen = vec![false; m.rows()];
    for &p in &pivots {
        if std::mem::replace(&mut seen[p], true) {
            return None;
        }
    }
    for &p in &pivots {
        for (c, &q) in pivots.iter().enumerate() {
            if q > p && cols[c].get(p) {
                return None;
            }
        }
    }
    Some(pivots.into_iter().map(|p| p + 1).collect())
}

pub fn is_strongly_lower_triangular(m: &BinaryMatrix) -> bool {
    strongly_lower_triangular_pivots(m).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds;

    fn a_matrix() -> BinaryMatrix {
        BinaryMatrix::from_rows(&[
            [1, 1, 0, 1],
            [1, 1, 1, 0],
            [1, 0, 0, 0],
            [0, 1, 1, 1],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ])
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(seeds::h_tilde().rank(), 3);
        assert_eq!(BinaryMatrix::identity(4).rank(), 4);
        assert_eq!(BinaryMatrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn kron_examples() {
        let row = BinaryMatrix::from_rows(&[[1, 1]]).unwrap();
        let k = BinaryMatrix::identity(2).kron(&row);
        assert_eq!(
            k,
            BinaryMatrix::from_rows(&[[1, 1, 0, 0], [0, 0, 1, 1]]).unwrap()
        );
        let b = seeds::h_tilde();
        assert_eq!(BinaryMatrix::identity(1).kron(&b), b);
        let a = BinaryMatrix::zeros(4, 7);
        assert_eq!(a.kron(&BinaryMatrix::zeros(7, 4)).shape(), (28, 28));
    }

    #[test]
    fn reduce_h_tilde_reproduces_a() {
        let tk = strong_triangular_reduce(&seeds::h_tilde());
        assert_eq!(tk.pivot_set(), &[3, 5, 6, 7]);
        assert_eq!(tk.kernel_matrix(), a_matrix());
    }

    #[test]
    fn reduce_h_tilde_transpose() {
        let tk = strong_triangular_reduce(&seeds::h_tilde().transpose());
        assert_eq!(tk.pivot_set(), &[4]);
        assert_eq!(tk.kernel_basis()[0].to_string(), "1011");
    }

    #[test]
    fn reduce_identity_and_zero() {
        let tk = strong_triangular_reduce(&BinaryMatrix::identity(5));
        assert!(tk.kernel_basis().is_empty());
        assert!(tk.pivot_set().is_empty());

        let tk = strong_triangular_reduce(&BinaryMatrix::zeros(2, 4));
        assert_eq!(tk.pivot_set(), &[1, 2, 3, 4]);
        assert_eq!(tk.kernel_matrix(), BinaryMatrix::identity(4));
    }

    #[test]
    fn strongly_lower_triangular_examples() {
        assert_eq!(
            strongly_lower_triangular_pivots(&a_matrix()),
            Some(vec![3, 5, 6, 7])
        );
        let bad = BinaryMatrix::from_rows(&[[1, 1], [0, 1]]).unwrap();
        assert!(!is_strongly_lower_triangular(&bad));
        assert!(is_strongly_lower_triangular(&BinaryMatrix::identity(6)));
        // A zero column has no pivot.
        assert!(!is_strongly_lower_triangular(&BinaryMatrix::zeros(3, 1)));
        // Repeated pivot row.
        let dup = BinaryMatrix::from_rows(&[[1, 0], [1, 1]]).unwrap();
        assert!(!is_strongly_lower_triangular(&dup));
    }

    #[test]
    fn text_format_round_trip() {
        let m = seeds::h_tilde();
        let parsed: BinaryMatrix = m.to_string().parse().unwrap();
        assert_eq!(parsed, m);
    }

    #[test]
    fn parser_rejects_ragged_and_non_binary() {
        assert!("2 3\n1 0 1\n1 1\n".parse::<BinaryMatrix>().is_err());
        assert!("2 3\n1 0 1\n1 2 0\n".parse::<BinaryMatrix>().is_err());
        assert!("2 2\n1 0\n".parse::<BinaryMatrix>().is_err());
        assert!("1 2\n1 x\n".parse::<BinaryMatrix>().is_err());
        assert!("".parse::<BinaryMatrix>().is_err());
        let ok: BinaryMatrix = "# comment\n2 2\n1 0\n\n0 1 # trailing\n".parse().unwrap();
        assert_eq!(ok, BinaryMatrix::identity(2));
    }

    #[test]
    fn solve_linear_systems() {
        let h = seeds::h_tilde();
        let x = BitVector::from_bits([true, false, true, true, false, false, true]);
        let b = h.mul_vec(&x).unwrap();
        let y = solve(&h, &b).unwrap();
        assert_eq!(h.mul_vec(&y).unwrap(), b);
        // rank 3 of 4 rows: the all-ones syndrome pattern below is unreachable
        let unreachable = BitVector::from_bits([true, false, false, false]);
        let reachable = (0..128u32).any(|v| {
            let v = BitVector::from_bits((0..7).map(|i| v >> i & 1 == 1));
            h.mul_vec(&v).unwrap() == unreachable
        });
        assert_eq!(solve(&h, &unreachable).is_some(), reachable);
    }

    #[test]
    fn row_space_membership() {
        let h = seeds::h_tilde();
        let space = h.row_space();
        assert_eq!(space.rank(), 3);
        let sum = h.row(0).xor(h.row(2));
        assert!(space.contains(&sum));
        assert!(!space.contains(&BitVector::unit(7, 2)));
    }
}
