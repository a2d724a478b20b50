//! Hypergraph product codes and their two-grid qubit layout.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use crate::f2linalg::{strong_triangular_reduce, BinaryMatrix};
use crate::pauli::PauliOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sector {
    L,
    R,
}

impl Sector {
    pub fn other(self) -> Sector {
        match self {
            Sector::L => Sector::R,
            Sector::R => Sector::L,
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sector::L => "L",
            Sector::R => "R",
        })
    }
}

/// A physical qubit position `(row, col, sector)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QubitCoord {
    pub row: usize,
    pub col: usize,
    pub sector: Sector,
}

impl QubitCoord {
    pub fn new(row: usize, col: usize, sector: Sector) -> Self {
        Self { row, col, sector }
    }

    pub fn left(row: usize, col: usize) -> Self {
        Self::new(row, col, Sector::L)
    }

    pub fn right(row: usize, col: usize) -> Self {
        Self::new(row, col, Sector::R)
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }

    pub fn transposed(&self) -> Self {
        Self::new(self.col, self.row, self.sector)
    }
}

impl fmt::Display for QubitCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.row, self.col, self.sector)
    }
}

/// Classical distance; a trivial kernel has no codewords and counts as infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Largest kernel dimension for which exhaustive codeword enumeration is attempted.
pub const DISTANCE_GUARD_DIM: usize = 24;

/// Minimum weight of a nonzero vector in `ker h`, by enumerating all `2^k - 1`
/// combinations of a kernel basis in Gray-code order.
pub fn minimum_distance(h: &BinaryMatrix) -> Result<Distance> {
    let kernel = strong_triangular_reduce(h);
    let basis = kernel.kernel_basis();
    let k = basis.len();
    if k == 0 {
        return Ok(Distance::Infinite);
    }
    if k > DISTANCE_GUARD_DIM {
        return Err(Error::DistanceGuard {
            dimension: k,
            limit: DISTANCE_GUARD_DIM,
        });
    }
    let mut word = BitVector::zeros(h.cols());
    let mut best = usize::MAX;
    for step in 1u64..(1u64 << k) {
        word.xor_assign(&basis[step.trailing_zeros() as usize]);
        best = best.min(word.weight());
    }
    Ok(Distance::Finite(best))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<Distance>,
    pub rate: f64,
    pub max_stab_weight: usize,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{}, {}, {}]]", self.n, self.k, d),
            None => write!(f, "[[{}, {}]]", self.n, self.k),
        }
    }
}

/// `HGP(H_a, H_b)` with
/// `H_x = (H_a (x) I_{n_b} | I_{m_a} (x) H_b^T)` and
/// `H_z = (I_{n_a} (x) H_b | H_a^T (x) I_{m_b})`.
///
/// Qubits are laid out on a left `n_a x n_b` grid followed by a right
/// `m_a x m_b` grid, both row-major, so a tensor product `u (x) v` lands on
/// grid positions `(i, h)` with `u[i] = v[h] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgpCode {
    ha: BinaryMatrix,
    hb: BinaryMatrix,
    hx: BinaryMatrix,
    hz: BinaryMatrix,
}

impl HgpCode {
    pub fn new(ha: BinaryMatrix, hb: BinaryMatrix) -> Self {
        let (ma, na) = ha.shape();
        let (mb, nb) = hb.shape();
        let hx = ha
            .kron(&BinaryMatrix::identity(nb))
            .hstack(&BinaryMatrix::identity(ma).kron(&hb.transpose()))
            .expect("both blocks have m_a * n_b rows");
        let hz = BinaryMatrix::identity(na)
            .kron(&hb)
            .hstack(&ha.transpose().kron(&BinaryMatrix::identity(mb)))
            .expect("both blocks have n_a * m_b rows");
        let product = hx.mul(&hz.transpose()).expect("column counts agree");
        assert!(product.is_zero(), "H_x H_z^T != 0 for a hypergraph product");
        Self { ha, hb, hx, hz }
    }

    /// `HGP(H, H)`.
    pub fn square(h: BinaryMatrix) -> Self {
        Self::new(h.clone(), h)
    }

    /// `HGP_sy(H^T H)`.
    pub fn symmetric_square(h: &BinaryMatrix) -> Self {
        Self::square(crate::seeds::gram(h))
    }

    pub fn ha(&self) -> &BinaryMatrix {
        &self.ha
    }

    pub fn hb(&self) -> &BinaryMatrix {
        &self.hb
    }

    pub fn hx(&self) -> &BinaryMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BinaryMatrix {
        &self.hz
    }

    pub fn n_qubits(&self) -> usize {
        self.hx.cols()
    }

    /// `(n_a, n_b)`: rows and columns of the left grid.
    pub fn left_dims(&self) -> (usize, usize) {
        (self.ha.cols(), self.hb.cols())
    }

    /// `(m_a, m_b)`: rows and columns of the right grid.
    pub fn right_dims(&self) -> (usize, usize) {
        (self.ha.rows(), self.hb.rows())
    }

    pub fn dims(&self, sector: Sector) -> (usize, usize) {
        match sector {
            Sector::L => self.left_dims(),
            Sector::R => self.right_dims(),
        }
    }

    pub fn left_len(&self) -> usize {
        let (na, nb) = self.left_dims();
        na * nb
    }

    pub fn contains(&self, c: QubitCoord) -> bool {
        let (rows, cols) = self.dims(c.sector);
        (1..=rows).contains(&c.row) && (1..=cols).contains(&c.col)
    }

    /// 1-based qubit index: `(i, h, L) -> (i-1) n_b + h`,
    /// `(j, l, R) -> n_a n_b + (j-1) m_b + l`.
    pub fn qubit_index(&self, c: QubitCoord) -> Result<usize> {
        Ok(self.position(c)? + 1)
    }

    /// 0-based position of a coordinate in Pauli and matrix columns.
    pub fn position(&self, c: QubitCoord) -> Result<usize> {
        if !self.contains(c) {
            return Err(Error::CoordOutOfBounds(c));
        }
        let (_, cols) = self.dims(c.sector);
        let offset = match c.sector {
            Sector::L => 0,
            Sector::R => self.left_len(),
        };
        Ok(offset + (c.row - 1) * cols + (c.col - 1))
    }

    /// Inverse of [`position`](Self::position).
    pub fn coord_at(&self, pos: usize) -> Result<QubitCoord> {
        if pos >= self.n_qubits() {
            return Err(Error::IndexOutOfRange {
                what: "qubit",
                index: pos + 1,
                bound: self.n_qubits(),
            });
        }
        let (sector, local) = if pos < self.left_len() {
            (Sector::L, pos)
        } else {
            (Sector::R, pos - self.left_len())
        };
        let (_, cols) = self.dims(sector);
        Ok(QubitCoord::new(local / cols + 1, local % cols + 1, sector))
    }

    /// All coordinates in index order.
    pub fn coords(&self) -> impl Iterator<Item = QubitCoord> + '_ {
        (0..self.n_qubits()).map(|p| self.coord_at(p).expect("in range"))
    }

    /// Row of `H_x` for `S_x(j, h)`, `1 <= j <= m_a`, `1 <= h <= n_b`.
    pub fn stabilizer_x_row(&self, j: usize, h: usize) -> Result<usize> {
        let (ma, _) = self.right_dims();
        let (_, nb) = self.left_dims();
        check_range("S_x row", j, ma)?;
        check_range("S_x column", h, nb)?;
        Ok((j - 1) * nb + (h - 1))
    }

    /// Row of `H_z` for `S_z(i, l)`, `1 <= i <= n_a`, `1 <= l <= m_b`.
    pub fn stabilizer_z_row(&self, i: usize, l: usize) -> Result<usize> {
        let (na, _) = self.left_dims();
        let (_, mb) = self.right_dims();
        check_range("S_z row", i, na)?;
        check_range("S_z column", l, mb)?;
        Ok((i - 1) * mb + (l - 1))
    }

    /// `S_x(j, h)`: supported on column `h` of the left grid and row `j` of the right grid.
    pub fn stabilizer_x(&self, j: usize, h: usize) -> Result<PauliOperator> {
        let r = self.stabilizer_x_row(j, h)?;
        Ok(PauliOperator::x_type(self.hx.row(r).clone()))
    }

    /// `S_z(i, l)`: supported on row `i` of the left grid and column `l` of the right grid.
    pub fn stabilizer_z(&self, i: usize, l: usize) -> Result<PauliOperator> {
        let r = self.stabilizer_z_row(i, l)?;
        Ok(PauliOperator::z_type(self.hz.row(r).clone()))
    }

    /// `(j, h)` labels of the rows of `H_x`, in row order.
    pub fn stabilizer_x_labels(&self) -> Vec<(usize, usize)> {
        let (ma, _) = self.right_dims();
        let (_, nb) = self.left_dims();
        (1..=ma)
            .flat_map(|j| (1..=nb).map(move |h| (j, h)))
            .collect()
    }

    /// `(i, l)` labels of the rows of `H_z`, in row order.
    pub fn stabilizer_z_labels(&self) -> Vec<(usize, usize)> {
        let (na, _) = self.left_dims();
        let (_, mb) = self.right_dims();
        (1..=na)
            .flat_map(|i| (1..=mb).map(move |l| (i, l)))
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.ha == self.hb
    }

    /// `H_a = H_b`, square, and `im H = im H^T`.
    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() || !self.ha.is_square() {
            return false;
        }
        let h = &self.ha;
        let ht = h.transpose();
        let r = h.rank();
        r == ht.rank() && h.vstack(&ht).expect("same shape").rank() == r
    }

    /// `k` from the seed codes: `k_a k_b + k_a^T k_b^T`.
    pub fn dimension(&self) -> usize {
        let ka = self.ha.cols() - self.ha.rank();
        let kb = self.hb.cols() - self.hb.rank();
        let kat = self.ha.rows() - self.ha.rank();
        let kbt = self.hb.rows() - self.hb.rank();
        ka * kb + kat * kbt
    }

    /// Minimum over the finite distances of the four seed codes.
    pub fn distance(&self) -> Result<Distance> {
        let seeds = [
            minimum_distance(&self.ha)?,
            minimum_distance(&self.ha.transpose())?,
            minimum_distance(&self.hb)?,
            minimum_distance(&self.hb.transpose())?,
        ];
        Ok(seeds
            .into_iter()
            .filter_map(Distance::finite)
            .min()
            .map_or(Distance::Infinite, Distance::Finite))
    }

    pub fn params(&self, compute_distance: bool) -> Result<CodeParams> {
        let n = self.n_qubits();
        let k = self.dimension();
        let d = if compute_distance {
            Some(self.distance()?)
        } else {
            None
        };
        Ok(CodeParams {
            n,
            k,
            d,
            rate: k as f64 / n as f64,
            max_stab_weight: self.hx.max_row_weight().max(self.hz.max_row_weight()),
        })
    }
}

fn check_range(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if (1..=bound).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index, bound })
    }
}
