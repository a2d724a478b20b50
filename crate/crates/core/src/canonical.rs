//! Canonical line bases of logical operators and the classification of logical qubits.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use crate::f2linalg::{strong_triangular_reduce, RowSpace, TriangularKernel};
use crate::hgp::{HgpCode, QubitCoord, Sector};
use crate::pauli::PauliOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QubitClass {
    Diagonal,
    Mirror,
}

/// A logical qubit `q^sector_{row,col}`, named after its physical pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LogicalQubitId {
    pub sector: Sector,
    pub row: usize,
    pub col: usize,
}

impl LogicalQubitId {
    pub fn new(sector: Sector, row: usize, col: usize) -> Self {
        Self { sector, row, col }
    }

    pub fn left(row: usize, col: usize) -> Self {
        Self::new(Sector::L, row, col)
    }

    pub fn right(row: usize, col: usize) -> Self {
        Self::new(Sector::R, row, col)
    }

    pub fn class(&self) -> QubitClass {
        if self.row == self.col {
            QubitClass::Diagonal
        } else {
            QubitClass::Mirror
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.class() == QubitClass::Diagonal
    }

    pub fn pivot(&self) -> QubitCoord {
        QubitCoord::new(self.row, self.col, self.sector)
    }

    fn transposed(&self) -> Self {
        Self::new(self.sector, self.col, self.row)
    }

    fn mirrored(&self) -> Self {
        Self::new(self.sector.other(), self.row, self.col)
    }
}

impl fmt::Display for LogicalQubitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.sector, self.row, self.col)
    }
}

impl FromStr for LogicalQubitId {
    type Err = Error;

    /// Parses `L:3,3` or `R:6,5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadLabel(s.to_string());
        let (sector, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let sector = match sector {
            "L" | "l" => Sector::L,
            "R" | "r" => Sector::R,
            _ => return Err(bad()),
        };
        let (row, col) = rest.split_once(',').ok_or_else(bad)?;
        let row: usize = row.trim().parse().map_err(|_| bad())?;
        let col: usize = col.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Self::new(sector, row, col))
    }
}

impl Serialize for LogicalQubitId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One logical qubit with its X and Z line operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalQubit {
    pub id: LogicalQubitId,
    pub x: PauliOperator,
    pub z: PauliOperator,
}

/// Reductions of the four seed matrices `H_a`, `H_a^T`, `H_b`, `H_b^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedKernels {
    pub a: TriangularKernel,
    pub a_bar: TriangularKernel,
    pub b: TriangularKernel,
    pub b_bar: TriangularKernel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeedPivots {
    pub a: Vec<usize>,
    pub a_bar: Vec<usize>,
    pub b: Vec<usize>,
    pub b_bar: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CanonicalBasis {
    n_qubits: usize,
    square: bool,
    symmetric: bool,
    kernels: SeedKernels,
    qubits: Vec<LogicalQubit>,
    index: BTreeMap<LogicalQubitId, usize>,
}

/// Builds the canonical basis from strongly lower triangular kernel bases:
/// X operators `f_i (x) b_h` (left) and `alpha_j (x) f_l` (right), Z operators
/// `a_i (x) f_h` (left) and `f_j (x) beta_l` (right).
pub fn canonical_basis(code: &HgpCode) -> CanonicalBasis {
    let kernels = SeedKernels {
        a: strong_triangular_reduce(code.ha()),
        a_bar: strong_triangular_reduce(&code.ha().transpose()),
        b: strong_triangular_reduce(code.hb()),
        b_bar: strong_triangular_reduce(&code.hb().transpose()),
    };
    let n = code.n_qubits();
    let line = |sector: Sector, rows: &[usize], cols: &[usize]| {
        let positions = rows.iter().flat_map(|&r| {
            cols.iter().map(move |&c| {
                code.position(QubitCoord::new(r, c, sector))
                    .expect("kernel supports lie inside the grid")
            })
        });
        BitVector::from_positions(n, positions)
    };

    let mut qubits = Vec::new();
    for &i in kernels.a.pivot_set() {
        for &h in kernels.b.pivot_set() {
            let a_i = kernels.a.vector_for_pivot(i).expect("pivot").support();
            let b_h = kernels.b.vector_for_pivot(h).expect("pivot").support();
            qubits.push(LogicalQubit {
                id: LogicalQubitId::left(i, h),
                x: PauliOperator::x_type(line(Sector::L, &[i], &b_h)),
                z: PauliOperator::z_type(line(Sector::L, &a_i, &[h])),
            });
        }
    }
    for &j in kernels.a_bar.pivot_set() {
        for &l in kernels.b_bar.pivot_set() {
            let alpha_j = kernels.a_bar.vector_for_pivot(j).expect("pivot").support();
            let beta_l = kernels.b_bar.vector_for_pivot(l).expect("pivot").support();
            qubits.push(LogicalQubit {
                id: LogicalQubitId::right(j, l),
                x: PauliOperator::x_type(line(Sector::R, &alpha_j, &[l])),
                z: PauliOperator::z_type(line(Sector::R, &[j], &beta_l)),
            });
        }
    }
    let index = qubits.iter().enumerate().map(|(t, q)| (q.id, t)).collect();
    CanonicalBasis {
        n_qubits: n,
        square: code.is_square(),
        symmetric: code.is_symmetric(),
        kernels,
        qubits,
        index,
    }
}

impl CanonicalBasis {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Number of logical qubits `k`.
    pub fn len(&self) -> usize {
        self.qubits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qubits.is_empty()
    }

    pub fn kernels(&self) -> &SeedKernels {
        &self.kernels
    }

    pub fn seed_pivots(&self) -> SeedPivots {
        SeedPivots {
            a: self.kernels.a.pivot_set().to_vec(),
            a_bar: self.kernels.a_bar.pivot_set().to_vec(),
            b: self.kernels.b.pivot_set().to_vec(),
            b_bar: self.kernels.b_bar.pivot_set().to_vec(),
        }
    }

    /// Logical qubits, left sector first, then by pivot.
    pub fn qubits(&self) -> &[LogicalQubit] {
        &self.qubits
    }

    pub fn ids(&self) -> Vec<LogicalQubitId> {
        self.qubits.iter().map(|q| q.id).collect()
    }

    pub fn ids_in(&self, sector: Sector) -> Vec<LogicalQubitId> {
        self.qubits
            .iter()
            .filter(|q| q.id.sector == sector)
            .map(|q| q.id)
            .collect()
    }

    pub fn contains(&self, id: LogicalQubitId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn index_of(&self, id: LogicalQubitId) -> Result<usize> {
        self.index
            .get(&id)
            .copied()
            .ok_or(Error::UnknownLogicalQubit(id))
    }

    pub fn get(&self, id: LogicalQubitId) -> Result<&LogicalQubit> {
        Ok(&self.qubits[self.index_of(id)?])
    }

    pub fn logical_x(&self, id: LogicalQubitId) -> Result<&PauliOperator> {
        Ok(&self.get(id)?.x)
    }

    pub fn logical_z(&self, id: LogicalQubitId) -> Result<&PauliOperator> {
        Ok(&self.get(id)?.z)
    }

    pub fn pivot_qubit(&self, id: LogicalQubitId) -> Result<QubitCoord> {
        self.index_of(id)?;
        Ok(id.pivot())
    }

    /// Twin `q_{h,i}` of a mirror qubit `q_{i,h}` in a square code.
    pub fn twin_of(&self, id: LogicalQubitId) -> Result<LogicalQubitId> {
        self.index_of(id)?;
        if !self.square {
            return Err(Error::NotSquare);
        }
        if id.is_diagonal() {
            return Err(Error::DiagonalHasNoTwin(id));
        }
        let twin = id.transposed();
        self.index_of(twin)?;
        Ok(twin)
    }

    /// Sibling `q^R_{i,h}` of `q^L_{i,h}` (and back) in a symmetric code.
    pub fn sibling_of(&self, id: LogicalQubitId) -> Result<LogicalQubitId> {
        self.index_of(id)?;
        if !self.symmetric {
            return Err(Error::NotSymmetric);
        }
        let sibling = id.mirrored();
        if !self.contains(sibling) {
            return Err(Error::NoSibling(id));
        }
        Ok(sibling)
    }

    /// Whether every logical qubit has a sibling, i.e. `pi(A) = pi(A_bar)` and `pi(B) = pi(B_bar)`.
    pub fn siblings_complete(&self) -> bool {
        self.kernels.a.pivot_set() == self.kernels.a_bar.pivot_set()
            && self.kernels.b.pivot_set() == self.kernels.b_bar.pivot_set()
    }

    /// Replaces the Z operator of `id`; used to build deliberately broken bases.
    pub fn replace_z(&mut self, id: LogicalQubitId, z: PauliOperator) -> Result<()> {
        let t = self.index_of(id)?;
        self.qubits[t].z = z;
        Ok(())
    }

    pub fn replace_x(&mut self, id: LogicalQubitId, x: PauliOperator) -> Result<()> {
        let t = self.index_of(id)?;
        self.qubits[t].x = x;
        Ok(())
    }

    /// One JSON-ready entry per logical qubit.
    pub fn entries(&self, code: &HgpCode) -> Vec<BasisEntry> {
        self.qubits
            .iter()
            .map(|q| BasisEntry {
                id: q.id,
                class: q.id.class(),
                pivot: code.qubit_index(q.id.pivot()).expect("pivot inside grid"),
                x_support: q.x.x_support().support(),
                z_support: q.z.z_support().support(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BasisEntry {
    pub id: LogicalQubitId,
    pub class: QubitClass,
    pub pivot: usize,
    pub x_support: Vec<usize>,
    pub z_support: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SymplecticReport {
    pub operators_ok: bool,
    pub commutation_ok: bool,
    pub nontrivial_ok: bool,
    pub overlap_ok: bool,
    pub line_support_ok: bool,
    pub pivot_ok: bool,
    pub violations: Vec<String>,
}

impl SymplecticReport {
    pub fn passed(&self) -> bool {
        self.operators_ok
            && self.commutation_ok
            && self.nontrivial_ok
            && self.overlap_ok
            && self.line_support_ok
            && self.pivot_ok
    }

    pub fn first_violation(&self) -> Option<&str> {
        self.violations.first().map(String::as_str)
    }
}

fn on_one_line(code: &HgpCode, support: &BitVector) -> bool {
    let coords: Vec<QubitCoord> = support
        .ones()
        .map(|p| code.coord_at(p).expect("support inside code"))
        .collect();
    let Some(first) = coords.first() else {
        return false;
    };
    let same_sector = coords.iter().all(|c| c.sector == first.sector);
    let same_row = coords.iter().all(|c| c.row == first.row);
    let same_col = coords.iter().all(|c| c.col == first.col);
    same_sector && (same_row || same_col)
}

/// Checks that `basis` is a canonical basis of `code`, collecting every violation.
pub fn verify_symplectic(code: &HgpCode, basis: &CanonicalBasis) -> SymplecticReport {
    let mut r = SymplecticReport {
        operators_ok: true,
        commutation_ok: true,
        nontrivial_ok: true,
        overlap_ok: true,
        line_support_ok: true,
        pivot_ok: true,
        violations: Vec::new(),
    };
    let fail = |flag: &mut bool, msg: String, r_violations: &mut Vec<String>| {
        *flag = false;
        r_violations.push(msg);
    };
    let n = code.n_qubits();
    let k = code.dimension();
    if basis.len() != k {
        let msg = format!("basis has {} logical qubits, code has k = {k}", basis.len());
        fail(&mut r.operators_ok, msg, &mut r.violations);
    }
    let x_rows = RowSpace::new(n, code.hx().row_vectors().iter().cloned());
    let z_rows = RowSpace::new(n, code.hz().row_vectors().iter().cloned());

    for q in basis.qubits() {
        let (x, z) = (&q.x, &q.z);
        if x.len() != n || z.len() != n {
            let msg = format!("{}: operator length differs from n = {n}", q.id);
            fail(&mut r.operators_ok, msg, &mut r.violations);
            continue;
        }
        if !x.z_support().is_zero() || x.phase() != 0 || !z.x_support().is_zero() || z.phase() != 0
        {
            let msg = format!("{}: operators are not pure X / pure Z with phase 0", q.id);
            fail(&mut r.operators_ok, msg, &mut r.violations);
        }
        if !code
            .hz()
            .mul_vec(x.x_support())
            .expect("length n")
            .is_zero()
        {
            let msg = format!("{}: X operator anticommutes with a Z stabilizer", q.id);
            fail(&mut r.commutation_ok, msg, &mut r.violations);
        }
        if !code
            .hx()
            .mul_vec(z.z_support())
            .expect("length n")
            .is_zero()
        {
            let msg = format!("{}: Z operator anticommutes with an X stabilizer", q.id);
            fail(&mut r.commutation_ok, msg, &mut r.violations);
        }
        if x_rows.contains(x.x_support()) {
            let msg = format!("{}: X operator is a stabilizer", q.id);
            fail(&mut r.nontrivial_ok, msg, &mut r.violations);
        }
        if z_rows.contains(z.z_support()) {
            let msg = format!("{}: Z operator is a stabilizer", q.id);
            fail(&mut r.nontrivial_ok, msg, &mut r.violations);
        }
        for (what, s) in [("X", x.x_support()), ("Z", z.z_support())] {
            if !on_one_line(code, s) {
                let msg = format!("{}: {what} support is not a single grid line", q.id);
                fail(&mut r.line_support_ok, msg, &mut r.violations);
            }
        }
        let shared = x.x_support().and(z.z_support());
        let expected = code.position(q.id.pivot()).ok();
        if shared.weight() != 1 || shared.first_one() != expected {
            let msg = format!(
                "{}: X and Z do not cross exactly at the pivot {}",
                q.id,
                q.id.pivot()
            );
            fail(&mut r.pivot_ok, msg, &mut r.violations);
        }
    }
    for qx in basis.qubits() {
        for qz in basis.qubits() {
            let want = usize::from(qx.id == qz.id);
            let got = qx.x.x_support().overlap(qz.z.z_support());
            if got != want {
                let msg = format!(
                    "X of {} and Z of {} overlap on {got} qubits, expected {want}",
                    qx.id, qz.id
                );
                fail(&mut r.overlap_ok, msg, &mut r.violations);
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds;

    #[test]
    fn tilde_square_code() {
        let code = HgpCode::square(seeds::h_tilde());
        let basis = canonical_basis(&code);
        assert_eq!(basis.len(), 17);
        let left = basis.ids_in(Sector::L);
        assert_eq!(left.len(), 16);
        assert_eq!(left.iter().filter(|q| q.is_diagonal()).count(), 4);
        assert_eq!(basis.ids_in(Sector::R), vec![LogicalQubitId::right(4, 4)]);
        let pivots = basis.seed_pivots();
        assert_eq!(pivots.a, vec![3, 5, 6, 7]);
        assert_eq!(pivots.a_bar, vec![4]);
        assert!(verify_symplectic(&code, &basis).passed());
    }

    #[test]
    fn other_codes() {
        let sy = HgpCode::symmetric_square(&seeds::hamming());
        let basis = canonical_basis(&sy);
        assert_eq!(
            (basis.ids_in(Sector::L).len(), basis.ids_in(Sector::R).len()),
            (16, 16)
        );
        assert!(verify_symplectic(&sy, &basis).passed());

        let rep = HgpCode::square(seeds::h_rep());
        let basis = canonical_basis(&rep);
        assert_eq!(basis.len(), 1);
        assert!(basis.ids_in(Sector::R).is_empty());

        let toric = HgpCode::square(seeds::h_toric());
        assert!(verify_symplectic(&toric, &canonical_basis(&toric)).passed());
    }

    #[test]
    fn pivots_and_partners() {
        let code = HgpCode::square(seeds::h_tilde());
        let basis = canonical_basis(&code);
        assert_eq!(
            basis.pivot_qubit(LogicalQubitId::right(4, 4)).unwrap(),
            QubitCoord::right(4, 4)
        );
        let q = LogicalQubitId::left(6, 5);
        assert_eq!(q.class(), QubitClass::Mirror);
        assert_eq!(basis.pivot_qubit(q).unwrap(), QubitCoord::left(6, 5));
        assert_eq!(
            basis.twin_of(LogicalQubitId::left(3, 5)).unwrap(),
            LogicalQubitId::left(5, 3)
        );
        assert!(matches!(
            basis.twin_of(LogicalQubitId::left(3, 3)),
            Err(Error::DiagonalHasNoTwin(_))
        ));
        assert!(matches!(basis.sibling_of(q), Err(Error::NotSymmetric)));
        assert!(basis.pivot_qubit(LogicalQubitId::left(1, 1)).is_err());

        let sy = HgpCode::symmetric_square(&seeds::h_tilde());
        let basis = canonical_basis(&sy);
        assert!(basis.siblings_complete());
        assert_eq!(basis.sibling_of(q).unwrap(), LogicalQubitId::right(6, 5));
    }

    #[test]
    fn tampered_basis_fails_overlap() {
        let code = HgpCode::square(seeds::h_tilde());
        let mut basis = canonical_basis(&code);
        let q = LogicalQubitId::left(3, 5);
        let x = basis.logical_x(q).unwrap().x_support().clone();
        let z = basis.logical_z(q).unwrap().z_support().xor(&x);
        basis.replace_z(q, PauliOperator::z_type(z)).unwrap();
        let report = verify_symplectic(&code, &basis);
        assert!(!report.passed());
        assert!(!report.overlap_ok);
    }

    #[test]
    fn label_round_trip() {
        let q: LogicalQubitId = "R:6,5".parse().unwrap();
        assert_eq!(q, LogicalQubitId::right(6, 5));
        assert_eq!(q.to_string(), "R:6,5");
        for bad in ["X:1,1", "L:1", "L:0,1", "L3,3"] {
            assert!(bad.parse::<LogicalQubitId>().is_err());
        }
        assert!(LogicalQubitId::left(7, 1) < LogicalQubitId::right(1, 1));
    }
}
