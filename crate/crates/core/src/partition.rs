//! Qubit partitions, sector-transversality and partition distance.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hgp::{HgpCode, QubitCoord, Sector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum PartitionKind {
    DiagonalTwin,
    Sibling,
    Singleton,
    Custom,
}

/// Non-empty, pairwise disjoint qubit subsets covering the whole code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QubitPartition {
    kind: PartitionKind,
    subsets: Vec<Vec<QubitCoord>>,
}

impl QubitPartition {
    /// Validates `subsets` against `code` and wraps them as a custom partition.
    pub fn custom(code: &HgpCode, subsets: Vec<Vec<QubitCoord>>) -> Result<Self> {
        let p = Self {
            kind: PartitionKind::Custom,
            subsets,
        };
        p.validate(code)?;
        Ok(p)
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn subsets(&self) -> &[Vec<QubitCoord>] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Largest subset size; the partition is `t`-local for `t` equal to this.
    pub fn locality(&self) -> usize {
        self.subsets.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn validate(&self, code: &HgpCode) -> Result<()> {
        let mut seen = vec![false; code.n_qubits()];
        for (t, s) in self.subsets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "subset {} is empty",
                    t + 1
                )));
            }
            for &c in s {
                let p = code.position(c)?;
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::InvalidPartition(format!("qubit {c} appears twice")));
                }
            }
        }
        if let Some(p) = seen.iter().position(|s| !s) {
            let c = code.coord_at(p)?;
            return Err(Error::InvalidPartition(format!("qubit {c} is not covered")));
        }
        Ok(())
    }

    /// Every subset holds at most one left and at most one right qubit.
    pub fn is_sector_transversal(&self) -> bool {
        self.subsets.iter().all(|s| {
            let left = s.iter().filter(|c| c.sector == Sector::L).count();
            left <= 1 && s.len() - left <= 1
        })
    }

    /// Subsets as sorted lists of 1-based qubit indices.
    pub fn index_lists(&self, code: &HgpCode) -> Vec<Vec<usize>> {
        self.subsets
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s
                    .iter()
                    .map(|&c| code.qubit_index(c).expect("validated partition"))
                    .collect();
                v.sort_unstable();
                v
            })
            .collect()
    }
}

pub fn singleton_partition(code: &HgpCode) -> QubitPartition {
    QubitPartition {
        kind: PartitionKind::Singleton,
        subsets: code.coords().map(|c| vec![c]).collect(),
    }
}

/// Diagonal qubits alone, every off-diagonal qubit paired with its transpose
/// in the same sector.
pub fn diagonal_twin_partition(code: &HgpCode) -> Result<QubitPartition> {
    if !code.is_square() {
        return Err(Error::NotSquare);
    }
    let subsets = code
        .coords()
        .filter(|c| c.row <= c.col)
        .map(|c| {
            if c.is_diagonal() {
                vec![c]
            } else {
                vec![c, c.transposed()]
            }
        })
        .collect();
    Ok(QubitPartition {
        kind: PartitionKind::DiagonalTwin,
        subsets,
    })
}

/// `{(i, h, L), (i, h, R)}` for every grid position.
pub fn sibling_partition(code: &HgpCode) -> Result<QubitPartition> {
    if !code.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let subsets = code
        .coords()
        .filter(|c| c.sector == Sector::L)
        .map(|c| vec![c, QubitCoord::right(c.row, c.col)])
        .collect();
    Ok(QubitPartition {
        kind: PartitionKind::Sibling,
        subsets,
    })
}

/// Outcome of a bounded partition-distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionDistance {
    Exact(usize),
    AtLeast(usize),
}

impl PartitionDistance {
    pub fn lower_bound(self) -> usize {
        match self {
            PartitionDistance::Exact(d) | PartitionDistance::AtLeast(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, PartitionDistance::Exact(_))
    }
}

impl fmt::Display for PartitionDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionDistance::Exact(d) => write!(f, "{d}"),
            PartitionDistance::AtLeast(d) => write!(f, ">= {d}"),
        }
    }
}

impl Serialize for PartitionDistance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            value: usize,
            exact: bool,
        }
        Repr {
            value: self.lower_bound(),
            exact: self.is_exact(),
        }
        .serialize(s)
    }
}

/// Lower bound `ceil(d / 2)` on the partition distance of a 2-local partition.
pub fn two_local_lower_bound(d: usize) -> usize {
    d.div_ceil(2)
}

/// Decides whether some nontrivial X- or Z-type logical operator is supported
/// inside the qubit positions `u` (0-based).
pub fn supports_logical(code: &HgpCode, u: &[usize]) -> bool {
    let inside: BTreeSet<usize> = u.iter().copied().collect();
    let u: Vec<usize> = inside.iter().copied().collect();
    let outside: Vec<usize> = (0..code.n_qubits())
        .filter(|p| !inside.contains(p))
        .collect();
    let (hx, hz) = (code.hx(), code.hz());
    // dim{v in ker H_z : supp v in U} versus dim{v in rowspace H_x : supp v in U}
    let x_cycles = u.len() - hz.select_columns(&u).rank();
    let x_boundaries = hx.rank() - hx.select_columns(&outside).rank();
    if x_cycles > x_boundaries {
        return true;
    }
    let z_cycles = u.len() - hx.select_columns(&u).rank();
    let z_boundaries = hz.rank() - hz.select_columns(&outside).rank();
    z_cycles > z_boundaries
}

/// Smallest number of subsets whose union supports a nontrivial logical
/// operator, searched exhaustively over unions of up to `max_subsets` subsets.
pub fn partition_distance_search(
    code: &HgpCode,
    partition: &QubitPartition,
    max_subsets: usize,
) -> Result<PartitionDistance> {
    partition.validate(code)?;
    let positions: Vec<Vec<usize>> = partition
        .subsets()
        .iter()
        .map(|s| {
            s.iter()
                .map(|&c| code.position(c).expect("validated"))
                .collect()
        })
        .collect();
    for mu in 1..=max_subsets.min(positions.len()) {
        let found = positions.iter().combinations(mu).any(|chosen| {
            let u: Vec<usize> = chosen.into_iter().flatten().copied().collect();
            supports_logical(code, &u)
        });
        if found {
            return Ok(PartitionDistance::Exact(mu));
        }
    }
    Ok(PartitionDistance::AtLeast(max_subsets + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds;

    #[test]
    fn diagonal_twin_counts() {
        let code = HgpCode::square(seeds::h_tilde());
        let p = diagonal_twin_partition(&code).unwrap();
        p.validate(&code).unwrap();
        let singles = p.subsets().iter().filter(|s| s.len() == 1).count();
        assert_eq!(singles, 11);
        assert_eq!(p.len() - singles, 27);
        assert_eq!(p.len(), 38);
        assert_eq!(p.locality(), 2);
        assert!(!p.is_sector_transversal());
        let rect = HgpCode::new(seeds::h_rep(), seeds::h_tilde());
        assert!(matches!(
            diagonal_twin_partition(&rect),
            Err(Error::NotSquare)
        ));
    }

    #[test]
    fn sibling_pairs() {
        let code = HgpCode::symmetric_square(&seeds::hamming());
        let p = sibling_partition(&code).unwrap();
        p.validate(&code).unwrap();
        assert_eq!(p.len(), 49);
        assert!(p.is_sector_transversal());
        assert!(p
            .subsets()
            .iter()
            .all(|s| s[0].sector == Sector::L && s[1].sector == Sector::R));
        let tilde = HgpCode::square(seeds::h_tilde());
        assert!(matches!(
            sibling_partition(&tilde),
            Err(Error::NotSymmetric)
        ));
        assert!(singleton_partition(&tilde).is_sector_transversal());
    }

    #[test]
    fn invalid_partitions() {
        let code = HgpCode::square(seeds::h_rep());
        let mut subsets: Vec<Vec<QubitCoord>> = code.coords().map(|c| vec![c]).collect();
        subsets.pop();
        assert!(QubitPartition::custom(&code, subsets.clone()).is_err());
        subsets.push(vec![QubitCoord::left(1, 1)]);
        assert!(QubitPartition::custom(&code, subsets.clone()).is_err());
        subsets.pop();
        subsets.push(vec![]);
        assert!(QubitPartition::custom(&code, subsets).is_err());
    }

    #[test]
    fn distances() {
        let rep = HgpCode::square(seeds::h_rep());
        let singles = singleton_partition(&rep);
        assert_eq!(
            partition_distance_search(&rep, &singles, 4).unwrap(),
            PartitionDistance::Exact(3)
        );
        assert_eq!(
            partition_distance_search(&rep, &singles, 2).unwrap(),
            PartitionDistance::AtLeast(3)
        );
        let dt = diagonal_twin_partition(&rep).unwrap();
        let d = partition_distance_search(&rep, &dt, 3).unwrap();
        assert!(d.lower_bound() >= two_local_lower_bound(3));

        let toric = HgpCode::square(seeds::h_toric());
        let sib = sibling_partition(&toric).unwrap();
        assert_eq!(
            partition_distance_search(&toric, &sib, 3).unwrap(),
            PartitionDistance::Exact(3)
        );
    }

    #[test]
    fn logical_support_detection() {
        let code = HgpCode::square(seeds::h_rep());
        assert!(supports_logical(
            &code,
            &(0..code.n_qubits()).collect::<Vec<_>>()
        ));
        assert!(!supports_logical(&code, &[]));
        // a column of the left 3x3 grid carries a Z logical
        let col: Vec<usize> = (0..3).map(|r| r * 3).collect();
        assert!(supports_logical(&code, &col));
        assert!(!supports_logical(&code, &col[..2]));
    }
}
