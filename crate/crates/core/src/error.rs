use thiserror::Error;

use crate::canonical::LogicalQubitId;
use crate::hgp::QubitCoord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("{what} index {index} out of range 1..={bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("qubit coordinate {0} is outside the grid")]
    CoordOutOfBounds(QubitCoord),

    #[error("kernel dimension {dimension} exceeds the enumeration guard of {limit}")]
    DistanceGuard { dimension: usize, limit: usize },

    #[error("code is not square (H_a != H_b)")]
    NotSquare,

    #[error("code is not symmetric")]
    NotSymmetric,

    #[error("{0} is diagonal and has no twin")]
    DiagonalHasNoTwin(LogicalQubitId),

    #[error("sibling of {0} is not a logical qubit of this basis")]
    NoSibling(LogicalQubitId),

    #[error("{0} is not a logical qubit of this basis")]
    UnknownLogicalQubit(LogicalQubitId),

    #[error("invalid logical qubit label {0:?} (expected e.g. L:3,3)")]
    BadLabel(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("invalid Pauli string: {0}")]
    BadPauli(String),

    #[error("stabilizer {generator} is not mapped into the stabilizer group")]
    StabilizerNotPreserved { generator: String },

    #[error("stabilizer {generator} is mapped to the stabilizer group with phase i^{phase}")]
    StabilizerPhase { generator: String, phase: u8 },

    #[error("image of logical operator {operator} is not in the logical + stabilizer span")]
    NotInLogicalSpan { operator: String },

    #[error("sector mismatch: {0}")]
    SectorMismatch(String),

    #[error("ancilla logical operator has empty support")]
    EmptyAncilla,

    #[error("no intermediary logical qubit available: {0}")]
    NoIntermediary(String),

    #[error("table fixture error: {0}")]
    Fixture(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
