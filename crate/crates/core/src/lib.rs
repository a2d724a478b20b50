//! Hypergraph product codes: canonical logical bases, transversal gates and
//! pieceably fault-tolerant schedules.

pub mod bitvec;
pub mod canonical;
pub mod error;
pub mod f2linalg;
pub mod gates;
pub mod hgp;
pub mod partition;
pub mod pauli;
pub mod pieceable;
pub mod seeds;
pub mod table;

pub use bitvec::BitVector;
pub use canonical::{
    canonical_basis, verify_symplectic, CanonicalBasis, LogicalQubitId, QubitClass,
};
pub use error::{Error, Result};
pub use f2linalg::{strong_triangular_reduce, BinaryMatrix, RowSpace, TriangularKernel};
pub use gates::{verify_circuit, verify_gate, LogicalAction, LogicalFrame, TransversalGate};
pub use hgp::{minimum_distance, CodeParams, Distance, HgpCode, QubitCoord, Sector};
pub use partition::{
    diagonal_twin_partition, partition_distance_search, sibling_partition, singleton_partition,
    PartitionDistance, PartitionKind, QubitPartition,
};
pub use pauli::{conjugate, Circuit, GateKind, GateOp, PauliOperator};
pub use pieceable::{
    cnot_composite, gadget_circuit, injection_cz, parallel_groups, round_robin_cz, round_robin_xcx,
    verify_schedule, GadgetKind, Schedule, ScheduleKind, Step, TimeCost,
};
pub use table::{reproduce_table, TableReport};
