//! Pieceably fault-tolerant schedules built with the round-robin method:
//! cross-sector CZ and XCX, same-sector CNOT, injection CZ into an ancilla
//! code, state-injection gadgets, and parallel batching.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bitvec::BitVector;
use crate::canonical::{CanonicalBasis, LogicalQubitId};
use crate::error::{Error, Result};
use crate::gates::{verify_circuit, ActionComparison, LogicalAction, LogicalFrame};
use crate::hgp::{HgpCode, Sector};
use crate::pauli::{conjugate, Circuit, GateKind, GateOp, GateRecord, PauliOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ScheduleKind {
    Cz,
    Xcx,
    Cnot,
    InjectionCz,
    Parallel,
}

/// One time step: simultaneously executable gates followed, if `ec`, by a
/// round of error correction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub gates: Vec<GateOp>,
    pub ec: bool,
}

/// A contiguous run of steps realizing one two-qubit logical gate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Leg {
    pub kind: ScheduleKind,
    pub targets: Vec<String>,
    pub delta: usize,
    pub first_step: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub kind: ScheduleKind,
    pub n_qubits: usize,
    pub targets: Vec<String>,
    pub delta: usize,
    pub steps: Vec<Step>,
    pub legs: Vec<Leg>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TimeCost {
    pub steps: usize,
    pub tau_units: usize,
}

impl Schedule {
    /// All gates in time order, error-correction markers dropped.
    pub fn flatten(&self) -> Circuit {
        let mut c = Circuit::new(self.n_qubits);
        for g in self.steps.iter().flat_map(|s| &s.gates) {
            c.push(g.clone())
                .expect("schedule gates lie inside the register");
        }
        c
    }

    pub fn gate_count(&self) -> usize {
        self.steps.iter().map(|s| s.gates.len()).sum()
    }

    pub fn time_cost(&self) -> TimeCost {
        TimeCost {
            steps: self.steps.len(),
            tau_units: self.steps.iter().filter(|s| s.ec).count(),
        }
    }

    /// Every qubit touched by the schedule.
    pub fn support(&self) -> BitVector {
        let mut s = BitVector::zeros(self.n_qubits);
        for g in self.steps.iter().flat_map(|s| &s.gates) {
            for &t in g.targets() {
                s.set(t, true);
            }
        }
        s
    }

    /// No qubit is used twice within a step.
    pub fn steps_are_disjoint(&self) -> bool {
        self.steps.iter().all(|s| {
            let mut used = BitVector::zeros(self.n_qubits);
            s.gates.iter().flat_map(GateOp::targets).all(|&t| {
                let fresh = !used.get(t);
                used.set(t, true);
                fresh
            })
        })
    }

    /// Every two-qubit gate couples a left and a right qubit of `code`, or a
    /// qubit of `code` and a qubit numbered after it (an ancilla code).
    pub fn is_sector_transversal(&self, code: &HgpCode) -> bool {
        let left = code.left_len();
        let n = code.n_qubits();
        let side = |q: usize| {
            if q < left {
                0
            } else if q < n {
                1
            } else {
                2
            }
        };
        self.steps
            .iter()
            .flat_map(|s| &s.gates)
            .all(|g| match g.targets() {
                [a, b] => side(*a) != side(*b),
                _ => true,
            })
    }

    pub fn record(&self, verified: Option<bool>) -> ScheduleRecord {
        ScheduleRecord {
            kind: self.kind,
            targets: self.targets.clone(),
            delta: self.delta,
            steps: self
                .steps
                .iter()
                .map(|s| StepRecord {
                    gates: s.gates.iter().map(GateRecord::from).collect(),
                    ec: s.ec,
                })
                .collect(),
            legs: self.legs.clone(),
            time_cost_tau: self.time_cost().tau_units,
            verified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StepRecord {
    pub gates: Vec<GateRecord>,
    pub ec: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScheduleRecord {
    pub kind: ScheduleKind,
    pub targets: Vec<String>,
    pub delta: usize,
    pub steps: Vec<StepRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub legs: Vec<Leg>,
    pub time_cost_tau: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

/// Round-robin split of the full product `left x right` of two-qubit gates:
/// with `delta = max(|left|, |right|)`, step `t` couples `left[p]` with
/// `right[(p + t) mod delta]` whenever that position exists.
pub fn round_robin(kind: GateKind, left: &[usize], right: &[usize]) -> Result<Vec<Step>> {
    let delta = left.len().max(right.len());
    let mut steps = Vec::with_capacity(delta);
    for t in 0..delta {
        let mut gates = Vec::new();
        for (p, &a) in left.iter().enumerate() {
            if let Some(&b) = right.get((p + t) % delta) {
                gates.push(GateOp::two(kind, a, b)?);
            }
        }
        steps.push(Step { gates, ec: true });
    }
    Ok(steps)
}

fn expect_sectors(ql: LogicalQubitId, qr: LogicalQubitId) -> Result<()> {
    if ql.sector != Sector::L || qr.sector != Sector::R {
        return Err(Error::SectorMismatch(format!(
            "expected a left and a right logical qubit, got {ql} and {qr}"
        )));
    }
    Ok(())
}

fn cross_sector(
    kind: ScheduleKind,
    gate: GateKind,
    code: &HgpCode,
    qs: (LogicalQubitId, LogicalQubitId),
    left: &BitVector,
    right: &BitVector,
) -> Result<Schedule> {
    let left: Vec<usize> = left.ones().collect();
    let right: Vec<usize> = right.ones().collect();
    let steps = round_robin(gate, &left, &right)?;
    Ok(Schedule {
        kind,
        n_qubits: code.n_qubits(),
        targets: vec![qs.0.to_string(), qs.1.to_string()],
        delta: steps.len(),
        steps,
        legs: Vec::new(),
    })
}

/// CZ between every qubit of the logical Z of `ql` (a left column) and every
/// qubit of the logical Z of `qr` (a right row), in round-robin steps.
pub fn round_robin_cz(
    code: &HgpCode,
    basis: &CanonicalBasis,
    ql: LogicalQubitId,
    qr: LogicalQubitId,
) -> Result<Schedule> {
    expect_sectors(ql, qr)?;
    let zl = basis.logical_z(ql)?.z_support();
    let zr = basis.logical_z(qr)?.z_support();
    cross_sector(ScheduleKind::Cz, GateKind::CZ, code, (ql, qr), zl, zr)
}

/// XCX between the logical X supports of `ql` (a left row) and `qr` (a right column).
pub fn round_robin_xcx(
    code: &HgpCode,
    basis: &CanonicalBasis,
    ql: LogicalQubitId,
    qr: LogicalQubitId,
) -> Result<Schedule> {
    expect_sectors(ql, qr)?;
    let xl = basis.logical_x(ql)?.x_support();
    let xr = basis.logical_x(qr)?.x_support();
    cross_sector(ScheduleKind::Xcx, GateKind::XCX, code, (ql, qr), xl, xr)
}

fn ordered(a: LogicalQubitId, b: LogicalQubitId) -> (LogicalQubitId, LogicalQubitId) {
    if a.sector == Sector::L {
        (a, b)
    } else {
        (b, a)
    }
}

/// The smallest logical qubit in the sector opposite to `q`.
pub fn intermediary_for(basis: &CanonicalBasis, q: LogicalQubitId) -> Result<LogicalQubitId> {
    basis
        .ids_in(q.sector.other())
        .first()
        .copied()
        .ok_or_else(|| {
            Error::NoIntermediary(format!("no logical qubit in sector {}", q.sector.other()))
        })
}

/// CNOT between two logical qubits of the same sector, routed through an
/// opposite-sector intermediary `m`:
/// `CNOT(c, t) = XCX(m, t) CZ(c, m) XCX(m, t) CZ(c, m)` (rightmost first),
/// which returns `m` to its initial state.
pub fn cnot_composite(
    code: &HgpCode,
    basis: &CanonicalBasis,
    control: LogicalQubitId,
    target: LogicalQubitId,
) -> Result<Schedule> {
    if control.sector != target.sector {
        return Err(Error::SectorMismatch(format!(
            "CNOT legs need control and target in the same sector, got {control} and {target}"
        )));
    }
    if control == target {
        return Err(Error::InvalidGate(format!(
            "CNOT needs two distinct qubits, got {control} twice"
        )));
    }
    basis.index_of(control)?;
    basis.index_of(target)?;
    let m = intermediary_for(basis, control)?;
    let (cl, cr) = ordered(control, m);
    let (xl, xr) = ordered(m, target);
    let cz = round_robin_cz(code, basis, cl, cr)?;
    let xcx = round_robin_xcx(code, basis, xl, xr)?;
    let mut steps = Vec::new();
    let mut legs = Vec::new();
    for leg in [&cz, &xcx, &cz, &xcx] {
        legs.push(Leg {
            kind: leg.kind,
            targets: leg.targets.clone(),
            delta: leg.delta,
            first_step: steps.len(),
        });
        steps.extend(leg.steps.iter().cloned());
    }
    Ok(Schedule {
        kind: ScheduleKind::Cnot,
        n_qubits: code.n_qubits(),
        targets: vec![control.to_string(), target.to_string(), m.to_string()],
        delta: steps.len(),
        steps,
        legs,
    })
}

/// CZ between logical `q` of `code` and the logical qubit of an ancilla code
/// whose logical Z has support `zeta`; ancilla qubits are numbered after the
/// code's qubits.
pub fn injection_cz(
    code: &HgpCode,
    basis: &CanonicalBasis,
    q: LogicalQubitId,
    zeta: &BitVector,
) -> Result<Schedule> {
    if zeta.is_zero() {
        return Err(Error::EmptyAncilla);
    }
    let n = code.n_qubits();
    let left: Vec<usize> = basis.logical_z(q)?.z_support().ones().collect();
    let right: Vec<usize> = zeta.ones().map(|p| p + n).collect();
    let steps = round_robin(GateKind::CZ, &left, &right)?;
    Ok(Schedule {
        kind: ScheduleKind::InjectionCz,
        n_qubits: n + zeta.len(),
        targets: vec![q.to_string(), "ancilla".into()],
        delta: steps.len(),
        steps,
        legs: Vec::new(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GadgetKind {
    H,
    S,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Wire {
    Code,
    Ancilla,
}

/// A state-injection gadget: prepare the ancilla, apply the injection CZ,
/// measure one wire in the X basis, correct the output wire on outcome -1.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub ancilla_state: &'static str,
    pub injection: Schedule,
    pub measured_wire: Wire,
    pub output_wire: Wire,
    pub correction: GateKind,
    pub clifford: bool,
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GadgetRecord {
    pub kind: GadgetKind,
    pub ancilla_state: &'static str,
    pub injection: ScheduleRecord,
    pub measurement: String,
    pub correction: String,
    pub output_wire: Wire,
    pub clifford: bool,
    pub note: &'static str,
}

impl Gadget {
    pub fn record(&self, verified: Option<bool>) -> GadgetRecord {
        GadgetRecord {
            kind: self.kind,
            ancilla_state: self.ancilla_state,
            injection: self.injection.record(verified),
            measurement: format!(
                "transversal X-basis measurement of the {:?} wire",
                self.measured_wire
            )
            .to_lowercase(),
            correction: format!(
                "{:?} on the {:?} wire if the outcome is -1",
                self.correction, self.output_wire
            ),
            output_wire: self.output_wire,
            clifford: self.clifford,
            note: self.note,
        }
    }
}

/// The injection gadget for `kind` on logical `q`.
///
/// * S: ancilla `|-i>`, CZ, X measurement of the ancilla, Z correction.
/// * T: ancilla `H|T>`, CZ, X measurement of the ancilla, S correction.
/// * H: ancilla `|+>`, CZ, X measurement of the code qubit, X correction;
///   the output lives on the ancilla wire.
pub fn gadget_circuit(
    code: &HgpCode,
    basis: &CanonicalBasis,
    kind: GadgetKind,
    q: LogicalQubitId,
    zeta: &BitVector,
) -> Result<Gadget> {
    let injection = injection_cz(code, basis, q, zeta)?;
    Ok(match kind {
        GadgetKind::S => Gadget {
            kind,
            ancilla_state: "|-i>",
            injection,
            measured_wire: Wire::Ancilla,
            output_wire: Wire::Code,
            correction: GateKind::Z,
            clifford: true,
            note: "",
        },
        GadgetKind::T => Gadget {
            kind,
            ancilla_state: "H|T>",
            injection,
            measured_wire: Wire::Ancilla,
            output_wire: Wire::Code,
            correction: GateKind::S,
            clifford: false,
            note: "non-Clifford: outside the Pauli engine, checked on a two-qubit statevector",
        },
        GadgetKind::H => Gadget {
            kind,
            ancilla_state: "|+>",
            injection,
            measured_wire: Wire::Code,
            output_wire: Wire::Ancilla,
            correction: GateKind::X,
            clifford: true,
            note: "one-bit teleportation: the output is left on the ancilla code",
        },
    })
}

/// Schedules grouped into parallel batches.
#[derive(Clone, Debug)]
pub struct ParallelPlan {
    /// Indices into the input list, one inner list per batch.
    pub groups: Vec<Vec<usize>>,
    /// One merged schedule per batch, steps combined index-wise.
    pub batches: Vec<Schedule>,
    /// EC rounds when batches run one after another.
    pub tau_total: usize,
    /// EC rounds when every schedule runs on its own.
    pub tau_sequential: usize,
    /// `d_up * m / n_p` with `m` schedules and `n_p` the smallest batch size.
    pub tau_estimate: f64,
}

/// Greedy first-fit grouping of schedules whose physical supports are
/// pairwise disjoint.
pub fn parallel_groups(schedules: &[Schedule], d_up: usize) -> ParallelPlan {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut supports: Vec<BitVector> = Vec::new();
    for (t, s) in schedules.iter().enumerate() {
        let sup = s.support();
        match supports.iter().position(|g| !g.intersects(&sup)) {
            Some(g) => {
                groups[g].push(t);
                supports[g].xor_assign(&sup);
            }
            None => {
                groups.push(vec![t]);
                supports.push(sup);
            }
        }
    }
    let batches: Vec<Schedule> = groups
        .iter()
        .map(|g| {
            let members: Vec<&Schedule> = g.iter().map(|&t| &schedules[t]).collect();
            let delta = members.iter().map(|s| s.steps.len()).max().unwrap_or(0);
            let steps = (0..delta)
                .map(|t| Step {
                    gates: members
                        .iter()
                        .filter_map(|s| s.steps.get(t))
                        .flat_map(|s| s.gates.iter().cloned())
                        .collect(),
                    ec: true,
                })
                .collect();
            Schedule {
                kind: ScheduleKind::Parallel,
                n_qubits: members[0].n_qubits,
                targets: members
                    .iter()
                    .flat_map(|s| s.targets.iter().cloned())
                    .collect(),
                delta,
                steps,
                legs: Vec::new(),
            }
        })
        .collect();
    let n_p = groups.iter().map(Vec::len).min().unwrap_or(1);
    ParallelPlan {
        tau_total: batches.iter().map(|b| b.time_cost().tau_units).sum(),
        tau_sequential: schedules.iter().map(|s| s.time_cost().tau_units).sum(),
        tau_estimate: (d_up * schedules.len()) as f64 / n_p as f64,
        groups,
        batches,
    }
}

#[derive(Clone, Debug)]
pub struct ScheduleReport {
    pub comparison: ActionComparison,
    pub action: LogicalAction,
}

impl ScheduleReport {
    pub fn passed(&self) -> bool {
        self.comparison.matches
    }
}

/// Flattens `schedule` and checks its logical action against `expected`,
/// up to stabilizers and a Pauli correction.
pub fn verify_schedule(
    frame: &LogicalFrame,
    schedule: &Schedule,
    expected: &LogicalAction,
) -> Result<ScheduleReport> {
    let report = verify_circuit(frame, &schedule.flatten())?;
    Ok(ScheduleReport {
        comparison: report.action.compare(expected),
        action: report.action,
    })
}

/// The action of a single two-qubit gate between logical indices `a` and `b`
/// of `frame`, identity elsewhere.
pub fn two_qubit_action(
    frame: &LogicalFrame,
    kind: GateKind,
    a: usize,
    b: usize,
) -> Result<LogicalAction> {
    let mut c = Circuit::new(frame.k());
    c.add(kind, &[a, b])?;
    LogicalAction::from_logical_circuit(frame.labels().to_vec(), &c)
}

/// Largest weight among the X stabilizer generators after each step.
pub fn intermediate_x_weights(code: &HgpCode, schedule: &Schedule) -> Result<Vec<usize>> {
    let mut current: Vec<PauliOperator> = code
        .stabilizer_x_labels()
        .into_iter()
        .map(|(j, h)| code.stabilizer_x(j, h))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(schedule.steps.len());
    for step in &schedule.steps {
        let mut c = Circuit::new(schedule.n_qubits);
        for g in &step.gates {
            c.push(g.clone())?;
        }
        for p in &mut current {
            let lifted = if p.len() == schedule.n_qubits {
                p.clone()
            } else {
                let mut x = BitVector::zeros(schedule.n_qubits);
                x.splice(0, p.x_support());
                let mut z = BitVector::zeros(schedule.n_qubits);
                z.splice(0, p.z_support());
                PauliOperator::new(x, z, p.phase())?
            };
            *p = conjugate(&lifted, &c)?;
        }
        out.push(current.iter().map(PauliOperator::weight).max().unwrap_or(0));
    }
    Ok(out)
}

/// Per-step grid diagrams: `.` idle qubits, a letter for each gate of the
/// step on both of its qubits, left grid beside right grid.
pub fn render_text(code: &HgpCode, schedule: &Schedule) -> String {
    let n = code.n_qubits();
    let mut out = String::new();
    for (t, step) in schedule.steps.iter().enumerate() {
        let mut marks = vec!['.'; schedule.n_qubits];
        for (g, gate) in step.gates.iter().enumerate() {
            let letter = char::from_digit((g % 26 + 10) as u32, 36)
                .unwrap_or('?')
                .to_ascii_uppercase();
            for &q in gate.targets() {
                marks[q] = letter;
            }
        }
        let _ = writeln!(out, "t = {t}{}", if step.ec { "  [EC]" } else { "" });
        let (na, nb) = code.left_dims();
        let (ma, mb) = code.right_dims();
        for r in 0..na.max(ma) {
            let row = |rows: usize, cols: usize, offset: usize| -> String {
                if r < rows {
                    (0..cols).map(|c| marks[offset + r * cols + c]).collect()
                } else {
                    " ".repeat(cols)
                }
            };
            let _ = writeln!(out, "  {}   {}", row(na, nb, 0), row(ma, mb, na * nb));
        }
        if schedule.n_qubits > n {
            let anc: String = marks[n..].iter().collect();
            let _ = writeln!(out, "  ancilla {anc}");
        }
    }
    out
}
