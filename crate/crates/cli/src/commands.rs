use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hgp_core::canonical::CanonicalBasis;
use hgp_core::gates::{
    append_pauli, sign_correction, verify_circuit, LogicalAction, LogicalFrame, TransversalGate,
};
use hgp_core::partition::{partition_distance_search, two_local_lower_bound, QubitPartition};
use hgp_core::pauli::GateKind;
use hgp_core::pieceable::{
    cnot_composite, gadget_circuit, injection_cz, render_text, round_robin_cz, round_robin_xcx,
    two_qubit_action, verify_schedule, GadgetKind, Schedule,
};
use hgp_core::{
    canonical_basis, diagonal_twin_partition, reproduce_table, sibling_partition,
    singleton_partition, BinaryMatrix, BitVector, HgpCode, LogicalQubitId,
};
use serde_json::{json, Value};

use crate::{Cli, CodeArgs, Command, GadgetArg, GateArg, PartitionArg, RenderArg, ScheduleArg};

pub const SCHEMA_VERSION: u32 = 1;

/// Runs the command; `Ok(false)` means a requested check failed.
pub fn run(cli: &Cli) -> Result<bool> {
    let (output, ok) = match &cli.command {
        Command::Params { code, distance } => params(code, *distance)?,
        Command::Table { dir } => table(dir.as_deref())?,
        Command::Basis { code } => basis(code)?,
        Command::VerifyGate {
            code,
            gate,
            pauli_frame,
        } => verify_gate(code, *gate, *pauli_frame)?,
        Command::Schedule {
            code,
            gate,
            qubits,
            ancilla_seed,
            gadget,
            render,
        } => schedule(
            code,
            *gate,
            qubits,
            ancilla_seed.as_deref(),
            *gadget,
            *render,
        )?,
        Command::Partition {
            code,
            kind,
            max_subsets,
        } => partition(code, *kind, *max_subsets)?,
    };
    let text = match output {
        Output::Json(v) => serde_json::to_string_pretty(&v)? + "\n",
        Output::Text(t) => t,
    };
    match &cli.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ok)
}

enum Output {
    Json(Value),
    Text(String),
}

fn envelope(command: &str, mut body: Value) -> Output {
    let map = body.as_object_mut().expect("command bodies are objects");
    map.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
    Output::Json(body)
}

fn read_matrix(path: &Path) -> Result<BinaryMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.parse()
        .with_context(|| format!("parsing {}", path.display()))
}

fn build_code(args: &CodeArgs) -> Result<HgpCode> {
    let ha = read_matrix(&args.seed)?;
    if args.symmetric_square {
        if args.seed_b.is_some() {
            bail!("--symmetric-square takes a single seed");
        }
        return Ok(HgpCode::symmetric_square(&ha));
    }
    let hb = match &args.seed_b {
        Some(p) => read_matrix(p)?,
        None => ha.clone(),
    };
    Ok(HgpCode::new(ha, hb))
}

fn params(args: &CodeArgs, distance: bool) -> Result<(Output, bool)> {
    let code = build_code(args)?;
    let p = code.params(distance)?;
    Ok((envelope("params", json!({ "params": p })), true))
}

fn table(dir: Option<&Path>) -> Result<(Output, bool)> {
    let dir = dir.unwrap_or_else(|| hgp_core::table::fixture_dir());
    if !dir.is_dir() {
        bail!("{} is not a directory", dir.display());
    }
    let report = reproduce_table(dir)?;
    for r in report.rows.iter().filter(|r| !r.matches) {
        eprintln!("{}: {}", r.name, r.mismatches.join("; "));
    }
    let ok = report.all_match();
    Ok((
        envelope("table", json!({ "report": report, "passed": ok })),
        ok,
    ))
}

fn basis(args: &CodeArgs) -> Result<(Output, bool)> {
    let code = build_code(args)?;
    let basis = canonical_basis(&code);
    let report = hgp_core::verify_symplectic(&code, &basis);
    let body = json!({
        "params": code.params(false)?,
        "seedPivots": basis.seed_pivots(),
        "logicalQubits": basis.entries(&code),
        "symplectic": report.passed(),
        "violations": report.violations,
    });
    Ok((envelope("basis", body), report.passed()))
}

fn action_json(action: &LogicalAction) -> Value {
    let images: Vec<Value> = (0..action.k())
        .flat_map(|t| {
            let label = &action.labels()[t];
            [
                json!({ "operator": format!("X of {label}"), "image": action.image_of_x(t).to_string() }),
                json!({ "operator": format!("Z of {label}"), "image": action.image_of_z(t).to_string() }),
            ]
        })
        .collect();
    Value::Array(images)
}

fn verify_gate(args: &CodeArgs, gate: GateArg, pauli_frame: bool) -> Result<(Output, bool)> {
    let code = build_code(args)?;
    let basis = canonical_basis(&code);
    let gate = match gate {
        GateArg::Hswap => TransversalGate::HswapTwin,
        GateArg::HswapSibling => TransversalGate::HswapSibling,
        GateArg::Czs => TransversalGate::CzS,
        GateArg::Siblingcz => TransversalGate::SiblingCz,
    };
    let frame = LogicalFrame::from_basis(&code, &basis);
    let mut circuit = gate.physical_circuit(&code)?;
    let mut frame_correction = None;
    if pauli_frame {
        if let Some(p) = sign_correction(&frame, &circuit)? {
            circuit = append_pauli(&circuit, &p)?;
            frame_correction = Some(p.to_string());
        }
    }
    let mut body = json!({
        "gate": gate.to_string(),
        "expected": gate.description(),
        "params": code.params(false)?,
        "physicalGates": circuit.len(),
        "pauliFrame": frame_correction,
    });
    let ok = match verify_circuit(&frame, &circuit) {
        Ok(report) => {
            let cmp = report.action.compare(&gate.expected_action(&basis)?);
            body["stabilizerGenerators"] = json!(report.stabilizer_images.len());
            body["logicalImages"] = action_json(&report.action);
            body["logicalCorrection"] = json!(cmp.correction.map(|p| p.to_string()));
            body["mismatch"] = json!(cmp.first_mismatch);
            cmp.matches
        }
        Err(e) => {
            eprintln!("verification failed: {e}");
            body["error"] = json!(e.to_string());
            false
        }
    };
    body["passed"] = json!(ok);
    Ok((envelope("verify-gate", body), ok))
}

fn parse_qubits(qubits: &[String], count: usize) -> Result<Vec<LogicalQubitId>> {
    if qubits.len() != count {
        bail!("expected {count} logical qubit(s), got {}", qubits.len());
    }
    qubits
        .iter()
        .map(|q| {
            q.parse()
                .with_context(|| format!("bad logical qubit label {q:?}"))
        })
        .collect()
}

fn index(basis: &CanonicalBasis, q: LogicalQubitId) -> Result<usize> {
    Ok(basis.index_of(q)?)
}

fn schedule(
    args: &CodeArgs,
    gate: ScheduleArg,
    qubits: &[String],
    ancilla_seed: Option<&Path>,
    gadget: Option<GadgetArg>,
    render: Option<RenderArg>,
) -> Result<(Output, bool)> {
    let code = build_code(args)?;
    let basis = canonical_basis(&code);
    let frame = LogicalFrame::from_basis(&code, &basis);
    if gadget.is_some() && !matches!(gate, ScheduleArg::Inject) {
        bail!("--gadget needs --gate inject");
    }
    let (schedule, frame, expected, gadget_record): (
        Schedule,
        LogicalFrame,
        LogicalAction,
        Option<Value>,
    ) = match gate {
        ScheduleArg::Cz | ScheduleArg::Xcx | ScheduleArg::Cnot => {
            let q = parse_qubits(qubits, 2)?;
            let (s, kind) = match gate {
                ScheduleArg::Cz => (round_robin_cz(&code, &basis, q[0], q[1])?, GateKind::CZ),
                ScheduleArg::Xcx => (round_robin_xcx(&code, &basis, q[0], q[1])?, GateKind::XCX),
                _ => (cnot_composite(&code, &basis, q[0], q[1])?, GateKind::CNOT),
            };
            let expected =
                two_qubit_action(&frame, kind, index(&basis, q[0])?, index(&basis, q[1])?)?;
            (s, frame, expected, None)
        }
        ScheduleArg::Inject => {
            let q = parse_qubits(qubits, 1)?[0];
            let (zeta, ancilla_frame) = match ancilla_seed {
                Some(path) => {
                    let ancilla = HgpCode::square(read_matrix(path)?);
                    let anc_basis = canonical_basis(&ancilla);
                    let Some(first) = anc_basis.qubits().first() else {
                        bail!("the ancilla code encodes no logical qubit");
                    };
                    let zeta = first.z.z_support().clone();
                    (
                        zeta,
                        LogicalFrame::from_basis(&ancilla, &anc_basis).with_prefix("ancilla:"),
                    )
                }
                None => (
                    BitVector::unit(1, 0),
                    LogicalFrame::bare(1).with_prefix("ancilla:"),
                ),
            };
            let joint = frame.direct_sum(&ancilla_frame);
            let expected = two_qubit_action(&joint, GateKind::CZ, index(&basis, q)?, frame.k())?;
            match gadget {
                Some(g) => {
                    let kind = match g {
                        GadgetArg::H => GadgetKind::H,
                        GadgetArg::S => GadgetKind::S,
                        GadgetArg::T => GadgetKind::T,
                    };
                    let gadget = gadget_circuit(&code, &basis, kind, q, &zeta)?;
                    let record = serde_json::to_value(gadget.record(None))?;
                    (gadget.injection, joint, expected, Some(record))
                }
                None => (
                    injection_cz(&code, &basis, q, &zeta)?,
                    joint,
                    expected,
                    None,
                ),
            }
        }
    };
    let report = verify_schedule(&frame, &schedule, &expected)?;
    let ok = report.passed();
    if !ok {
        eprintln!(
            "schedule does not implement the target gate: {}",
            report
                .comparison
                .first_mismatch
                .as_deref()
                .unwrap_or("unknown mismatch")
        );
    }
    if let Some(RenderArg::Text) = render {
        return Ok((Output::Text(render_text(&code, &schedule)), ok));
    }
    let mut body = serde_json::to_value(schedule.record(Some(ok)))?;
    body["stepsSectorTransversal"] = json!(schedule.is_sector_transversal(&code));
    body["stepsDisjoint"] = json!(schedule.steps_are_disjoint());
    body["gateCount"] = json!(schedule.gate_count());
    body["timeCost"] = json!(schedule.time_cost());
    if let Some(g) = gadget_record {
        body["gadget"] = g;
    }
    Ok((envelope("schedule", body), ok))
}

fn partition(args: &CodeArgs, kind: PartitionArg, max_subsets: usize) -> Result<(Output, bool)> {
    let code = build_code(args)?;
    let p: QubitPartition = match kind {
        PartitionArg::Twin => diagonal_twin_partition(&code)?,
        PartitionArg::Sibling => sibling_partition(&code)?,
        PartitionArg::Singleton => singleton_partition(&code),
    };
    let valid = p.validate(&code).is_ok();
    let d = code.distance().ok().and_then(|d| d.finite());
    let delta = partition_distance_search(&code, &p, max_subsets)?;
    let body = json!({
        "kind": p.kind(),
        "subsets": p.len(),
        "locality": p.locality(),
        "sectorTransversal": p.is_sector_transversal(),
        "valid": valid,
        "distance": d,
        "twoLocalLowerBound": d.map(two_local_lower_bound),
        "partitionDistance": delta,
        "subsetIndices": p.index_lists(&code),
    });
    Ok((envelope("partition", body), valid))
}
