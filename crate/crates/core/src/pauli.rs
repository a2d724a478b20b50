//! Phase-exact Pauli algebra and Clifford conjugation.
//!
//! A Pauli operator is stored as `i^phase * X^x * Z^z`, with every X factor
//! written to the left of every Z factor. Under this convention `Y = i X Z`,
//! so a `Y` on one qubit is `(x = 1, z = 1, phase = 1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitvec::BitVector;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVector,
    z: BitVector,
    phase: u8,
}

impl PauliOperator {
    pub fn new(x: BitVector, z: BitVector, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("z support of length {}", x.len()),
                found: format!("length {}", z.len()),
            });
        }
        Ok(Self {
            x,
            z,
            phase: phase % 4,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    pub fn x_type(x: BitVector) -> Self {
        let n = x.len();
        Self {
            x,
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    pub fn z_type(z: BitVector) -> Self {
        let n = z.len();
        Self {
            x: BitVector::zeros(n),
            z,
            phase: 0,
        }
    }

    /// A single-qubit `X`, `Y` or `Z` at 0-based position `q`.
    pub fn single(n: usize, q: usize, letter: char) -> Result<Self> {
        let mut p = Self::identity(n);
        match letter {
            'X' => p.x.set(q, true),
            'Z' => p.z.set(q, true),
            'Y' => {
                p.x.set(q, true);
                p.z.set(q, true);
                p.phase = 1;
            }
            'I' => {}
            other => return Err(Error::BadPauli(format!("unknown letter {other:?}"))),
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x_support(&self) -> &BitVector {
        &self.x
    }

    pub fn z_support(&self) -> &BitVector {
        &self.z
    }

    /// Exponent of `i` in front of `X^x Z^z`, in `0..4`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn with_phase(mut self, phase: u8) -> Self {
        self.phase = phase % 4;
        self
    }

    /// Positions where the operator is not the identity.
    pub fn support(&self) -> BitVector {
        let mut s = self.x.clone();
        for p in self.z.ones() {
            s.set(p, true);
        }
        s
    }

    pub fn weight(&self) -> usize {
        self.support().weight()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Product `self * other` with exact phase.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("Pauli on {} qubits", self.len()),
                found: format!("{} qubits", other.len()),
            });
        }
        // Z^a X^b = (-1)^{a.b} X^b Z^a
        let swaps = self.z.overlap(&other.x) as u8 % 2;
        Ok(PauliOperator {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + 2 * swaps) % 4,
        })
    }

    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        (self.x.overlap(&other.z) + self.z.overlap(&other.x)).is_multiple_of(2)
    }

    /// The letter on 0-based qubit `q`.
    pub fn letter(&self, q: usize) -> char {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }

    /// Phase exponent relative to the letter form, where each `Y` already carries its `i`.
    pub fn letter_phase(&self) -> u8 {
        let ys = self.x.overlap(&self.z) % 4;
        ((self.phase as usize + 4 - ys) % 4) as u8
    }
}

/// Renders as `i^k` followed by one letter per qubit, e.g. `i^2 XYZI`.
impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i^{} ", self.letter_phase())?;
        for q in 0..self.len() {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Accepts `i^k LETTERS` or bare `LETTERS` (phase 0).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (letter_phase, letters) = match s.strip_prefix("i^") {
            Some(rest) => {
                let (k, letters) = rest
                    .split_once(' ')
                    .ok_or_else(|| Error::BadPauli(s.to_string()))?;
                let k: u8 = k.parse().map_err(|_| Error::BadPauli(s.to_string()))?;
                (k % 4, letters.trim())
            }
            None => (0, s),
        };
        let n = letters.chars().count();
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        let mut ys = 0u8;
        for (q, c) in letters.chars().enumerate() {
            match c {
                'I' => {}
                'X' => x.set(q, true),
                'Z' => z.set(q, true),
                'Y' => {
                    x.set(q, true);
                    z.set(q, true);
                    ys += 1;
                }
                other => {
                    return Err(Error::BadPauli(format!(
                        "unknown letter {other:?} in {s:?}"
                    )))
                }
            }
        }
        Ok(PauliOperator {
            x,
            z,
            phase: (letter_phase + ys % 4) % 4,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    X,
    Z,
    H,
    S,
    Sdag,
    CZ,
    CNOT,
    SWAP,
    XCX,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::X | GateKind::Z | GateKind::H | GateKind::S | GateKind::Sdag => 1,
            _ => 2,
        }
    }

    pub fn inverse(self) -> GateKind {
        match self {
            GateKind::S => GateKind::Sdag,
            GateKind::Sdag => GateKind::S,
            other => other,
        }
    }
}

/// A gate acting on 0-based qubit positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GateOp {
    kind: GateKind,
    targets: [usize; 2],
}

impl GateOp {
    pub fn new(kind: GateKind, targets: &[usize]) -> Result<Self> {
        if targets.len() != kind.arity() {
            return Err(Error::InvalidGate(format!(
                "{kind:?} takes {} target(s), got {}",
                kind.arity(),
                targets.len()
            )));
        }
        if kind.arity() == 2 && targets[0] == targets[1] {
            return Err(Error::InvalidGate(format!(
                "{kind:?} targets must be distinct, got {}",
                targets[0]
            )));
        }
        let second = targets.get(1).copied().unwrap_or(targets[0]);
        Ok(Self {
            kind,
            targets: [targets[0], second],
        })
    }

    pub fn one(kind: GateKind, q: usize) -> Self {
        Self::new(kind, &[q]).expect("single-qubit gate")
    }

    pub fn two(kind: GateKind, a: usize, b: usize) -> Result<Self> {
        Self::new(kind, &[a, b])
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets[..self.kind.arity()]
    }

    pub fn inverse(&self) -> GateOp {
        GateOp {
            kind: self.kind.inverse(),
            targets: self.targets,
        }
    }
}

/// JSON form of a gate: kind plus 1-based qubit indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateRecord {
    pub kind: GateKind,
    pub targets: Vec<usize>,
}

impl From<&GateOp> for GateRecord {
    fn from(g: &GateOp) -> Self {
        GateRecord {
            kind: g.kind,
            targets: g.targets().iter().map(|t| t + 1).collect(),
        }
    }
}

impl TryFrom<&GateRecord> for GateOp {
    type Error = Error;

    fn try_from(r: &GateRecord) -> Result<Self> {
        if r.targets.contains(&0) {
            return Err(Error::InvalidGate("qubit indices are 1-based".into()));
        }
        let t: Vec<usize> = r.targets.iter().map(|t| t - 1).collect();
        GateOp::new(r.kind, &t)
    }
}

/// An ordered gate list over a fixed number of qubits.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<GateOp>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            gates: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[GateOp] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: GateOp) -> Result<()> {
        if let Some(&t) = gate.targets().iter().find(|&&t| t >= self.n_qubits) {
            return Err(Error::InvalidGate(format!(
                "target {} outside a {}-qubit circuit",
                t + 1,
                self.n_qubits
            )));
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn add(&mut self, kind: GateKind, targets: &[usize]) -> Result<()> {
        self.push(GateOp::new(kind, targets)?)
    }

    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        for g in &other.gates {
            self.push(g.clone())?;
        }
        Ok(())
    }

    /// The inverse circuit: reversed order, each gate inverted.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(GateOp::inverse).collect(),
        }
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    pub fn records(&self) -> Vec<GateRecord> {
        self.gates.iter().map(GateRecord::from).collect()
    }

    pub fn from_records(n_qubits: usize, records: &[GateRecord]) -> Result<Circuit> {
        let mut c = Circuit::new(n_qubits);
        for r in records {
            c.push(GateOp::try_from(r)?)?;
        }
        Ok(c)
    }
}

/// A Pauli on at most two qubits, bit `t` of `x`/`z` for local target `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Local {
    x: u8,
    z: u8,
    phase: u8,
}

impl Local {
    const fn new(x: u8, z: u8, phase: u8) -> Self {
        Self { x, z, phase }
    }

    fn mul(self, o: Local) -> Local {
        let swaps = (self.z & o.x).count_ones() as u8;
        Local {
            x: self.x ^ o.x,
            z: self.z ^ o.z,
            phase: (self.phase + o.phase + 2 * swaps) % 4,
        }
    }
}

/// Images of the generators `X_0, X_1, Z_0, Z_1` under conjugation `U P U^dag`.
fn generator_images(kind: GateKind) -> [Local; 4] {
    use GateKind::*;
    const X0: Local = Local::new(0b01, 0, 0);
    const X1: Local = Local::new(0b10, 0, 0);
    const Z0: Local = Local::new(0, 0b01, 0);
    const Z1: Local = Local::new(0, 0b10, 0);
    match kind {
        X => [X0, X1, Local::new(0, 0b01, 2), Z1],
        Z => [Local::new(0b01, 0, 2), X1, Z0, Z1],
        H => [Z0, X1, X0, Z1],
        S => [Local::new(0b01, 0b01, 1), X1, Z0, Z1],
        Sdag => [Local::new(0b01, 0b01, 3), X1, Z0, Z1],
        CZ => [Local::new(0b01, 0b10, 0), Local::new(0b10, 0b01, 0), Z0, Z1],
        CNOT => [Local::new(0b11, 0, 0), X1, Z0, Local::new(0, 0b11, 0)],
        SWAP => [X1, X0, Z1, Z0],
        XCX => [X0, X1, Local::new(0b10, 0b01, 0), Local::new(0b01, 0b10, 0)],
    }
}

fn local_image(kind: GateKind, p: Local) -> Local {
    let [gx0, gx1, gz0, gz1] = generator_images(kind);
    let mut out = Local::new(0, 0, p.phase);
    // X^x Z^z = X_0^{x0} X_1^{x1} Z_0^{z0} Z_1^{z1}
    for (bit, g) in [
        (p.x & 1, gx0),
        (p.x & 2, gx1),
        (p.z & 1, gz0),
        (p.z & 2, gz1),
    ] {
        if bit != 0 {
            out = out.mul(g);
        }
    }
    out
}

/// Conjugates `p` in place by a single gate: `p <- G p G^dag`.
pub fn conjugate_gate(p: &mut PauliOperator, gate: &GateOp) {
    let t = gate.targets();
    let mut local = Local::new(0, 0, 0);
    for (k, &q) in t.iter().enumerate() {
        local.x |= (p.x.get(q) as u8) << k;
        local.z |= (p.z.get(q) as u8) << k;
    }
    if local.x == 0 && local.z == 0 {
        return;
    }
    let img = local_image(gate.kind, local);
    for (k, &q) in t.iter().enumerate() {
        p.x.set(q, img.x >> k & 1 == 1);
        p.z.set(q, img.z >> k & 1 == 1);
    }
    p.phase = (p.phase + img.phase) % 4;
}

/// `U p U^dag` for the circuit `U` (first gate applied first).
pub fn conjugate(p: &PauliOperator, circuit: &Circuit) -> Result<PauliOperator> {
    if p.len() != circuit.n_qubits() {
        return Err(Error::DimensionMismatch {
            expected: format!("Pauli on {} qubits", circuit.n_qubits()),
            found: format!("{} qubits", p.len()),
        });
    }
    let mut out = p.clone();
    for g in circuit.gates() {
        conjugate_gate(&mut out, g);
    }
    Ok(out)
}

/// `XCX(a, b) = (H x H) CZ (H x H)` written out as five gates.
pub fn xcx_expansion(n_qubits: usize, a: usize, b: usize) -> Result<Circuit> {
    let mut c = Circuit::new(n_qubits);
    c.add(GateKind::H, &[a])?;
    c.add(GateKind::H, &[b])?;
    c.add(GateKind::CZ, &[a, b])?;
    c.add(GateKind::H, &[a])?;
    c.add(GateKind::H, &[b])?;
    Ok(c)
}
