//! Transversal logical gates of square and symmetric hypergraph product codes,
//! and verification of logical actions through the Pauli engine.

use std::fmt;

use serde::Serialize;

use crate::bitvec::BitVector;
use crate::canonical::{CanonicalBasis, LogicalQubitId};
use crate::error::{Error, Result};
use crate::f2linalg::{solve, BinaryMatrix, RowSpace};
use crate::hgp::{HgpCode, QubitCoord, Sector};
use crate::partition::QubitPartition;
use crate::pauli::{conjugate, Circuit, GateKind, PauliOperator};

/// A CSS stabilizer code together with a symplectic basis of logical operators,
/// as needed to read off the logical action of a circuit.
#[derive(Clone, Debug)]
pub struct LogicalFrame {
    n: usize,
    generators: Vec<(String, PauliOperator)>,
    x_space: RowSpace,
    z_space: RowSpace,
    labels: Vec<String>,
    x_logicals: Vec<BitVector>,
    z_logicals: Vec<BitVector>,
}

impl LogicalFrame {
    /// A frame from explicit X and Z logical supports; logical `t` pairs
    /// `x_logicals[t]` with `z_logicals[t]`.
    pub fn new(
        hx: &BinaryMatrix,
        hz: &BinaryMatrix,
        labels: Vec<String>,
        x_logicals: Vec<BitVector>,
        z_logicals: Vec<BitVector>,
    ) -> Self {
        let n = hx.cols();
        let mut generators = Vec::with_capacity(hx.rows() + hz.rows());
        for (t, r) in hx.row_vectors().iter().enumerate() {
            generators.push((format!("X{}", t + 1), PauliOperator::x_type(r.clone())));
        }
        for (t, r) in hz.row_vectors().iter().enumerate() {
            generators.push((format!("Z{}", t + 1), PauliOperator::z_type(r.clone())));
        }
        Self {
            n,
            x_space: RowSpace::new(n, hx.row_vectors().iter().cloned()),
            z_space: RowSpace::new(n, hz.row_vectors().iter().cloned()),
            generators,
            labels,
            x_logicals,
            z_logicals,
        }
    }

    pub fn from_basis(code: &HgpCode, basis: &CanonicalBasis) -> Self {
        let mut frame = Self::new(
            code.hx(),
            code.hz(),
            basis.ids().iter().map(ToString::to_string).collect(),
            basis
                .qubits()
                .iter()
                .map(|q| q.x.x_support().clone())
                .collect(),
            basis
                .qubits()
                .iter()
                .map(|q| q.z.z_support().clone())
                .collect(),
        );
        let labels = code
            .stabilizer_x_labels()
            .into_iter()
            .map(|(j, h)| format!("S_x({j},{h})"))
            .chain(
                code.stabilizer_z_labels()
                    .into_iter()
                    .map(|(i, l)| format!("S_z({i},{l})")),
            );
        for (g, label) in frame.generators.iter_mut().zip(labels) {
            g.0 = label;
        }
        frame
    }

    /// `n` unencoded qubits, each its own logical qubit.
    pub fn bare(n: usize) -> Self {
        Self::new(
            &BinaryMatrix::zeros(0, n),
            &BinaryMatrix::zeros(0, n),
            (1..=n).map(|q| format!("q{q}")).collect(),
            (0..n).map(|q| BitVector::unit(n, q)).collect(),
            (0..n).map(|q| BitVector::unit(n, q)).collect(),
        )
    }

    /// The frame of two codes side by side, `other`'s qubits numbered after `self`'s.
    pub fn direct_sum(&self, other: &LogicalFrame) -> LogicalFrame {
        let n = self.n + other.n;
        let place = |v: &BitVector, offset: usize| {
            let mut w = BitVector::zeros(n);
            w.splice(offset, v);
            w
        };
        let lift = |p: &PauliOperator, offset: usize| {
            PauliOperator::new(
                place(p.x_support(), offset),
                place(p.z_support(), offset),
                p.phase(),
            )
            .expect("equal lengths")
        };
        let generators = self
            .generators
            .iter()
            .map(|(l, p)| (l.clone(), lift(p, 0)))
            .chain(
                other
                    .generators
                    .iter()
                    .map(|(l, p)| (l.clone(), lift(p, self.n))),
            )
            .collect::<Vec<_>>();
        let x_rows = generators
            .iter()
            .filter(|g| !g.1.x_support().is_zero())
            .map(|g| g.1.x_support().clone());
        let z_rows = generators
            .iter()
            .filter(|g| !g.1.z_support().is_zero())
            .map(|g| g.1.z_support().clone());
        LogicalFrame {
            n,
            x_space: RowSpace::new(n, x_rows),
            z_space: RowSpace::new(n, z_rows),
            generators,
            labels: self.labels.iter().chain(&other.labels).cloned().collect(),
            x_logicals: self
                .x_logicals
                .iter()
                .map(|v| place(v, 0))
                .chain(other.x_logicals.iter().map(|v| place(v, self.n)))
                .collect(),
            z_logicals: self
                .z_logicals
                .iter()
                .map(|v| place(v, 0))
                .chain(other.z_logicals.iter().map(|v| place(v, self.n)))
                .collect(),
        }
    }

    /// Prefixes every logical and generator label.
    pub fn with_prefix(mut self, prefix: &str) -> Self {
        for l in &mut self.labels {
            *l = format!("{prefix}{l}");
        }
        for g in &mut self.generators {
            g.0 = format!("{prefix}{}", g.0);
        }
        self
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// Number of logical qubits.
    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn generators(&self) -> &[(String, PauliOperator)] {
        &self.generators
    }

    pub fn logical_x(&self, t: usize) -> PauliOperator {
        PauliOperator::x_type(self.x_logicals[t].clone())
    }

    pub fn logical_z(&self, t: usize) -> PauliOperator {
        PauliOperator::z_type(self.z_logicals[t].clone())
    }

    /// Whether `p` is an element of the stabilizer group, sign included.
    /// Every element of a CSS stabilizer group is `X^a Z^b` with phase 0.
    pub fn stabilizer_phase(&self, p: &PauliOperator) -> Option<u8> {
        (self.x_space.contains(p.x_support()) && self.z_space.contains(p.z_support()))
            .then_some(p.phase())
    }

    /// Writes `p = i^psi * Lbar * S` with `Lbar` a product of logical basis
    /// operators and `S` a stabilizer; returns `Lbar` as a `k`-qubit Pauli
    /// carrying the phase `psi`.
    pub fn decompose(&self, p: &PauliOperator) -> Option<PauliOperator> {
        let k = self.k();
        let lambda = BitVector::from_bits((0..k).map(|t| p.x_support().dot(&self.z_logicals[t])));
        let mu = BitVector::from_bits((0..k).map(|t| p.z_support().dot(&self.x_logicals[t])));
        let mut lx = BitVector::zeros(self.n);
        for t in lambda.ones() {
            lx.xor_assign(&self.x_logicals[t]);
        }
        let mut lz = BitVector::zeros(self.n);
        for t in mu.ones() {
            lz.xor_assign(&self.z_logicals[t]);
        }
        let rx = p.x_support().xor(&lx);
        let rz = p.z_support().xor(&lz);
        if !self.x_space.contains(&rx) || !self.z_space.contains(&rz) {
            return None;
        }
        let logical = PauliOperator::new(lx, lz, 0).expect("length n");
        let stabilizer = PauliOperator::new(rx, rz, 0).expect("length n");
        let product = logical.multiply(&stabilizer).expect("length n");
        let psi = (p.phase() + 4 - product.phase()) % 4;
        Some(PauliOperator::new(lambda, mu, psi).expect("length k"))
    }
}

/// Images of the logical basis `X_1..X_k, Z_1..Z_k` under a Clifford, as
/// `k`-qubit Paulis over the logical labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalAction {
    labels: Vec<String>,
    images: Vec<PauliOperator>,
}

impl LogicalAction {
    /// The action of a circuit on `labels.len()` bare logical qubits.
    pub fn from_logical_circuit(labels: Vec<String>, circuit: &Circuit) -> Result<Self> {
        let k = labels.len();
        let mut images = Vec::with_capacity(2 * k);
        for letter in ['X', 'Z'] {
            for q in 0..k {
                images.push(conjugate(&PauliOperator::single(k, q, letter)?, circuit)?);
            }
        }
        Ok(Self { labels, images })
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let k = labels.len();
        Self::from_logical_circuit(labels, &Circuit::new(k)).expect("empty circuit")
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn image_of_x(&self, q: usize) -> &PauliOperator {
        &self.images[q]
    }

    pub fn image_of_z(&self, q: usize) -> &PauliOperator {
        &self.images[self.k() + q]
    }

    pub fn images(&self) -> &[PauliOperator] {
        &self.images
    }

    /// Row `t` holds the `(x | z)` bits of the image of basis operator `t`.
    pub fn symplectic_map(&self) -> BinaryMatrix {
        let k = self.k();
        let rows = self
            .images
            .iter()
            .map(|p| BitVector::from_bits(p.x_support().iter().chain(p.z_support().iter())))
            .collect();
        BinaryMatrix::from_row_vectors(2 * k, rows).expect("rows of length 2k")
    }

    pub fn phase_vector(&self) -> Vec<u8> {
        self.images.iter().map(PauliOperator::phase).collect()
    }

    /// Whether the images keep the pairing of the basis: `X_q`, `Z_q`
    /// anticommute and every other pair commutes.
    pub fn is_symplectic(&self) -> bool {
        let k = self.k();
        (0..2 * k).all(|a| {
            (0..2 * k).all(|b| {
                let paired = a % k == b % k && a != b;
                self.images[a].commutes_with(&self.images[b]) != paired
            })
        })
    }

    /// Compares against `expected`, allowing a Pauli correction applied before
    /// `expected`: the two must agree on every image up to sign.
    pub fn compare(&self, expected: &LogicalAction) -> ActionComparison {
        let k = self.k();
        if expected.k() != k {
            return ActionComparison::mismatch(format!(
                "expected {} logical qubits, found {k}",
                expected.k()
            ));
        }
        let mut corr_x = BitVector::zeros(k);
        let mut corr_z = BitVector::zeros(k);
        for (t, (a, e)) in self.images.iter().zip(&expected.images).enumerate() {
            let (letter, q) = if t < k { ('X', t) } else { ('Z', t - k) };
            let name = format!("{letter} of {}", self.labels[q]);
            if a.x_support() != e.x_support() || a.z_support() != e.z_support() {
                return ActionComparison::mismatch(format!("{name}: maps to {a}, expected {e}"));
            }
            match (a.phase() + 4 - e.phase()) % 4 {
                0 => {}
                2 if t < k => corr_z.set(q, true),
                2 => corr_x.set(q, true),
                _ => return ActionComparison::mismatch(format!("{name}: non-Hermitian phase")),
            }
        }
        let correction = PauliOperator::new(corr_x, corr_z, 0).expect("length k");
        ActionComparison {
            matches: true,
            correction: (!correction.is_identity_up_to_phase()).then_some(correction),
            first_mismatch: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionComparison {
    pub matches: bool,
    /// Pauli applied before the expected gate to obtain the observed action.
    pub correction: Option<PauliOperator>,
    pub first_mismatch: Option<String>,
}

impl ActionComparison {
    fn mismatch(msg: String) -> Self {
        Self {
            matches: false,
            correction: None,
            first_mismatch: Some(msg),
        }
    }
}

/// Image of one stabilizer generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerImage {
    pub generator: String,
    pub image: PauliOperator,
}

/// Outcome of conjugating a frame's stabilizers and logical basis through a circuit.
#[derive(Clone, Debug)]
pub struct GateReport {
    pub stabilizer_images: Vec<StabilizerImage>,
    pub action: LogicalAction,
}

/// Conjugates every stabilizer generator and logical basis operator of
/// `frame` through `circuit`.
///
/// Fails if a generator leaves the stabilizer group, lands on it with a
/// nonzero phase, or a logical image is not a logical times a stabilizer.
pub fn verify_circuit(frame: &LogicalFrame, circuit: &Circuit) -> Result<GateReport> {
    if circuit.n_qubits() != frame.n_qubits() {
        return Err(Error::DimensionMismatch {
            expected: format!("circuit on {} qubits", frame.n_qubits()),
            found: format!("{} qubits", circuit.n_qubits()),
        });
    }
    let mut stabilizer_images = Vec::with_capacity(frame.generators().len());
    for (label, g) in frame.generators() {
        let image = conjugate(g, circuit)?;
        match frame.stabilizer_phase(&image) {
            None => {
                return Err(Error::StabilizerNotPreserved {
                    generator: label.clone(),
                })
            }
            Some(0) => {}
            Some(phase) => {
                return Err(Error::StabilizerPhase {
                    generator: label.clone(),
                    phase,
                })
            }
        }
        stabilizer_images.push(StabilizerImage {
            generator: label.clone(),
            image,
        });
    }
    let k = frame.k();
    let mut images = Vec::with_capacity(2 * k);
    for (letter, op) in [('X', 0), ('Z', 1)] {
        for t in 0..k {
            let p = if op == 0 {
                frame.logical_x(t)
            } else {
                frame.logical_z(t)
            };
            let image = conjugate(&p, circuit)?;
            let logical = frame
                .decompose(&image)
                .ok_or_else(|| Error::NotInLogicalSpan {
                    operator: format!("{letter} of {}", frame.labels()[t]),
                })?;
            images.push(logical);
        }
    }
    Ok(GateReport {
        stabilizer_images,
        action: LogicalAction {
            labels: frame.labels().to_vec(),
            images,
        },
    })
}

/// A Pauli `P` such that `P U` maps every stabilizer generator of `frame`
/// onto the stabilizer group with phase 0, for a circuit `U` that preserves
/// the group only up to signs. `None` when no correction is needed.
pub fn sign_correction(frame: &LogicalFrame, circuit: &Circuit) -> Result<Option<PauliOperator>> {
    let n = frame.n_qubits();
    let mut rows = Vec::with_capacity(frame.generators().len());
    let mut signs = Vec::with_capacity(frame.generators().len());
    for (label, g) in frame.generators() {
        let image = conjugate(g, circuit)?;
        match frame.stabilizer_phase(&image) {
            None => {
                return Err(Error::StabilizerNotPreserved {
                    generator: label.clone(),
                })
            }
            Some(phase) if phase % 2 == 1 => {
                return Err(Error::StabilizerPhase {
                    generator: label.clone(),
                    phase,
                })
            }
            Some(phase) => signs.push(phase == 2),
        }
        // <P, g'> = P.x . g'.z + P.z . g'.x
        rows.push(BitVector::from_bits(
            image.z_support().iter().chain(image.x_support().iter()),
        ));
    }
    if !signs.iter().any(|&s| s) {
        return Ok(None);
    }
    let a = BinaryMatrix::from_row_vectors(2 * n, rows)?;
    let w = solve(&a, &BitVector::from_bits(signs)).ok_or_else(|| Error::StabilizerPhase {
        generator: "inconsistent generator signs".into(),
        phase: 2,
    })?;
    Ok(Some(PauliOperator::new(w.slice(0, n), w.slice(n, n), 0)?))
}

/// `circuit` followed by the Pauli `p` as single-qubit X and Z gates.
pub fn append_pauli(circuit: &Circuit, p: &PauliOperator) -> Result<Circuit> {
    let mut c = circuit.clone();
    for q in p.x_support().ones() {
        c.add(GateKind::X, &[q])?;
    }
    for q in p.z_support().ones() {
        c.add(GateKind::Z, &[q])?;
    }
    Ok(c)
}

/// Verifies a circuit on an HGP code against its canonical basis.
pub fn verify_gate(
    code: &HgpCode,
    basis: &CanonicalBasis,
    circuit: &Circuit,
) -> Result<GateReport> {
    verify_circuit(&LogicalFrame::from_basis(code, basis), circuit)
}

fn pos(code: &HgpCode, c: QubitCoord) -> usize {
    code.position(c).expect("coordinate inside the code")
}

/// H on every qubit, then SWAP inside every two-qubit subset of `partition`.
pub fn hadamard_swap_circuit(code: &HgpCode, partition: &QubitPartition) -> Result<Circuit> {
    partition.validate(code)?;
    if partition.locality() > 2 {
        return Err(Error::InvalidPartition(
            "Hadamard-SWAP needs subsets of at most two qubits".into(),
        ));
    }
    let mut c = Circuit::new(code.n_qubits());
    for q in 0..code.n_qubits() {
        c.add(GateKind::H, &[q])?;
    }
    for s in partition.subsets() {
        if let [a, b] = s.as_slice() {
            c.add(GateKind::SWAP, &[pos(code, *a), pos(code, *b)])?;
        }
    }
    Ok(c)
}

/// S on left diagonal qubits, S-dagger on right diagonal qubits, CZ between twins.
pub fn cz_s_circuit(code: &HgpCode) -> Result<Circuit> {
    if !code.is_square() {
        return Err(Error::NotSquare);
    }
    let mut c = Circuit::new(code.n_qubits());
    let coords: Vec<QubitCoord> = code.coords().collect();
    for &q in coords.iter().filter(|q| q.is_diagonal()) {
        let kind = match q.sector {
            Sector::L => GateKind::S,
            Sector::R => GateKind::Sdag,
        };
        c.add(kind, &[pos(code, q)])?;
    }
    for &q in coords.iter().filter(|q| q.row < q.col) {
        c.add(GateKind::CZ, &[pos(code, q), pos(code, q.transposed())])?;
    }
    Ok(c)
}

/// CZ between `(i, h, L)` and `(i, h, R)` for every grid position.
pub fn sibling_cz_circuit(code: &HgpCode) -> Result<Circuit> {
    if !code.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut c = Circuit::new(code.n_qubits());
    for q in code.coords().filter(|q| q.sector == Sector::L) {
        c.add(
            GateKind::CZ,
            &[pos(code, q), pos(code, QubitCoord::right(q.row, q.col))],
        )?;
    }
    Ok(c)
}

/// The named transversal gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TransversalGate {
    /// Hadamard-SWAP with the diagonal-twin partition.
    HswapTwin,
    /// Hadamard-SWAP with the sibling partition.
    HswapSibling,
    CzS,
    SiblingCz,
}

impl TransversalGate {
    pub const ALL: [TransversalGate; 4] = [
        TransversalGate::HswapTwin,
        TransversalGate::HswapSibling,
        TransversalGate::CzS,
        TransversalGate::SiblingCz,
    ];

    pub fn physical_circuit(self, code: &HgpCode) -> Result<Circuit> {
        use crate::partition::{diagonal_twin_partition, sibling_partition};
        match self {
            TransversalGate::HswapTwin => {
                hadamard_swap_circuit(code, &diagonal_twin_partition(code)?)
            }
            TransversalGate::HswapSibling => hadamard_swap_circuit(code, &sibling_partition(code)?),
            TransversalGate::CzS => cz_s_circuit(code),
            TransversalGate::SiblingCz => sibling_cz_circuit(code),
        }
    }

    /// The logical circuit the gate is expected to implement on the canonical basis.
    pub fn expected_logical_circuit(self, basis: &CanonicalBasis) -> Result<Circuit> {
        let ids = basis.ids();
        let k = ids.len();
        let idx = |q: LogicalQubitId| basis.index_of(q);
        let mut c = Circuit::new(k);
        match self {
            TransversalGate::HswapTwin | TransversalGate::HswapSibling => {
                for q in 0..k {
                    c.add(GateKind::H, &[q])?;
                }
                for &q in &ids {
                    let partner = if self == TransversalGate::HswapTwin {
                        if q.is_diagonal() {
                            continue;
                        }
                        basis.twin_of(q)?
                    } else {
                        basis.sibling_of(q)?
                    };
                    if q < partner {
                        c.add(GateKind::SWAP, &[idx(q)?, idx(partner)?])?;
                    }
                }
            }
            TransversalGate::CzS => {
                for &q in ids.iter().filter(|q| q.is_diagonal()) {
                    let kind = match q.sector {
                        Sector::L => GateKind::S,
                        Sector::R => GateKind::Sdag,
                    };
                    c.add(kind, &[idx(q)?])?;
                }
                for &q in ids.iter().filter(|q| q.row < q.col) {
                    c.add(GateKind::CZ, &[idx(q)?, idx(basis.twin_of(q)?)?])?;
                }
            }
            TransversalGate::SiblingCz => {
                for &q in ids.iter().filter(|q| q.sector == Sector::L) {
                    c.add(GateKind::CZ, &[idx(q)?, idx(basis.sibling_of(q)?)?])?;
                }
            }
        }
        Ok(c)
    }

    pub fn expected_action(self, basis: &CanonicalBasis) -> Result<LogicalAction> {
        let labels = basis.ids().iter().map(ToString::to_string).collect();
        LogicalAction::from_logical_circuit(labels, &self.expected_logical_circuit(basis)?)
    }

    pub fn description(self) -> &'static str {
        match self {
            TransversalGate::HswapTwin => "H on every logical qubit, SWAP between twin logical qubits",
            TransversalGate::HswapSibling => "H on every logical qubit, SWAP between sibling logical qubits",
            TransversalGate::CzS => "S on left diagonal logical qubits, S-dagger on right diagonal logical qubits, CZ between twin logical qubits",
            TransversalGate::SiblingCz => "CZ between sibling logical qubits",
        }
    }

    /// Expected image of the X generator `S_x(j, h)` as a `(row, col)` label of
    /// a Z generator, together with whether the X part is kept.
    pub fn x_stabilizer_law(self, j: usize, h: usize) -> ((usize, usize), bool) {
        match self {
            TransversalGate::HswapTwin => ((h, j), false),
            TransversalGate::HswapSibling => ((j, h), false),
            TransversalGate::CzS => ((h, j), true),
            TransversalGate::SiblingCz => ((j, h), true),
        }
    }
}

impl fmt::Display for TransversalGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransversalGate::HswapTwin => "hswap",
            TransversalGate::HswapSibling => "hswap-sibling",
            TransversalGate::CzS => "czs",
            TransversalGate::SiblingCz => "siblingcz",
        })
    }
}

/// Best-effort naming of an observed action among the known transversal patterns.
pub fn recognize(
    basis: &CanonicalBasis,
    action: &LogicalAction,
) -> Option<(String, Option<PauliOperator>)> {
    let identity = LogicalAction::identity(action.labels().to_vec());
    let cmp = action.compare(&identity);
    if cmp.matches {
        return Some(("identity".into(), cmp.correction));
    }
    for gate in TransversalGate::ALL {
        let Ok(expected) = gate.expected_action(basis) else {
            continue;
        };
        let cmp = action.compare(&expected);
        if cmp.matches {
            return Some((gate.description().into(), cmp.correction));
        }
    }
    None
}

/// Checks a stabilizer law of `gate` generator by generator: the support of
/// the image of each `S_x(j, h)` must equal that of the predicted Z generator
/// (times `S_x(j, h)` itself when the X part is kept). Signs are checked by
/// [`verify_circuit`]. Returns the first generator that breaks the law.
pub fn check_stabilizer_law(
    code: &HgpCode,
    gate: TransversalGate,
    law: impl Fn(usize, usize) -> ((usize, usize), bool),
) -> Result<std::result::Result<(), String>> {
    let circuit = gate.physical_circuit(code)?;
    for (j, h) in code.stabilizer_x_labels() {
        let sx = code.stabilizer_x(j, h)?;
        let image = conjugate(&sx, &circuit)?;
        let ((zi, zl), keep_x) = law(j, h);
        let sz = match code.stabilizer_z(zi, zl) {
            Ok(s) => s,
            Err(_) => {
                return Ok(Err(format!(
                    "S_x({j},{h}): predicted S_z({zi},{zl}) does not exist"
                )))
            }
        };
        let expected = if keep_x { sx.multiply(&sz)? } else { sz };
        if image.x_support() != expected.x_support() || image.z_support() != expected.z_support() {
            return Ok(Err(format!(
                "S_x({j},{h}) maps to {image}, not to the predicted S_z({zi},{zl}) form"
            )));
        }
    }
    Ok(Ok(()))
}
