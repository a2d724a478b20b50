//! Dense-unitary oracle for Pauli conjugation on one and two qubits.

use hgp_core::pauli::{Circuit, GateKind, PauliOperator};
use hgp_core::BitVector;
use num_complex::Complex64 as C;

pub type Mat = Vec<Vec<C>>;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn mat(rows: &[&[C]]) -> Mat {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn dagger(a: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[j][i].conj()).collect())
        .collect()
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    (0..n * m)
        .map(|i| {
            (0..n * m)
                .map(|j| a[i / m][j / m] * b[i % m][j % m])
                .collect()
        })
        .collect()
}

pub fn close(a: &Mat, b: &Mat) -> bool {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .all(|(x, y)| (x - y).norm() < 1e-12)
}

pub fn eye() -> Mat {
    mat(&[&[c(1., 0.), c(0., 0.)], &[c(0., 0.), c(1., 0.)]])
}

pub fn px() -> Mat {
    mat(&[&[c(0., 0.), c(1., 0.)], &[c(1., 0.), c(0., 0.)]])
}

pub fn pz() -> Mat {
    mat(&[&[c(1., 0.), c(0., 0.)], &[c(0., 0.), c(-1., 0.)]])
}

/// Qubit 0 is the leftmost tensor factor.
pub fn dense_pauli(p: &PauliOperator) -> Mat {
    let n = p.len();
    let factor = |q: usize, x: bool| {
        let on = if x {
            p.x_support().get(q)
        } else {
            p.z_support().get(q)
        };
        match (on, x) {
            (false, _) => eye(),
            (true, true) => px(),
            (true, false) => pz(),
        }
    };
    let tensor = |x: bool| (1..n).fold(factor(0, x), |acc, q| kron(&acc, &factor(q, x)));
    let phase = [c(1., 0.), c(0., 1.), c(-1., 0.), c(0., -1.)][p.phase() as usize];
    mul(&tensor(true), &tensor(false))
        .into_iter()
        .map(|r| r.into_iter().map(|v| v * phase).collect())
        .collect()
}

pub fn dense_gate(kind: GateKind) -> Mat {
    let s = 1.0 / 2f64.sqrt();
    let z = c(0., 0.);
    let o = c(1., 0.);
    let h = mat(&[&[c(s, 0.), c(s, 0.)], &[c(s, 0.), c(-s, 0.)]]);
    let cz = mat(&[&[o, z, z, z], &[z, o, z, z], &[z, z, o, z], &[z, z, z, -o]]);
    match kind {
        GateKind::X => px(),
        GateKind::Z => pz(),
        GateKind::H => h,
        GateKind::S => mat(&[&[o, z], &[z, c(0., 1.)]]),
        GateKind::Sdag => mat(&[&[o, z], &[z, c(0., -1.)]]),
        GateKind::CZ => cz,
        GateKind::CNOT => mat(&[&[o, z, z, z], &[z, o, z, z], &[z, z, z, o], &[z, z, o, z]]),
        GateKind::SWAP => mat(&[&[o, z, z, z], &[z, z, o, z], &[z, o, z, z], &[z, z, z, o]]),
        GateKind::XCX => {
            let hh = kron(&h, &h);
            mul(&mul(&hh, &cz), &hh)
        }
    }
}

pub const KINDS: [GateKind; 9] = [
    GateKind::X,
    GateKind::Z,
    GateKind::H,
    GateKind::S,
    GateKind::Sdag,
    GateKind::CZ,
    GateKind::CNOT,
    GateKind::SWAP,
    GateKind::XCX,
];

pub fn all_paulis(n: usize) -> Vec<PauliOperator> {
    (0..1usize << (2 * n))
        .map(|m| {
            let x = BitVector::from_bits((0..n).map(|q| m >> q & 1 == 1));
            let z = BitVector::from_bits((0..n).map(|q| m >> (n + q) & 1 == 1));
            PauliOperator::new(x, z, 0).unwrap()
        })
        .collect()
}

pub fn single_gate(kind: GateKind) -> Circuit {
    let n = if matches!(
        kind,
        GateKind::X | GateKind::Z | GateKind::H | GateKind::S | GateKind::Sdag
    ) {
        1
    } else {
        2
    };
    let mut circuit = Circuit::new(n);
    circuit.add(kind, &(0..n).collect::<Vec<_>>()).unwrap();
    circuit
}
