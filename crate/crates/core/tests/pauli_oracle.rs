//! Pauli conjugation checked against dense unitaries.

mod common;

use common::dense::*;
use hgp_core::pauli::{conjugate, xcx_expansion, Circuit, GateKind, PauliOperator};
use hgp_core::BitVector;
use proptest::prelude::*;

#[test]
fn every_gate_matches_its_unitary() {
    for kind in KINDS {
        let circuit = single_gate(kind);
        let u = dense_gate(kind);
        let paulis = all_paulis(circuit.n_qubits());
        assert_eq!(paulis.len(), if circuit.n_qubits() == 1 { 4 } else { 16 });
        for p in paulis {
            for phase in 0..4 {
                let p = p.clone().with_phase(phase);
                let want = mul(&mul(&u, &dense_pauli(&p)), &dagger(&u));
                let got = dense_pauli(&conjugate(&p, &circuit).unwrap());
                assert!(close(&want, &got), "{kind:?} on {p}");
            }
        }
    }
}

#[test]
fn reversed_two_qubit_gates_match() {
    for kind in [GateKind::CNOT, GateKind::CZ, GateKind::XCX] {
        let mut circuit = Circuit::new(2);
        circuit.add(kind, &[1, 0]).unwrap();
        let sw = dense_gate(GateKind::SWAP);
        let u = mul(&mul(&sw, &dense_gate(kind)), &sw);
        for p in all_paulis(2) {
            let want = mul(&mul(&u, &dense_pauli(&p)), &dagger(&u));
            assert!(close(
                &want,
                &dense_pauli(&conjugate(&p, &circuit).unwrap())
            ));
        }
    }
}

#[test]
fn xcx_equals_its_expansion() {
    let mut xcx = Circuit::new(2);
    xcx.add(GateKind::XCX, &[0, 1]).unwrap();
    let expansion = xcx_expansion(2, 0, 1).unwrap();
    for p in all_paulis(2) {
        assert_eq!(
            conjugate(&p, &xcx).unwrap(),
            conjugate(&p, &expansion).unwrap()
        );
    }
}

#[test]
fn phase_conventions() {
    let s = single_gate(GateKind::S);
    let x: PauliOperator = "X".parse().unwrap();
    assert_eq!(conjugate(&x, &s).unwrap().to_string(), "i^0 Y");
    let sd = single_gate(GateKind::Sdag);
    assert_eq!(conjugate(&x, &sd).unwrap().to_string(), "i^2 Y");
    let xz = x.multiply(&"Z".parse().unwrap()).unwrap();
    assert_eq!(xz.to_string(), "i^3 Y");
}

fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (
        proptest::collection::vec(any::<bool>(), n),
        proptest::collection::vec(any::<bool>(), n),
        0u8..4,
    )
        .prop_map(|(x, z, ph)| {
            PauliOperator::new(BitVector::from_bits(x), BitVector::from_bits(z), ph).unwrap()
        })
}

fn circuit(n: usize) -> impl Strategy<Value = Circuit> {
    proptest::collection::vec((0..KINDS.len(), 0..n, 1..n), 0..30).prop_map(move |gates| {
        let mut c = Circuit::new(n);
        for (k, a, off) in gates {
            let kind = KINDS[k];
            if kind.arity() == 1 {
                c.add(kind, &[a]).unwrap();
            } else {
                c.add(kind, &[a, (a + off) % n]).unwrap();
            }
        }
        c
    })
}

proptest! {
    #[test]
    fn conjugation_is_a_homomorphism(p in pauli(6), q in pauli(6), c in circuit(6)) {
        let lhs = conjugate(&p.multiply(&q).unwrap(), &c).unwrap();
        let rhs = conjugate(&p, &c).unwrap().multiply(&conjugate(&q, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_undoes_conjugation(p in pauli(6), c in circuit(6)) {
        let there = conjugate(&p, &c).unwrap();
        prop_assert_eq!(conjugate(&there, &c.inverse()).unwrap(), p);
    }

    #[test]
    fn commutation_is_preserved(p in pauli(5), q in pauli(5), c in circuit(5)) {
        let (p2, q2) = (conjugate(&p, &c).unwrap(), conjugate(&q, &c).unwrap());
        prop_assert_eq!(p.commutes_with(&q), p2.commutes_with(&q2));
    }

    #[test]
    fn text_form_round_trips(p in pauli(7)) {
        let back: PauliOperator = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn short_circuit_matches_dense_product() {
    let mut circuit = Circuit::new(2);
    for (k, t) in [
        (GateKind::H, vec![0]),
        (GateKind::CNOT, vec![0, 1]),
        (GateKind::S, vec![1]),
        (GateKind::XCX, vec![1, 0]),
    ] {
        circuit.add(k, &t).unwrap();
    }
    let lift = |k: GateKind, t: &[usize]| -> Mat {
        match t {
            [0] => kron(&dense_gate(k), &eye()),
            [1] => kron(&eye(), &dense_gate(k)),
            [0, 1] => dense_gate(k),
            _ => {
                let sw = dense_gate(GateKind::SWAP);
                mul(&mul(&sw, &dense_gate(k)), &sw)
            }
        }
    };
    let u = circuit.gates().iter().fold(kron(&eye(), &eye()), |acc, g| {
        mul(&lift(g.kind(), g.targets()), &acc)
    });
    for p in all_paulis(2) {
        let want = mul(&mul(&u, &dense_pauli(&p)), &dagger(&u));
        assert!(close(
            &want,
            &dense_pauli(&conjugate(&p, &circuit).unwrap())
        ));
    }
}
