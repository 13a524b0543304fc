#![allow(dead_code)]

use cala::{Circuit, Gate, GateKind};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const CLIFFORD_T: [GateKind; 15] = [
    GateKind::I,
    GateKind::X,
    GateKind::Y,
    GateKind::Z,
    GateKind::H,
    GateKind::SX,
    GateKind::SXdg,
    GateKind::S,
    GateKind::Sdg,
    GateKind::T,
    GateKind::Tdg,
    GateKind::CX,
    GateKind::CY,
    GateKind::CZ,
    GateKind::Swap,
];

/// Random Clifford+T circuit of width `1..=max_width` and up to `max_gates` gates.
pub fn random_clifford_t(rng: &mut StdRng, max_width: usize, max_gates: usize) -> Circuit {
    let width = rng.gen_range(1..=max_width);
    let len = rng.gen_range(0..=max_gates);
    let mut gates = Vec::with_capacity(len);
    while gates.len() < len {
        let kind = CLIFFORD_T[rng.gen_range(0..CLIFFORD_T.len())];
        if kind.arity() == 2 {
            if width < 2 {
                continue;
            }
            let a = rng.gen_range(0..width);
            let b = (a + rng.gen_range(1..width)) % width;
            gates.push(Gate::new(kind, &[a, b]).unwrap());
        } else {
            gates.push(Gate::new(kind, &[rng.gen_range(0..width)]).unwrap());
        }
    }
    Circuit::plain(width, gates).unwrap()
}

/// The 200-circuit corpus used by the soundness checks.
pub fn soundness_corpus() -> Vec<Circuit> {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    (0..200).map(|_| random_clifford_t(&mut rng, 4, 40)).collect()
}
