//! Two-qubit gates built from a single (or, for SWAP, two) CX gates.

use crate::circuit::{Circuit, CircuitBuilder, GateKind, QubitRole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoBitKind {
    Csx,
    CsxDg,
    SwapBloch,
}

pub fn build_2bit(kind: TwoBitKind) -> Circuit {
    match kind {
        TwoBitKind::Csx => controlled_root(false),
        TwoBitKind::CsxDg => controlled_root(true),
        TwoBitKind::SwapBloch => swap_bloch(),
    }
}

/// Controlled √X up to a controlled phase: the target sees
/// `Z` when the control is |0⟩ and `RX(±π/2)` when it is |1⟩.
fn controlled_root(dagger: bool) -> Circuit {
    let (before, after) = if dagger { (GateKind::T, GateKind::Tdg) } else { (GateKind::Tdg, GateKind::T) };
    let mut b = CircuitBuilder::new(if dagger { "csxdg2" } else { "csx2" });
    let c = b.qubit("c", QubitRole::Control);
    let t = b.qubit("t", QubitRole::Target);
    b.gates(&[GateKind::Z, GateKind::H, before], t);
    b.gate(GateKind::CX, &[c, t]);
    b.gates(&[after, GateKind::H], t);
    b.build()
}

/// SWAP up to relative phases (an iSWAP-style exchange) with two CX gates.
fn swap_bloch() -> Circuit {
    let mut b = CircuitBuilder::new("swap2");
    let a = b.qubit("a", QubitRole::Target);
    let q = b.qubit("b", QubitRole::Target);
    b.gate(GateKind::SX, &[a]).gate(GateKind::S, &[q]);
    b.gate(GateKind::CX, &[a, q]);
    b.gate(GateKind::S, &[a]).gate(GateKind::S, &[q]);
    b.gate(GateKind::CX, &[q, a]);
    b.gate(GateKind::S, &[a]).gate(GateKind::SX, &[q]);
    b.build()
}
