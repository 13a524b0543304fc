//! n-bit gates chained from three-qubit cores through ancillas.
//! Ancillas start in |0⟩ and are left dirty.

use super::core::{build_core, BooleanGateKind};
use super::two_bit::{build_2bit, TwoBitKind};
use crate::circuit::{Circuit, CircuitBuilder, GateKind, QubitRole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompositeKind {
    And4,
    And5,
    /// (c1 ∨ c2) ∧ (c3 ∨ c4).
    Pos5,
    /// (c1 ∧ c2) ∨ (c3 ∧ c4).
    Sop5,
    Fredkin3,
    Fredkin4,
    Csx3,
    CsxDg3,
    Miller3,
}

impl CompositeKind {
    pub const ALL: [CompositeKind; 9] = [
        CompositeKind::And4,
        CompositeKind::And5,
        CompositeKind::Pos5,
        CompositeKind::Sop5,
        CompositeKind::Fredkin3,
        CompositeKind::Fredkin4,
        CompositeKind::Csx3,
        CompositeKind::CsxDg3,
        CompositeKind::Miller3,
    ];

    /// Ancilla count.
    pub fn m(self) -> usize {
        match self {
            CompositeKind::And4 | CompositeKind::Fredkin4 | CompositeKind::Csx3 | CompositeKind::CsxDg3 => 1,
            CompositeKind::And5 | CompositeKind::Pos5 | CompositeKind::Sop5 => 2,
            CompositeKind::Fredkin3 | CompositeKind::Miller3 => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CompositeKind::And4 => "and4",
            CompositeKind::And5 => "and5",
            CompositeKind::Pos5 => "pos5",
            CompositeKind::Sop5 => "sop5",
            CompositeKind::Fredkin3 => "fredkin3",
            CompositeKind::Fredkin4 => "fredkin4",
            CompositeKind::Csx3 => "csx3",
            CompositeKind::CsxDg3 => "csxdg3",
            CompositeKind::Miller3 => "miller3",
        }
    }
}

fn core(kind: BooleanGateKind) -> Circuit {
    build_core(&kind.spec())
}

/// Appends a core with `c1`, target `t`, `c2`.
fn push_core(b: &mut CircuitBuilder, kind: BooleanGateKind, c1: usize, t: usize, c2: usize) {
    b.append(&core(kind), &[c1, t, c2]);
}

pub fn build_composite(kind: CompositeKind) -> Circuit {
    use BooleanGateKind::{And, Or};
    let mut b = CircuitBuilder::new(kind.name());
    match kind {
        CompositeKind::And4 => {
            let c1 = b.qubit("c1", QubitRole::Control);
            let c2 = b.qubit("c2", QubitRole::Control);
            let c3 = b.qubit("c3", QubitRole::Control);
            let anc = b.qubit("anc", QubitRole::Ancilla);
            let t = b.qubit("t", QubitRole::Target);
            push_core(&mut b, And, c1, anc, c2);
            push_core(&mut b, And, anc, t, c3);
        }
        CompositeKind::And5 | CompositeKind::Pos5 | CompositeKind::Sop5 => {
            let (inner, outer) = match kind {
                CompositeKind::And5 => (And, And),
                CompositeKind::Pos5 => (Or, And),
                _ => (And, Or),
            };
            let c: Vec<usize> = (1..=4).map(|i| b.qubit(&format!("c{i}"), QubitRole::Control)).collect();
            let a1 = b.qubit("anc1", QubitRole::Ancilla);
            let a2 = b.qubit("anc2", QubitRole::Ancilla);
            let t = b.qubit("t", QubitRole::Target);
            push_core(&mut b, inner, c[0], a1, c[1]);
            push_core(&mut b, inner, c[2], a2, c[3]);
            push_core(&mut b, outer, a1, t, a2);
        }
        CompositeKind::Fredkin3 => {
            let c = b.qubit("c", QubitRole::Control);
            let t1 = b.qubit("t1", QubitRole::Target);
            let t2 = b.qubit("t2", QubitRole::Target);
            push_fredkin_core(&mut b, c, t1, t2);
        }
        CompositeKind::Fredkin4 => {
            let c1 = b.qubit("c1", QubitRole::Control);
            let c2 = b.qubit("c2", QubitRole::Control);
            let anc = b.qubit("anc", QubitRole::Ancilla);
            let t1 = b.qubit("t1", QubitRole::Target);
            let t2 = b.qubit("t2", QubitRole::Target);
            push_core(&mut b, And, c1, anc, c2);
            push_fredkin_core(&mut b, anc, t1, t2);
        }
        CompositeKind::Csx3 | CompositeKind::CsxDg3 => {
            let c1 = b.qubit("c1", QubitRole::Control);
            let c2 = b.qubit("c2", QubitRole::Control);
            let anc = b.qubit("anc", QubitRole::Ancilla);
            let t = b.qubit("t", QubitRole::Target);
            push_core(&mut b, And, c1, anc, c2);
            let root = if kind == CompositeKind::Csx3 { TwoBitKind::Csx } else { TwoBitKind::CsxDg };
            b.append(&build_2bit(root), &[anc, t]);
        }
        CompositeKind::Miller3 => {
            let a = b.qubit("a", QubitRole::Target);
            let q = b.qubit("b", QubitRole::Target);
            let c = b.qubit("c", QubitRole::Target);
            push_miller(&mut b, a, q, c);
        }
    }
    b.build()
}

/// CX(t2→t1) · core(c, t1 → t2) · CX(t2→t1).
fn push_fredkin_core(b: &mut CircuitBuilder, c: usize, t1: usize, t2: usize) {
    b.gate(GateKind::CX, &[t2, t1]);
    push_core(b, BooleanGateKind::And, c, t2, t1);
    b.gate(GateKind::CX, &[t2, t1]);
}

/// Exchanges |a b c⟩ = |0 1 1⟩ and |1 0 0⟩, fixing the other six basis states.
/// `a` is the distinct bit and carries the core target.
fn push_miller(b: &mut CircuitBuilder, a: usize, q: usize, c: usize) {
    b.gate(GateKind::CX, &[a, q]).gate(GateKind::CX, &[a, c]);
    push_core(b, BooleanGateKind::And, q, a, c);
    b.gate(GateKind::CX, &[a, q]).gate(GateKind::CX, &[a, c]);
}

/// Frozen Miller permutation on `(a, b, c)` bit triples.
pub fn miller_permutation(a: bool, b: bool, c: bool) -> (bool, bool, bool) {
    match (a, b, c) {
        (false, true, true) => (true, false, false),
        (true, false, false) => (false, true, true),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ancilla_counts() {
        for kind in CompositeKind::ALL {
            let c = build_composite(kind);
            assert_eq!(c.qubits_with_role(QubitRole::Ancilla).len(), kind.m(), "{}", kind.name());
        }
    }

    #[test]
    fn cx_counts() {
        let cx = |k| build_composite(k).gates().iter().filter(|g| g.kind() == GateKind::CX).count();
        assert_eq!(cx(CompositeKind::And4), 6);
        assert_eq!(cx(CompositeKind::And5), 9);
        assert_eq!(cx(CompositeKind::Fredkin3), 5);
        assert_eq!(cx(CompositeKind::Fredkin4), 8);
        assert_eq!(cx(CompositeKind::Csx3), 4);
        assert_eq!(cx(CompositeKind::Miller3), 7);
    }
}
