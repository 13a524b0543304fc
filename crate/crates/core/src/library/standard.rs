//! Exact reference circuits used as comparison oracles and as the
//! standard-approach baselines.

use crate::angle::Angle;
use crate::circuit::{Circuit, CircuitBuilder, GateKind, QubitRole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Toffoli,
    ToffoliBarencoRy,
    Fredkin,
    CsxExact,
    CsxDgExact,
    SwapExact,
    /// n-bit Toffoli (`n - 1` controls) with clean, uncomputed ancillas.
    ToffoliN(usize),
}

pub fn build_standard(kind: StandardKind) -> Circuit {
    match kind {
        StandardKind::Toffoli => toffoli(),
        StandardKind::ToffoliBarencoRy => toffoli_ry(),
        StandardKind::Fredkin => fredkin(),
        StandardKind::CsxExact => csx_exact(false),
        StandardKind::CsxDgExact => csx_exact(true),
        StandardKind::SwapExact => swap_exact(),
        StandardKind::ToffoliN(n) => toffoli_n(n),
    }
}

/// Clifford+T Toffoli body (six CX, seven T-type gates) onto `b`.
pub(crate) fn push_toffoli(b: &mut CircuitBuilder, c1: usize, c2: usize, t: usize) {
    b.gate(GateKind::H, &[t]);
    push_ccz_body(b, c1, c2, t);
    b.gate(GateKind::H, &[t]);
}

// Diagonal CCZ; Toffoli is this conjugated by H on the target.
fn push_ccz_body(b: &mut CircuitBuilder, c1: usize, c2: usize, t: usize) {
    use GateKind::*;
    b.gate(CX, &[c2, t]).gate(Tdg, &[t]).gate(CX, &[c1, t]).gate(T, &[t]);
    b.gate(CX, &[c2, t]).gate(Tdg, &[t]).gate(CX, &[c1, t]);
    b.gate(T, &[c2]).gate(T, &[t]);
    b.gate(CX, &[c1, c2]).gate(T, &[c1]).gate(Tdg, &[c2]).gate(CX, &[c1, c2]);
}

fn toffoli() -> Circuit {
    let mut b = CircuitBuilder::new("toffoli");
    let c1 = b.qubit("c1", QubitRole::Control);
    let c2 = b.qubit("c2", QubitRole::Control);
    let t = b.qubit("t", QubitRole::Target);
    push_toffoli(&mut b, c1, c2, t);
    b.build()
}

/// The symmetric four-RY network followed by a diagonal correction.
///
/// On its own the network is Toffoli times a −1 phase on `c1=1, c2=0, t=1`;
/// `CZ(c1,t) · CCZ` cancels that phase exactly.
fn toffoli_ry() -> Circuit {
    let q = Angle::pi_frac(1, 4);
    let mut b = CircuitBuilder::new("toffoli_ry");
    let c1 = b.qubit("c1", QubitRole::Control);
    let c2 = b.qubit("c2", QubitRole::Control);
    let t = b.qubit("t", QubitRole::Target);
    b.gate(GateKind::RY(q), &[t]).gate(GateKind::CX, &[c2, t]);
    b.gate(GateKind::RY(q), &[t]).gate(GateKind::CX, &[c1, t]);
    b.gate(GateKind::RY(-q), &[t]).gate(GateKind::CX, &[c2, t]);
    b.gate(GateKind::RY(-q), &[t]);
    push_ccz_body(&mut b, c1, c2, t);
    b.gate(GateKind::CZ, &[c1, t]);
    b.build()
}

pub(crate) fn push_fredkin(b: &mut CircuitBuilder, c: usize, t1: usize, t2: usize) {
    b.gate(GateKind::CX, &[t2, t1]);
    push_toffoli(b, c, t1, t2);
    b.gate(GateKind::CX, &[t2, t1]);
}

fn fredkin() -> Circuit {
    let mut b = CircuitBuilder::new("fredkin");
    let c = b.qubit("c", QubitRole::Control);
    let t1 = b.qubit("t1", QubitRole::Target);
    let t2 = b.qubit("t2", QubitRole::Target);
    push_fredkin(&mut b, c, t1, t2);
    b.build()
}

/// Controlled-RX(±π/2) from two CX, then a phase on the control.
pub(crate) fn push_csx_exact(b: &mut CircuitBuilder, c: usize, t: usize, dagger: bool) {
    let q = if dagger { Angle::pi_frac(1, 4) } else { Angle::pi_frac(-1, 4) };
    b.gate(GateKind::H, &[t]).gate(GateKind::CX, &[c, t]).gate(GateKind::RZ(q), &[t]);
    b.gate(GateKind::CX, &[c, t]).gate(GateKind::RZ(-q), &[t]).gate(GateKind::H, &[t]);
    b.gate(if dagger { GateKind::Tdg } else { GateKind::T }, &[c]);
}

fn csx_exact(dagger: bool) -> Circuit {
    let mut b = CircuitBuilder::new(if dagger { "csxdg" } else { "csx" });
    let c = b.qubit("c", QubitRole::Control);
    let t = b.qubit("t", QubitRole::Target);
    push_csx_exact(&mut b, c, t, dagger);
    b.build()
}

fn swap_exact() -> Circuit {
    let mut b = CircuitBuilder::new("swap");
    let a = b.qubit("a", QubitRole::Target);
    let q = b.qubit("b", QubitRole::Target);
    b.gate(GateKind::CX, &[a, q]).gate(GateKind::CX, &[q, a]).gate(GateKind::CX, &[a, q]);
    b.build()
}

/// 3 ≤ n ≤ 5. Labels match the AND composites of the same size.
fn toffoli_n(n: usize) -> Circuit {
    assert!((3..=5).contains(&n), "toffoli_n supports 3 ≤ n ≤ 5");
    match n {
        3 => toffoli(),
        4 => {
            let mut b = CircuitBuilder::new("toffoli4");
            let c: Vec<usize> = (1..=3).map(|i| b.qubit(&format!("c{i}"), QubitRole::Control)).collect();
            let anc = b.qubit("anc", QubitRole::Ancilla);
            let t = b.qubit("t", QubitRole::Target);
            push_toffoli(&mut b, c[0], c[1], anc);
            push_toffoli(&mut b, anc, c[2], t);
            push_toffoli(&mut b, c[0], c[1], anc);
            b.build()
        }
        _ => {
            let mut b = CircuitBuilder::new("toffoli5");
            let c: Vec<usize> = (1..=4).map(|i| b.qubit(&format!("c{i}"), QubitRole::Control)).collect();
            let a1 = b.qubit("anc1", QubitRole::Ancilla);
            let a2 = b.qubit("anc2", QubitRole::Ancilla);
            let t = b.qubit("t", QubitRole::Target);
            push_toffoli(&mut b, c[0], c[1], a1);
            push_toffoli(&mut b, c[2], c[3], a2);
            push_toffoli(&mut b, a1, a2, t);
            push_toffoli(&mut b, c[2], c[3], a2);
            push_toffoli(&mut b, c[0], c[1], a1);
            b.build()
        }
    }
}

/// Oracles for the composites: exact gates with clean ancillas.
pub fn composite_oracle(kind: super::composite::CompositeKind) -> Circuit {
    use super::composite::CompositeKind as K;
    match kind {
        K::And4 => toffoli_n(4),
        K::And5 => toffoli_n(5),
        K::Pos5 | K::Sop5 => {
            let or_first = kind == K::Pos5;
            let mut b = CircuitBuilder::new(if or_first { "pos5_exact" } else { "sop5_exact" });
            let c: Vec<usize> = (1..=4).map(|i| b.qubit(&format!("c{i}"), QubitRole::Control)).collect();
            let a1 = b.qubit("anc1", QubitRole::Ancilla);
            let a2 = b.qubit("anc2", QubitRole::Ancilla);
            let t = b.qubit("t", QubitRole::Target);
            let inner = |b: &mut CircuitBuilder| {
                for (x, y, a) in [(c[0], c[1], a1), (c[2], c[3], a2)] {
                    if or_first {
                        push_or(b, x, y, a)
                    } else {
                        push_toffoli(b, x, y, a)
                    }
                }
            };
            inner(&mut b);
            if or_first {
                push_toffoli(&mut b, a1, a2, t)
            } else {
                push_or(&mut b, a1, a2, t)
            }
            inner(&mut b);
            b.build()
        }
        K::Fredkin3 => fredkin(),
        K::Fredkin4 => {
            let mut b = CircuitBuilder::new("fredkin4_exact");
            let c1 = b.qubit("c1", QubitRole::Control);
            let c2 = b.qubit("c2", QubitRole::Control);
            let anc = b.qubit("anc", QubitRole::Ancilla);
            let t1 = b.qubit("t1", QubitRole::Target);
            let t2 = b.qubit("t2", QubitRole::Target);
            push_toffoli(&mut b, c1, c2, anc);
            push_fredkin(&mut b, anc, t1, t2);
            push_toffoli(&mut b, c1, c2, anc);
            b.build()
        }
        K::Csx3 | K::CsxDg3 => {
            let dagger = kind == K::CsxDg3;
            let mut b = CircuitBuilder::new(if dagger { "csxdg3_exact" } else { "csx3_exact" });
            let c1 = b.qubit("c1", QubitRole::Control);
            let c2 = b.qubit("c2", QubitRole::Control);
            let anc = b.qubit("anc", QubitRole::Ancilla);
            let t = b.qubit("t", QubitRole::Target);
            push_toffoli(&mut b, c1, c2, anc);
            push_csx_exact(&mut b, anc, t, dagger);
            push_toffoli(&mut b, c1, c2, anc);
            b.build()
        }
        K::Miller3 => {
            let mut b = CircuitBuilder::new("miller_exact");
            let a = b.qubit("a", QubitRole::Target);
            let q = b.qubit("b", QubitRole::Target);
            let c = b.qubit("c", QubitRole::Target);
            b.gate(GateKind::CX, &[a, q]).gate(GateKind::CX, &[a, c]);
            push_toffoli(&mut b, q, c, a);
            b.gate(GateKind::CX, &[a, q]).gate(GateKind::CX, &[a, c]);
            b.build()
        }
    }
}

/// `t ^= x ∨ y` via De Morgan.
fn push_or(b: &mut CircuitBuilder, x: usize, y: usize, t: usize) {
    b.gate(GateKind::X, &[x]).gate(GateKind::X, &[y]);
    push_toffoli(b, x, y, t);
    b.gate(GateKind::X, &[t]).gate(GateKind::X, &[x]).gate(GateKind::X, &[y]);
}
