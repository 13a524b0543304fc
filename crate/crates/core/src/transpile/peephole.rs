//! Adjacent-gate cleanup for native circuits.
//!
//! Works wire by wire with a stack of the live gates on each qubit, so a
//! cancellation can expose a new adjacent pair. No rewrite raises the count
//! of any gate tag.

use crate::angle::Angle;
use crate::circuit::{Circuit, Gate, GateKind};

pub fn peephole(circuit: &Circuit) -> Circuit {
    let mut out: Vec<Option<Gate>> = Vec::with_capacity(circuit.len());
    let mut wires: Vec<Vec<usize>> = vec![Vec::new(); circuit.width()];
    for g in circuit.gates() {
        push(&mut out, &mut wires, g.clone());
    }
    circuit.with_gates(out.into_iter().flatten().collect())
}

fn top(out: &[Option<Gate>], wires: &[Vec<usize>], q: usize) -> Option<(usize, Gate)> {
    let &i = wires[q].last()?;
    out[i].clone().map(|g| (i, g))
}

fn pop(out: &mut [Option<Gate>], wires: &mut [Vec<usize>], i: usize) {
    let g = out[i].take().expect("live gate");
    for &q in g.qubits() {
        let popped = wires[q].pop();
        debug_assert_eq!(popped, Some(i));
    }
}

fn emit(out: &mut Vec<Option<Gate>>, wires: &mut [Vec<usize>], g: Gate) {
    let i = out.len();
    for &q in g.qubits() {
        wires[q].push(i);
    }
    out.push(Some(g));
}

fn is_x_power(k: GateKind) -> Option<u8> {
    match k {
        GateKind::SX => Some(1),
        GateKind::X => Some(2),
        _ => None,
    }
}

fn push(out: &mut Vec<Option<Gate>>, wires: &mut [Vec<usize>], g: Gate) {
    match (g.kind(), g.qubits()) {
        (GateKind::I, _) => {}
        (GateKind::RZ(a), &[q]) => {
            if a.is_identity_rotation() {
                return;
            }
            if let Some((i, prev)) = top(out, wires, q) {
                if let GateKind::RZ(b) = prev.kind() {
                    pop(out, wires, i);
                    let sum: Angle = a + b;
                    if !sum.is_identity_rotation() {
                        emit(out, wires, Gate::new(GateKind::RZ(sum), &[q]).expect("1q"));
                    }
                    return;
                }
            }
            emit(out, wires, g);
        }
        (k, &[q]) if is_x_power(k).is_some() => {
            // Collect the trailing X/SX run on this wire, including `g`.
            let mut run = vec![k];
            while let Some((i, prev)) = top(out, wires, q) {
                if is_x_power(prev.kind()).is_none() {
                    break;
                }
                run.push(prev.kind());
                pop(out, wires, i);
            }
            for kind in reduce_x_run(&run) {
                emit(out, wires, Gate::new(kind, &[q]).expect("1q"));
            }
        }
        (k, &[a, b]) if matches!(k, GateKind::CX | GateKind::Ecr | GateKind::CZ | GateKind::Swap) => {
            if let (Some((i, p)), Some((j, _))) = (top(out, wires, a), top(out, wires, b)) {
                let same =
                    p.kind() == k && i == j && (p.qubits() == g.qubits() || (k != GateKind::CX && k != GateKind::Ecr));
                if same {
                    pop(out, wires, i);
                    return;
                }
            }
            emit(out, wires, g);
        }
        _ => emit(out, wires, g),
    }
}

/// Shortest run with the same total power of √X, never using more of either
/// tag than the input run did.
fn reduce_x_run(run: &[GateKind]) -> Vec<GateKind> {
    let sx = run.iter().filter(|&&k| k == GateKind::SX).count();
    let x = run.len() - sx;
    let power = (sx + 2 * x) % 4;
    let candidates: &[&[GateKind]] = match power {
        0 => &[&[]],
        1 => &[&[GateKind::SX]],
        2 => &[&[GateKind::X], &[GateKind::SX, GateKind::SX]],
        _ => &[&[GateKind::SX, GateKind::X], &[GateKind::SX, GateKind::SX, GateKind::SX]],
    };
    for c in candidates {
        let csx = c.iter().filter(|&&k| k == GateKind::SX).count();
        if csx <= sx && c.len() - csx <= x {
            return c.to_vec();
        }
    }
    // Keep the input order (oldest first) when no smaller form fits.
    run.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::count_gates;
    use crate::sim::circuit_fidelity;

    fn circ(n: usize, gates: &[(GateKind, &[usize])]) -> Circuit {
        Circuit::plain(n, gates.iter().map(|(k, q)| Gate::new(*k, q).unwrap()).collect()).unwrap()
    }

    #[test]
    fn merges_rz() {
        let c = circ(1, &[(GateKind::RZ(Angle::pi_frac(1, 4)), &[0]), (GateKind::RZ(Angle::pi()), &[0])]);
        let p = peephole(&c);
        assert_eq!(p.gates().len(), 1);
        assert_eq!(p.gates()[0].kind(), GateKind::RZ(Angle::pi_frac(5, 4)));
    }

    #[test]
    fn cancels_pairs() {
        assert!(peephole(&circ(1, &[(GateKind::X, &[0]), (GateKind::X, &[0])])).is_empty());
        let c = circ(1, &[(GateKind::RZ(Angle::pi_frac(1, 4)), &[0]), (GateKind::RZ(Angle::pi_frac(-1, 4)), &[0])]);
        assert!(peephole(&c).is_empty());
        // SX followed by the image of SX† (SX, X).
        assert!(peephole(&circ(1, &[(GateKind::SX, &[0]), (GateKind::SX, &[0]), (GateKind::X, &[0])])).is_empty());
        assert!(peephole(&circ(2, &[(GateKind::CX, &[0, 1]), (GateKind::CX, &[0, 1])])).is_empty());
        assert_eq!(peephole(&circ(2, &[(GateKind::CX, &[0, 1]), (GateKind::CX, &[1, 0])])).len(), 2);
    }

    #[test]
    fn cascading_cancellation() {
        let q = Angle::pi_frac(1, 2);
        let c = circ(
            2,
            &[
                (GateKind::RZ(q), &[0]),
                (GateKind::X, &[0]),
                (GateKind::CX, &[0, 1]),
                (GateKind::CX, &[0, 1]),
                (GateKind::X, &[0]),
                (GateKind::RZ(-q), &[0]),
            ],
        );
        assert!(peephole(&c).is_empty());
    }

    #[test]
    fn sx_pair_is_not_turned_into_x() {
        let c = circ(1, &[(GateKind::SX, &[0]), (GateKind::SX, &[0])]);
        let p = peephole(&c);
        assert_eq!(count_gates(&p).count("x"), 0);
        assert_eq!(p.len(), 2);
        assert!(circuit_fidelity(&c, &p).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn drops_identity_and_zero_rotations() {
        let c = circ(
            1,
            &[(GateKind::I, &[0]), (GateKind::RZ(Angle::zero()), &[0]), (GateKind::RZ(Angle::pi_frac(2, 1)), &[0])],
        );
        assert!(peephole(&c).is_empty());
    }
}
