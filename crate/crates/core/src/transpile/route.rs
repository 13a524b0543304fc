//! Greedy SWAP insertion along shortest paths.

use std::collections::BTreeSet;

use crate::circuit::{Circuit, Gate, GateKind, QubitInfo, QubitRole};
use crate::error::{Error, Result};
use crate::layout::CouplingMap;

#[derive(Clone, Debug, PartialEq)]
pub struct RoutedCircuit {
    /// Over the physical qubits in `physical`, in ascending order.
    pub circuit: Circuit,
    pub physical: Vec<usize>,
    pub swaps: usize,
    /// Physical qubit of each logical qubit at the end.
    pub final_layout: Vec<usize>,
}

/// Routes `circuit` from `initial` (logical to physical). For each
/// uncoupled two-qubit gate, the first operand walks along a shortest path
/// until it neighbors the second. With `restore`, the SWAPs are undone right
/// after the gate, so every gate sees the initial layout.
pub fn route_naive(circuit: &Circuit, map: &CouplingMap, initial: &[usize], restore: bool) -> Result<RoutedCircuit> {
    if initial.len() != circuit.width() {
        return Err(Error::WidthMismatch { left: initial.len(), right: circuit.width() });
    }
    let n = map.num_qubits();
    let mut at = vec![None; n];
    for (l, &p) in initial.iter().enumerate() {
        if p >= n {
            return Err(Error::QubitOutOfRange { index: p, width: n });
        }
        if at[p].replace(l).is_some() {
            return Err(Error::InvalidPlacement(format!("physical qubit {p} is assigned twice")));
        }
    }
    let mut pos = initial.to_vec();
    let mut ops: Vec<(GateKind, Vec<usize>)> = Vec::new();
    let mut swaps = 0;
    let mut swap = |a: usize, b: usize, pos: &mut Vec<usize>, at: &mut Vec<Option<usize>>, ops: &mut Vec<_>| {
        ops.push((GateKind::Swap, vec![a, b]));
        at.swap(a, b);
        for p in [a, b] {
            if let Some(l) = at[p] {
                pos[l] = p;
            }
        }
        swaps += 1;
    };
    for g in circuit.gates() {
        let q = g.qubits();
        if q.len() == 1 {
            ops.push((g.kind(), vec![pos[q[0]]]));
            continue;
        }
        let path = map.shortest_path(pos[q[0]], pos[q[1]])?;
        let mut done = Vec::new();
        for w in path.windows(2).take(path.len().saturating_sub(2)) {
            swap(w[0], w[1], &mut pos, &mut at, &mut ops);
            done.push((w[0], w[1]));
        }
        ops.push((g.kind(), vec![pos[q[0]], pos[q[1]]]));
        if restore {
            for &(a, b) in done.iter().rev() {
                swap(a, b, &mut pos, &mut at, &mut ops);
            }
        }
    }

    let used: BTreeSet<usize> =
        initial.iter().copied().chain(ops.iter().flat_map(|(_, q)| q.iter().copied())).collect();
    let physical: Vec<usize> = used.into_iter().collect();
    let local = |p: usize| physical.binary_search(&p).expect("used qubit");
    let qubits = physical
        .iter()
        .map(|&p| match initial.iter().position(|&x| x == p) {
            Some(l) => circuit.qubits()[l].clone(),
            None => QubitInfo { role: QubitRole::Ancilla, label: format!("p{p}") },
        })
        .collect();
    let gates = ops
        .into_iter()
        .map(|(k, q)| Gate::new(k, &q.iter().map(|&p| local(p)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let routed = Circuit::new(circuit.name(), qubits, gates)?;
    Ok(RoutedCircuit { circuit: routed, physical, swaps, final_layout: pos })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::brisbane;
    use crate::library::LibraryGate;
    use crate::sim::classically_equivalent_on;

    #[test]
    fn adjacent_gates_need_no_swaps() {
        let c = LibraryGate::by_name("and3").unwrap().build();
        let r = route_naive(&c, &brisbane(), &[61, 62, 63], false).unwrap();
        assert_eq!(r.swaps, 0);
        assert_eq!(r.final_layout, vec![61, 62, 63]);
    }

    #[test]
    fn toffoli_on_a_line_needs_swaps() {
        let c = LibraryGate::by_name("toffoli").unwrap().build();
        let r = route_naive(&c, &brisbane(), &[61, 63, 62], true).unwrap();
        assert!(r.swaps > 0);
        assert_eq!(r.final_layout, vec![61, 63, 62]);
        // With restore, the routed circuit acts like the original on the placed qubits.
        let map: Vec<usize> = [61, 63, 62].iter().map(|p| r.physical.binary_search(p).unwrap()).collect();
        assert_eq!(map, vec![0, 2, 1]);
        let orig = c.permuted(&map).unwrap();
        let inputs: Vec<usize> = (0..8).collect();
        assert!(classically_equivalent_on(&orig, &r.circuit, &inputs).unwrap());
    }

    #[test]
    fn rejects_bad_layouts() {
        let c = LibraryGate::by_name("and3").unwrap().build();
        assert!(route_naive(&c, &brisbane(), &[61, 61, 63], false).is_err());
        assert!(route_naive(&c, &brisbane(), &[61, 62], false).is_err());
    }
}
