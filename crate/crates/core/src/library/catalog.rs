//! Name lookup for every buildable gate and oracle.

use super::composite::{build_composite, CompositeKind};
use super::core::{build_boolean, BooleanGateKind};
use super::standard::{build_standard, composite_oracle, StandardKind};
use super::two_bit::{build_2bit, TwoBitKind};
use crate::circuit::{Circuit, QubitRole};
use crate::error::{Error, Result};
use crate::sim::{basis_map, equivalence, EquivalenceLevel, Statevector, TruthTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LibraryGate {
    Boolean(BooleanGateKind),
    TwoBit(TwoBitKind),
    Composite(CompositeKind),
    Standard(StandardKind),
    /// Exact, clean-ancilla counterpart of a composite.
    CompositeOracle(CompositeKind),
}

/// Library gates in the order the CLI lists them.
pub const GATE_NAMES: [&str; 21] = [
    "and3", "nand3", "or3", "nor3", "imp3", "inh3", "and4", "and5", "pos5", "sop5", "fredkin3", "fredkin4", "csx2",
    "csxdg2", "swap2", "csx3", "csxdg3", "miller3", "toffoli", "toffoli4", "toffoli5",
];

/// Additional reference circuits accepted wherever an oracle is expected.
pub const ORACLE_NAMES: [&str; 12] = [
    "toffoli_ry",
    "fredkin",
    "csx",
    "csxdg",
    "swap",
    "pos5_exact",
    "sop5_exact",
    "fredkin4_exact",
    "csx3_exact",
    "csxdg3_exact",
    "miller_exact",
    "toffoli3",
];

impl LibraryGate {
    pub fn lookup(name: &str) -> Option<LibraryGate> {
        use LibraryGate::*;
        if let Some(k) = BooleanGateKind::ALL.into_iter().find(|k| k.name() == name) {
            return Some(Boolean(k));
        }
        if let Some(k) = CompositeKind::ALL.into_iter().find(|k| k.name() == name) {
            return Some(Composite(k));
        }
        Some(match name {
            "csx2" => TwoBit(TwoBitKind::Csx),
            "csxdg2" => TwoBit(TwoBitKind::CsxDg),
            "swap2" => TwoBit(TwoBitKind::SwapBloch),
            "toffoli" | "toffoli3" => Standard(StandardKind::Toffoli),
            "toffoli4" => Standard(StandardKind::ToffoliN(4)),
            "toffoli5" => Standard(StandardKind::ToffoliN(5)),
            "toffoli_ry" => Standard(StandardKind::ToffoliBarencoRy),
            "fredkin" => Standard(StandardKind::Fredkin),
            "csx" => Standard(StandardKind::CsxExact),
            "csxdg" => Standard(StandardKind::CsxDgExact),
            "swap" => Standard(StandardKind::SwapExact),
            "pos5_exact" => CompositeOracle(CompositeKind::Pos5),
            "sop5_exact" => CompositeOracle(CompositeKind::Sop5),
            "fredkin4_exact" => CompositeOracle(CompositeKind::Fredkin4),
            "csx3_exact" => CompositeOracle(CompositeKind::Csx3),
            "csxdg3_exact" => CompositeOracle(CompositeKind::CsxDg3),
            "miller_exact" => CompositeOracle(CompositeKind::Miller3),
            _ => return None,
        })
    }

    pub fn by_name(name: &str) -> Result<LibraryGate> {
        LibraryGate::lookup(name).ok_or_else(|| Error::UnknownGate(name.to_string()))
    }

    pub fn build(self) -> Circuit {
        match self {
            LibraryGate::Boolean(k) => build_boolean(k),
            LibraryGate::TwoBit(k) => build_2bit(k),
            LibraryGate::Composite(k) => build_composite(k),
            LibraryGate::Standard(k) => build_standard(k),
            LibraryGate::CompositeOracle(k) => composite_oracle(k),
        }
    }

    /// The gates whose Bloch-approach costs are tabulated against a standard counterpart.
    pub fn cost_rows() -> [LibraryGate; 9] {
        use CompositeKind::*;
        [
            LibraryGate::Boolean(BooleanGateKind::And),
            LibraryGate::Composite(And4),
            LibraryGate::Composite(And5),
            LibraryGate::Composite(Pos5),
            LibraryGate::Composite(Sop5),
            LibraryGate::Composite(Fredkin3),
            LibraryGate::Composite(Fredkin4),
            LibraryGate::Composite(Csx3),
            LibraryGate::Composite(Miller3),
        ]
    }

    /// Exact counterpart with the same qubit labels, if any.
    pub fn standard_counterpart(self) -> Option<LibraryGate> {
        use LibraryGate::*;
        Some(match self {
            Boolean(BooleanGateKind::And) => Standard(StandardKind::Toffoli),
            TwoBit(TwoBitKind::Csx) => Standard(StandardKind::CsxExact),
            TwoBit(TwoBitKind::CsxDg) => Standard(StandardKind::CsxDgExact),
            TwoBit(TwoBitKind::SwapBloch) => Standard(StandardKind::SwapExact),
            Composite(CompositeKind::And4) => Standard(StandardKind::ToffoliN(4)),
            Composite(CompositeKind::And5) => Standard(StandardKind::ToffoliN(5)),
            Composite(CompositeKind::Fredkin3) => Standard(StandardKind::Fredkin),
            Composite(k) => CompositeOracle(k),
            _ => return None,
        })
    }

    /// Core placements as `(c1, t, c2)` label triples.
    pub fn core_triples(self) -> Vec<[&'static str; 3]> {
        use CompositeKind::*;
        match self {
            LibraryGate::Boolean(_) => vec![["c1", "t", "c2"]],
            LibraryGate::Composite(k) => match k {
                And4 => vec![["c1", "anc", "c2"], ["anc", "t", "c3"]],
                And5 | Pos5 | Sop5 => vec![["c1", "anc1", "c2"], ["c3", "anc2", "c4"], ["anc1", "t", "anc2"]],
                Fredkin3 => vec![["c", "t2", "t1"]],
                Fredkin4 => vec![["c1", "anc", "c2"], ["anc", "t2", "t1"]],
                Csx3 | CsxDg3 => vec![["c1", "anc", "c2"]],
                Miller3 => vec![["b", "a", "c"]],
            },
            _ => vec![],
        }
    }

    /// Boolean function on the single target, for gates that compute one.
    pub fn boolean_function(self) -> Option<TruthTable> {
        use CompositeKind::*;
        match self {
            LibraryGate::Boolean(k) => Some(k.truth_table()),
            LibraryGate::Standard(StandardKind::Toffoli) => Some(TruthTable::from_fn(2, |a| a == 3)),
            LibraryGate::Composite(And4) | LibraryGate::Standard(StandardKind::ToffoliN(4)) => {
                Some(TruthTable::from_fn(3, |a| a == 7))
            }
            LibraryGate::Composite(And5) | LibraryGate::Standard(StandardKind::ToffoliN(5)) => {
                Some(TruthTable::from_fn(4, |a| a == 15))
            }
            LibraryGate::Composite(Pos5) | LibraryGate::CompositeOracle(Pos5) => {
                Some(TruthTable::from_fn(4, |a| (a & 0b11 != 0) && (a & 0b1100 != 0)))
            }
            LibraryGate::Composite(Sop5) | LibraryGate::CompositeOracle(Sop5) => {
                Some(TruthTable::from_fn(4, |a| (a & 0b11 == 0b11) || (a & 0b1100 == 0b1100)))
            }
            _ => None,
        }
    }
}

/// Outcome of comparing a gate with an oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    /// Strongest unitary-level agreement.
    pub level: EquivalenceLevel,
    /// Agreement of the non-ancilla marginals on inputs whose ancillas are |0⟩.
    pub clean_ancilla_l3: bool,
}

impl Comparison {
    /// Level counting a clean-ancilla match as L3.
    pub fn effective_level(&self) -> EquivalenceLevel {
        if self.level == EquivalenceLevel::None && self.clean_ancilla_l3 {
            EquivalenceLevel::L3
        } else {
            self.level
        }
    }
}

/// Aligns `oracle` to the labels of `gate`, then compares.
pub fn compare(gate: &Circuit, oracle: &Circuit) -> Result<Comparison> {
    if gate.width() != oracle.width() {
        return Err(Error::WidthMismatch { left: gate.width(), right: oracle.width() });
    }
    let labels: Vec<&str> = gate.qubits().iter().map(|q| q.label.as_str()).collect();
    let oracle = oracle.aligned_to(&labels)?;
    let level = equivalence(gate, &oracle)?;
    let ancillas = gate.qubits_with_role(QubitRole::Ancilla);
    let clean_ancilla_l3 = marginals_agree(gate, &oracle, &ancillas)?;
    Ok(Comparison { level, clean_ancilla_l3 })
}

/// For every basis input with `ancillas` at |0⟩, compares the output
/// distributions after tracing the ancillas out.
pub fn marginals_agree(a: &Circuit, b: &Circuit, ancillas: &[usize]) -> Result<bool> {
    let n = a.width();
    let anc_mask: usize = ancillas.iter().map(|&q| 1 << q).sum();
    for input in (0..1usize << n).filter(|i| i & anc_mask == 0) {
        let sv = Statevector::basis(n, input);
        let pa = crate::sim::apply(a, &sv)?.probabilities();
        let pb = crate::sim::apply(b, &sv)?.probabilities();
        let mut diff = vec![0.0; 1 << n];
        for (k, (x, y)) in pa.iter().zip(&pb).enumerate() {
            diff[k & !anc_mask] += x - y;
        }
        if diff.iter().any(|d| d.abs() > 1e-9) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutation a classical gate applies to all basis inputs.
pub fn classical_permutation(circuit: &Circuit) -> Result<Vec<usize>> {
    basis_map(circuit, &(0..1usize << circuit.width()).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in GATE_NAMES.iter().chain(ORACLE_NAMES.iter()) {
            let g = LibraryGate::by_name(name).unwrap();
            assert!(g.build().width() >= 2, "{name}");
        }
        assert!(matches!(LibraryGate::by_name("foo"), Err(Error::UnknownGate(_))));
    }

    #[test]
    fn counterparts_share_labels() {
        for name in GATE_NAMES {
            let g = LibraryGate::by_name(name).unwrap();
            if let Some(o) = g.standard_counterpart() {
                let (a, b) = (g.build(), o.build());
                let mut la: Vec<_> = a.qubits().iter().map(|q| q.label.clone()).collect();
                let mut lb: Vec<_> = b.qubits().iter().map(|q| q.label.clone()).collect();
                la.sort();
                lb.sort();
                assert_eq!(la, lb, "{name}");
            }
        }
    }
}
