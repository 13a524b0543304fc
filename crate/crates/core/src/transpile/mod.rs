//! Lowering to IBM native bases, peephole cleanup and cost reports.

pub mod dressing;
pub mod peephole;
pub mod route;
pub mod rules;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circuit::{count_gates, Circuit, CostReport, Gate, GateKind};
use crate::error::{Error, Result};

pub use dressing::{CxDressing, Orientation, CX_TO_ECR};
pub use peephole::peephole;
pub use route::{route_naive, RoutedCircuit};
pub use rules::{rewrite_table, RewriteRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NativeBasis {
    /// {I, X, SX, RZ, CX}
    Cx,
    /// {I, X, SX, RZ, ECR}
    Ecr,
}

impl NativeBasis {
    pub fn allows(self, kind: GateKind) -> bool {
        match kind {
            GateKind::I | GateKind::X | GateKind::SX | GateKind::RZ(_) => true,
            GateKind::CX => self == NativeBasis::Cx,
            GateKind::Ecr => self == NativeBasis::Ecr,
            _ => false,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NativeBasis::Cx => "cx",
            NativeBasis::Ecr => "ecr",
        }
    }
}

impl fmt::Display for NativeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NativeBasis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cx" | "cx_basis" => Ok(NativeBasis::Cx),
            "ecr" | "ecr_basis" => Ok(NativeBasis::Ecr),
            _ => Err(format!("unknown basis `{s}` (expected cx or ecr)")),
        }
    }
}

/// Rewrites every gate into `basis`. The result is equal to the input up to
/// global phase.
pub fn lower(circuit: &Circuit, basis: NativeBasis) -> Result<Circuit> {
    lower_with(circuit, basis, &CX_TO_ECR)
}

/// [`lower`] with an explicit CX/ECR dressing.
pub fn lower_with(circuit: &Circuit, basis: NativeBasis, dressing: &CxDressing) -> Result<Circuit> {
    let mut out = Vec::with_capacity(circuit.len() * 3);
    for g in circuit.gates() {
        lower_gate(g, basis, dressing, &mut out)?;
    }
    Ok(circuit.with_gates(out))
}

fn lower_gate(g: &Gate, basis: NativeBasis, dressing: &CxDressing, out: &mut Vec<Gate>) -> Result<()> {
    if basis.allows(g.kind()) {
        out.push(g.clone());
        return Ok(());
    }
    let q = g.qubits();
    if let Some(rule) = rules::single_qubit_rule(g.kind()) {
        for k in rule.rhs {
            out.push(Gate::new(k, q)?);
        }
        return Ok(());
    }
    let mut via = |kinds: &[(GateKind, [usize; 2], bool)]| -> Result<()> {
        for &(k, [x, y], two) in kinds {
            let gate = if two { Gate::new(k, &[q[x], q[y]])? } else { Gate::new(k, &[q[x]])? };
            lower_gate(&gate, basis, dressing, out)?;
        }
        Ok(())
    };
    match g.kind() {
        GateKind::CX => dressing.emit_cx(q[0], q[1], out),
        GateKind::Ecr => {
            let mut tmp = Vec::new();
            dressing.emit_ecr_via_cx(q[0], q[1], &mut tmp);
            for t in &tmp {
                lower_gate(t, basis, dressing, out)?;
            }
        }
        GateKind::CY => {
            via(&[(GateKind::Sdg, [1, 1], false), (GateKind::CX, [0, 1], true), (GateKind::S, [1, 1], false)])?
        }
        GateKind::CZ => {
            via(&[(GateKind::H, [1, 1], false), (GateKind::CX, [0, 1], true), (GateKind::H, [1, 1], false)])?
        }
        GateKind::Swap => {
            via(&[(GateKind::CX, [0, 1], true), (GateKind::CX, [1, 0], true), (GateKind::CX, [0, 1], true)])?
        }
        other => return Err(Error::UnknownGate(format!("{other} has no lowering"))),
    }
    Ok(())
}

/// Lowers, runs the peephole pass and counts.
pub fn cost_report(circuit: &Circuit, basis: NativeBasis) -> Result<CostReport> {
    Ok(count_gates(&transpile(circuit, basis)?))
}

/// `peephole(lower(circuit, basis))`.
pub fn transpile(circuit: &Circuit, basis: NativeBasis) -> Result<Circuit> {
    Ok(peephole(&lower(circuit, basis)?))
}

/// Cost report in the JSON shape `{"gate", "basis", "counts", "qc", "depth"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCost {
    pub gate: String,
    pub basis: NativeBasis,
    pub counts: std::collections::BTreeMap<String, usize>,
    pub qc: usize,
    pub depth: usize,
}

impl NamedCost {
    pub fn new(gate: &str, basis: NativeBasis, report: CostReport) -> NamedCost {
        NamedCost { gate: gate.to_string(), basis, counts: report.counts, qc: report.qc, depth: report.depth }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;
    use crate::sim::{circuit_fidelity, equivalence, EquivalenceLevel};

    fn one(kind: GateKind, q: &[usize], n: usize) -> Circuit {
        Circuit::plain(n, vec![Gate::new(kind, q).unwrap()]).unwrap()
    }

    #[test]
    fn h_lowering() {
        let c = lower(&one(GateKind::H, &[0], 1), NativeBasis::Cx).unwrap();
        let kinds: Vec<GateKind> = c.gates().iter().map(|g| g.kind()).collect();
        let q = GateKind::RZ(Angle::pi_frac(1, 2));
        assert_eq!(kinds, [q, GateKind::SX, q]);
    }

    #[test]
    fn two_qubit_lowerings_are_exact() {
        for basis in [NativeBasis::Cx, NativeBasis::Ecr] {
            for kind in [GateKind::CX, GateKind::CY, GateKind::CZ, GateKind::Swap, GateKind::Ecr] {
                for q in [[0, 1], [1, 0]] {
                    let c = one(kind, &q, 2);
                    let l = lower(&c, basis).unwrap();
                    assert!(l.gates().iter().all(|g| basis.allows(g.kind())), "{kind} {basis}");
                    assert!(circuit_fidelity(&c, &l).unwrap() > 1.0 - 1e-9, "{kind} {basis}");
                }
            }
        }
    }

    #[test]
    fn cx_to_one_ecr() {
        let c = one(GateKind::CX, &[0, 1], 2);
        let l = lower(&c, NativeBasis::Ecr).unwrap();
        assert_eq!(l.count_gates().count("ecr"), 1);
        assert_eq!(equivalence(&c, &l).unwrap(), EquivalenceLevel::L1);
    }

    #[test]
    fn basis_parse() {
        assert_eq!("ECR".parse::<NativeBasis>().unwrap(), NativeBasis::Ecr);
        assert!("cz".parse::<NativeBasis>().is_err());
    }
}
