//! Classical and geometric read-outs: truth tables, basis maps, phase traces
//! and q-sphere points.

use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::state::{apply, Statevector};
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::library::core::{CoreSpec, CORE_C1, CORE_C2, CORE_T};

/// Deterministic-outcome tolerance.
pub const DET_TOL: f64 = 1e-10;

/// Boolean function of `k` controls. Entry `i` is the output for the
/// assignment whose bit `j` is the value of control `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    num_inputs: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn new(num_inputs: usize, bits: Vec<bool>) -> TruthTable {
        assert_eq!(bits.len(), 1 << num_inputs);
        TruthTable { num_inputs, bits }
    }

    pub fn from_fn(num_inputs: usize, f: impl Fn(usize) -> bool) -> TruthTable {
        TruthTable::new(num_inputs, (0..1 << num_inputs).map(f).collect())
    }

    /// Parses the string form of [`TruthTable::to_bit_string`].
    pub fn parse(s: &str) -> Option<TruthTable> {
        let len = s.len();
        if len == 0 || !len.is_power_of_two() {
            return None;
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(TruthTable::new(len.trailing_zeros() as usize, bits))
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn get(&self, assignment: usize) -> bool {
        self.bits[assignment]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Outputs in assignment order, so for two controls the characters are
    /// the values at `00, 01, 10, 11` (`|c2 c1⟩`), e.g. AND is `0001`.
    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Dirac label of an assignment, highest control first.
    pub fn assignment_label(&self, assignment: usize) -> String {
        (0..self.num_inputs).rev().map(|j| if assignment >> j & 1 == 1 { '1' } else { '0' }).collect()
    }

    pub fn records(&self) -> Vec<TruthRecord> {
        (0..self.bits.len())
            .map(|a| TruthRecord { assignment: self.assignment_label(a), bit: self.bits[a] as u8 })
            .collect()
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> =
            (0..self.bits.len()).map(|a| format!("|{}⟩→{}", self.assignment_label(a), self.bits[a] as u8)).collect();
        f.write_str(&cells.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruthRecord {
    pub assignment: String,
    pub bit: u8,
}

fn check_distinct(width: usize, qubits: &[usize]) -> Result<()> {
    for (i, &q) in qubits.iter().enumerate() {
        if q >= width {
            return Err(Error::QubitOutOfRange { index: q, width });
        }
        if qubits[..i].contains(&q) {
            return Err(Error::InvalidCircuit(format!("qubit {q} listed twice")));
        }
    }
    Ok(())
}

/// Boolean function realized on `target`. Every qubit other than the
/// controls starts in |0⟩; `ancillas` only documents which of them are
/// workspace and need not return to |0⟩.
pub fn truth_table(circuit: &Circuit, target: usize, controls: &[usize], ancillas: &[usize]) -> Result<TruthTable> {
    let mut all = vec![target];
    all.extend_from_slice(controls);
    all.extend_from_slice(ancillas);
    check_distinct(circuit.width(), &all)?;
    let mut bits = Vec::with_capacity(1 << controls.len());
    for a in 0..1usize << controls.len() {
        let input: usize = controls.iter().enumerate().map(|(j, &q)| (a >> j & 1) << q).sum();
        let out = apply(circuit, &Statevector::basis(circuit.width(), input))?;
        let p1 = out.prob_one(target);
        if p1 > DET_TOL && p1 < 1.0 - DET_TOL {
            let label: String = (0..controls.len()).rev().map(|j| if a >> j & 1 == 1 { '1' } else { '0' }).collect();
            return Err(Error::NondeterministicTarget { assignment: format!("|{label}⟩"), p1 });
        }
        bits.push(p1 >= 0.5);
    }
    Ok(TruthTable::new(controls.len(), bits))
}

/// Output basis index for each basis input, failing if any output is a superposition.
pub fn basis_map(circuit: &Circuit, inputs: &[usize]) -> Result<Vec<usize>> {
    inputs
        .iter()
        .map(|&i| {
            let out = apply(circuit, &Statevector::basis(circuit.width(), i))?;
            let probs = out.probabilities();
            let (best, p) =
                probs.iter().enumerate().fold((0, 0.0), |acc, (k, &p)| if p > acc.1 { (k, p) } else { acc });
            if p < 1.0 - DET_TOL {
                return Err(Error::NondeterministicTarget {
                    assignment: format!("{i:0w$b}", w = circuit.width()),
                    p1: p,
                });
            }
            Ok(best)
        })
        .collect()
}

/// One point of a q-sphere: magnitude and phase of a nonzero amplitude.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QSpherePoint {
    pub basis_label: String,
    pub magnitude: f64,
    /// Radians in `[0, 2π)`, relative to the first nonzero amplitude.
    pub phase: f64,
}

/// `order` lists qubits left to right in the Dirac label, e.g. `[t, c2, c1]`.
pub fn qsphere(state: &Statevector, order: &[usize]) -> Vec<QSpherePoint> {
    let amps = state.amplitudes();
    let Some(first) = amps.iter().position(|a| a.norm() > DET_TOL) else {
        return Vec::new();
    };
    let reference = amps[first] / amps[first].norm();
    amps.iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > DET_TOL)
        .map(|(i, a)| {
            let mut phase = (a / reference).arg().rem_euclid(TAU);
            if phase > TAU - 1e-12 {
                phase = 0.0;
            }
            let bits: String = order.iter().map(|&q| if i >> q & 1 == 1 { '1' } else { '0' }).collect();
            QSpherePoint { basis_label: format!("|{bits}⟩"), magnitude: a.norm(), phase }
        })
        .collect()
}

/// Target state after one stage of a core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceLabel {
    /// A CX stage whose control is |0⟩.
    Unchanged,
    /// `(|0⟩ + e^{ikπ/4}|1⟩)/√2`, `k` in `0..8`.
    Equator(u8),
    /// `|0⟩` or `|1⟩` after the closing stage.
    Basis(u8),
}

impl fmt::Display for TraceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TraceLabel::Unchanged => f.write_str("—"),
            TraceLabel::Basis(b) => write!(f, "|{b}⟩"),
            TraceLabel::Equator(0) => f.write_str("|+⟩"),
            TraceLabel::Equator(2) => f.write_str("|+i⟩"),
            TraceLabel::Equator(4) => f.write_str("|−⟩"),
            TraceLabel::Equator(6) => f.write_str("|−i⟩"),
            TraceLabel::Equator(1) => f.write_str("π/4"),
            TraceLabel::Equator(k) => write!(f, "{k}π/4"),
        }
    }
}

/// Classical setting of the two core controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ControlState {
    pub c1: bool,
    pub c2: bool,
}

impl ControlState {
    pub const ALL: [ControlState; 4] = [
        ControlState { c1: false, c2: false },
        ControlState { c1: true, c2: false },
        ControlState { c1: false, c2: true },
        ControlState { c1: true, c2: true },
    ];

    /// Parses `|c2 c1⟩` order, e.g. `"10"` is c2 = 1, c1 = 0.
    pub fn from_dirac(s: &str) -> Option<ControlState> {
        let s = s.trim().trim_start_matches('|').trim_end_matches('⟩').trim_end_matches('>');
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bit = |c: char| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        };
        match chars.as_slice() {
            [c2, c1] => Some(ControlState { c1: bit(*c1)?, c2: bit(*c2)? }),
            _ => None,
        }
    }

    pub fn dirac(&self) -> String {
        format!("|{} {}⟩", self.c2 as u8, self.c1 as u8)
    }
}

/// Target-wire read-out after each of the nine core stages.
pub fn phase_trace(spec: &CoreSpec, controls: ControlState) -> Result<Vec<TraceLabel>> {
    let input = (usize::from(controls.c1) << CORE_C1) | (usize::from(controls.c2) << CORE_C2);
    let mut sv = Statevector::basis(3, input);
    let stages = spec.stages();
    let last = stages.len() - 1;
    let mut out = Vec::with_capacity(stages.len());
    for (idx, stage) in stages.iter().enumerate() {
        for g in &stage.gates {
            sv.apply_gate(g);
        }
        if let Some(c) = stage.cx_control {
            let on = if c == CORE_C1 { controls.c1 } else { controls.c2 };
            if !on {
                out.push(TraceLabel::Unchanged);
                continue;
            }
        }
        let alpha = sv.amplitudes()[input];
        let beta = sv.amplitudes()[input | 1 << CORE_T];
        if idx == last {
            let p1 = beta.norm_sqr();
            if p1 > DET_TOL && p1 < 1.0 - DET_TOL {
                return Err(Error::NondeterministicTarget { assignment: controls.dirac(), p1 });
            }
            out.push(TraceLabel::Basis(u8::from(p1 > 0.5)));
            continue;
        }
        let not_eq = || Error::NotEquatorial { stage: stage.name.to_string() };
        if (alpha.norm_sqr() - 0.5).abs() > 1e-9 || (beta.norm_sqr() - 0.5).abs() > 1e-9 {
            return Err(not_eq());
        }
        let octants = (beta / alpha).arg().rem_euclid(TAU) / (PI / 4.0);
        let k = octants.round();
        if (octants - k).abs() > 1e-9 {
            return Err(not_eq());
        }
        out.push(TraceLabel::Equator((k as u8) % 8));
    }
    Ok(out)
}

/// Gates of one trace stage.
#[derive(Clone, Debug)]
pub struct TraceStage {
    pub name: &'static str,
    pub gates: Vec<Gate>,
    /// Control qubit for CX stages.
    pub cx_control: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Gate, GateKind};

    #[test]
    fn truth_string_order() {
        let and = TruthTable::from_fn(2, |a| a == 3);
        assert_eq!(and.to_bit_string(), "0001");
        assert!(TruthTable::parse("1000").unwrap().get(0));
        assert_eq!(and.assignment_label(1), "01");
        assert!(TruthTable::parse("101").is_none());
    }

    #[test]
    fn cx_truth_table() {
        let c = Circuit::plain(2, vec![Gate::new(GateKind::CX, &[0, 1]).unwrap()]).unwrap();
        assert_eq!(truth_table(&c, 1, &[0], &[]).unwrap().to_bit_string(), "01");
        let h = Circuit::plain(2, vec![Gate::new(GateKind::H, &[1]).unwrap()]).unwrap();
        assert!(matches!(truth_table(&h, 1, &[0], &[]), Err(Error::NondeterministicTarget { .. })));
    }

    #[test]
    fn qsphere_basics() {
        let pts = qsphere(&Statevector::zero(3), &[2, 1, 0]);
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].basis_label, "|000⟩");
        assert_eq!(pts[0].phase, 0.0);
        let c = Circuit::plain(2, vec![Gate::new(GateKind::H, &[0]).unwrap(), Gate::new(GateKind::H, &[1]).unwrap()])
            .unwrap();
        let pts = qsphere(&apply(&c, &Statevector::zero(2)).unwrap(), &[1, 0]);
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|p| p.phase.abs() < 1e-12 && (p.magnitude - 0.5).abs() < 1e-12));
    }

    #[test]
    fn control_state_parse() {
        let s = ControlState::from_dirac("10").unwrap();
        assert!(s.c2 && !s.c1);
        assert_eq!(s.dirac(), "|1 0⟩");
        assert!(ControlState::from_dirac("1").is_none());
    }
}
