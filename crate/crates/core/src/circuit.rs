//! Gate and circuit intermediate representation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::{Error, Result};

/// Gate type. Rotations carry their angle; everything else is a fixed matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateKind {
    I,
    X,
    Y,
    Z,
    H,
    /// √X.
    SX,
    /// √X†.
    SXdg,
    S,
    Sdg,
    T,
    Tdg,
    RZ(Angle),
    RY(Angle),
    CX,
    CY,
    CZ,
    Swap,
    Ecr,
}

impl GateKind {
    pub const FIXED: [GateKind; 16] = [
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
        GateKind::Ecr,
    ];

    pub fn arity(&self) -> usize {
        match self {
            GateKind::CX | GateKind::CY | GateKind::CZ | GateKind::Swap | GateKind::Ecr => 2,
            _ => 1,
        }
    }

    /// Lower-case tag used by the text format, the CLI and cost reports.
    pub fn tag(&self) -> &'static str {
        match self {
            GateKind::I => "i",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::H => "h",
            GateKind::SX => "sx",
            GateKind::SXdg => "sxdg",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::RZ(_) => "rz",
            GateKind::RY(_) => "ry",
            GateKind::CX => "cx",
            GateKind::CY => "cy",
            GateKind::CZ => "cz",
            GateKind::Swap => "swap",
            GateKind::Ecr => "ecr",
        }
    }

    pub fn angle(&self) -> Option<Angle> {
        match self {
            GateKind::RZ(a) | GateKind::RY(a) => Some(*a),
            _ => None,
        }
    }

    /// Fixed (angle-free) kind for a tag; `rz`/`ry` need an angle and return `None`.
    pub fn from_tag(tag: &str) -> Option<GateKind> {
        GateKind::FIXED.iter().copied().find(|k| k.tag() == tag)
    }

    /// Inverse gate.
    pub fn inverse(&self) -> GateKind {
        match *self {
            GateKind::SX => GateKind::SXdg,
            GateKind::SXdg => GateKind::SX,
            GateKind::S => GateKind::Sdg,
            GateKind::Sdg => GateKind::S,
            GateKind::T => GateKind::Tdg,
            GateKind::Tdg => GateKind::T,
            GateKind::RZ(a) => GateKind::RZ(-a),
            GateKind::RY(a) => GateKind::RY(-a),
            k => k,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.angle() {
            Some(a) => write!(f, "{}({})", self.tag(), a),
            None => f.write_str(self.tag()),
        }
    }
}

/// One gate instance. For controlled gates and ECR `qubits[0]` is the control.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    kind: GateKind,
    qubits: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, qubits: &[usize]) -> Result<Gate> {
        if qubits.len() != kind.arity() {
            return Err(Error::Arity { gate: kind.tag().to_string(), expected: kind.arity(), got: qubits.len() });
        }
        if qubits.len() == 2 && qubits[0] == qubits[1] {
            return Err(Error::RepeatedQubit(kind.tag().to_string()));
        }
        Ok(Gate { kind, qubits: qubits.to_vec() })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    pub fn is_two_qubit(&self) -> bool {
        self.qubits.len() == 2
    }

    /// Same gate on remapped qubits.
    pub fn remapped(&self, map: &[usize]) -> Gate {
        Gate { kind: self.kind, qubits: self.qubits.iter().map(|&q| map[q]).collect() }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (i, q) in self.qubits.iter().enumerate() {
            write!(f, "{}q[{q}]", if i == 0 { " " } else { ", " })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QubitRole {
    Control,
    Target,
    /// Starts in |0⟩. Composite gates do not uncompute their ancillas.
    Ancilla,
}

impl QubitRole {
    pub fn as_str(&self) -> &'static str {
        match self {
            QubitRole::Control => "control",
            QubitRole::Target => "target",
            QubitRole::Ancilla => "ancilla",
        }
    }

    pub fn parse(s: &str) -> Option<QubitRole> {
        match s {
            "control" => Some(QubitRole::Control),
            "target" => Some(QubitRole::Target),
            "ancilla" => Some(QubitRole::Ancilla),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QubitInfo {
    pub role: QubitRole,
    pub label: String,
}

/// An ordered gate list over `width` logical qubits. Immutable once built;
/// transformations return new circuits.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    name: String,
    qubits: Vec<QubitInfo>,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Validates gate indices against the width. `qubits.len()` is the width.
    pub fn new(name: impl Into<String>, qubits: Vec<QubitInfo>, gates: Vec<Gate>) -> Result<Circuit> {
        let width = qubits.len();
        if width == 0 {
            return Err(Error::InvalidCircuit("width must be at least 1".into()));
        }
        for g in &gates {
            if let Some(&q) = g.qubits().iter().find(|&&q| q >= width) {
                return Err(Error::QubitOutOfRange { index: q, width });
            }
        }
        let mut labels: Vec<&str> = qubits.iter().map(|q| q.label.as_str()).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCircuit("qubit labels must be unique".into()));
        }
        Ok(Circuit { name: name.into(), qubits, gates })
    }

    /// Width-`n` circuit with default labels `q0..` and control roles.
    pub fn plain(n: usize, gates: Vec<Gate>) -> Result<Circuit> {
        Circuit::new("circuit", default_qubits(n), gates)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn width(&self) -> usize {
        self.qubits.len()
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn qubits(&self) -> &[QubitInfo] {
        &self.qubits
    }

    pub fn label(&self, q: usize) -> &str {
        &self.qubits[q].label
    }

    pub fn role(&self, q: usize) -> QubitRole {
        self.qubits[q].role
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.qubits.iter().position(|q| q.label == label)
    }

    pub fn qubits_with_role(&self, role: QubitRole) -> Vec<usize> {
        (0..self.width()).filter(|&q| self.qubits[q].role == role).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    /// Same qubits and name, different gates.
    pub fn with_gates(&self, gates: Vec<Gate>) -> Circuit {
        debug_assert!(gates.iter().all(|g| g.qubits().iter().all(|&q| q < self.width())));
        Circuit { name: self.name.clone(), qubits: self.qubits.clone(), gates }
    }

    pub fn renamed(&self, name: impl Into<String>) -> Circuit {
        Circuit { name: name.into(), ..self.clone() }
    }

    /// Relabels qubit `q` as `perm[q]`, carrying qubit metadata along.
    pub fn permuted(&self, perm: &[usize]) -> Result<Circuit> {
        let n = self.width();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidCircuit("not a permutation of the qubit indices".into()));
        }
        let mut qubits = self.qubits.clone();
        for (q, &p) in perm.iter().enumerate() {
            qubits[p] = self.qubits[q].clone();
        }
        let gates = self.gates.iter().map(|g| g.remapped(perm)).collect();
        Ok(Circuit { name: self.name.clone(), qubits, gates })
    }

    /// Reorders qubits so that labels follow `labels`. Used to line an
    /// oracle up with a library gate before comparing unitaries.
    pub fn aligned_to(&self, labels: &[&str]) -> Result<Circuit> {
        if labels.len() != self.width() {
            return Err(Error::WidthMismatch { left: self.width(), right: labels.len() });
        }
        let perm = (0..self.width())
            .map(|q| {
                labels.iter().position(|l| *l == self.label(q)).ok_or_else(|| {
                    Error::InvalidCircuit(format!("label `{}` not present in target order", self.label(q)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.permuted(&perm)
    }

    pub fn depth(&self) -> usize {
        depth(self)
    }

    pub fn count_gates(&self) -> CostReport {
        count_gates(self)
    }
}

pub fn default_qubits(n: usize) -> Vec<QubitInfo> {
    (0..n).map(|q| QubitInfo { role: QubitRole::Control, label: format!("q{q}") }).collect()
}

/// Mutable assembly area for library builders.
#[derive(Clone, Debug)]
pub struct CircuitBuilder {
    name: String,
    qubits: Vec<QubitInfo>,
    gates: Vec<Gate>,
}

impl CircuitBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CircuitBuilder { name: name.into(), qubits: Vec::new(), gates: Vec::new() }
    }

    /// Declares the next qubit and returns its index.
    pub fn qubit(&mut self, label: &str, role: QubitRole) -> usize {
        self.qubits.push(QubitInfo { role, label: label.to_string() });
        self.qubits.len() - 1
    }

    /// Panics on arity/duplicate errors: builders only emit fixed, known-good shapes.
    pub fn gate(&mut self, kind: GateKind, qubits: &[usize]) -> &mut Self {
        let g = Gate::new(kind, qubits).unwrap_or_else(|e| panic!("builder `{}`: {e}", self.name));
        self.gates.push(g);
        self
    }

    pub fn gates(&mut self, kinds: &[GateKind], q: usize) -> &mut Self {
        for &k in kinds {
            self.gate(k, &[q]);
        }
        self
    }

    /// Appends `other` with its qubit `i` mapped onto `map[i]`.
    pub fn append(&mut self, other: &Circuit, map: &[usize]) -> &mut Self {
        assert_eq!(map.len(), other.width(), "append map must cover every qubit");
        self.gates.extend(other.gates().iter().map(|g| g.remapped(map)));
        self
    }

    pub fn build(self) -> Circuit {
        let name = self.name.clone();
        Circuit::new(self.name, self.qubits, self.gates).unwrap_or_else(|e| panic!("builder `{name}`: {e}"))
    }
}

/// Per-tag native gate counts, quantum cost and depth.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CostReport {
    pub counts: BTreeMap<String, usize>,
    pub qc: usize,
    pub depth: usize,
}

impl CostReport {
    pub fn count(&self, tag: &str) -> usize {
        self.counts.get(tag).copied().unwrap_or(0)
    }
}

impl fmt::Display for CostReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{{{}}} qc={} depth={}", parts.join(", "), self.qc, self.depth)
    }
}

/// Greedy layering: each gate occupies all its qubits for one time step.
pub fn depth(circuit: &Circuit) -> usize {
    let mut level = vec![0usize; circuit.width()];
    let mut max = 0;
    for g in circuit.gates() {
        let l = g.qubits().iter().map(|&q| level[q]).max().unwrap_or(0) + 1;
        for &q in g.qubits() {
            level[q] = l;
        }
        max = max.max(l);
    }
    max
}

pub fn count_gates(circuit: &Circuit) -> CostReport {
    let mut counts = BTreeMap::new();
    for g in circuit.gates() {
        *counts.entry(g.kind().tag().to_string()).or_insert(0) += 1;
    }
    CostReport { qc: circuit.len(), depth: depth(circuit), counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(kind: GateKind, q: &[usize]) -> Gate {
        Gate::new(kind, q).unwrap()
    }

    #[test]
    fn empty_circuit_metrics() {
        let c = Circuit::plain(3, vec![]).unwrap();
        assert_eq!(depth(&c), 0);
        let r = count_gates(&c);
        assert_eq!(r.qc, 0);
        assert!(r.counts.is_empty());
    }

    #[test]
    fn depth_layers_parallel_gates() {
        let c = Circuit::plain(
            3,
            vec![g(GateKind::H, &[0]), g(GateKind::H, &[1]), g(GateKind::CX, &[0, 1]), g(GateKind::X, &[2])],
        )
        .unwrap();
        assert_eq!(depth(&c), 2);
    }

    #[test]
    fn rz_counted_once_per_instance() {
        let c =
            Circuit::plain(1, vec![g(GateKind::RZ(Angle::pi_frac(1, 4)), &[0]), g(GateKind::RZ(Angle::pi()), &[0])])
                .unwrap();
        let r = count_gates(&c);
        assert_eq!(r.count("rz"), 2);
        assert_eq!(r.qc, 2);
    }

    #[test]
    fn gate_validation() {
        assert!(matches!(Gate::new(GateKind::CX, &[5]), Err(Error::Arity { .. })));
        assert!(matches!(Gate::new(GateKind::CX, &[1, 1]), Err(Error::RepeatedQubit(_))));
        assert!(matches!(
            Circuit::plain(2, vec![g(GateKind::H, &[2])]),
            Err(Error::QubitOutOfRange { index: 2, width: 2 })
        ));
        assert!(Circuit::plain(0, vec![]).is_err());
    }

    #[test]
    fn aligned_to_reorders_labels() {
        let mut b = CircuitBuilder::new("t");
        let c1 = b.qubit("c1", QubitRole::Control);
        let t = b.qubit("t", QubitRole::Target);
        let c2 = b.qubit("c2", QubitRole::Control);
        b.gate(GateKind::CX, &[c2, t]);
        let c = b.build();
        let a = c.aligned_to(&["c1", "c2", "t"]).unwrap();
        assert_eq!(a.label(1), "c2");
        assert_eq!(a.gates()[0].qubits(), &[1, 2]);
        let _ = c1;
    }
}
