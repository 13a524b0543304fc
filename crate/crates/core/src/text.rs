//! Line-oriented circuit text format.
//!
//! ```text
//! // name: and3
//! // q[0]: control c1
//! qubits 3
//! h q[1]
//! rz(-pi/4) q[1]
//! cx q[2], q[1]
//! ```
//!
//! Metadata comments are optional. Without them qubits default to `q0..`
//! with the control role.

use crate::angle::Angle;
use crate::circuit::{default_qubits, Circuit, Gate, GateKind, QubitRole};
use crate::error::{Error, Result};

pub fn emit_text(circuit: &Circuit) -> String {
    let mut out = String::new();
    out.push_str(&format!("// name: {}\n", circuit.name()));
    for (i, q) in circuit.qubits().iter().enumerate() {
        out.push_str(&format!("// q[{i}]: {} {}\n", q.role.as_str(), q.label));
    }
    out.push_str(&format!("qubits {}\n", circuit.width()));
    for g in circuit.gates() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_text(text: &str) -> Result<Circuit> {
    let mut name = None;
    let mut meta: Vec<(usize, QubitRole, String)> = Vec::new();
    let mut width = None;
    let mut gates = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let perr = |message: String| Error::Parse { line: line_no, message };
        let (code, comment) = match raw.find("//") {
            Some(p) => (&raw[..p], Some(raw[p + 2..].trim())),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(n) = c.strip_prefix("name:") {
                name = Some(n.trim().to_string());
            } else if let Some(entry) = parse_qubit_meta(c) {
                meta.push(entry);
            }
        }
        let code = code.trim();
        if code.is_empty() {
            continue;
        }
        if let Some(rest) = code.strip_prefix("qubits") {
            if width.is_some() {
                return Err(perr("duplicate `qubits` header".into()));
            }
            let n: usize = rest.trim().parse().map_err(|_| perr(format!("bad qubit count `{}`", rest.trim())))?;
            if n == 0 {
                return Err(perr("qubit count must be at least 1".into()));
            }
            width = Some(n);
            continue;
        }
        let n = width.ok_or_else(|| perr("gate before `qubits` header".into()))?;
        let gate = parse_gate(code, n).map_err(|e| match e {
            Error::Parse { message, .. } => perr(message),
            other => perr(other.to_string()),
        })?;
        gates.push(gate);
    }

    let n =
        width.ok_or(Error::Parse { line: text.lines().count().max(1), message: "missing `qubits` header".into() })?;
    let mut qubits = default_qubits(n);
    for (i, role, label) in meta {
        if i < n {
            qubits[i].role = role;
            qubits[i].label = label;
        }
    }
    Circuit::new(name.unwrap_or_else(|| "circuit".into()), qubits, gates)
}

fn parse_qubit_meta(comment: &str) -> Option<(usize, QubitRole, String)> {
    let rest = comment.strip_prefix("q[")?;
    let (idx, rest) = rest.split_once("]:")?;
    let mut parts = rest.split_whitespace();
    let role = QubitRole::parse(parts.next()?)?;
    let label = parts.next()?.to_string();
    Some((idx.parse().ok()?, role, label))
}

fn parse_gate(code: &str, width: usize) -> Result<Gate> {
    let perr = |message: String| Error::Parse { line: 0, message };
    let tag_end = code.find(|c: char| c.is_whitespace() || c == '(').unwrap_or(code.len());
    let tag = &code[..tag_end];
    let (angle, operands) = if code[tag_end..].starts_with('(') {
        let close = code.find(')').ok_or_else(|| perr(format!("unclosed angle in `{code}`")))?;
        let expr = &code[tag_end + 1..close];
        (Some(expr.parse::<Angle>().map_err(|e| perr(e.to_string()))?), &code[close + 1..])
    } else {
        (None, &code[tag_end..])
    };
    let kind = match (tag, angle) {
        ("rz", Some(a)) => GateKind::RZ(a),
        ("ry", Some(a)) => GateKind::RY(a),
        ("rz", None) | ("ry", None) => return Err(perr(format!("`{tag}` needs an angle"))),
        (t, a) => {
            let k = GateKind::from_tag(t).ok_or_else(|| Error::UnknownGate(t.to_string()))?;
            if a.is_some() {
                return Err(perr(format!("`{t}` takes no angle")));
            }
            k
        }
    };
    let qubits = operands
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            let inner = s
                .strip_prefix("q[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| perr(format!("bad operand `{s}`")))?;
            let q: usize = inner.parse().map_err(|_| perr(format!("bad qubit index `{inner}`")))?;
            if q >= width {
                return Err(Error::QubitOutOfRange { index: q, width });
            }
            Ok(q)
        })
        .collect::<Result<Vec<_>>>()?;
    Gate::new(kind, &qubits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(kind: GateKind, qubits: &[usize], width: usize) -> Circuit {
        Circuit::plain(width, vec![Gate::new(kind, qubits).unwrap()]).unwrap()
    }

    fn body(text: &str) -> Vec<&str> {
        text.lines().filter(|l| !l.starts_with("//") && !l.starts_with("qubits")).collect()
    }

    #[test]
    fn emit_examples() {
        assert_eq!(body(&emit_text(&one(GateKind::H, &[2], 3))), ["h q[2]"]);
        assert_eq!(body(&emit_text(&one(GateKind::CX, &[0, 2], 3))), ["cx q[0], q[2]"]);
        assert_eq!(body(&emit_text(&one(GateKind::RZ(Angle::pi_frac(1, 4)), &[1], 2))), ["rz(pi/4) q[1]"]);
    }

    #[test]
    fn parse_examples() {
        let c = parse_text("qubits 1\nh q[0]\n").unwrap();
        assert_eq!(c.gates()[0].kind(), GateKind::H);
        let c = parse_text("qubits 4\nrz(-pi/4) q[3] // comment\n").unwrap();
        assert_eq!(c.gates()[0].kind(), GateKind::RZ(Angle::pi_frac(-1, 4)));
        assert_eq!(c.gates()[0].qubits(), &[3]);
        let c = parse_text("qubits 1\nrz( 3 * pi / 4 ) q[0]\n").unwrap();
        assert_eq!(c.gates()[0].kind(), GateKind::RZ(Angle::pi_frac(3, 4)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_text("qubits 6\n\ncx q[5]\n") {
            Err(Error::Parse { line: 3, message }) => assert!(message.contains("expects 2")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_text("qubits 2\nfoo q[0]\n"), Err(Error::Parse { line: 2, .. })));
        match parse_text("qubits 2\nh q[2]\n") {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("out of range")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_text("h q[0]\n").is_err());
        assert!(parse_text("").is_err());
    }

    #[test]
    fn metadata_round_trip() {
        let mut b = crate::circuit::CircuitBuilder::new("demo");
        let c = b.qubit("c1", QubitRole::Control);
        let t = b.qubit("t", QubitRole::Target);
        let a = b.qubit("anc", QubitRole::Ancilla);
        b.gate(GateKind::CX, &[c, t]).gate(GateKind::RY(Angle::radians(0.25)), &[a]);
        let circ = b.build();
        assert_eq!(parse_text(&emit_text(&circ)).unwrap(), circ);
    }
}
