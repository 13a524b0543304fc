//! Single-qubit rewrite table.

use std::fmt;

use crate::angle::Angle;
use crate::circuit::GateKind;

/// `lhs` equals `rhs` (time order) up to global phase.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: GateKind,
    pub rhs: Vec<GateKind>,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs: Vec<String> = self.rhs.iter().map(|k| k.to_string()).collect();
        write!(f, "{:<6} -> {}", self.lhs.to_string(), rhs.join(" "))
    }
}

fn rz(num: i64, den: i64) -> GateKind {
    GateKind::RZ(Angle::pi_frac(num, den))
}

/// Rule for a non-native single-qubit kind. `RY` is the only angle-carrying entry.
pub fn single_qubit_rule(kind: GateKind) -> Option<RewriteRule> {
    use GateKind::*;
    let rhs = match kind {
        Y => vec![rz(1, 1), X],
        Z => vec![rz(1, 1)],
        H => vec![rz(1, 2), SX, rz(1, 2)],
        SXdg => vec![SX, X],
        S => vec![rz(1, 2)],
        Sdg => vec![rz(-1, 2)],
        T => vec![rz(1, 4)],
        Tdg => vec![rz(-1, 4)],
        RY(a) => vec![SX, RZ(a), SX, X],
        _ => return None,
    };
    Some(RewriteRule { lhs: kind, rhs })
}

/// All fixed single-qubit rules, identity rows included.
pub fn rewrite_table() -> Vec<RewriteRule> {
    use GateKind::*;
    [I, X, Y, Z, H, SX, SXdg, S, Sdg, T, Tdg]
        .into_iter()
        .map(|k| single_qubit_rule(k).unwrap_or(RewriteRule { lhs: k, rhs: vec![k] }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::gate_matrix;

    fn product(kinds: &[GateKind]) -> crate::sim::Matrix {
        kinds.iter().fold(crate::sim::Matrix::identity(2), |acc, &k| &gate_matrix(k) * &acc)
    }

    #[test]
    fn every_row_holds_up_to_phase() {
        for rule in rewrite_table() {
            assert!(gate_matrix(rule.lhs).approx_eq_up_to_phase(&product(&rule.rhs), 1e-12), "{rule}");
        }
        for a in [Angle::pi_frac(1, 4), Angle::pi_frac(-3, 4), Angle::radians(0.37)] {
            let rule = single_qubit_rule(GateKind::RY(a)).unwrap();
            assert!(gate_matrix(rule.lhs).approx_eq_up_to_phase(&product(&rule.rhs), 1e-12));
        }
    }

    #[test]
    fn table_dump() {
        let text: Vec<String> = rewrite_table().iter().map(|r| r.to_string()).collect();
        assert_eq!(text[4], "h      -> rz(pi/2) sx rz(pi/2)");
        assert_eq!(text.len(), 11);
    }
}
