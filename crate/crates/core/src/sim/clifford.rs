use std::fmt;

use super::matrix::{gate_matrix, Matrix};
use crate::circuit::GateKind;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn kind(self) -> GateKind {
        match self {
            Pauli::X => GateKind::X,
            Pauli::Y => GateKind::Y,
            Pauli::Z => GateKind::Z,
        }
    }

    pub fn matrix(self) -> Matrix {
        gate_matrix(self.kind())
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Signed Pauli `sign · P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedPauli {
    pub pauli: Pauli,
    pub sign: i8,
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign < 0 { "-" } else { "" }, self.pauli)
    }
}

/// Identifies `m` as `±P`, or `None` when it is not a signed Pauli.
pub fn as_signed_pauli(m: &Matrix) -> Option<SignedPauli> {
    for p in Pauli::ALL {
        let pm = p.matrix();
        for sign in [1i8, -1] {
            if m.approx_eq(&pm.scale(num_complex::Complex64::new(sign as f64, 0.0)), 1e-12) {
                return Some(SignedPauli { pauli: p, sign });
            }
        }
    }
    None
}

/// `C · P · C†` for a single-qubit `C`, found by matrix comparison.
pub fn pauli_conjugate(c: GateKind, p: Pauli) -> Result<SignedPauli> {
    if c.arity() != 1 {
        return Err(Error::NotClifford(c.to_string()));
    }
    let cm = gate_matrix(c);
    let m = &(&cm * &p.matrix()) * &cm.adjoint();
    as_signed_pauli(&m).ok_or_else(|| Error::NotClifford(c.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_rows() {
        assert_eq!(pauli_conjugate(GateKind::H, Pauli::Z).unwrap(), SignedPauli { pauli: Pauli::X, sign: 1 });
        assert_eq!(pauli_conjugate(GateKind::Z, Pauli::X).unwrap(), SignedPauli { pauli: Pauli::X, sign: -1 });
        assert_eq!(pauli_conjugate(GateKind::I, Pauli::Y).unwrap(), SignedPauli { pauli: Pauli::Y, sign: 1 });
    }

    #[test]
    fn t_is_not_clifford() {
        assert!(matches!(pauli_conjugate(GateKind::T, Pauli::X), Err(Error::NotClifford(_))));
        assert!(pauli_conjugate(GateKind::CX, Pauli::X).is_err());
    }
}
