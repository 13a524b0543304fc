use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::state::{apply, unitary_of, Statevector};
use crate::circuit::Circuit;
use crate::error::{Error, Result};

pub const EQUIV_TOL: f64 = 1e-9;

/// Strength of agreement between two circuits. `L1` is strongest; the
/// derived ordering follows implication (`L1 ⇒ L2 ⇒ L3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EquivalenceLevel {
    None,
    /// Same output distribution for every basis input.
    L3,
    /// Entrywise equal magnitudes (relative phases may differ).
    L2,
    /// Equal up to global phase.
    L1,
}

impl fmt::Display for EquivalenceLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceLevel::None => "NONE",
            EquivalenceLevel::L3 => "L3",
            EquivalenceLevel::L2 => "L2",
            EquivalenceLevel::L1 => "L1",
        })
    }
}

impl FromStr for EquivalenceLevel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "L1" => Ok(EquivalenceLevel::L1),
            "L2" => Ok(EquivalenceLevel::L2),
            "L3" => Ok(EquivalenceLevel::L3),
            "NONE" => Ok(EquivalenceLevel::None),
            _ => Err(format!("unknown equivalence level `{s}` (expected L1, L2 or L3)")),
        }
    }
}

/// `|tr(A†B)| / 2^n`.
pub fn fidelity(a: &Matrix, b: &Matrix) -> f64 {
    (&a.adjoint() * b).trace().norm() / a.dim() as f64
}

pub fn level_of_unitaries(a: &Matrix, b: &Matrix) -> EquivalenceLevel {
    assert_eq!(a.dim(), b.dim());
    if fidelity(a, b) >= 1.0 - EQUIV_TOL {
        return EquivalenceLevel::L1;
    }
    let n = a.dim();
    let mut mags = true;
    let mut dists = true;
    for j in 0..n {
        for i in 0..n {
            let (x, y) = (a.get(i, j).norm(), b.get(i, j).norm());
            mags &= (x - y).abs() <= EQUIV_TOL;
            dists &= (x * x - y * y).abs() <= EQUIV_TOL;
        }
    }
    if mags {
        EquivalenceLevel::L2
    } else if dists {
        EquivalenceLevel::L3
    } else {
        EquivalenceLevel::None
    }
}

pub fn equivalence(a: &Circuit, b: &Circuit) -> Result<EquivalenceLevel> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch { left: a.width(), right: b.width() });
    }
    Ok(level_of_unitaries(&unitary_of(a)?, &unitary_of(b)?))
}

pub fn circuit_fidelity(a: &Circuit, b: &Circuit) -> Result<f64> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch { left: a.width(), right: b.width() });
    }
    Ok(fidelity(&unitary_of(a)?, &unitary_of(b)?))
}

/// L3 restricted to the given basis inputs, e.g. only those with ancillas at |0⟩.
pub fn classically_equivalent_on(a: &Circuit, b: &Circuit, inputs: &[usize]) -> Result<bool> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch { left: a.width(), right: b.width() });
    }
    for &i in inputs {
        let sv = Statevector::basis(a.width(), i);
        let (pa, pb) = (apply(a, &sv)?.probabilities(), apply(b, &sv)?.probabilities());
        if pa.iter().zip(&pb).any(|(x, y)| (x - y).abs() > EQUIV_TOL) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Gate, GateKind};

    fn c(gates: &[(GateKind, &[usize])]) -> Circuit {
        Circuit::plain(2, gates.iter().map(|(k, q)| Gate::new(*k, q).unwrap()).collect()).unwrap()
    }

    #[test]
    fn levels() {
        let cx = c(&[(GateKind::CX, &[0, 1])]);
        assert_eq!(equivalence(&cx, &cx).unwrap(), EquivalenceLevel::L1);
        let phased = c(&[(GateKind::CX, &[0, 1]), (GateKind::Z, &[0])]);
        assert_eq!(equivalence(&cx, &phased).unwrap(), EquivalenceLevel::L2);
        // H on a basis state gives the same distribution whatever its sign pattern.
        let h = c(&[(GateKind::H, &[0])]);
        let hz = c(&[(GateKind::SX, &[0])]);
        assert_eq!(equivalence(&h, &hz).unwrap(), EquivalenceLevel::L2);
        let x = c(&[(GateKind::X, &[0])]);
        assert_eq!(equivalence(&cx, &x).unwrap(), EquivalenceLevel::None);
    }

    #[test]
    fn global_phase_is_l1() {
        let a = Matrix::identity(2);
        let b = a.scale(num_complex::Complex64::new(0.0, 1.0));
        assert_eq!(level_of_unitaries(&a, &b), EquivalenceLevel::L1);
    }

    #[test]
    fn restricted_inputs() {
        // CX and identity agree whenever the control is |0⟩.
        let cx = c(&[(GateKind::CX, &[0, 1])]);
        let id = c(&[]);
        assert!(classically_equivalent_on(&cx, &id, &[0b00, 0b10]).unwrap());
        assert!(!classically_equivalent_on(&cx, &id, &[0b01]).unwrap());
    }

    #[test]
    fn ordering_follows_strength() {
        assert!(EquivalenceLevel::L1 > EquivalenceLevel::L2);
        assert!(EquivalenceLevel::L2 > EquivalenceLevel::L3);
        assert!(EquivalenceLevel::L3 > EquivalenceLevel::None);
        assert_eq!("l2".parse::<EquivalenceLevel>().unwrap(), EquivalenceLevel::L2);
    }
}
