use num_complex::Complex64 as C;
use rayon::prelude::*;

use super::matrix::{gate_matrix, Matrix};
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Dense-simulation width limit.
pub const MAX_QUBITS: usize = 12;

/// Amplitudes over `2^n` basis states. Bit `i` of the basis index is qubit `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    n: usize,
    amps: Vec<C>,
}

impl Statevector {
    pub fn basis(n: usize, index: usize) -> Statevector {
        assert!(index < 1 << n, "basis index out of range");
        let mut amps = vec![C::new(0.0, 0.0); 1 << n];
        amps[index] = C::new(1.0, 0.0);
        Statevector { n, amps }
    }

    pub fn zero(n: usize) -> Statevector {
        Statevector::basis(n, 0)
    }

    /// Rejects lengths that are not a power of two and vectors off the unit sphere.
    pub fn from_amplitudes(amps: Vec<C>) -> Result<Statevector> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::InvalidCircuit(format!("{len} amplitudes is not a power of two")));
        }
        let sv = Statevector { n: len.trailing_zeros() as usize, amps };
        if (sv.norm() - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidCircuit(format!("state norm {} is not 1", sv.norm())));
        }
        Ok(sv)
    }

    /// Basis state given as a bit string written `q_{n-1} … q_0`.
    pub fn from_bitstring(bits: &str) -> Result<Statevector> {
        let n = bits.len();
        if n == 0 || n > MAX_QUBITS || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::InvalidCircuit(format!("bad basis bit string `{bits}`")));
        }
        let index = usize::from_str_radix(bits, 2).expect("validated");
        Ok(Statevector::basis(n, index))
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Probability of measuring qubit `q` as 1.
    pub fn prob_one(&self, q: usize) -> f64 {
        self.amps.iter().enumerate().filter(|(i, _)| i >> q & 1 == 1).map(|(_, a)| a.norm_sqr()).sum()
    }

    pub fn apply_gate(&mut self, gate: &Gate) {
        let m = gate_matrix(gate.kind());
        match *gate.qubits() {
            [q] => apply_1q(&mut self.amps, &m, q),
            [a, b] => apply_2q(&mut self.amps, &m, a, b),
            _ => unreachable!("gates have arity 1 or 2"),
        }
    }
}

fn apply_1q(amps: &mut [C], m: &Matrix, q: usize) {
    let bit = 1 << q;
    let (m00, m01, m10, m11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    for i in 0..amps.len() {
        if i & bit == 0 {
            let (a0, a1) = (amps[i], amps[i | bit]);
            amps[i] = m00 * a0 + m01 * a1;
            amps[i | bit] = m10 * a0 + m11 * a1;
        }
    }
}

fn apply_2q(amps: &mut [C], m: &Matrix, hi: usize, lo: usize) {
    let (bh, bl) = (1 << hi, 1 << lo);
    for i in 0..amps.len() {
        if i & bh == 0 && i & bl == 0 {
            let idx = [i, i | bl, i | bh, i | bh | bl];
            let v = idx.map(|k| amps[k]);
            for (r, &k) in idx.iter().enumerate() {
                amps[k] = (0..4).map(|c| m.get(r, c) * v[c]).sum();
            }
        }
    }
}

fn guard(circuit: &Circuit) -> Result<()> {
    if circuit.width() > MAX_QUBITS {
        return Err(Error::TooWide { width: circuit.width(), limit: MAX_QUBITS });
    }
    Ok(())
}

/// Runs `circuit` on `input`, gates applied left to right.
pub fn apply(circuit: &Circuit, input: &Statevector) -> Result<Statevector> {
    guard(circuit)?;
    if input.num_qubits() != circuit.width() {
        return Err(Error::WidthMismatch { left: circuit.width(), right: input.num_qubits() });
    }
    let mut sv = input.clone();
    for g in circuit.gates() {
        sv.apply_gate(g);
    }
    Ok(sv)
}

pub fn unitary_of(circuit: &Circuit) -> Result<Matrix> {
    guard(circuit)?;
    let dim = 1 << circuit.width();
    let cols: Vec<Vec<C>> = (0..dim)
        .into_par_iter()
        .map(|j| {
            let mut sv = Statevector::basis(circuit.width(), j);
            for g in circuit.gates() {
                sv.apply_gate(g);
            }
            sv.amps
        })
        .collect();
    Ok(Matrix::from_columns(dim, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateKind;

    fn circ(n: usize, gates: &[(GateKind, &[usize])]) -> Circuit {
        Circuit::plain(n, gates.iter().map(|(k, q)| Gate::new(*k, q).unwrap()).collect()).unwrap()
    }

    #[test]
    fn x_unitary() {
        let u = unitary_of(&circ(1, &[(GateKind::X, &[0])])).unwrap();
        assert!(u.approx_eq(&gate_matrix(GateKind::X), 0.0));
    }

    #[test]
    fn s_x_sdg_is_y() {
        let u = unitary_of(&circ(1, &[(GateKind::Sdg, &[0]), (GateKind::X, &[0]), (GateKind::S, &[0])])).unwrap();
        assert!(u.approx_eq(&gate_matrix(GateKind::Y), 1e-12));
    }

    #[test]
    fn cx_squared_identity() {
        let u = unitary_of(&circ(2, &[(GateKind::CX, &[0, 1]), (GateKind::CX, &[0, 1])])).unwrap();
        assert!(u.approx_eq(&Matrix::identity(4), 1e-12));
    }

    #[test]
    fn control_is_first_operand() {
        // Control q1 set, target q0 flips: |10⟩ → |11⟩.
        let c = circ(2, &[(GateKind::CX, &[1, 0])]);
        let out = apply(&c, &Statevector::basis(2, 0b10)).unwrap();
        assert!((out.amplitudes()[0b11].re - 1.0).abs() < 1e-12);
        let u = unitary_of(&c).unwrap();
        assert!((u.get(0b11, 0b10).re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn width_guards() {
        let c = circ(2, &[]);
        assert!(matches!(apply(&c, &Statevector::zero(3)), Err(Error::WidthMismatch { .. })));
        let wide = circ(13, &[]);
        assert!(matches!(unitary_of(&wide), Err(Error::TooWide { .. })));
    }

    #[test]
    fn bitstring_is_msb_first() {
        let sv = Statevector::from_bitstring("001").unwrap();
        assert!((sv.prob_one(0) - 1.0).abs() < 1e-12);
        assert!(Statevector::from_bitstring("0a1").is_err());
    }
}
