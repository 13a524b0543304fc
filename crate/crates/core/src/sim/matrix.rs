use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Mul;

use num_complex::Complex64 as C;

use crate::circuit::GateKind;

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);
const I: C = C::new(0.0, 1.0);

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<C>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Matrix {
        Matrix { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Matrix {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[&[C]]) -> Matrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix { dim, data: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    pub(crate) fn from_columns(dim: usize, cols: Vec<Vec<C>>) -> Matrix {
        let mut m = Matrix::zeros(dim);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.data[i * dim + j] = v;
            }
        }
        m
    }

    pub fn diag(entries: &[C]) -> Matrix {
        let mut m = Matrix::zeros(entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m.data[i * entries.len() + i] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> C {
        self.data[i * self.dim + j]
    }

    pub fn column(&self, j: usize) -> Vec<C> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    pub fn adjoint(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[j * self.dim + i] = self.get(i, j).conj();
            }
        }
        m
    }

    pub fn scale(&self, s: C) -> Matrix {
        Matrix { dim: self.dim, data: self.data.iter().map(|v| v * s).collect() }
    }

    /// `self ⊗ other`; `self` acts on the more significant index bits.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let d = self.dim * other.dim;
        let mut m = Matrix::zeros(d);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        m.data[(i * other.dim + k) * d + j * other.dim + l] = a * other.get(k, l);
                    }
                }
            }
        }
        m
    }

    pub fn trace(&self) -> C {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    /// Equal up to a global phase factor.
    pub fn approx_eq_up_to_phase(&self, other: &Matrix, tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let Some(k) = self.data.iter().position(|v| v.norm() > 1e-6) else {
            return other.data.iter().all(|v| v.norm() <= tol);
        };
        if other.data[k].norm() <= 1e-6 {
            return false;
        }
        let phase = other.data[k] / self.data[k];
        let phase = phase / phase.norm();
        self.scale(phase).approx_eq(other, tol)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (&self.adjoint() * self).approx_eq(&Matrix::identity(self.dim), tol)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    m.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        m
    }
}

fn phase(theta: f64) -> C {
    C::from_polar(1.0, theta)
}

/// Matrix of a single gate. Two-qubit matrices use `qubits[0]` as the more
/// significant local bit, so CX is the familiar block `diag(I, X)`.
pub fn gate_matrix(kind: GateKind) -> Matrix {
    use std::f64::consts::PI;
    let h = C::new(FRAC_1_SQRT_2, 0.0);
    let half = C::new(0.5, 0.0);
    match kind {
        GateKind::I => Matrix::identity(2),
        GateKind::X => Matrix::from_rows(&[&[ZERO, ONE], &[ONE, ZERO]]),
        GateKind::Y => Matrix::from_rows(&[&[ZERO, -I], &[I, ZERO]]),
        GateKind::Z => Matrix::diag(&[ONE, -ONE]),
        GateKind::H => Matrix::from_rows(&[&[h, h], &[h, -h]]),
        GateKind::SX => {
            let (p, m) = (half * (ONE + I), half * (ONE - I));
            Matrix::from_rows(&[&[p, m], &[m, p]])
        }
        GateKind::SXdg => {
            let (p, m) = (half * (ONE - I), half * (ONE + I));
            Matrix::from_rows(&[&[p, m], &[m, p]])
        }
        GateKind::S => Matrix::diag(&[ONE, I]),
        GateKind::Sdg => Matrix::diag(&[ONE, -I]),
        GateKind::T => Matrix::diag(&[ONE, phase(PI / 4.0)]),
        GateKind::Tdg => Matrix::diag(&[ONE, phase(-PI / 4.0)]),
        GateKind::RZ(a) => {
            let g = a.to_radians();
            Matrix::diag(&[phase(-g / 2.0), phase(g / 2.0)])
        }
        GateKind::RY(a) => {
            let g = a.to_radians() / 2.0;
            let (c, s) = (C::new(g.cos(), 0.0), C::new(g.sin(), 0.0));
            Matrix::from_rows(&[&[c, -s], &[s, c]])
        }
        GateKind::CX => controlled(&gate_matrix(GateKind::X)),
        GateKind::CY => controlled(&gate_matrix(GateKind::Y)),
        GateKind::CZ => controlled(&gate_matrix(GateKind::Z)),
        GateKind::Swap => Matrix::from_rows(&[
            &[ONE, ZERO, ZERO, ZERO],
            &[ZERO, ZERO, ONE, ZERO],
            &[ZERO, ONE, ZERO, ZERO],
            &[ZERO, ZERO, ZERO, ONE],
        ]),
        GateKind::Ecr => {
            // (I⊗X − X⊗Y)/√2 with the control as the left factor.
            let ix = Matrix::identity(2).kron(&gate_matrix(GateKind::X));
            let xy = gate_matrix(GateKind::X).kron(&gate_matrix(GateKind::Y));
            let mut m = Matrix::zeros(4);
            for k in 0..16 {
                m.data[k] = (ix.data[k] - xy.data[k]) * h;
            }
            m
        }
    }
}

/// `|0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ u` for a 2×2 `u`.
pub fn controlled(u: &Matrix) -> Matrix {
    assert_eq!(u.dim(), 2);
    let mut m = Matrix::identity(4);
    for i in 0..2 {
        for j in 0..2 {
            m.data[(2 + i) * 4 + 2 + j] = u.get(i, j);
        }
    }
    m
}
