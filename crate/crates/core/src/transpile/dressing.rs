//! Single-qubit dressings that turn one ECR into one CX.
//!
//! `CX(c, t) = post · ECR · pre` up to global phase, where `pre` and `post`
//! are tensor products of short native sequences. [`search_cx_dressing`]
//! enumerates every dressing with at most three native gates per slot and
//! [`choose_dressing`] picks the one used by [`CX_TO_ECR`].

use std::collections::HashMap;
use std::fmt;
use std::sync::LazyLock;

use num_complex::Complex64 as C;
use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::circuit::{Circuit, CostReport, Gate, GateKind};
use crate::error::Result;
use crate::library::{build_boolean, BooleanGateKind};
use crate::sim::{gate_matrix, Matrix};

/// Which way the ECR points relative to the CX it implements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// ECR on (c, t).
    Forward,
    /// ECR on (t, c).
    Reverse,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CxDressing {
    pub orientation: Orientation,
    pub pre_c: Vec<GateKind>,
    pub pre_t: Vec<GateKind>,
    pub post_c: Vec<GateKind>,
    pub post_t: Vec<GateKind>,
}

fn rz(num: i64, den: i64) -> GateKind {
    GateKind::RZ(Angle::pi_frac(num, den))
}

/// Frozen result of `choose_dressing()`; a unit test keeps the two in sync.
pub static CX_TO_ECR: LazyLock<CxDressing> = LazyLock::new(|| CxDressing {
    orientation: Orientation::Forward,
    pre_c: vec![GateKind::SX, rz(3, 2)],
    pre_t: vec![rz(3, 2), GateKind::SX],
    post_c: vec![rz(3, 2), GateKind::SX, rz(1, 2)],
    post_t: vec![rz(3, 2), GateKind::SX, rz(1, 2)],
});

impl CxDressing {
    pub fn gate_count(&self) -> usize {
        self.pre_c.len() + self.pre_t.len() + self.post_c.len() + self.post_t.len()
    }

    fn ecr_qubits(&self, c: usize, t: usize) -> [usize; 2] {
        match self.orientation {
            Orientation::Forward => [c, t],
            Orientation::Reverse => [t, c],
        }
    }

    /// Appends the native image of `CX(c, t)`.
    pub fn emit_cx(&self, c: usize, t: usize, out: &mut Vec<Gate>) {
        let one = |k: GateKind, q: usize| Gate::new(k, &[q]).expect("1q");
        out.extend(self.pre_c.iter().map(|&k| one(k, c)));
        out.extend(self.pre_t.iter().map(|&k| one(k, t)));
        out.push(Gate::new(GateKind::Ecr, &self.ecr_qubits(c, t)).expect("2q"));
        out.extend(self.post_c.iter().map(|&k| one(k, c)));
        out.extend(self.post_t.iter().map(|&k| one(k, t)));
    }

    /// Appends `ECR(a, b)` written with one CX and inverted dressings. The
    /// single-qubit gates are not native; the caller lowers them.
    pub fn emit_ecr_via_cx(&self, a: usize, b: usize, out: &mut Vec<Gate>) {
        // ECR on `[a, b]` is the ECR of CX(c, t) for this (c, t).
        let (c, t) = match self.orientation {
            Orientation::Forward => (a, b),
            Orientation::Reverse => (b, a),
        };
        let inv = |seq: &[GateKind], q: usize, out: &mut Vec<Gate>| {
            out.extend(seq.iter().rev().map(|k| Gate::new(k.inverse(), &[q]).expect("1q")));
        };
        inv(&self.pre_c, c, out);
        inv(&self.pre_t, t, out);
        out.push(Gate::new(GateKind::CX, &[c, t]).expect("2q"));
        inv(&self.post_c, c, out);
        inv(&self.post_t, t, out);
    }

    /// Two-qubit circuit `[c, t]` implementing CX with this dressing.
    pub fn as_circuit(&self) -> Circuit {
        let mut gates = Vec::new();
        self.emit_cx(0, 1, &mut gates);
        Circuit::plain(2, gates).expect("valid dressing circuit")
    }
}

impl fmt::Display for CxDressing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = |s: &[GateKind]| s.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ");
        write!(
            f,
            "{:?}: pre c [{}] t [{}], post c [{}] t [{}]",
            self.orientation,
            seq(&self.pre_c),
            seq(&self.pre_t),
            seq(&self.post_c),
            seq(&self.post_t)
        )
    }
}

/// Search alphabet, in tie-break order.
fn alphabet() -> Vec<GateKind> {
    let mut a = vec![GateKind::X, GateKind::SX];
    a.extend((1..8).map(|k| rz(k, 4)));
    a
}

fn seq_matrix(seq: &[GateKind]) -> Matrix {
    seq.iter().fold(Matrix::identity(2), |acc, &k| &gate_matrix(k) * &acc)
}

/// Rounded entries after removing global phase and scale.
fn phase_key(m: &Matrix) -> Option<Vec<i64>> {
    let n = m.dim();
    let mut norm = 0.0;
    for i in 0..n {
        for j in 0..n {
            norm += m.get(i, j).norm_sqr();
        }
    }
    let scale = (norm / n as f64).sqrt();
    if scale < 1e-9 {
        return None;
    }
    let pivot = (0..n * n).map(|k| m.get(k / n, k % n)).find(|z| z.norm() > 1e-6 * scale)?;
    let fix = C::from_polar(1.0 / scale, -pivot.arg());
    let mut key = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let z = m.get(i, j) * fix;
            key.push((z.re * 1e6).round() as i64);
            key.push((z.im * 1e6).round() as i64);
        }
    }
    Some(key)
}

/// Shortest native sequence (≤ 3 gates) for every reachable single-qubit
/// unitary, keyed by [`phase_key`].
fn sequence_table() -> (Vec<Vec<GateKind>>, HashMap<Vec<i64>, usize>) {
    let alpha = alphabet();
    let mut seqs: Vec<Vec<GateKind>> = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..3 {
        let mut next = Vec::new();
        for s in &frontier {
            for &g in &alpha {
                let mut t: Vec<GateKind> = s.clone();
                t.push(g);
                next.push(t);
            }
        }
        seqs.extend(next.iter().cloned());
        frontier = next;
    }
    let mut table = Vec::new();
    let mut index = HashMap::new();
    for s in seqs {
        let key = phase_key(&seq_matrix(&s)).expect("unitary");
        index.entry(key).or_insert_with(|| {
            table.push(s);
            table.len() - 1
        });
    }
    (table, index)
}

/// Splits a 4×4 `m` into `a ⊗ b` when it is a product.
fn tensor_split(m: &Matrix) -> Option<(Matrix, Matrix)> {
    // r[(i,j),(k,l)] = m[(i,k),(j,l)] = a_ij · b_kl is rank one.
    let r = |p: usize, q: usize| m.get(2 * (p / 2) + q / 2, 2 * (p % 2) + q % 2);
    let (mut bp, mut bq, mut best) = (0, 0, 0.0);
    for p in 0..4 {
        for q in 0..4 {
            if r(p, q).norm() > best {
                (bp, bq, best) = (p, q, r(p, q).norm());
            }
        }
    }
    let piv = r(bp, bq);
    let a: Vec<C> = (0..4).map(|p| r(p, bq)).collect();
    let b: Vec<C> = (0..4).map(|q| r(bp, q) / piv).collect();
    for p in 0..4 {
        for q in 0..4 {
            if (a[p] * b[q] - r(p, q)).norm() > 1e-9 {
                return None;
            }
        }
    }
    Some((Matrix::from_rows(&[&[a[0], a[1]], &[a[2], a[3]]]), Matrix::from_rows(&[&[b[0], b[1]], &[b[2], b[3]]])))
}

/// Every dressing whose four slots each have at most three native gates.
/// Each (pre_c, pre_t) pair fixes `post`, so there is one candidate per
/// pair whose `post` factors into table entries. Sorted by gate count, then
/// by orientation and slot contents in alphabet order.
pub fn search_cx_dressing(orientation: Orientation) -> Vec<CxDressing> {
    let (table, index) = sequence_table();
    let mats: Vec<Matrix> = table.iter().map(|s| seq_matrix(s)).collect();
    let cx = gate_matrix(GateKind::CX);
    let ecr = match orientation {
        Orientation::Forward => gate_matrix(GateKind::Ecr),
        Orientation::Reverse => {
            let swap = gate_matrix(GateKind::Swap);
            &(&swap * &gate_matrix(GateKind::Ecr)) * &swap
        }
    };
    let mut found = Vec::new();
    for (i, mc) in mats.iter().enumerate() {
        for (j, mt) in mats.iter().enumerate() {
            let mid = &ecr * &mc.kron(mt);
            let post = &cx * &mid.adjoint();
            let Some((a, b)) = tensor_split(&post) else { continue };
            let (Some(ka), Some(kb)) = (phase_key(&a), phase_key(&b)) else { continue };
            if let (Some(&pa), Some(&pb)) = (index.get(&ka), index.get(&kb)) {
                found.push(CxDressing {
                    orientation,
                    pre_c: table[i].clone(),
                    pre_t: table[j].clone(),
                    post_c: table[pa].clone(),
                    post_t: table[pb].clone(),
                });
            }
        }
    }
    let alpha = alphabet();
    let rank = |s: &[GateKind]| -> Vec<usize> {
        s.iter().map(|k| alpha.iter().position(|a| a == k).expect("alphabet")).collect()
    };
    found.sort_by_cached_key(|d| {
        (d.gate_count(), d.orientation, rank(&d.pre_c), rank(&d.pre_t), rank(&d.post_c), rank(&d.post_t))
    });
    found
}

/// AND-core cost report in the ECR basis with `d` in place of the frozen
/// dressing.
pub fn and_core_cost(d: &CxDressing) -> Result<CostReport> {
    let core = build_boolean(BooleanGateKind::And);
    let lowered = super::lower_with(&core, super::NativeBasis::Ecr, d)?;
    Ok(super::peephole(&lowered).count_gates())
}

/// Forward candidate ranked by dressing size, then AND-core cost, then
/// physical pulses (SX and X; RZ is virtual), then search order.
pub fn choose_dressing() -> Result<CxDressing> {
    let mut best: Option<((usize, usize, usize), CxDressing)> = None;
    for d in search_cx_dressing(Orientation::Forward) {
        let r = and_core_cost(&d)?;
        let key = (d.gate_count(), r.qc, r.count("sx") + r.count("x"));
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, d));
        }
    }
    Ok(best.expect("the forward search is never empty").1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::circuit_fidelity;

    fn cx() -> Circuit {
        Circuit::plain(2, vec![Gate::new(GateKind::CX, &[0, 1]).unwrap()]).unwrap()
    }

    #[test]
    fn frozen_dressing_is_exact() {
        assert!(circuit_fidelity(&cx(), &CX_TO_ECR.as_circuit()).unwrap() > 1.0 - 1e-12);
        assert_eq!(CX_TO_ECR.gate_count(), 10);
    }

    #[test]
    fn frozen_dressing_matches_search() {
        assert_eq!(choose_dressing().unwrap(), *CX_TO_ECR);
    }

    #[test]
    fn every_candidate_is_exact() {
        for o in [Orientation::Forward, Orientation::Reverse] {
            let found = search_cx_dressing(o);
            assert!(!found.is_empty());
            for d in found.iter().take(20) {
                assert!(circuit_fidelity(&cx(), &d.as_circuit()).unwrap() > 1.0 - 1e-9, "{d}");
            }
        }
    }

    #[test]
    fn reverse_needs_three_gates() {
        let rev = &search_cx_dressing(Orientation::Reverse)[0];
        assert_eq!(rev.gate_count(), 3);
        let fwd = &search_cx_dressing(Orientation::Forward)[0];
        assert!(fwd.gate_count() > 3);
    }

    #[test]
    fn tensor_split_roundtrip() {
        let a = gate_matrix(GateKind::H);
        let b = gate_matrix(GateKind::T);
        let (x, y) = tensor_split(&a.kron(&b)).unwrap();
        assert!(x.kron(&y).approx_eq(&a.kron(&b), 1e-12));
        assert!(tensor_split(&gate_matrix(GateKind::CX)).is_none());
    }
}
