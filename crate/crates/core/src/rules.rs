//! Design-rule stages and exhaustive search over core configurations.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64 as C;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circuit::GateKind;
use crate::error::{Error, Result};
use crate::library::core::{build_core, AuxGate, CoreSpec, SpGate, ThetaGate, CORE_C1, CORE_C2, CORE_T};
use crate::sim::{level_of_unitaries, truth_table, unitary_of, EquivalenceLevel, Matrix, TruthTable};

/// Largest configuration count [`search`] will enumerate.
pub const SEARCH_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Segment {
    Semicircles,
    Quadrants,
    Octants,
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Segment::Semicircles => "semicircles",
            Segment::Quadrants => "quadrants",
            Segment::Octants => "octants",
        })
    }
}

/// Candidate gates and XY-plane segments after a rule.
#[derive(Clone, Debug, PartialEq)]
pub struct GateSetStage {
    pub stage: usize,
    pub ctg: Vec<GateKind>,
    pub seg: Vec<Segment>,
    /// Index of the SEG set this stage carries (SEG is refined less often than CTG).
    pub seg_index: usize,
}

/// Dagger-style symbol, e.g. `√X†` or `T†`.
pub fn symbol(kind: GateKind) -> String {
    match kind {
        GateKind::SX => "√X".into(),
        GateKind::SXdg => "√X†".into(),
        GateKind::Sdg => "S†".into(),
        GateKind::Tdg => "T†".into(),
        GateKind::Swap => "SWAP".into(),
        GateKind::Ecr => "ECR".into(),
        k => k.tag().to_ascii_uppercase(),
    }
}

impl GateSetStage {
    pub fn ctg_string(&self) -> String {
        format!("{{{}}}", self.ctg.iter().map(|&k| symbol(k)).collect::<Vec<_>>().join(", "))
    }

    pub fn seg_string(&self) -> String {
        format!("{{{}}}", self.seg.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Display for GateSetStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CTG{} = {}  SEG{} = {}", self.stage, self.ctg_string(), self.seg_index, self.seg_string())
    }
}

/// The five stages for the symmetric core.
pub fn apply_rules() -> Vec<GateSetStage> {
    stages(false)
}

/// Same as [`apply_rules`] but without the θ1 = θ3, θ2 = θ4 restriction:
/// the last stage keeps quadrants and the S gates.
pub fn apply_rules_nonsymmetric() -> Vec<GateSetStage> {
    stages(true)
}

fn stages(relaxed: bool) -> Vec<GateSetStage> {
    use GateKind::*;
    let ctg0 = vec![I, X, Y, Z, H, SX, SXdg, S, Sdg, T, Tdg, CX, CY, CZ, Swap];
    // Rule 3: the target controls nothing, so only single-qubit gates remain.
    let ctg1: Vec<GateKind> = ctg0.iter().copied().filter(|k| k.arity() == 1).collect();
    // Rule 4: segments only describe Z-axis rotations.
    let ctg2 = vec![Z, S, Sdg, T, Tdg];
    // Rule 5: semicircles repeat under the symmetric pairing.
    let ctg3 = vec![S, Sdg, T, Tdg];
    let seg0 = vec![Segment::Semicircles, Segment::Quadrants, Segment::Octants];
    let seg1 = vec![Segment::Quadrants, Segment::Octants];
    // Rule 6: quadrants repeat too, leaving octants only.
    let (ctg4, seg2) = if relaxed { (ctg3.clone(), seg1.clone()) } else { (vec![T, Tdg], vec![Segment::Octants]) };
    vec![
        GateSetStage { stage: 0, ctg: ctg0, seg: seg0.clone(), seg_index: 0 },
        GateSetStage { stage: 1, ctg: ctg1, seg: seg0.clone(), seg_index: 0 },
        GateSetStage { stage: 2, ctg: ctg2, seg: seg0, seg_index: 0 },
        GateSetStage { stage: 3, ctg: ctg3, seg: seg1, seg_index: 1 },
        GateSetStage { stage: 4, ctg: ctg4, seg: seg2, seg_index: 2 },
    ]
}

/// `‖SP‖² · ‖AX‖² · ‖θ‖⁴`, the size of an unrestricted core space.
pub fn count_space(sp: u64, ax: u64, theta: u64) -> u64 {
    sp * sp * ax * ax * theta.pow(4)
}

/// A membership query over core configurations.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchQuery {
    pub target: TruthTable,
    pub sp_set: Vec<SpGate>,
    pub ax1_set: Vec<AuxGate>,
    pub ax2_set: Vec<AuxGate>,
    pub theta_set: Vec<ThetaGate>,
    /// Restrict to θ1 = θ3 and θ2 = θ4.
    pub symmetric: bool,
}

impl SearchQuery {
    /// H framing, `AX = I`.
    pub fn basic(target: TruthTable, theta_set: Vec<ThetaGate>, symmetric: bool) -> SearchQuery {
        SearchQuery {
            target,
            sp_set: vec![SpGate::H],
            ax1_set: vec![AuxGate::I],
            ax2_set: vec![AuxGate::I],
            theta_set,
            symmetric,
        }
    }

    pub fn space_size(&self) -> u64 {
        let sp = self.sp_set.len() as u64;
        let th = self.theta_set.len() as u64;
        let thetas = if self.symmetric { th * th } else { th.pow(4) };
        sp * sp * self.ax1_set.len() as u64 * self.ax2_set.len() as u64 * thetas
    }

    fn validate(&self) -> Result<()> {
        if self.target.num_inputs() != 2 {
            return Err(Error::InvalidCircuit("search target must be a 2-input truth table".into()));
        }
        for (name, empty) in [
            ("sp", self.sp_set.is_empty()),
            ("ax1", self.ax1_set.is_empty()),
            ("ax2", self.ax2_set.is_empty()),
            ("theta", self.theta_set.is_empty()),
        ] {
            if empty {
                return Err(Error::EmptyGateSet(name));
            }
        }
        let size = self.space_size();
        if size > SEARCH_LIMIT {
            return Err(Error::SearchTooLarge { size, limit: SEARCH_LIMIT });
        }
        Ok(())
    }

    /// Configuration at mixed-radix position `i`.
    fn decode(&self, mut i: u64) -> CoreSpec {
        let mut pick = |n: usize| {
            let r = (i % n as u64) as usize;
            i /= n as u64;
            r
        };
        let sp2 = self.sp_set[pick(self.sp_set.len())];
        let ax2 = self.ax2_set[pick(self.ax2_set.len())];
        let th = self.theta_set.len();
        let theta = if self.symmetric {
            let (b, a) = (pick(th), pick(th));
            let (a, b) = (self.theta_set[a], self.theta_set[b]);
            [a, b, a, b]
        } else {
            let (d, c, b, a) = (pick(th), pick(th), pick(th), pick(th));
            [self.theta_set[a], self.theta_set[b], self.theta_set[c], self.theta_set[d]]
        };
        let ax1 = self.ax1_set[pick(self.ax1_set.len())];
        let sp1 = self.sp_set[pick(self.sp_set.len())];
        CoreSpec { sp1, ax1, theta, ax2, sp2 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub spec: CoreSpec,
    /// Agreement with the exact controlled-f oracle.
    pub level: EquivalenceLevel,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub visited: u64,
    /// Sorted by spec.
    pub hits: Vec<SearchHit>,
}

/// Phase-exact oracle `|c1 t c2⟩ → |c1, t ⊕ f(c1, c2), c2⟩`.
pub fn controlled_function_oracle(f: &TruthTable) -> Matrix {
    let mut cols = vec![vec![C::new(0.0, 0.0); 8]; 8];
    for (j, col) in cols.iter_mut().enumerate() {
        let a = (j >> CORE_C1 & 1) | (j >> CORE_C2 & 1) << 1;
        let out = if f.get(a) { j ^ 1 << CORE_T } else { j };
        col[out] = C::new(1.0, 0.0);
    }
    crate::sim::matrix::Matrix::from_columns(8, cols)
}

/// Core realizing `spec`'s function, or `None` if its target is not classical.
pub fn core_function(spec: &CoreSpec) -> Option<TruthTable> {
    truth_table(&build_core(spec), CORE_T, &[CORE_C1, CORE_C2], &[]).ok()
}

/// Every configuration in the query space whose core computes the target function.
pub fn search(query: &SearchQuery) -> Result<SearchResult> {
    query.validate()?;
    let oracle = controlled_function_oracle(&query.target);
    let visited = AtomicU64::new(0);
    let mut hits: Vec<SearchHit> = (0..query.space_size())
        .into_par_iter()
        .filter_map(|i| {
            visited.fetch_add(1, Ordering::Relaxed);
            let spec = query.decode(i);
            if core_function(&spec)? != query.target {
                return None;
            }
            let u = unitary_of(&build_core(&spec)).expect("three qubits");
            Some(SearchHit { spec, level: level_of_unitaries(&u, &oracle) })
        })
        .collect();
    hits.sort_by_key(|h| h.spec);
    hits.dedup_by(|a, b| a.spec == b.spec);
    Ok(SearchResult { visited: visited.into_inner(), hits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::core::BooleanGateKind;

    #[test]
    fn rule_sets_verbatim() {
        let s = apply_rules();
        assert_eq!(s[0].ctg_string(), "{I, X, Y, Z, H, √X, √X†, S, S†, T, T†, CX, CY, CZ, SWAP}");
        assert_eq!(s[1].ctg_string(), "{I, X, Y, Z, H, √X, √X†, S, S†, T, T†}");
        assert_eq!(s[2].ctg_string(), "{Z, S, S†, T, T†}");
        assert_eq!(s[3].ctg_string(), "{S, S†, T, T†}");
        assert_eq!(s[3].seg_string(), "{quadrants, octants}");
        assert_eq!(s[4].ctg_string(), "{T, T†}");
        assert_eq!(s[4].seg_string(), "{octants}");
        assert_eq!(apply_rules_nonsymmetric()[4].ctg_string(), "{S, S†, T, T†}");
    }

    #[test]
    fn stages_shrink() {
        for rules in [apply_rules(), apply_rules_nonsymmetric()] {
            for w in rules.windows(2) {
                assert!(w[1].ctg.iter().all(|k| w[0].ctg.contains(k)));
                assert!(w[1].seg.iter().all(|s| w[0].seg.contains(s)));
            }
        }
    }

    #[test]
    fn space_counts() {
        assert_eq!(count_space(1, 1, 4), 256);
        assert_eq!(count_space(3, 9, 4), 186_624);
        assert_eq!(count_space(1, 1, 1), 1);
    }

    #[test]
    fn decode_covers_space_once() {
        let q = SearchQuery::basic(TruthTable::from_fn(2, |_| false), ThetaGate::ALL.to_vec(), false);
        let mut specs: Vec<CoreSpec> = (0..q.space_size()).map(|i| q.decode(i)).collect();
        specs.sort();
        specs.dedup();
        assert_eq!(specs.len(), 256);
    }

    #[test]
    fn guards() {
        let mut q = SearchQuery::basic(BooleanGateKind::And.truth_table(), vec![], true);
        assert!(matches!(search(&q), Err(Error::EmptyGateSet("theta"))));
        q.theta_set = ThetaGate::ALL.to_vec();
        q.symmetric = false;
        q.sp_set = SpGate::ALL.to_vec();
        q.ax1_set = AuxGate::ALL.to_vec();
        q.ax2_set = AuxGate::ALL.repeat(50);
        assert!(matches!(search(&q), Err(Error::SearchTooLarge { .. })));
    }
}
