mod common;

use cala::sim::{apply, circuit_fidelity, Statevector};
use cala::transpile::{lower, peephole, NativeBasis};
use cala::{count_gates, emit_text, parse_text, Circuit};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn circuit(seed: u64) -> Circuit {
    common::random_clifford_t(&mut StdRng::seed_from_u64(seed), 4, 30)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let c = circuit(seed);
        let back = parse_text(&emit_text(&c)).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn depth_ignores_qubit_relabelling(seed in any::<u64>()) {
        let c = circuit(seed);
        let mut perm: Vec<usize> = (0..c.width()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed ^ 1));
        prop_assert_eq!(c.permuted(&perm).unwrap().depth(), c.depth());
    }

    #[test]
    fn counts_ignore_gate_order(seed in any::<u64>()) {
        let c = circuit(seed);
        let mut gates = c.gates().to_vec();
        gates.shuffle(&mut StdRng::seed_from_u64(seed ^ 2));
        let r = count_gates(&c.with_gates(gates));
        prop_assert_eq!(r.counts, count_gates(&c).counts);
        prop_assert_eq!(r.qc, count_gates(&c).qc);
    }

    #[test]
    fn simulation_preserves_norm(seed in any::<u64>(), input in any::<usize>()) {
        let c = circuit(seed);
        let out = apply(&c, &Statevector::basis(c.width(), input % (1 << c.width()))).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn transpilation_is_exact(seed in any::<u64>()) {
        let c = circuit(seed);
        for basis in [NativeBasis::Cx, NativeBasis::Ecr] {
            let out = peephole(&lower(&c, basis).unwrap());
            prop_assert!(out.gates().iter().all(|g| basis.allows(g.kind())));
            prop_assert!(circuit_fidelity(&c, &out).unwrap() >= 1.0 - 1e-9);
        }
    }

    #[test]
    fn peephole_never_adds_gates(seed in any::<u64>()) {
        let c = circuit(seed);
        for basis in [NativeBasis::Cx, NativeBasis::Ecr] {
            let lowered = lower(&c, basis).unwrap();
            let (before, after) = (count_gates(&lowered), count_gates(&peephole(&lowered)));
            for (tag, n) in &after.counts {
                prop_assert!(*n <= before.count(tag), "{} grew from {} to {}", tag, before.count(tag), n);
            }
            prop_assert!(after.qc <= before.qc);
        }
    }
}
