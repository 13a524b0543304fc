use cala::library::catalog::classical_permutation;
use cala::library::{compare, miller_permutation, LibraryGate, GATE_NAMES};
use cala::sim::{apply, qsphere, truth_table, EquivalenceLevel, Statevector};
use cala::QubitRole;

fn idx(c: &cala::Circuit, labels: &[&str]) -> Vec<usize> {
    labels.iter().map(|l| c.index_of(l).unwrap_or_else(|| panic!("missing {l}"))).collect()
}

#[test]
fn composite_truth_tables_on_clean_ancillas() {
    type Case = (&'static str, &'static [&'static str], fn(usize) -> bool);
    let cases: [Case; 4] = [
        ("and4", &["c1", "c2", "c3"], |a| a == 0b111),
        ("and5", &["c1", "c2", "c3", "c4"], |a| a == 0b1111),
        ("pos5", &["c1", "c2", "c3", "c4"], |a| (a & 1 == 1 || a & 2 == 2) && (a & 4 == 4 || a & 8 == 8)),
        ("sop5", &["c1", "c2", "c3", "c4"], |a| a & 3 == 3 || a & 12 == 12),
    ];
    for (name, controls, f) in cases {
        let c = LibraryGate::by_name(name).unwrap().build();
        let anc = c.qubits_with_role(QubitRole::Ancilla);
        let tt = truth_table(&c, c.index_of("t").unwrap(), &idx(&c, controls), &anc).unwrap();
        for a in 0..1 << controls.len() {
            assert_eq!(tt.get(a), f(a), "{name} assignment {a}");
        }
    }
}

#[test]
fn miller3_is_the_frozen_permutation() {
    let c = LibraryGate::by_name("miller3").unwrap().build();
    let q = idx(&c, &["a", "b", "c"]);
    let perm = classical_permutation(&c).unwrap();
    for (input, &out) in perm.iter().enumerate() {
        let bit = |x: usize, i: usize| x >> q[i] & 1 == 1;
        let want = miller_permutation(bit(input, 0), bit(input, 1), bit(input, 2));
        assert_eq!((bit(out, 0), bit(out, 1), bit(out, 2)), want, "input {input:03b}");
    }
}

#[test]
fn fredkin3_swaps_targets_under_control() {
    let c = LibraryGate::by_name("fredkin3").unwrap().build();
    let q = idx(&c, &["c", "t1", "t2"]);
    let perm = classical_permutation(&c).unwrap();
    for (input, &out) in perm.iter().enumerate() {
        let (ctl, a, b) = (input >> q[0] & 1, input >> q[1] & 1, input >> q[2] & 1);
        let (a2, b2) = if ctl == 1 { (b, a) } else { (a, b) };
        let want = ctl << q[0] | a2 << q[1] | b2 << q[2];
        assert_eq!(out, want, "input {input:03b}");
    }
}

#[test]
fn every_gate_reaches_at_least_l3_against_its_counterpart() {
    for name in GATE_NAMES {
        let g = LibraryGate::by_name(name).unwrap();
        let Some(oracle) = g.standard_counterpart() else { continue };
        let cmp = compare(&g.build(), &oracle.build()).unwrap();
        assert!(cmp.effective_level() >= EquivalenceLevel::L3, "{name}: {cmp:?}");
    }
}

#[test]
fn qsphere_of_plus_state() {
    let c = cala::parse_text("qubits 1\nh q[0]\n").unwrap();
    let out = apply(&c, &Statevector::zero(1)).unwrap();
    let pts = qsphere(&out, &[0]);
    assert_eq!(pts.len(), 2);
    for p in &pts {
        assert!((p.magnitude - 0.5f64.sqrt()).abs() < 1e-12);
        assert!(p.phase.abs() < 1e-12);
    }
}
