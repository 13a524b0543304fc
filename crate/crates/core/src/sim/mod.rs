//! Dense statevector and unitary simulation.

pub mod analysis;
pub mod clifford;
pub mod equiv;
pub mod matrix;
pub mod state;

pub use analysis::{
    basis_map, phase_trace, qsphere, truth_table, ControlState, QSpherePoint, TraceLabel, TraceStage, TruthRecord,
    TruthTable,
};
pub use clifford::{pauli_conjugate, Pauli, SignedPauli};
pub use equiv::{
    circuit_fidelity, classically_equivalent_on, equivalence, fidelity, level_of_unitaries, EquivalenceLevel,
};
pub use matrix::{gate_matrix, Matrix};
pub use state::{apply, unitary_of, Statevector, MAX_QUBITS};
