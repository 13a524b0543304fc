//! Gate builders: the core family, two-qubit gates, composites and exact oracles.

pub mod catalog;
pub mod composite;
pub mod core;
pub mod standard;
pub mod two_bit;

pub use catalog::{compare, Comparison, LibraryGate, GATE_NAMES, ORACLE_NAMES};
pub use composite::{build_composite, miller_permutation, CompositeKind};
pub use core::{build_boolean, build_core, AuxGate, BooleanGateKind, CoreSpec, SpGate, ThetaGate};
pub use standard::{build_standard, composite_oracle, StandardKind};
pub use two_bit::{build_2bit, TwoBitKind};
