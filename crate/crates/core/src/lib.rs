//! Layout-aware Clifford+T gate synthesis for IBM-style devices.
//!
//! Builds relative-phase Boolean gates and their composites, checks them by
//! dense simulation, lowers them to native gate sets and maps them onto a
//! heavy-hex coupling graph without SWAPs.

pub mod angle;
pub mod circuit;
pub mod error;
pub mod layout;
pub mod library;
pub mod report;
pub mod rules;
pub mod sim;
pub mod text;
pub mod transpile;

pub use angle::Angle;
pub use circuit::{count_gates, depth, Circuit, CircuitBuilder, CostReport, Gate, GateKind, QubitRole};
pub use error::{Error, Result};
pub use text::{emit_text, parse_text};
