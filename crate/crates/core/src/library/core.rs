//! The symmetric three-qubit core and the Boolean gates built from it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circuit::{Circuit, CircuitBuilder, Gate, GateKind, QubitRole};
use crate::sim::{TraceStage, TruthTable};

/// Core qubit layout: first control, target in the middle, second control.
pub const CORE_C1: usize = 0;
pub const CORE_T: usize = 1;
pub const CORE_C2: usize = 2;

macro_rules! tag_enum {
    ($(#[$m:meta])* $name:ident { $($var:ident => $tag:literal),+ $(,)? }) => {
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum $name {
            $(#[serde(rename = $tag)] $var),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$var),+];

            pub fn tag(self) -> &'static str {
                match self { $($name::$var => $tag),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.tag())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                let lower = s.trim().to_ascii_lowercase();
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.tag() == lower)
                    .ok_or_else(|| format!("`{s}` is not one of {:?}", $name::ALL.iter().map(|v| v.tag()).collect::<Vec<_>>()))
            }
        }
    };
}

tag_enum!(
    /// Superposition gate opening and closing the target wire.
    SpGate { H => "h", SX => "sx", SXdg => "sxdg" }
);

tag_enum!(
    /// Auxiliary gate next to an SP gate. `NegZ` is −Z, realized as X·Z·X.
    AuxGate {
        I => "i", X => "x", SX => "sx", SXdg => "sxdg", Z => "z", NegZ => "-z",
        S => "s", Sdg => "sdg", T => "t", Tdg => "tdg",
    }
);

tag_enum!(
    /// Phase gate between the CX gates.
    ThetaGate { S => "s", Sdg => "sdg", T => "t", Tdg => "tdg" }
);

impl SpGate {
    pub fn kind(self) -> GateKind {
        match self {
            SpGate::H => GateKind::H,
            SpGate::SX => GateKind::SX,
            SpGate::SXdg => GateKind::SXdg,
        }
    }
}

impl AuxGate {
    /// Gate sequence in time order; `I` emits nothing.
    pub fn kinds(self) -> Vec<GateKind> {
        match self {
            AuxGate::I => vec![],
            AuxGate::X => vec![GateKind::X],
            AuxGate::SX => vec![GateKind::SX],
            AuxGate::SXdg => vec![GateKind::SXdg],
            AuxGate::Z => vec![GateKind::Z],
            AuxGate::NegZ => vec![GateKind::X, GateKind::Z, GateKind::X],
            AuxGate::S => vec![GateKind::S],
            AuxGate::Sdg => vec![GateKind::Sdg],
            AuxGate::T => vec![GateKind::T],
            AuxGate::Tdg => vec![GateKind::Tdg],
        }
    }
}

impl ThetaGate {
    pub fn kind(self) -> GateKind {
        match self {
            ThetaGate::S => GateKind::S,
            ThetaGate::Sdg => GateKind::Sdg,
            ThetaGate::T => GateKind::T,
            ThetaGate::Tdg => GateKind::Tdg,
        }
    }
}

/// Configuration of the core: on the target wire
/// `SP1 AX1 θ1 · CX(c2) · θ2 · CX(c1) · θ3 · CX(c2) · θ4 AX2 SP2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoreSpec {
    pub sp1: SpGate,
    pub ax1: AuxGate,
    pub theta: [ThetaGate; 4],
    pub ax2: AuxGate,
    pub sp2: SpGate,
}

impl CoreSpec {
    /// H-framed spec with `AX1 = I`.
    pub const fn h_framed(theta: [ThetaGate; 4], ax2: AuxGate) -> CoreSpec {
        CoreSpec { sp1: SpGate::H, ax1: AuxGate::I, theta, ax2, sp2: SpGate::H }
    }

    pub fn is_symmetric(&self) -> bool {
        self.theta[0] == self.theta[2] && self.theta[1] == self.theta[3]
    }

    /// The nine stages of the target wire, with AX1 folded into the first
    /// stage and AX2 into the eighth.
    pub fn stages(&self) -> Vec<TraceStage> {
        let on_t = |kinds: Vec<GateKind>| kinds.into_iter().map(|k| Gate::new(k, &[CORE_T]).expect("1q")).collect();
        let cx = |c: usize| vec![Gate::new(GateKind::CX, &[c, CORE_T]).expect("2q")];
        let mut first = vec![self.sp1.kind()];
        first.extend(self.ax1.kinds());
        let mut eighth = vec![self.theta[3].kind()];
        eighth.extend(self.ax2.kinds());
        vec![
            TraceStage { name: "SP1", gates: on_t(first), cx_control: None },
            TraceStage { name: "θ1", gates: on_t(vec![self.theta[0].kind()]), cx_control: None },
            TraceStage { name: "CX c2", gates: cx(CORE_C2), cx_control: Some(CORE_C2) },
            TraceStage { name: "θ2", gates: on_t(vec![self.theta[1].kind()]), cx_control: None },
            TraceStage { name: "CX c1", gates: cx(CORE_C1), cx_control: Some(CORE_C1) },
            TraceStage { name: "θ3", gates: on_t(vec![self.theta[2].kind()]), cx_control: None },
            TraceStage { name: "CX c2", gates: cx(CORE_C2), cx_control: Some(CORE_C2) },
            TraceStage { name: "θ4", gates: on_t(eighth), cx_control: None },
            TraceStage { name: "SP2", gates: on_t(vec![self.sp2.kind()]), cx_control: None },
        ]
    }
}

impl fmt::Display for CoreSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.theta;
        write!(f, "{} {} [{a} {b} {c} {d}] {} {}", self.sp1, self.ax1, self.ax2, self.sp2)
    }
}

pub const STAGE_NAMES: [&str; 9] = ["SP1", "θ1", "CX c2", "θ2", "CX c1", "θ3", "CX c2", "θ4", "SP2"];

/// Core circuit on qubits `c1, t, c2`. No gate joins the two controls.
pub fn build_core(spec: &CoreSpec) -> Circuit {
    build_core_named(spec, "core")
}

pub fn build_core_named(spec: &CoreSpec, name: &str) -> Circuit {
    let mut b = CircuitBuilder::new(name);
    b.qubit("c1", QubitRole::Control);
    b.qubit("t", QubitRole::Target);
    b.qubit("c2", QubitRole::Control);
    for stage in spec.stages() {
        for g in stage.gates {
            b.gate(g.kind(), g.qubits());
        }
    }
    b.build()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BooleanGateKind {
    And,
    Nand,
    Or,
    Nor,
    Implication,
    Inhibition,
}

impl BooleanGateKind {
    pub const ALL: [BooleanGateKind; 6] = [
        BooleanGateKind::And,
        BooleanGateKind::Nand,
        BooleanGateKind::Or,
        BooleanGateKind::Nor,
        BooleanGateKind::Implication,
        BooleanGateKind::Inhibition,
    ];

    pub fn spec(self) -> CoreSpec {
        use ThetaGate::{Tdg, T};
        match self {
            BooleanGateKind::And => CoreSpec::h_framed([Tdg, T, Tdg, T], AuxGate::I),
            BooleanGateKind::Nand => CoreSpec::h_framed([Tdg, T, Tdg, T], AuxGate::NegZ),
            BooleanGateKind::Or => CoreSpec::h_framed([T, T, T, T], AuxGate::Z),
            BooleanGateKind::Nor => CoreSpec::h_framed([T, T, T, T], AuxGate::I),
            BooleanGateKind::Implication => CoreSpec::h_framed([Tdg, Tdg, T, T], AuxGate::NegZ),
            BooleanGateKind::Inhibition => CoreSpec::h_framed([Tdg, Tdg, T, T], AuxGate::I),
        }
    }

    /// Function of `a` = control 1 and `b` = control 2.
    pub fn eval(self, a: bool, b: bool) -> bool {
        match self {
            BooleanGateKind::And => a && b,
            BooleanGateKind::Nand => !(a && b),
            BooleanGateKind::Or => a || b,
            BooleanGateKind::Nor => !(a || b),
            BooleanGateKind::Implication => !a || b,
            BooleanGateKind::Inhibition => a && !b,
        }
    }

    pub fn truth_table(self) -> TruthTable {
        TruthTable::from_fn(2, |i| self.eval(i & 1 == 1, i & 2 == 2))
    }

    pub fn name(self) -> &'static str {
        match self {
            BooleanGateKind::And => "and3",
            BooleanGateKind::Nand => "nand3",
            BooleanGateKind::Or => "or3",
            BooleanGateKind::Nor => "nor3",
            BooleanGateKind::Implication => "imp3",
            BooleanGateKind::Inhibition => "inh3",
        }
    }
}

pub fn build_boolean(kind: BooleanGateKind) -> Circuit {
    build_core_named(&kind.spec(), kind.name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::truth_table;

    #[test]
    fn and_core_shape() {
        let c = build_boolean(BooleanGateKind::And);
        let tags: Vec<&str> = c.gates().iter().map(|g| g.kind().tag()).collect();
        assert_eq!(tags, ["h", "tdg", "cx", "t", "cx", "tdg", "cx", "t", "h"]);
    }

    #[test]
    fn boolean_truth_tables() {
        for kind in BooleanGateKind::ALL {
            let c = build_boolean(kind);
            let tt = truth_table(&c, CORE_T, &[CORE_C1, CORE_C2], &[]).unwrap();
            assert_eq!(tt, kind.truth_table(), "{}", kind.name());
        }
    }

    #[test]
    fn nand_uses_xzx() {
        let c = build_boolean(BooleanGateKind::Nand);
        let tags: Vec<&str> = c.gates().iter().skip(7).map(|g| g.kind().tag()).collect();
        assert_eq!(tags, ["t", "x", "z", "x", "h"]);
    }

    #[test]
    fn controls_never_joined() {
        for kind in BooleanGateKind::ALL {
            for g in build_boolean(kind).gates().iter().filter(|g| g.is_two_qubit()) {
                assert!(g.qubits().contains(&CORE_T));
            }
        }
    }

    #[test]
    fn tags_parse() {
        assert_eq!("-z".parse::<AuxGate>().unwrap(), AuxGate::NegZ);
        assert_eq!("TDG".parse::<ThetaGate>().unwrap(), ThetaGate::Tdg);
        assert!("q".parse::<SpGate>().is_err());
    }
}
