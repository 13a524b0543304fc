use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("gate `{gate}` expects {expected} qubit(s), got {got}")]
    Arity { gate: String, expected: usize, got: usize },

    #[error("qubit index {index} is out of range for width {width}")]
    QubitOutOfRange { index: usize, width: usize },

    #[error("gate `{0}` acts on the same qubit twice")]
    RepeatedQubit(String),

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("circuit width {width} exceeds the dense-simulation limit of {limit}")]
    TooWide { width: usize, limit: usize },

    #[error("`{0}` does not map the Pauli group to itself")]
    NotClifford(String),

    #[error("target measurement is not deterministic for control assignment {assignment} (p1 = {p1:.6})")]
    NondeterministicTarget { assignment: String, p1: f64 },

    #[error("target is not on the XY-plane after stage `{stage}`")]
    NotEquatorial { stage: String },

    #[error("unknown gate `{0}`")]
    UnknownGate(String),

    #[error("search space of {size} configurations exceeds the limit of {limit}")]
    SearchTooLarge { size: u64, limit: u64 },

    #[error("search gate set `{0}` is empty")]
    EmptyGateSet(&'static str),

    #[error("invalid coupling map: {0}")]
    InvalidMap(String),

    #[error("coupling map is disconnected between physical qubits {0} and {1}")]
    Disconnected(usize, usize),

    #[error("invalid placement: {0}")]
    InvalidPlacement(String),

    #[error("`{gate}` does not fit the layout: {reason}")]
    DoesNotFit { gate: String, reason: String },

    #[error("qubit `{0}` has no physical assignment")]
    UncoveredQubit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
