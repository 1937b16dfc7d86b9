use thiserror::Error;

/// Errors raised while constructing or evaluating gates, states and circuits.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: a qudit needs at least 2 levels")]
    InvalidDimension(i64),

    #[error("basis digit {digit} at position {position} is outside [0, {max}]")]
    InvalidLabel {
        position: usize,
        digit: usize,
        max: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("wire {wire} is outside [1, {wires}]")]
    WireOutOfRange { wire: usize, wires: usize },

    #[error("wire {0} is used more than once by the same gate")]
    DuplicateWire(usize),

    #[error("{gate} acts on {expected} wire(s) but {found} were given")]
    ArityMismatch {
        gate: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("register of {wires} wire(s) at d = {d} exceeds the dense size budget of {budget} amplitudes")]
    SizeBudgetExceeded {
        d: usize,
        wires: usize,
        budget: usize,
    },

    #[error("a register needs at least one wire")]
    NoWires,

    #[error("invalid dimension range {min}..={max}: need {lo} <= min <= max <= {hi}")]
    InvalidRange {
        min: i64,
        max: i64,
        lo: u32,
        hi: u32,
    },

    #[error("non-finite amplitude at index {0}")]
    NonFinite(usize),

    #[error("table is not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("matrix has {found} entries, expected {expected}")]
    BadMatrixLength { expected: usize, found: usize },

    #[error("at least one trial is required")]
    NoTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
