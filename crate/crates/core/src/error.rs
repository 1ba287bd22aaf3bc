use thiserror::Error;

/// Errors produced by group construction, character computation and the checks built on them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group order {0}: must be between 1 and {max}", max = crate::group::MAX_ORDER)]
    InvalidOrder(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown group {0:?}: expected Z<n>, Z<a>xZ<b>..., S3, Q8, V4 or D4")]
    UnknownGroup(String),

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid Cayley table: {0}")]
    InvalidCayley(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("class sums failed to separate: {0}")]
    NumericDegeneracy(String),

    #[error("computed character table disagrees with reference for {group}: {detail}")]
    ReferenceMismatch { group: String, detail: String },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("values are not constant on conjugacy class {class} (deviation {deviation:.3e})")]
    NotClassFunction { class: usize, deviation: f64 },

    #[error("root {root} is not coprime to length {n}")]
    InvalidRoot { n: usize, root: i64 },

    #[error("quadratic chirp needs odd length, got {0}")]
    Parity(usize),

    #[error("construction failed its own bentness check: {0}")]
    ConstructionIntegrity(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
