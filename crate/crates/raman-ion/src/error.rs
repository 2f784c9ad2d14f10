//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by operator construction, model building, and integration.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("level index {index} out of range for {levels} internal levels")]
    LevelOutOfRange { index: usize, levels: usize },

    #[error("phonon index {n} out of range for fock_dim {fock_dim}")]
    PhononOutOfRange { n: usize, fock_dim: usize },

    #[error("invalid system space: {0}")]
    InvalidSpace(String),

    #[error("invalid physical configuration: {0}")]
    InvalidConfig(String),

    #[error("matrix exponential overflow (norm {norm:.3e}); input out of supported range")]
    ExpOverflow { norm: f64 },

    #[error("non-finite entries in matrix input")]
    NonFiniteInput,

    #[error("zero detuning: effective parameters are undefined")]
    ZeroDetuning,

    #[error("sideband/detuning mismatch: {0}")]
    SidebandMismatch(String),

    #[error("invalid integration plan: {0}")]
    InvalidPlan(String),

    #[error("non-finite state at step {step} (t = {t:.6e} s)")]
    NonFinite { step: usize, t: f64 },

    #[error("monitor violation at t = {t:.6e} s: {monitor} = {value:.6e} (limit {limit:.1e})")]
    MonitorViolation {
        t: f64,
        monitor: &'static str,
        value: f64,
        limit: f64,
    },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("fit error: {0}")]
    Fit(String),
}

/// Errors raised while parsing scenario configuration documents.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("unknown key `{0}`")]
    UnknownKey(String),

    #[error("missing required keys: {}", .0.join(", "))]
    MissingKeys(Vec<String>),

    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },

    #[error("malformed line {line}: `{text}` (expected `key = value`)")]
    MalformedLine { line: usize, text: String },

    #[error("configuration violates invariant: {0}")]
    Invariant(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = SimError> = std::result::Result<T, E>;
