// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("exact ESOP minimization supports k <= 4, got k = {0}")]
    KTooLarge(usize),

    #[error("variable count k = {0} outside supported range 1..=16")]
    UnsupportedK(usize),

    #[error("width mismatch: expected {expected} qubits, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("width {0} exceeds the dense simulation cap of {cap} qubits", cap = crate::sim::MAX_WIDTH)]
    WidthTooLarge(usize),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("invalid fault location: {0}")]
    LocationInvalid(String),

    #[error("amplitudes are not balanced: {0}")]
    NotBalanced(String),

    #[error("target qubit is entangled with the control register")]
    TargetEntangled,

    #[error("circuit is not an oracle: {0}")]
    NonOracleCircuit(String),

    #[error("test plan {name} is not deterministic: expected outcome has probability {probability}")]
    NonDeterministic { name: String, probability: f64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
