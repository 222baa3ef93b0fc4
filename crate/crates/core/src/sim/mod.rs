// SPDX-License-Identifier: Apache-2.0

//! Dense statevector simulation with fault injection.

mod analysis;
mod apply;
mod fault;
mod measure;
mod state;

pub use analysis::{is_product, phase_vector, QubitFactor};
pub use apply::{apply, apply_gate, apply_range};
pub use fault::{apply_faulty, Branch, Ensemble, FaultModel, FaultSpec, PauliAxis};
pub use measure::{bell_measure, measure_distribution, BellState, Measurement, Outcome, OutcomeDistribution};
pub use state::{prepare, StateVector};

/// Largest register the dense simulator accepts.
pub const MAX_WIDTH: usize = 24;
