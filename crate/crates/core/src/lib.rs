// SPDX-License-Identifier: Apache-2.0

//! Test generation, fault simulation and coverage analysis for quantum
//! oracle circuits built from multi-controlled NOT gates.

pub mod boolfn;
pub mod campaign;
pub mod circuit;
pub mod error;
pub mod exec;
pub mod sim;
pub mod testgen;
pub mod tolerance;

pub use error::{Error, Result};
pub use exec::Execution;
