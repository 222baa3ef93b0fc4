// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::circuit::{enumerate_error_locations, Circuit, ErrorLocation};
use crate::error::{Error, Result};
use crate::sim::{FaultSpec, PauliAxis};
use crate::testgen::TestPlan;

/// Which single-fault models to enumerate and with what strengths.
#[derive(Debug, Clone, PartialEq)]
pub struct FaultModels {
    pub pauli: bool,
    pub init: bool,
    pub measure: bool,
    /// Placement probabilities for Pauli faults; each yields its own fault set.
    pub pauli_probabilities: Vec<f64>,
    /// Bias for init and measurement faults.
    pub bias: f64,
}

impl Default for FaultModels {
    fn default() -> Self {
        Self {
            pauli: true,
            init: true,
            measure: true,
            pauli_probabilities: vec![1.0],
            bias: 1.0,
        }
    }
}

impl FaultModels {
    pub fn none() -> Self {
        Self {
            pauli: false,
            init: false,
            measure: false,
            ..Self::default()
        }
    }

    pub fn pauli_only() -> Self {
        Self {
            pauli: true,
            ..Self::none()
        }
    }

    /// Parses a comma list of `pauli`, `init`, `measure` or `all`.
    pub fn parse_list(list: &str) -> Result<Self> {
        let mut m = Self::none();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "pauli" => m.pauli = true,
                "init" => m.init = true,
                "measure" => m.measure = true,
                "all" => {
                    m.pauli = true;
                    m.init = true;
                    m.measure = true;
                }
                other => return Err(Error::InvalidArgument(format!("unknown fault model {other:?}"))),
            }
        }
        Ok(m)
    }
}

/// One fault per location, applicable model and axis or stuck value.
pub fn enumerate_single_faults(c: &Circuit, models: &FaultModels) -> Vec<FaultSpec> {
    let mut out = Vec::new();
    for loc in enumerate_error_locations(c) {
        match loc {
            ErrorLocation::Wire { .. } if models.pauli => {
                for &p in &models.pauli_probabilities {
                    out.extend(PauliAxis::ALL.iter().map(|&axis| FaultSpec::pauli(loc, axis, p)));
                }
            }
            ErrorLocation::Init(q) if models.init => out.push(FaultSpec::init_bias(q, models.bias)),
            ErrorLocation::Measure(q) if models.measure => {
                out.push(FaultSpec::measure_bias(q, false, models.bias));
                out.push(FaultSpec::measure_bias(q, true, models.bias));
            }
            _ => {}
        }
    }
    out
}

/// Where a campaign fault lives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Region {
    /// Oracle wires plus the shared init and measurement sites; locations
    /// are relative to the oracle.
    Oracle,
    /// Wires of one test's own preparation or response stages; locations are
    /// relative to that test's composed circuit.
    Qbist { test: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignFault {
    pub spec: FaultSpec,
    pub region: Region,
}

impl CampaignFault {
    pub fn label(&self, plans: &[TestPlan]) -> String {
        match self.region {
            Region::Oracle => "oracle".into(),
            Region::Qbist { test } => format!("qbist:{}", plans[test].name),
        }
    }
}

impl fmt::Display for CampaignFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)
    }
}

/// Pauli faults on the wires of a test's preparation and response stages.
/// The oracle's own boundaries are excluded.
pub fn qbist_faults(plan: &TestPlan, oracle: &Circuit, models: &FaultModels) -> Vec<FaultSpec> {
    if !models.pauli {
        return Vec::new();
    }
    let start = plan.prep.len();
    let end = start + oracle.len();
    let total = end + plan.post.len();
    let boundaries = (0..start).chain(end + 1..=total);
    let mut out = Vec::new();
    for boundary in boundaries {
        for qubit in 0..plan.width() {
            for &p in &models.pauli_probabilities {
                out.extend(
                    PauliAxis::ALL
                        .iter()
                        .map(|&axis| FaultSpec::pauli(ErrorLocation::Wire { boundary, qubit }, axis, p)),
                );
            }
        }
    }
    out
}
