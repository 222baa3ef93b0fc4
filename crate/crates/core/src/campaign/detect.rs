// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::circuit::{Circuit, ErrorLocation};
use crate::error::{Error, Result};
use crate::sim::FaultSpec;
use crate::testgen::TestPlan;
use crate::tolerance::tolerance;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetectionRecord {
    pub test: String,
    pub fault: FaultSpec,
    pub region: String,
    /// Probability that the measured outcome differs from the expected one.
    pub probability: f64,
    /// Probability that the fault is present at all.
    pub placement: f64,
    /// Detected whenever present.
    pub deterministic: bool,
}

/// Moves an oracle-relative fault into the test's composed circuit.
pub fn to_composite(fault: &FaultSpec, plan: &TestPlan, oracle: &Circuit) -> Result<FaultSpec> {
    fault.validate(oracle)?;
    if plan.width() != oracle.width() {
        return Err(Error::WidthMismatch {
            expected: plan.width(),
            found: oracle.width(),
        });
    }
    Ok(match fault.location {
        ErrorLocation::Wire { boundary, qubit } => fault.at(ErrorLocation::Wire {
            boundary: plan.prep.len() + boundary,
            qubit,
        }),
        _ => *fault,
    })
}

/// Exact detection probability of a fault given in composed-circuit
/// coordinates.
pub fn detect_composite(plan: &TestPlan, oracle: &Circuit, fault: &FaultSpec, region: &str) -> Result<DetectionRecord> {
    let dist = plan.distribution(oracle, std::slice::from_ref(fault))?;
    let probability = (1.0 - dist.probability(&plan.expected)).clamp(0.0, 1.0);
    let placement = fault.weight();
    Ok(DetectionRecord {
        test: plan.name.clone(),
        fault: *fault,
        region: region.into(),
        probability,
        placement,
        deterministic: placement > 0.0 && probability >= placement - tolerance(),
    })
}

/// Exact detection probability of an oracle-relative fault under `plan`.
pub fn detection_probability(plan: &TestPlan, fault: &FaultSpec, oracle: &Circuit) -> Result<DetectionRecord> {
    let composite = to_composite(fault, plan, oracle)?;
    let mut record = detect_composite(plan, oracle, &composite, "oracle")?;
    record.fault = *fault;
    Ok(record)
}
