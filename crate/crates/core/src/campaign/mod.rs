// SPDX-License-Identifier: Apache-2.0

//! Fault campaigns: single-fault detection, requirement coverage,
//! complexity accounting and multi-fault experiments.

mod complexity;
mod detect;
mod faults;
mod matrix;
mod multi;
mod report;

pub use complexity::{complexity_report, ComplexityReport, ExperimentCounts, FormulaCheck, StageCensus};
pub use detect::{detect_composite, detection_probability, to_composite, DetectionRecord};
pub use faults::{enumerate_single_faults, qbist_faults, CampaignFault, FaultModels, Region};
pub use matrix::{
    columns_for, reference_table, requirement_rollup, Cell, Column, CoverageMatrix, Grade, Mark, ReferenceCheck,
    Requirement,
};
pub use multi::{multi_fault_experiment, MultiFaultReport};
pub use report::{campaign_report, CampaignReport};

use crate::circuit::{check_oracle_shape, Circuit};
use crate::error::Result;
use crate::exec::{self, Execution};
use crate::sim::FaultSpec;
use crate::testgen::{gen_suite, Suite, TestPlan};

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    /// Also inject faults into each test's own preparation and response
    /// stages; they count only toward columns containing that test.
    pub include_qbist: bool,
    pub qbist_models: FaultModels,
    pub execution: Execution,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            include_qbist: false,
            qbist_models: FaultModels::pauli_only(),
            execution: Execution::default(),
        }
    }
}

/// Evaluates every oracle-relative fault under every plan and rolls the
/// results up into the coverage matrix.
pub fn run_campaign(
    oracle: &Circuit,
    suite: Suite,
    plans: &[TestPlan],
    faults: &[FaultSpec],
    config: &CampaignConfig,
) -> Result<CoverageMatrix> {
    check_oracle_shape(oracle)?;
    for f in faults {
        f.validate(oracle)?;
    }
    let mut all: Vec<CampaignFault> = faults
        .iter()
        .map(|&spec| CampaignFault {
            spec,
            region: Region::Oracle,
        })
        .collect();
    if config.include_qbist {
        for (test, plan) in plans.iter().enumerate() {
            all.extend(
                qbist_faults(plan, oracle, &config.qbist_models)
                    .into_iter()
                    .map(|spec| CampaignFault {
                        spec,
                        region: Region::Qbist { test },
                    }),
            );
        }
    }
    let jobs: Vec<(usize, usize)> = (0..plans.len())
        .flat_map(|t| (0..all.len()).map(move |f| (t, f)))
        .filter(|&(t, f)| match all[f].region {
            Region::Oracle => true,
            Region::Qbist { test } => test == t,
        })
        .collect();
    let records = exec::map(config.execution, &jobs, |&(t, f)| {
        let fault = &all[f];
        let record = match fault.region {
            Region::Oracle => detection_probability(&plans[t], &fault.spec, oracle)?,
            Region::Qbist { .. } => detect_composite(&plans[t], oracle, &fault.spec, &fault.label(plans))?,
        };
        Ok((t, f, record))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    requirement_rollup(suite, plans, oracle, &all, records)
}

/// Generates `suite` for the oracle and runs the campaign on it.
pub fn run_suite_campaign(
    oracle: &Circuit,
    suite: Suite,
    faults: &[FaultSpec],
    config: &CampaignConfig,
) -> Result<(Vec<TestPlan>, CoverageMatrix)> {
    let plans = gen_suite(oracle, suite)?;
    let matrix = run_campaign(oracle, suite, &plans, faults, config)?;
    Ok((plans, matrix))
}
