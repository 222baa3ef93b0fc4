// SPDX-License-Identifier: Apache-2.0

use indexmap::IndexMap;
use serde::Serialize;

use super::complexity::{ComplexityReport, ExperimentCounts, FormulaCheck, StageCensus};
use super::detect::DetectionRecord;
use super::matrix::{CoverageMatrix, Grade, ReferenceCheck};
use crate::circuit::GateCensus;
use crate::testgen::Suite;

#[derive(Debug, Clone, Serialize)]
pub struct CensusSection {
    pub k: usize,
    pub oracle: GateCensus,
    pub stages: Vec<StageCensus>,
    pub checks: Vec<FormulaCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixSection {
    pub suite: Suite,
    pub columns: Vec<String>,
    pub rows: IndexMap<String, IndexMap<String, Grade>>,
    /// `witnessed/total` obligations per cell.
    pub support: IndexMap<String, IndexMap<String, String>>,
    pub reference: Vec<ReferenceCheck>,
    pub meets_reference: bool,
}

/// JSON report with sections `census`, `experiments`, `matrix`, `records`.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub census: CensusSection,
    pub experiments: ExperimentCounts,
    pub matrix: MatrixSection,
    pub records: Vec<DetectionRecord>,
}

pub fn campaign_report(matrix: &CoverageMatrix, complexity: &ComplexityReport) -> CampaignReport {
    let mut rows = IndexMap::new();
    let mut support = IndexMap::new();
    for (r, row) in &matrix.cells {
        rows.insert(
            r.to_string(),
            row.iter().map(|(c, cell)| (c.clone(), cell.grade)).collect(),
        );
        support.insert(
            r.to_string(),
            row.iter()
                .map(|(c, cell)| (c.clone(), format!("{}/{}", cell.witnessed, cell.total)))
                .collect(),
        );
    }
    CampaignReport {
        census: CensusSection {
            k: complexity.k,
            oracle: complexity.oracle.clone(),
            stages: complexity.stages.clone(),
            checks: complexity.checks.clone(),
        },
        experiments: complexity.experiments.clone(),
        matrix: MatrixSection {
            suite: matrix.suite,
            columns: matrix.columns.iter().map(|c| c.name.clone()).collect(),
            rows,
            support,
            reference: matrix.reference_checks(),
            meets_reference: matrix.meets_reference(),
        },
        records: matrix.records.clone(),
    }
}
