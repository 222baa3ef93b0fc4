// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::sim::{
    apply, apply_faulty, apply_range, measure_distribution, prepare, FaultSpec, Measurement, Outcome,
    OutcomeDistribution, StateVector,
};
use crate::tolerance::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One experiment: prepare `init`, run `prep`, the oracle and `post`, then
/// measure and compare with `expected`.
#[derive(Debug, Clone, PartialEq)]
pub struct TestPlan {
    pub name: String,
    pub init: String,
    pub prep: Circuit,
    pub post: Circuit,
    pub measurement: Measurement,
    pub expected: Outcome,
    /// State presented to the oracle, for reports.
    pub oracle_input: String,
    /// Sign of the top-register `|+->` factors entering the oracle, when
    /// the test drives the oracle in phase mode.
    pub input_phase: Option<Sign>,
}

/// Fields of a plan before its expected outcome is known.
pub struct PlanDraft {
    pub name: String,
    pub init: String,
    pub prep: Circuit,
    pub post: Circuit,
    pub measurement: Measurement,
    pub oracle_input: String,
    pub input_phase: Option<Sign>,
}

impl PlanDraft {
    /// Fixes the expected outcome by fault-free simulation; fails unless the
    /// outcome is deterministic.
    pub fn finish(self, oracle: &Circuit) -> Result<TestPlan> {
        let mut plan = TestPlan {
            name: self.name,
            init: self.init,
            prep: self.prep,
            post: self.post,
            measurement: self.measurement,
            expected: Outcome::computational(oracle.width(), 0),
            oracle_input: self.oracle_input,
            input_phase: self.input_phase,
        };
        let dist = plan.distribution(oracle, &[])?;
        let (outcome, probability) = dist.most_likely().unwrap_or((plan.expected, 0.0));
        if probability < 1.0 - tolerance() {
            return Err(Error::NonDeterministic {
                name: plan.name,
                probability,
            });
        }
        plan.expected = outcome;
        Ok(plan)
    }
}

impl TestPlan {
    pub fn width(&self) -> usize {
        self.prep.width()
    }

    /// `prep`, oracle and `post` as one circuit with stage labels kept.
    pub fn circuit(&self, oracle: &Circuit) -> Result<Circuit> {
        let mut c = Circuit::new(self.width())?;
        c.append_staged(&self.prep, "prep")?;
        c.append_staged(oracle, "oracle")?;
        c.append_staged(&self.post, "post")?;
        Ok(c)
    }

    pub fn input_state(&self) -> Result<StateVector> {
        prepare(self.width(), &self.init)
    }

    /// State right after the oracle, before any post stage.
    pub fn oracle_output_state(&self, oracle: &Circuit) -> Result<StateVector> {
        let s = apply(&self.prep, &self.input_state()?)?;
        apply(oracle, &s)
    }

    /// State after the first `gates` gates of the composed circuit.
    pub fn state_after(&self, oracle: &Circuit, gates: usize) -> Result<StateVector> {
        let c = self.circuit(oracle)?;
        let mut s = self.input_state()?;
        apply_range(&c, 0..gates.min(c.len()), &mut s)?;
        Ok(s)
    }

    /// Exact outcome distribution with `faults` given in composed-circuit
    /// coordinates.
    pub fn distribution(&self, oracle: &Circuit, faults: &[FaultSpec]) -> Result<OutcomeDistribution> {
        let c = self.circuit(oracle)?;
        let ensemble = apply_faulty(&c, &self.input_state()?, faults)?;
        let measure: Vec<FaultSpec> = faults.iter().filter(|f| f.is_measurement()).copied().collect();
        measure_distribution(&ensemble, self.measurement, &measure)
    }

    /// Fault-free probability of the expected outcome.
    pub fn pass_probability(&self, oracle: &Circuit) -> Result<f64> {
        Ok(self.distribution(oracle, &[])?.probability(&self.expected))
    }

    pub fn to_record(&self) -> PlanRecord {
        PlanRecord {
            name: self.name.clone(),
            init: self.init.clone(),
            prep: self.prep.to_string(),
            post: self.post.to_string(),
            measurement: self.measurement.to_string(),
            expected: self.expected.to_string(),
            input_phase: self.input_phase,
            oracle_input: self.oracle_input.clone(),
        }
    }

    pub fn from_record(r: &PlanRecord) -> Result<Self> {
        let prep: Circuit = r.prep.parse()?;
        let post: Circuit = r.post.parse()?;
        if prep.width() != post.width() || r.init.len() != prep.width() {
            return Err(Error::WidthMismatch {
                expected: prep.width(),
                found: post.width().max(r.init.len()),
            });
        }
        let measurement = r.measurement.parse()?;
        let expected: Outcome = r.expected.parse()?;
        if expected.width != prep.width() {
            return Err(Error::WidthMismatch {
                expected: prep.width(),
                found: expected.width,
            });
        }
        Ok(Self {
            name: r.name.clone(),
            init: r.init.clone(),
            prep,
            post,
            measurement,
            expected,
            oracle_input: r.oracle_input.clone(),
            input_phase: r.input_phase,
        })
    }
}

/// Serialized form of a plan; circuits use the circuit text format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanRecord {
    pub name: String,
    pub init: String,
    pub prep: String,
    pub post: String,
    pub measurement: String,
    pub expected: String,
    pub input_phase: Option<Sign>,
    pub oracle_input: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Standard,
    Alternative,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Standard => "standard",
            Suite::Alternative => "alternative",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Suite::Standard),
            "alternative" => Ok(Suite::Alternative),
            _ => Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        }
    }
}

/// Test-plan file: `{suite, width, plans}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteFile {
    pub suite: Suite,
    pub width: usize,
    pub plans: Vec<PlanRecord>,
}

impl SuiteFile {
    pub fn new(suite: Suite, plans: &[TestPlan]) -> Self {
        Self {
            suite,
            width: plans.first().map_or(0, TestPlan::width),
            plans: plans.iter().map(TestPlan::to_record).collect(),
        }
    }

    pub fn to_plans(&self) -> Result<Vec<TestPlan>> {
        let plans = self
            .plans
            .iter()
            .map(TestPlan::from_record)
            .collect::<Result<Vec<_>>>()?;
        if let Some(p) = plans.iter().find(|p| p.width() != self.width) {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: p.width(),
            });
        }
        Ok(plans)
    }
}
