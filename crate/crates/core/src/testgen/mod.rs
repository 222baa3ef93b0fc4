// SPDX-License-Identifier: Apache-2.0

//! Test generation: the six-test suite, the walking-pair alternative suite
//! and single-gate characterization.

mod characterize;
mod ghz;
mod plan;
mod qbist;
mod suite;

pub use characterize::{characterize_device, characterize_gate, CaseKind, CaseResult, CharacterizationReport};
pub use ghz::gen_ghz_stage;
pub use plan::{PlanDraft, PlanRecord, Sign, Suite, SuiteFile, TestPlan};
pub use qbist::{synthesize_qbist32, QBIST32};
pub use suite::{
    alternative_suite_size, gen_alternative_suite, gen_standard_suite, gen_suite, gen_t1_t2, gen_t3_t4, gen_t5_t6,
    pair_positions,
};
