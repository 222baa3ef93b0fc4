// SPDX-License-Identifier: Apache-2.0

//! Requirement coverage: which tests witness which obligations.
//!
//! Every requirement is a set of obligations. Fault-based requirements
//! need each mapped fault detected whenever present; structural ones need
//! each gate or qubit exercised in a specific way. A column grades `full`
//! when its tests jointly witness every obligation.

use std::collections::HashSet;
use std::fmt;

use indexmap::IndexMap;
use serde::Serialize;

use super::detect::DetectionRecord;
use super::faults::{CampaignFault, Region};
use crate::circuit::{controls_active, Circuit, Control, Gate};
use crate::error::Result;
use crate::sim::{apply, apply_gate, FaultModel, PauliAxis, StateVector};
use crate::testgen::{Sign, Suite, TestPlan};
use crate::tolerance::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Requirement {
    BitFlip,
    PhaseFlip,
    Initialization,
    Kickback,
    PhaseInvariance,
    ControlActivation,
    TargetBasis,
    Measurement,
}

impl Requirement {
    pub const ALL: [Requirement; 8] = [
        Requirement::BitFlip,
        Requirement::PhaseFlip,
        Requirement::Initialization,
        Requirement::Kickback,
        Requirement::PhaseInvariance,
        Requirement::ControlActivation,
        Requirement::TargetBasis,
        Requirement::Measurement,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn title(self) -> &'static str {
        match self {
            Requirement::BitFlip => "bit flips detectable",
            Requirement::PhaseFlip => "phase flips detectable",
            Requirement::Initialization => "every qubit initialized to 0 and 1",
            Requirement::Kickback => "kickback with target |->",
            Requirement::PhaseInvariance => "no phase change with target |+>",
            Requirement::ControlActivation => "controls activated and deactivated per target value",
            Requirement::TargetBasis => "target acts on both basis states",
            Requirement::Measurement => "every qubit measured as 0 and 1",
        }
    }

    fn fault_based(self) -> bool {
        matches!(self, Requirement::BitFlip | Requirement::PhaseFlip)
    }
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.number())
    }
}

impl Serialize for Requirement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grade {
    None,
    Partial,
    Full,
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grade::None => "none",
            Grade::Partial => "partial",
            Grade::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub grade: Grade,
    pub witnessed: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Column {
    pub name: String,
    #[serde(skip)]
    pub tests: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Obligation {
    Fault(usize),
    Init { qubit: usize, value: bool },
    Measure { qubit: usize, value: bool },
    Phase { gate: usize, activating: bool, sign: Sign },
    Activation { gate: usize, target: bool },
    NonActivating { gate: usize, control: usize, target: bool },
}

/// Single tests in plan order, then the pairwise unions, then one union of
/// all walking-pair tests.
pub fn columns_for(plans: &[TestPlan]) -> Vec<Column> {
    let index = |name: &str| plans.iter().position(|p| p.name == name);
    let mut out: Vec<Column> = plans
        .iter()
        .enumerate()
        .map(|(i, p)| Column {
            name: p.name.clone(),
            tests: vec![i],
        })
        .collect();
    for (a, b) in [("T1", "T2"), ("T3", "T4"), ("T5", "T6")] {
        if let (Some(i), Some(j)) = (index(a), index(b)) {
            out.push(Column {
                name: format!("{a}∪{b}"),
                tests: vec![i, j],
            });
        }
    }
    let alt: Vec<usize> = (0..plans.len())
        .filter(|&i| plans[i].name.starts_with("ALT-"))
        .collect();
    if !alt.is_empty() {
        out.push(Column {
            name: "∪ALT".into(),
            tests: alt,
        });
    }
    out
}

/// `×` and `○` marks of the reference coverage table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mark {
    Full,
    Partial,
}

pub fn reference_table() -> Vec<(Requirement, &'static str, Mark)> {
    use Mark::*;
    use Requirement::*;
    let mut out = Vec::new();
    let mut add = |r: Requirement, mark: Mark, cols: &[&'static str]| {
        out.extend(cols.iter().map(|c| (r, *c, mark)));
    };
    add(BitFlip, Full, &["T1", "T2", "T1∪T2"]);
    add(PhaseFlip, Full, &["T5", "T6", "T5∪T6"]);
    add(PhaseFlip, Partial, &["T2", "T3", "T4", "T1∪T2", "T3∪T4"]);
    add(Initialization, Full, &["T1∪T2", "T3∪T4"]);
    add(Initialization, Partial, &["T1", "T2", "T5", "T6"]);
    add(Kickback, Full, &["T3∪T4"]);
    add(Kickback, Partial, &["T3", "T4"]);
    add(PhaseInvariance, Full, &["T5∪T6"]);
    add(PhaseInvariance, Partial, &["T5", "T6"]);
    for r in [ControlActivation, TargetBasis, Measurement] {
        add(r, Full, &["T1∪T2"]);
        add(r, Partial, &["T1", "T2"]);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceCheck {
    pub requirement: Requirement,
    pub column: String,
    pub mark: Mark,
    pub grade: Grade,
    pub met: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageMatrix {
    pub suite: Suite,
    pub columns: Vec<Column>,
    pub cells: IndexMap<Requirement, IndexMap<String, Cell>>,
    pub records: Vec<DetectionRecord>,
}

impl CoverageMatrix {
    pub fn cell(&self, r: Requirement, column: &str) -> Option<Cell> {
        self.cells.get(&r)?.get(column).copied()
    }

    pub fn grade(&self, r: Requirement, column: &str) -> Option<Grade> {
        self.cell(r, column).map(|c| c.grade)
    }

    /// Reference cells whose column exists in this matrix.
    pub fn reference_checks(&self) -> Vec<ReferenceCheck> {
        reference_table()
            .into_iter()
            .filter_map(|(requirement, column, mark)| {
                let grade = self.grade(requirement, column)?;
                let met = match mark {
                    Mark::Full => grade == Grade::Full,
                    Mark::Partial => grade >= Grade::Partial,
                };
                Some(ReferenceCheck {
                    requirement,
                    column: column.into(),
                    mark,
                    grade,
                    met,
                })
            })
            .collect()
    }

    /// True when every `×` cell present is full.
    pub fn meets_reference(&self) -> bool {
        self.reference_checks().iter().all(|c| c.met || c.mark == Mark::Partial)
    }
}

struct Witnesses {
    universe: Vec<(Requirement, Obligation, Option<usize>)>,
    seen: Vec<IndexMap<Requirement, HashSet<Obligation>>>,
}

impl Witnesses {
    fn mark(&mut self, test: usize, r: Requirement, o: Obligation) {
        self.seen[test].entry(r).or_default().insert(o);
    }
}

fn fault_requirements(model: &FaultModel) -> &'static [Requirement] {
    match model {
        FaultModel::Pauli { axis: PauliAxis::X, .. } => &[Requirement::BitFlip],
        FaultModel::Pauli { axis: PauliAxis::Y, .. } => &[Requirement::BitFlip, Requirement::PhaseFlip],
        FaultModel::Pauli { axis: PauliAxis::Z, .. } => &[Requirement::PhaseFlip],
        FaultModel::InitBias { .. } => &[Requirement::Initialization],
        FaultModel::MeasureBias { .. } => &[Requirement::Measurement],
    }
}

fn oracle_controls(gate: &Gate) -> &[Control] {
    gate.controls()
}

/// Gate-level obligations witnessed by one test, traced through the oracle.
fn trace_plan(w: &mut Witnesses, test: usize, plan: &TestPlan, oracle: &Circuit) -> Result<()> {
    let tol = tolerance();
    let width = oracle.width();
    let mut s: StateVector = apply(&plan.prep, &plan.input_state()?)?;
    for (g, gate) in oracle.gates().iter().enumerate() {
        let controls = oracle_controls(gate);
        let amps = s.amplitudes();
        let active = |i: usize| controls_active(width, controls, i);

        if let Some(sign) = plan.input_phase {
            let minus = (0..amps.len())
                .step_by(2)
                .all(|i| (amps[i + 1] + amps[i]).norm() <= tol);
            let plus = (0..amps.len())
                .step_by(2)
                .all(|i| (amps[i + 1] - amps[i]).norm() <= tol);
            if minus || plus {
                let mut after = s.clone();
                apply_gate(gate, &mut after);
                let verified = after.amplitudes().iter().enumerate().all(|(i, a)| {
                    let kicked = if minus && active(i & !1) { -amps[i] } else { amps[i] };
                    (a - kicked).norm() <= tol
                });
                if verified {
                    let r = if minus {
                        Requirement::Kickback
                    } else {
                        Requirement::PhaseInvariance
                    };
                    let weight = |want: bool| -> f64 {
                        (0..amps.len())
                            .filter(|&i| active(i & !1) == want)
                            .map(|i| amps[i].norm_sqr())
                            .sum()
                    };
                    for activating in [true, false] {
                        if weight(activating) > tol {
                            w.mark(
                                test,
                                r,
                                Obligation::Phase {
                                    gate: g,
                                    activating,
                                    sign,
                                },
                            );
                        }
                    }
                }
            }
        }

        let definite = (0..amps.len())
            .step_by(2)
            .all(|i| amps[i].norm_sqr() <= tol || amps[i + 1].norm_sqr() <= tol);
        if definite {
            for i in (0..amps.len()).step_by(2) {
                for (t, a) in [(false, amps[i]), (true, amps[i + 1])] {
                    if a.norm_sqr() <= tol {
                        continue;
                    }
                    if active(i) {
                        w.mark(
                            test,
                            Requirement::ControlActivation,
                            Obligation::Activation { gate: g, target: t },
                        );
                        w.mark(
                            test,
                            Requirement::TargetBasis,
                            Obligation::Activation { gate: g, target: t },
                        );
                    }
                    for c in controls.iter().filter(|c| !controls_active(width, &[**c], i)) {
                        w.mark(
                            test,
                            Requirement::ControlActivation,
                            Obligation::NonActivating {
                                gate: g,
                                control: c.qubit,
                                target: t,
                            },
                        );
                    }
                }
            }
        }
        apply_gate(gate, &mut s);
    }
    Ok(())
}

/// Builds the coverage matrix from detection records and gate traces.
/// `records` pairs each record with its test and campaign-fault index.
pub fn requirement_rollup(
    suite: Suite,
    plans: &[TestPlan],
    oracle: &Circuit,
    faults: &[CampaignFault],
    records: Vec<(usize, usize, DetectionRecord)>,
) -> Result<CoverageMatrix> {
    let width = oracle.width();
    let mut w = Witnesses {
        universe: Vec::new(),
        seen: vec![IndexMap::new(); plans.len()],
    };

    let has_init = faults
        .iter()
        .any(|f| matches!(f.spec.model, FaultModel::InitBias { .. }));
    let has_measure = faults
        .iter()
        .any(|f| matches!(f.spec.model, FaultModel::MeasureBias { .. }));
    for (i, f) in faults.iter().enumerate() {
        let owner = match f.region {
            Region::Oracle => None,
            Region::Qbist { test } => Some(test),
        };
        for &r in fault_requirements(&f.spec.model) {
            w.universe.push((r, Obligation::Fault(i), owner));
        }
    }
    for qubit in 0..width {
        for value in [false, true] {
            if !has_init {
                w.universe
                    .push((Requirement::Initialization, Obligation::Init { qubit, value }, None));
            }
            if !has_measure {
                w.universe
                    .push((Requirement::Measurement, Obligation::Measure { qubit, value }, None));
            }
        }
    }
    for (g, gate) in oracle.gates().iter().enumerate() {
        let controls = oracle_controls(gate);
        for sign in [Sign::Plus, Sign::Minus] {
            for activating in [true, false] {
                if activating || !controls.is_empty() {
                    for r in [Requirement::Kickback, Requirement::PhaseInvariance] {
                        w.universe.push((
                            r,
                            Obligation::Phase {
                                gate: g,
                                activating,
                                sign,
                            },
                            None,
                        ));
                    }
                }
            }
        }
        for target in [false, true] {
            w.universe.push((
                Requirement::ControlActivation,
                Obligation::Activation { gate: g, target },
                None,
            ));
            w.universe.push((
                Requirement::TargetBasis,
                Obligation::Activation { gate: g, target },
                None,
            ));
            for c in controls {
                w.universe.push((
                    Requirement::ControlActivation,
                    Obligation::NonActivating {
                        gate: g,
                        control: c.qubit,
                        target,
                    },
                    None,
                ));
            }
        }
    }

    for (test, fault, record) in &records {
        if record.deterministic {
            for &r in fault_requirements(&faults[*fault].spec.model) {
                w.mark(*test, r, Obligation::Fault(*fault));
            }
        }
    }
    for (test, plan) in plans.iter().enumerate() {
        for qubit in 0..width {
            if !has_init {
                let value = plan.init.as_bytes()[qubit] == b'1';
                w.mark(test, Requirement::Initialization, Obligation::Init { qubit, value });
            }
            if !has_measure {
                let value = plan.expected.bit(qubit);
                w.mark(test, Requirement::Measurement, Obligation::Measure { qubit, value });
            }
        }
        trace_plan(&mut w, test, plan, oracle)?;
    }

    let columns = columns_for(plans);
    let mut cells = IndexMap::new();
    for r in Requirement::ALL {
        let mut row = IndexMap::new();
        for col in &columns {
            let universe: HashSet<Obligation> = w
                .universe
                .iter()
                .filter(|(req, _, owner)| *req == r && owner.is_none_or(|t| col.tests.contains(&t)))
                .map(|(_, o, _)| *o)
                .collect();
            let mut seen: HashSet<Obligation> = HashSet::new();
            for t in &col.tests {
                if let Some(set) = w.seen[*t].get(&r) {
                    seen.extend(set.intersection(&universe));
                }
            }
            let total = universe.len();
            let witnessed = seen.len();
            let grade = if total == 0 {
                if r.fault_based() {
                    Grade::None
                } else {
                    Grade::Full
                }
            } else if witnessed == total {
                Grade::Full
            } else if witnessed > 0 {
                Grade::Partial
            } else {
                Grade::None
            };
            row.insert(
                col.name.clone(),
                Cell {
                    grade,
                    witnessed,
                    total,
                },
            );
        }
        cells.insert(r, row);
    }
    let records = records.into_iter().map(|(_, _, r)| r).collect();
    Ok(CoverageMatrix {
        suite,
        columns,
        cells,
        records,
    })
}
