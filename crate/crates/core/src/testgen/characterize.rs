// SPDX-License-Identifier: Apache-2.0

//! The twelve characteristic actions of a single MCX gate: four classical
//! basis cases and eight phase-kickback cases.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::Serialize;

use super::plan::Sign;
use crate::circuit::{qubit_bit, Circuit, Control, Gate};
use crate::error::{Error, Result};
use crate::sim::{apply_faulty, FaultSpec, StateVector};
use crate::tolerance::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseKind {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub kind: CaseKind,
    pub input: String,
    pub expected: String,
    /// Ensemble-averaged overlap with the expected state.
    pub fidelity: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterizationReport {
    pub gate: String,
    pub cases: Vec<CaseResult>,
}

impl CharacterizationReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.cases.len()
    }
}

struct Case {
    name: String,
    kind: CaseKind,
    input: String,
    expected: String,
    input_state: StateVector,
    expected_state: StateVector,
}

fn basis_label(width: usize, index: usize) -> String {
    format!("|{index:0width$b}>")
}

/// Basis index with each control at its active or inactive value.
fn control_pattern(width: usize, controls: &[Control], active: &[bool]) -> usize {
    controls
        .iter()
        .zip(active)
        .filter(|(c, on)| c.active_value() == **on)
        .fold(0, |acc, (c, _)| acc | qubit_bit(width, c.qubit))
}

fn superposition(width: usize, terms: &[(usize, Complex64)]) -> StateVector {
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
    for (i, a) in terms {
        amps[*i] += a;
    }
    StateVector::from_amplitudes(amps).expect("power-of-two length")
}

fn cases(gate: &Gate, width: usize) -> Vec<Case> {
    let controls = gate.controls();
    let n = controls.len();
    let tbit = qubit_bit(width, gate.target());
    let off = control_pattern(width, controls, &vec![false; n]);
    let on = control_pattern(width, controls, &vec![true; n]);
    let mut out = Vec::with_capacity(12);

    for (i, (active, target)) in [(false, true), (false, false), (true, true), (true, false)]
        .into_iter()
        .enumerate()
    {
        let input = if active { on } else { off } | if target { tbit } else { 0 };
        let output = if active { input ^ tbit } else { input };
        out.push(Case {
            name: format!("v{i}"),
            kind: CaseKind::Classical,
            input: basis_label(width, input),
            expected: basis_label(width, output),
            input_state: StateVector::basis(width, input).expect("width checked"),
            expected_state: StateVector::basis(width, output).expect("width checked"),
        });
    }

    // the non-activating minterm differs from the activating one in the
    // last control only
    let mut near = vec![true; n];
    near[n - 1] = false;
    let false_minterm = control_pattern(width, controls, &near);
    let h = FRAC_1_SQRT_2;
    for (case, target_sign) in [(1, Sign::Minus), (2, Sign::Plus)] {
        for (activating, minterm) in [(true, on), (false, false_minterm)] {
            for w_sign in [Sign::Plus, Sign::Minus] {
                let reference = if off != minterm { off } else { on };
                let w = match w_sign {
                    Sign::Plus => Complex64::new(0.0, 1.0),
                    Sign::Minus => Complex64::new(0.0, -1.0),
                };
                let t = match target_sign {
                    Sign::Plus => 1.0,
                    Sign::Minus => -1.0,
                };
                // kickback: -1 on every activating component when the target is |->
                let kick = |x: usize| {
                    if target_sign == Sign::Minus && x == on {
                        -1.0
                    } else {
                        1.0
                    }
                };
                let amps = |r: f64, m: Complex64| {
                    vec![
                        (reference, Complex64::new(r * h * h, 0.0)),
                        (reference | tbit, Complex64::new(r * t * h * h, 0.0)),
                        (minterm, m * h * h),
                        (minterm | tbit, m * t * h * h),
                    ]
                };
                let input_state = superposition(width, &amps(1.0, w));
                let expected_state = superposition(width, &amps(kick(reference), w * kick(minterm)));
                let kind = if activating { "act" } else { "non" };
                let tname = if target_sign == Sign::Minus { "|->" } else { "|+>" };
                out.push(Case {
                    name: format!("case{case}-{kind}-w{}", w_sign.symbol()),
                    kind: CaseKind::Quantum,
                    input: format!(
                        "({}+{}i{})/sqrt2 (x) {tname}",
                        basis_label(width, reference),
                        if w_sign == Sign::Plus { "" } else { "-" },
                        basis_label(width, minterm),
                    ),
                    expected: format!(
                        "kickback {}",
                        if target_sign == Sign::Minus && activating {
                            "-1"
                        } else {
                            "none"
                        }
                    ),
                    input_state,
                    expected_state,
                });
            }
        }
    }
    out
}

/// Runs the twelve cases of `reference` against `device`, optionally with
/// injected faults. Measurement faults do not apply here.
pub fn characterize_device(reference: &Gate, device: &Circuit, faults: &[FaultSpec]) -> Result<CharacterizationReport> {
    if reference.controls().is_empty() {
        return Err(Error::InvalidGate(format!(
            "{reference}: characterization needs at least one control"
        )));
    }
    let width = device.width();
    reference.validate(width)?;
    let tol = tolerance();
    let results = cases(reference, width)
        .into_iter()
        .map(|case| {
            let ensemble = apply_faulty(device, &case.input_state, faults)?;
            let fidelity: f64 = ensemble
                .iter()
                .map(|b| b.weight * case.expected_state.fidelity(&b.state))
                .sum();
            Ok(CaseResult {
                name: case.name,
                kind: case.kind,
                input: case.input,
                expected: case.expected,
                fidelity,
                passed: fidelity >= 1.0 - tol,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterizationReport {
        gate: reference.to_string(),
        cases: results,
    })
}

/// Characterizes an ideal MCX on the smallest register holding its qubits.
pub fn characterize_gate(gate: &Gate) -> Result<CharacterizationReport> {
    if !gate.is_mcx() {
        return Err(Error::InvalidGate(format!(
            "{gate}: only MCX gates can be characterized"
        )));
    }
    let width = gate
        .controls()
        .iter()
        .map(|c| c.qubit)
        .chain([gate.target()])
        .max()
        .unwrap_or(0)
        + 1;
    let device = Circuit::from_gates(width, [gate.clone()])?;
    characterize_device(gate, &device, &[])
}
