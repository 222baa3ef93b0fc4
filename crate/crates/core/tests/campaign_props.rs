// SPDX-License-Identifier: Apache-2.0

mod common;

use common::*;
use proptest::prelude::*;
use qtpg::boolfn::BooleanFunction;
use qtpg::campaign::*;
use qtpg::circuit::{Circuit, ErrorLocation, Gate};
use qtpg::exec::Execution;
use qtpg::sim::{FaultModel, FaultSpec, PauliAxis};
use qtpg::testgen::{gen_standard_suite, Suite, TestPlan};

/// Pass probability of `plan` with a Pauli gate spliced into the composed
/// circuit, from the unitary reference simulator.
fn reference_pass(plan: &TestPlan, oracle: &Circuit, fault: &FaultSpec) -> f64 {
    let composite = to_composite(fault, plan, oracle).unwrap();
    let full = plan.circuit(oracle).unwrap();
    let (ErrorLocation::Wire { boundary, qubit }, FaultModel::Pauli { axis, .. }) =
        (composite.location, composite.model)
    else {
        panic!("wire faults only");
    };
    let mut gates = full.gates().to_vec();
    let pauli = match axis {
        PauliAxis::X => Gate::X(qubit),
        PauliAxis::Y => Gate::Y(qubit),
        PauliAxis::Z => Gate::Z(qubit),
    };
    gates.insert(boundary, pauli);
    let spliced = Circuit::from_gates(full.width(), gates).unwrap();
    let input = qtpg::sim::prepare(full.width(), &plan.init).unwrap();
    let out = reference_apply(&spliced, input.amplitudes());
    let index = usize::from_str_radix(&plan.expected.to_string(), 2).unwrap();
    out[index].norm_sqr()
}

#[test]
fn detection_matches_reference_simulator() {
    for f in all_functions(2).chain([example_function()]) {
        let oracle = oracle_for(&f);
        let plans = gen_standard_suite(&oracle).unwrap();
        for fault in enumerate_single_faults(&oracle, &FaultModels::pauli_only()) {
            for plan in &plans {
                let record = detection_probability(plan, &fault, &oracle).unwrap();
                let want = 1.0 - reference_pass(plan, &oracle, &fault);
                assert!((record.probability - want).abs() < 1e-9, "{} {fault}", plan.name);
            }
        }
    }
}

#[test]
fn fault_counts_for_the_example_oracle() {
    let oracle = oracle_for(&example_function());
    let count = |m: &str| enumerate_single_faults(&oracle, &FaultModels::parse_list(m).unwrap()).len();
    // 5 qubits x 8 boundaries x 3 axes; one bias per input; two stuck values per output
    assert_eq!(count("pauli"), 5 * 8 * 3);
    assert_eq!(count("init"), 5);
    assert_eq!(count("measure"), 10);
    assert_eq!(count("all"), 135);
}

/// Best detection probability of `fault` over the named plans.
fn best(plans: &[TestPlan], names: [&str; 2], fault: &FaultSpec, oracle: &Circuit) -> f64 {
    plans
        .iter()
        .filter(|p| names.contains(&p.name.as_str()))
        .map(|p| detection_probability(p, fault, oracle).unwrap().probability)
        .fold(0.0, f64::max)
}

fn check_completeness(f: &BooleanFunction) {
    let oracle = oracle_for(f);
    let plans = gen_standard_suite(&oracle).unwrap();
    let target = oracle.width() - 1;
    for fault in enumerate_single_faults(&oracle, &FaultModels::pauli_only()) {
        let FaultModel::Pauli { axis, .. } = fault.model else {
            unreachable!()
        };
        if axis.flips_bit() {
            let p = best(&plans, ["T1", "T2"], &fault, &oracle);
            if fault.location.qubit() == target {
                assert!(p > 1e-9, "{fault} unseen by T1/T2 on {f}");
            } else {
                assert!(p > 1.0 - 1e-9, "{fault} caught with {p} by T1/T2 on {f}");
            }
        }
        if axis.flips_phase() {
            let p = best(&plans, ["T5", "T6"], &fault, &oracle);
            assert!(p > 1.0 - 1e-9, "{fault} caught with {p} by T5/T6 on {f}");
        }
    }
}

#[test]
fn single_pauli_faults_caught_for_k2_and_k3() {
    for k in 2..=3 {
        all_functions(k).for_each(|f| check_completeness(&f));
    }
}

#[test]
fn single_pauli_faults_caught_for_sampled_k4() {
    check_completeness(&example_function());
    for t in (0..65536u64).step_by(251) {
        check_completeness(&BooleanFunction::from_table(4, t).unwrap());
    }
}

/// With one input the GHZ stage is a lone Hadamard, so every test holds the
/// input at |+> or |->, where a bit flip ahead of the first gate is a phase.
#[test]
fn single_input_bit_flip_before_first_gate_is_invisible() {
    for f in all_functions(1) {
        let oracle = oracle_for(&f);
        let plans = gen_standard_suite(&oracle).unwrap();
        let fault = FaultSpec::pauli(ErrorLocation::Wire { boundary: 0, qubit: 0 }, PauliAxis::X, 1.0);
        for p in &plans {
            assert!(detection_probability(p, &fault, &oracle).unwrap().probability < 1e-9);
        }
    }
}

#[test]
fn reference_marks_met_for_k2_and_k3() {
    let config = CampaignConfig {
        execution: Execution::Sequential,
        ..Default::default()
    };
    for k in 2..=3 {
        for f in all_functions(k) {
            let oracle = oracle_for(&f);
            let faults = enumerate_single_faults(&oracle, &FaultModels::default());
            let (_, m) = run_suite_campaign(&oracle, Suite::Standard, &faults, &config).unwrap();
            let missed: Vec<String> = m
                .reference_checks()
                .into_iter()
                .filter(|c| !c.met && c.mark == Mark::Full)
                .map(|c| format!("{} {}", c.requirement, c.column))
                .collect();
            assert!(missed.is_empty(), "{f}: {missed:?}");
            for r in [
                Requirement::Initialization,
                Requirement::TargetBasis,
                Requirement::Measurement,
            ] {
                assert_eq!(m.grade(r, "T1∪T2"), Some(Grade::Full), "{r} on {f}");
            }
            let structural = run_suite_campaign(&oracle, Suite::Standard, &[], &config).unwrap().1;
            for r in [
                Requirement::Initialization,
                Requirement::TargetBasis,
                Requirement::Measurement,
            ] {
                assert_eq!(structural.grade(r, "T1∪T2"), Some(Grade::Full), "{r} on {f}");
            }
        }
    }
}

#[test]
fn parallel_and_sequential_agree() {
    let oracle = oracle_for(&example_function());
    let faults = enumerate_single_faults(&oracle, &FaultModels::default());
    let run = |execution| {
        let config = CampaignConfig {
            include_qbist: true,
            execution,
            ..Default::default()
        };
        run_suite_campaign(&oracle, Suite::Alternative, &faults, &config)
            .unwrap()
            .1
    };
    assert_eq!(run(Execution::Sequential), run(Execution::Parallel));
    let plans = gen_standard_suite(&oracle).unwrap();
    let multi = |execution| multi_fault_experiment(&oracle, &plans, 2, 64, 7, execution).unwrap();
    assert_eq!(multi(Execution::Sequential), multi(Execution::Parallel));
}

#[test]
fn empty_fault_list_grades_structure_only() {
    let oracle = oracle_for(&example_function());
    let config = CampaignConfig::default();
    let (_, m) = run_suite_campaign(&oracle, Suite::Standard, &[], &config).unwrap();
    for column in ["T1", "T1∪T2", "T3∪T4"] {
        assert_eq!(m.grade(Requirement::BitFlip, column), Some(Grade::None));
        assert_eq!(m.grade(Requirement::PhaseFlip, column), Some(Grade::None));
    }
    assert_eq!(m.grade(Requirement::ControlActivation, "T1∪T2"), Some(Grade::Full));
    assert_eq!(m.grade(Requirement::Kickback, "T3∪T4"), Some(Grade::Full));
    assert!(m.records.is_empty());
}

#[test]
fn single_fault_experiment_matches_campaign() {
    let oracle = oracle_for(&example_function());
    let plans = gen_standard_suite(&oracle).unwrap();
    let r = multi_fault_experiment(&oracle, &plans, 1, 200, 3, Execution::Parallel).unwrap();
    assert_eq!(r.cancelled, 0);
    assert_eq!(r.detected, 200);
    assert!(multi_fault_experiment(&oracle, &plans, 0, 1, 3, Execution::Parallel).is_err());
}

fn small_function() -> impl Strategy<Value = BooleanFunction> {
    (1usize..=3).prop_flat_map(|k| (0..1u64 << (1 << k)).prop_map(move |t| BooleanFunction::from_table(k, t).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn detection_scales_with_fault_probability(f in small_function(), p in 0.05f64..1.0, pick in any::<prop::sample::Index>()) {
        let oracle = oracle_for(&f);
        let plans = gen_standard_suite(&oracle).unwrap();
        let faults = enumerate_single_faults(&oracle, &FaultModels::pauli_only());
        let full = faults[pick.index(faults.len())];
        let partial = FaultSpec { model: match full.model {
            FaultModel::Pauli { axis, .. } => FaultModel::Pauli { axis, probability: p },
            other => other,
        }, ..full };
        for plan in &plans {
            let a = detection_probability(plan, &full, &oracle).unwrap().probability;
            let b = detection_probability(plan, &partial, &oracle).unwrap().probability;
            prop_assert!((b - p * a).abs() < 1e-9);
        }
    }

    #[test]
    fn multi_fault_runs_are_reproducible(seed in any::<u64>(), n in 1usize..4) {
        let oracle = oracle_for(&example_function());
        let plans = gen_standard_suite(&oracle).unwrap();
        let a = multi_fault_experiment(&oracle, &plans, n, 16, seed, Execution::Parallel).unwrap();
        let b = multi_fault_experiment(&oracle, &plans, n, 16, seed, Execution::Parallel).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.cancelled + a.detected <= a.trials);
        prop_assert!((0.0..=1.0).contains(&a.mean_best_probability));
    }
}
