// SPDX-License-Identifier: Apache-2.0

mod common;

use std::f64::consts::FRAC_1_SQRT_2;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use qtpg::circuit::*;
use qtpg::sim::*;

fn gate_strategy(width: usize) -> impl Strategy<Value = Gate> {
    let single = (0..5usize, 0..width).prop_map(|(kind, q)| match kind {
        0 => Gate::H(q),
        1 => Gate::X(q),
        2 => Gate::Y(q),
        _ => Gate::Z(q),
    });
    let mcx = (0..width, proptest::collection::vec((0..width, any::<bool>()), 0..width)).prop_map(move |(t, cs)| {
        let mut controls: Vec<Control> = Vec::new();
        for (q, pos) in cs {
            if q != t && !controls.iter().any(|c| c.qubit == q) {
                controls.push(if pos { Control::pos(q) } else { Control::neg(q) });
            }
        }
        Gate::mcx(controls, t)
    });
    prop_oneof![single, mcx]
}

fn circuit_strategy() -> impl Strategy<Value = Circuit> {
    (1usize..=4).prop_flat_map(|w| {
        proptest::collection::vec(gate_strategy(w), 0..12).prop_map(move |gs| Circuit::from_gates(w, gs).unwrap())
    })
}

fn random_state(width: usize, raw: &[(f64, f64)]) -> StateVector {
    let amps: Vec<Complex64> = raw
        .iter()
        .take(1 << width)
        .map(|&(r, i)| Complex64::new(r, i))
        .collect();
    let n = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt().max(1e-6);
    StateVector::from_amplitudes(amps.into_iter().map(|a| a / n).collect()).unwrap()
}

fn state_strategy(max_width: usize) -> impl Strategy<Value = StateVector> {
    (1..=max_width).prop_flat_map(|w| {
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << w).prop_map(move |raw| random_state(w, &raw))
    })
}

#[test]
fn oracle_classical_simulation_reproduces_table() {
    for k in 1..=4 {
        let funcs: Box<dyn Iterator<Item = _>> = if k < 4 {
            Box::new(all_functions(k))
        } else {
            Box::new(
                (0..65536u64)
                    .step_by(97)
                    .map(|t| qtpg::boolfn::BooleanFunction::from_table(4, t).unwrap()),
            )
        };
        for f in funcs {
            let c = oracle_for(&f);
            for x in 0..f.size() {
                let out = c.permute_basis((x << 1) | usize::from(c.constant())).unwrap();
                assert_eq!(out >> 1, x);
                assert_eq!(out & 1 == 1, f.value(x));
            }
        }
    }
}

#[test]
fn example_oracle_gate_list_and_locations() {
    let c = oracle_for(&example_function());
    let text = c.to_string();
    let gates: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        gates,
        [
            "MCX t=q4 c=q0+",
            "MCX t=q4 c=q1+",
            "MCX t=q4 c=q2+",
            "MCX t=q4 c=q2+,q3+",
            "MCX t=q4 c=q0+,q1+,q2+",
            "MCX t=q4 c=q0+,q2+,q3+",
            "MCX t=q4 c=q1+,q2+,q3+",
        ]
    );
    assert_eq!(enumerate_error_locations(&c).len(), 50);
}

#[test]
fn oracle_phase_equivalence_all_k4() {
    for k in 1..=4usize {
        let plus = [Complex64::new(FRAC_1_SQRT_2, 0.0); 2];
        let minus = [Complex64::new(FRAC_1_SQRT_2, 0.0), Complex64::new(-FRAC_1_SQRT_2, 0.0)];
        let mut factors = vec![plus; k];
        factors.push(minus);
        let input = StateVector::product(&factors).unwrap();
        for f in all_functions(k) {
            let c = oracle_for(&f);
            let out = apply(&c, &input).unwrap();
            let global = if c.constant() { -1.0 } else { 1.0 };
            for (i, a) in out.amplitudes().iter().enumerate() {
                let x = i >> 1;
                let sign = if f.value(x) { -1.0 } else { 1.0 };
                let want = input.amplitude(i) * sign * global;
                assert!((a - want).norm() < 1e-9);
            }
        }
    }
}

#[test]
fn product_check_agrees_with_purity() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = state_strategy(5);
    for _ in 0..500 {
        let s = strategy.new_tree(&mut runner).unwrap().current();
        assert_eq!(
            is_product(&s).is_some(),
            reference_is_product(&s),
            "{:?}",
            s.amplitudes()
        );
    }
    // random product states
    let factor = ((-1.0f64..1.0), (-1.0f64..1.0), (-1.0f64..1.0), (-1.0f64..1.0));
    for _ in 0..200 {
        let fs: Vec<[Complex64; 2]> = (0..4)
            .map(|_| {
                let (a, b, c, d) = factor.new_tree(&mut runner).unwrap().current();
                let n = (a * a + b * b + c * c + d * d).sqrt().max(1e-3);
                [Complex64::new(a / n, b / n), Complex64::new(c / n, d / n)]
            })
            .collect();
        let s = StateVector::product(&fs).unwrap();
        let got = is_product(&s).expect("product state");
        assert!(reference_is_product(&s));
        let back = StateVector::product(&got).unwrap();
        assert!((back.inner(&s) - 1.0).norm() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn norm_preserved(c in circuit_strategy(), raw in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 16)) {
        let s = random_state(c.width(), &raw);
        let out = apply(&c, &s).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < 1e-9);
    }
}

proptest! {
    #[test]
    fn matches_unitary_reference(c in circuit_strategy(), raw in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 16)) {
        let s = random_state(c.width(), &raw);
        let out = apply(&c, &s).unwrap();
        let want = reference_apply(&c, s.amplitudes());
        for (a, b) in out.amplitudes().iter().zip(&want) {
            prop_assert!((a - b).norm() < 1e-9);
        }
    }

    #[test]
    fn location_count_formula(c in circuit_strategy()) {
        let n = enumerate_error_locations(&c).len();
        prop_assert_eq!(n, c.width() * (c.len() + 1) + 2 * c.width());
    }

    #[test]
    fn census_total(c in circuit_strategy()) {
        prop_assert_eq!(gate_census(&c).total(), c.len());
    }

    #[test]
    fn text_roundtrip(c in circuit_strategy(), cut in 0usize..12) {
        let cut = cut.min(c.len());
        let head = Circuit::from_gates(c.width(), c.gates()[..cut].iter().cloned()).unwrap();
        let tail = Circuit::from_gates(c.width(), c.gates()[cut..].iter().cloned()).unwrap();
        let staged = compose(c.width(), [("a", &head), ("b", &tail)]).unwrap();
        for circuit in [&c, &staged] {
            let text = circuit.to_string();
            let back: Circuit = text.parse().unwrap();
            prop_assert_eq!(&back, circuit);
            prop_assert_eq!(back.to_string(), text);
        }
        prop_assert_eq!(staged.gates(), c.gates());
        for i in 0..c.len() {
            prop_assert_eq!(staged.stage_of(i), Some(if i < cut { "a" } else { "b" }));
        }
    }

    #[test]
    fn hadamard_squared_is_identity(s in state_strategy(3), q in 0usize..3) {
        let q = q % s.width();
        let c = Circuit::from_gates(s.width(), [Gate::H(q), Gate::H(q)]).unwrap();
        let out = apply(&c, &s).unwrap();
        prop_assert!((out.inner(&s) - 1.0).norm() < 1e-9);
    }

    #[test]
    fn double_pauli_restores(c in circuit_strategy(), axis in 0usize..3, b in 0usize..13, q in 0usize..4) {
        let b = b % (c.len() + 1);
        let q = q % c.width();
        let loc = ErrorLocation::Wire { boundary: b, qubit: q };
        let f = FaultSpec::pauli(loc, PauliAxis::ALL[axis], 1.0);
        let input = StateVector::basis(c.width(), 0).unwrap();
        let clean = apply(&c, &input).unwrap();
        let twice = apply_faulty(&c, &input, &[f, f]).unwrap();
        prop_assert_eq!(twice.len(), 1);
        prop_assert!((twice[0].state.fidelity(&clean) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn weights_and_distributions_sum_to_one(
        c in circuit_strategy(),
        p in 0.01f64..1.0,
        bias in 0.0f64..1.0,
        b in 0usize..13,
    ) {
        let w = c.width();
        let faults = [
            FaultSpec::pauli(ErrorLocation::Wire { boundary: b % (c.len() + 1), qubit: 0 }, PauliAxis::Y, p),
            FaultSpec::init_bias(w - 1, bias),
            FaultSpec::measure_bias(0, true, bias),
        ];
        let input = StateVector::basis(w, 0).unwrap();
        let e = apply_faulty(&c, &input, &faults).unwrap();
        prop_assert!((e.iter().map(|b| b.weight).sum::<f64>() - 1.0).abs() < 1e-9);
        let d = measure_distribution(&e, Measurement::Computational, &faults[2..]).unwrap();
        prop_assert!((d.total() - 1.0).abs() < 1e-9);
        if w >= 2 {
            let d = measure_distribution(&e, Measurement::Bell(0, w - 1), &[]).unwrap();
            prop_assert!((d.total() - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn example_phase_vector() {
    let c = oracle_for(&example_function());
    let input = apply(
        &Circuit::from_gates(5, (0..5).map(Gate::H)).unwrap(),
        &prepare(5, "00001").unwrap(),
    )
    .unwrap();
    let out = apply(&c, &input).unwrap();
    let v = phase_vector(&out).unwrap();
    let text: String = v.signs().iter().map(|&s| if s == 1 { '+' } else { '-' }).collect();
    assert_eq!(text, "++-+--++--+++++-");
    assert_eq!(qtpg::boolfn::sign_decode(&v).unwrap(), example_function());
    let identity = apply(&Circuit::new(5).unwrap(), &input).unwrap();
    assert!(phase_vector(&identity).unwrap().signs().iter().all(|&s| s == 1));
}
