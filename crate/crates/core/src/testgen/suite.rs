// SPDX-License-Identifier: Apache-2.0

use super::ghz::gen_ghz_stage;
use super::plan::{PlanDraft, Sign, Suite, TestPlan};
use super::qbist::synthesize_qbist32;
use crate::boolfn::BooleanFunction;
use crate::circuit::{check_oracle_shape, oracle_function, Circuit, Control, Gate};
use crate::error::{Error, Result};
use crate::sim::Measurement;

fn staged(width: usize, label: &str, gates: impl IntoIterator<Item = Gate>) -> Result<Circuit> {
    let mut c = Circuit::new(width)?;
    c.begin_stage(label)?;
    for g in gates {
        c.push(g)?;
    }
    Ok(c)
}

fn h_layer(width: usize) -> impl Iterator<Item = Gate> {
    (0..width).map(Gate::H)
}

fn repeat(bit: bool, n: usize) -> String {
    (if bit { "1" } else { "0" }).repeat(n)
}

fn oracle_k(oracle: &Circuit) -> Result<usize> {
    check_oracle_shape(oracle)?;
    Ok(oracle.width() - 1)
}

/// GHZ tests: every gate switched on and off at once.
///
/// A CN from the last input onto the target follows the oracle whenever the
/// oracle leaves different target values on `0..0` and `1..1`; it removes
/// the target's entanglement with the GHZ register.
pub fn gen_t1_t2(oracle: &Circuit) -> Result<[TestPlan; 2]> {
    let k = oracle_k(oracle)?;
    let target_after = |x: usize| oracle.permute_basis(x << 1).expect("oracle shape checked") & 1;
    let parity_fix = target_after(0) != target_after((1 << k) - 1);
    let ones = repeat(true, k);
    let zeros = repeat(false, k);
    let plan = |name: &str, a: bool, input: String| -> Result<TestPlan> {
        let (ghz, unghz) = gen_ghz_stage(k, a, 0)?;
        let n = &name[1..];
        let prep = staged(k + 1, &format!("QBIST{n}1"), ghz.gates().iter().cloned())?;
        let fix = parity_fix.then(|| Gate::cn(Control::pos(k - 1), k));
        let post = staged(
            k + 1,
            &format!("QBIST{n}2"),
            fix.into_iter().chain(unghz.gates().iter().cloned()),
        )?;
        PlanDraft {
            name: name.into(),
            init: repeat(a, k + 1),
            prep,
            post,
            measurement: Measurement::Computational,
            oracle_input: input,
            input_phase: None,
        }
        .finish(oracle)
    };
    Ok([
        plan("T1", false, format!("(|{zeros}>+|{ones}>)|0>"))?,
        plan("T2", true, format!("(|{zeros}>-|{ones}>)|1>"))?,
    ])
}

/// Hadamard-wrapped tests with the target at `|+>`: the oracle must not
/// change any relative phase.
pub fn gen_t5_t6(oracle: &Circuit) -> Result<[TestPlan; 2]> {
    let k = oracle_k(oracle)?;
    let plan = |name: &str, a: bool, sign: Sign| -> Result<TestPlan> {
        let n = &name[1..];
        PlanDraft {
            name: name.into(),
            init: format!("{}0", repeat(a, k)),
            prep: staged(k + 1, &format!("QBIST{n}1"), h_layer(k + 1))?,
            post: staged(k + 1, &format!("QBIST{n}2"), h_layer(k + 1))?,
            measurement: Measurement::Computational,
            oracle_input: format!("|{}>^{k}|+>", sign.symbol()),
            input_phase: Some(sign),
        }
        .finish(oracle)
    };
    Ok([plan("T5", false, Sign::Plus)?, plan("T6", true, Sign::Minus)?])
}

/// Phase-kickback tests with the target at `|->`, followed by the synthesized
/// correction stage that makes the response a product state.
pub fn gen_t3_t4(oracle: &Circuit, f: &BooleanFunction) -> Result<[TestPlan; 2]> {
    let k = oracle_k(oracle)?;
    if oracle_function(oracle)? != *f {
        return Err(Error::InvalidArgument("function does not match the oracle".into()));
    }
    let qbist = synthesize_qbist32(f);
    let plan = |name: &str, a: bool, sign: Sign| -> Result<TestPlan> {
        let n = &name[1..];
        let mut post = qbist.clone();
        post.append_staged(&staged(k + 1, &format!("QBIST{n}3"), h_layer(k + 1))?, "")?;
        PlanDraft {
            name: name.into(),
            init: format!("{}1", repeat(a, k)),
            prep: staged(k + 1, &format!("QBIST{n}1"), h_layer(k + 1))?,
            post,
            measurement: Measurement::Computational,
            oracle_input: format!("|{}>^{k}|->", sign.symbol()),
            input_phase: Some(sign),
        }
        .finish(oracle)
    };
    Ok([plan("T3", false, Sign::Plus)?, plan("T4", true, Sign::Minus)?])
}

/// T1 through T6.
pub fn gen_standard_suite(oracle: &Circuit) -> Result<Vec<TestPlan>> {
    let f = oracle_function(oracle)?;
    let [t1, t2] = gen_t1_t2(oracle)?;
    let [t3, t4] = gen_t3_t4(oracle, &f)?;
    let [t5, t6] = gen_t5_t6(oracle)?;
    Ok(vec![t1, t2, t3, t4, t5, t6])
}

/// Adjacent pairs covering every input, the last one shifted left for odd `k`.
pub fn pair_positions(k: usize) -> Vec<(usize, usize)> {
    (0..k.div_ceil(2))
        .map(|i| {
            if 2 * i + 1 < k {
                (2 * i, 2 * i + 1)
            } else {
                (k - 2, k - 1)
            }
        })
        .collect()
}

pub fn alternative_suite_size(k: usize) -> usize {
    5 + 4 * k.div_ceil(2)
}

/// T1, T2, T5, T6, a T1 repeat with the target at `|->`, and the walking
/// entangled pair tests measured in the Bell basis.
pub fn gen_alternative_suite(oracle: &Circuit) -> Result<Vec<TestPlan>> {
    let k = oracle_k(oracle)?;
    if k < 2 {
        return Err(Error::InvalidArgument("the alternative suite needs k >= 2".into()));
    }
    let [t1, t2] = gen_t1_t2(oracle)?;
    let [t5, t6] = gen_t5_t6(oracle)?;
    let mut plans = vec![t1, t2, t5, t6];

    let (ghz, unghz) = gen_ghz_stage(k, false, 0)?;
    plans.push(
        PlanDraft {
            name: "ALT-0".into(),
            init: format!("{}1", repeat(false, k)),
            prep: staged(k + 1, "prep", ghz.gates().iter().cloned().chain([Gate::H(k)]))?,
            post: staged(
                k + 1,
                "post",
                std::iter::once(Gate::H(k)).chain(unghz.gates().iter().cloned()),
            )?,
            measurement: Measurement::Computational,
            oracle_input: format!("(|{}>+|{}>)|->", repeat(false, k), repeat(true, k)),
            input_phase: None,
        }
        .finish(oracle)?,
    );

    for (a, b) in pair_positions(k) {
        for sign in [Sign::Plus, Sign::Minus] {
            // either pair member may carry the |+-> control
            for (control, partner) in [(a, b), (b, a)] {
                let mut init: Vec<u8> = vec![b'1'; k + 1];
                init[control] = if sign == Sign::Plus { b'0' } else { b'1' };
                let init = String::from_utf8(init).expect("ascii");
                let name = format!("ALT-{}", plans.len() - 4);
                plans.push(
                    PlanDraft {
                        name,
                        init,
                        prep: staged(
                            k + 1,
                            "prep",
                            [Gate::H(control), Gate::cn(Control::pos(control), partner), Gate::H(k)],
                        )?,
                        post: staged(k + 1, "post", [Gate::H(k)])?,
                        measurement: Measurement::Bell(a, b),
                        oracle_input: format!(
                            "(|01>{s}|10>) on q{a},q{b}, |1> elsewhere, |-> target",
                            s = sign.symbol()
                        ),
                        input_phase: Some(sign),
                    }
                    .finish(oracle)?,
                );
            }
        }
    }
    Ok(plans)
}

pub fn gen_suite(oracle: &Circuit, suite: Suite) -> Result<Vec<TestPlan>> {
    match suite {
        Suite::Standard => gen_standard_suite(oracle),
        Suite::Alternative => gen_alternative_suite(oracle),
    }
}
