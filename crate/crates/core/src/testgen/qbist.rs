// SPDX-License-Identifier: Apache-2.0

use crate::boolfn::{bist_residue, BooleanFunction, Literal};
use crate::circuit::{Circuit, Control, Gate};

pub const QBIST32: &str = "QBIST32";

/// Phase-correction stage: one MCX onto the target per residue cube, so the
/// oracle followed by this stage realizes an affine function.
pub fn synthesize_qbist32(f: &BooleanFunction) -> Circuit {
    let k = f.k();
    let residue = bist_residue(f);
    let mut c = Circuit::new(k + 1).expect("k >= 1");
    c.begin_stage(QBIST32).expect("empty circuit");
    for cube in &residue.esop.cubes {
        let controls = cube
            .literals()
            .iter()
            .enumerate()
            .filter_map(|(q, l)| match l {
                Literal::Absent => None,
                Literal::Positive => Some(Control::pos(q)),
                Literal::Negative => Some(Control::neg(q)),
            })
            .collect();
        c.push(Gate::mcx(controls, k)).expect("controls below target");
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_stage() {
        let f = BooleanFunction::from_minterms(4, &[2, 4, 5, 8, 9, 15]).unwrap();
        let c = synthesize_qbist32(&f);
        let text: Vec<String> = c.gates().iter().map(Gate::to_string).collect();
        assert_eq!(text, ["MCX t=q4 c=q0+,q1+,q2+,q3-", "MCX t=q4 c=q0-,q1-,q2+,q3+"]);
        let affine = BooleanFunction::variable(3, 1).unwrap();
        assert!(synthesize_qbist32(&affine).is_empty());
    }
}
