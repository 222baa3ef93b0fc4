// SPDX-License-Identifier: Apache-2.0

use crate::circuit::{Circuit, Control, Gate};
use crate::error::{Error, Result};

/// Entangling stage for `|a>^k` and its inverse, on a `k + 1` register.
///
/// A Hadamard on `pivot` followed by a CN chain outward. Controls are
/// positive for `a = 0` and open for `a = 1`, so that
/// `|a..a> -> (|0..0> + (-1)^a |1..1>)/sqrt2`.
pub fn gen_ghz_stage(k: usize, a: bool, pivot: usize) -> Result<(Circuit, Circuit)> {
    if pivot >= k {
        return Err(Error::InvalidArgument(format!("pivot q{pivot} outside 0..{k}")));
    }
    let control = |q| if a { Control::neg(q) } else { Control::pos(q) };
    let mut prep = Circuit::new(k + 1)?;
    prep.push(Gate::H(pivot))?;
    for i in pivot + 1..k {
        prep.push(Gate::cn(control(i - 1), i))?;
    }
    for i in (0..pivot).rev() {
        prep.push(Gate::cn(control(i + 1), i))?;
    }
    let unprep = prep.inverse();
    Ok((prep, unprep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{apply, prepare};
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn ghz_states() {
        for (a, init, sign) in [(false, "00000", 1.0), (true, "11111", -1.0)] {
            for pivot in 0..4 {
                let (prep, unprep) = gen_ghz_stage(4, a, pivot).unwrap();
                let s = apply(&prep, &prepare(5, init).unwrap()).unwrap();
                let t = if a { 1 } else { 0 };
                assert!((s.amplitude(t).re - FRAC_1_SQRT_2).abs() < 1e-12);
                assert!((s.amplitude(0b11110 | t).re - sign * FRAC_1_SQRT_2).abs() < 1e-12);
                for i in 0..32 {
                    let b = crate::sim::StateVector::basis(5, i).unwrap();
                    let back = apply(&unprep, &apply(&prep, &b).unwrap()).unwrap();
                    assert!((back.fidelity(&b) - 1.0).abs() < 1e-12);
                }
            }
        }
        assert!(gen_ghz_stage(3, false, 3).is_err());
    }
}
