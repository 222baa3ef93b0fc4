// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Range;

use num_complex::Complex64;

use super::StateVector;
use crate::circuit::{controls_active, qubit_bit, Circuit, Gate};
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn apply_gate(gate: &Gate, s: &mut StateVector) {
    let width = s.width();
    let bit = qubit_bit(width, gate.target());
    let amps = s.amplitudes_mut();
    for i in 0..amps.len() {
        if i & bit != 0 {
            continue;
        }
        let j = i | bit;
        match gate {
            Gate::X(_) => amps.swap(i, j),
            // i|0><1| - i|1><0|
            Gate::Y(_) => {
                let (a0, a1) = (amps[i], amps[j]);
                amps[i] = I * a1;
                amps[j] = -I * a0;
            }
            Gate::Z(_) => amps[j] = -amps[j],
            Gate::H(_) => {
                let (a0, a1) = (amps[i], amps[j]);
                amps[i] = (a0 + a1) * FRAC_1_SQRT_2;
                amps[j] = (a0 - a1) * FRAC_1_SQRT_2;
            }
            Gate::Mcx { controls, .. } => {
                if controls_active(width, controls, i) {
                    amps.swap(i, j);
                }
            }
        }
    }
}

/// Applies gates `range` of `c`.
pub fn apply_range(c: &Circuit, range: Range<usize>, s: &mut StateVector) -> Result<()> {
    if c.width() != s.width() {
        return Err(Error::WidthMismatch {
            expected: c.width(),
            found: s.width(),
        });
    }
    for g in &c.gates()[range] {
        apply_gate(g, s);
    }
    Ok(())
}

pub fn apply(c: &Circuit, s: &StateVector) -> Result<StateVector> {
    let mut out = s.clone();
    apply_range(c, 0..c.len(), &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Control;
    use crate::sim::prepare;

    #[test]
    fn pauli_conventions() {
        let one = prepare(1, "1").unwrap();
        let y = apply(&Circuit::from_gates(1, [Gate::Y(0)]).unwrap(), &one).unwrap();
        assert!((y.amplitude(0) - I).norm() < 1e-12);
        let zero = prepare(1, "0").unwrap();
        let y = apply(&Circuit::from_gates(1, [Gate::Y(0)]).unwrap(), &zero).unwrap();
        assert!((y.amplitude(1) + I).norm() < 1e-12);
    }

    #[test]
    fn open_controls() {
        let c = Circuit::from_gates(2, [Gate::cn(Control::neg(0), 1)]).unwrap();
        let s = apply(&c, &prepare(2, "00").unwrap()).unwrap();
        assert_eq!(s, prepare(2, "01").unwrap());
        let s = apply(&c, &prepare(2, "10").unwrap()).unwrap();
        assert_eq!(s, prepare(2, "10").unwrap());
    }

    #[test]
    fn width_mismatch() {
        let c = Circuit::new(3).unwrap();
        assert!(matches!(
            apply(&c, &prepare(2, "00").unwrap()),
            Err(Error::WidthMismatch { .. })
        ));
    }
}
