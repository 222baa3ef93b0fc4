// SPDX-License-Identifier: Apache-2.0

use super::{Circuit, Control, Gate};
use crate::boolfn::{BooleanFunction, PprmExpansion};
use crate::error::{Error, Result};

/// One positive-control MCX per product term onto qubit `k`, in term order.
pub fn build_oracle(p: &PprmExpansion) -> Circuit {
    let k = p.k;
    let mut c = Circuit::new(k + 1).expect("k >= 1");
    c.set_constant(p.constant);
    for (i, &mask) in p.terms.iter().enumerate() {
        c.begin_stage(format!("p{i}")).expect("stages opened before gates");
        let controls = p.variables(mask).into_iter().map(Control::pos).collect();
        c.push(Gate::mcx(controls, k)).expect("controls below target");
    }
    c
}

/// Every gate must be an X or MCX onto the last qubit without using it as a
/// control.
pub fn check_oracle_shape(c: &Circuit) -> Result<()> {
    if c.width() < 2 {
        return Err(Error::NonOracleCircuit("width must be at least 2".into()));
    }
    let target = c.width() - 1;
    for (i, g) in c.gates().iter().enumerate() {
        match g {
            Gate::X(q) | Gate::Mcx { target: q, .. } if *q == target => {}
            _ => {
                return Err(Error::NonOracleCircuit(format!(
                    "gate {i} ({g}) does not act on the target q{target} as a controlled NOT"
                )))
            }
        }
    }
    Ok(())
}

/// Reads back `f` classically: the target flip on input `x`, plus the constant.
pub fn oracle_function(c: &Circuit) -> Result<BooleanFunction> {
    check_oracle_shape(c)?;
    let k = c.width() - 1;
    BooleanFunction::from_fn(k, |x| {
        let out = c.permute_basis(x << 1).expect("oracle circuits have no H");
        (out & 1 == 1) ^ c.constant()
    })
}
