// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    /// Open control, active on `|0>`.
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Control {
    pub qubit: usize,
    pub polarity: Polarity,
}

impl Control {
    pub fn pos(qubit: usize) -> Self {
        Self {
            qubit,
            polarity: Polarity::Positive,
        }
    }

    pub fn neg(qubit: usize) -> Self {
        Self {
            qubit,
            polarity: Polarity::Negative,
        }
    }

    /// Value the control qubit must hold for the gate to fire.
    pub fn active_value(&self) -> bool {
        self.polarity == Polarity::Positive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    Mcx { controls: Vec<Control>, target: usize },
    H(usize),
    X(usize),
    Y(usize),
    Z(usize),
}

impl Gate {
    pub fn mcx(controls: Vec<Control>, target: usize) -> Self {
        Gate::Mcx { controls, target }
    }

    pub fn cn(control: Control, target: usize) -> Self {
        Gate::Mcx {
            controls: vec![control],
            target,
        }
    }

    pub fn validate(&self, width: usize) -> Result<()> {
        let check = |q: usize| {
            if q >= width {
                Err(Error::InvalidGate(format!("qubit q{q} outside width {width}")))
            } else {
                Ok(())
            }
        };
        match self {
            Gate::Mcx { controls, target } => {
                check(*target)?;
                for (i, c) in controls.iter().enumerate() {
                    check(c.qubit)?;
                    if c.qubit == *target {
                        return Err(Error::InvalidGate(format!("q{target} is both control and target")));
                    }
                    if controls[..i].iter().any(|d| d.qubit == c.qubit) {
                        return Err(Error::InvalidGate(format!("duplicate control q{}", c.qubit)));
                    }
                }
                Ok(())
            }
            Gate::H(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => check(*q),
        }
    }

    /// Qubit the gate acts on (the target for MCX).
    pub fn target(&self) -> usize {
        match self {
            Gate::Mcx { target, .. } => *target,
            Gate::H(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => *q,
        }
    }

    pub fn controls(&self) -> &[Control] {
        match self {
            Gate::Mcx { controls, .. } => controls,
            _ => &[],
        }
    }

    pub fn is_mcx(&self) -> bool {
        matches!(self, Gate::Mcx { .. })
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H q{q}"),
            Gate::X(q) => write!(f, "X q{q}"),
            Gate::Y(q) => write!(f, "Y q{q}"),
            Gate::Z(q) => write!(f, "Z q{q}"),
            Gate::Mcx { controls, target } => {
                write!(f, "MCX t=q{target} c=")?;
                for (i, c) in controls.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    let sign = if c.active_value() { '+' } else { '-' };
                    write!(f, "q{}{sign}", c.qubit)?;
                }
                Ok(())
            }
        }
    }
}
