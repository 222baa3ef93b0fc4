// SPDX-License-Identifier: Apache-2.0

//! Gate-level circuit representation.
//!
//! Qubits `0..k` carry `x1..xk` and qubit `k` is the oracle target. In basis
//! indices qubit 0 is the most significant bit.

mod gate;
mod oracle;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use serde::Serialize;

pub use gate::{Control, Gate, Polarity};
pub use oracle::{build_oracle, check_oracle_shape, oracle_function};

use crate::error::{Error, Result};

/// Bit of `qubit` inside a basis index of a `width`-qubit register.
#[inline]
pub fn qubit_bit(width: usize, qubit: usize) -> usize {
    1 << (width - 1 - qubit)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stage {
    pub label: String,
    pub start: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
    stages: Vec<Stage>,
    constant: bool,
}

pub struct StageView<'a> {
    pub label: &'a str,
    pub start: usize,
    pub range: Range<usize>,
}

impl Circuit {
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidArgument("circuit width must be positive".into()));
        }
        Ok(Self {
            width,
            gates: Vec::new(),
            stages: Vec::new(),
            constant: false,
        })
    }

    pub fn from_gates(width: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut c = Self::new(width)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Constant term of the realized function; it never becomes a gate.
    pub fn constant(&self) -> bool {
        self.constant
    }

    pub fn set_constant(&mut self, constant: bool) {
        self.constant = constant;
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Opens a stage at the current end of the gate list. Stages must cover
    /// every gate, so the first one has to precede the first gate.
    pub fn begin_stage(&mut self, label: impl Into<String>) -> Result<()> {
        if self.stages.is_empty() && !self.gates.is_empty() {
            return Err(Error::InvalidArgument(
                "the first stage must start before any gate".into(),
            ));
        }
        self.stages.push(Stage {
            label: label.into(),
            start: self.gates.len(),
        });
        Ok(())
    }

    pub fn stages(&self) -> impl Iterator<Item = StageView<'_>> + '_ {
        self.stages.iter().enumerate().map(move |(i, s)| {
            let end = self.stages.get(i + 1).map_or(self.gates.len(), |n| n.start);
            StageView {
                label: &s.label,
                start: s.start,
                range: s.start..end,
            }
        })
    }

    pub fn stage_of(&self, gate: usize) -> Option<&str> {
        if gate >= self.gates.len() {
            return None;
        }
        self.stages()
            .filter(|s| s.range.contains(&gate))
            .last()
            .map(|s| s.label)
    }

    /// Appends `other`, keeping its stages or opening `label` when it has none.
    pub fn append_staged(&mut self, other: &Circuit, label: &str) -> Result<()> {
        if other.width != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        let offset = self.gates.len();
        if other.stages.is_empty() {
            self.begin_stage(label)?;
        } else if self.stages.is_empty() && offset > 0 {
            return Err(Error::InvalidArgument(
                "the first stage must start before any gate".into(),
            ));
        }
        self.stages.extend(other.stages.iter().map(|s| Stage {
            label: s.label.clone(),
            start: s.start + offset,
        }));
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    /// Permutes a basis index; `None` if the circuit contains a Hadamard.
    /// Phases from `Y` and `Z` are dropped.
    pub fn permute_basis(&self, mut index: usize) -> Option<usize> {
        for g in &self.gates {
            match g {
                Gate::H(_) => return None,
                Gate::Z(_) => {}
                Gate::X(q) | Gate::Y(q) => index ^= qubit_bit(self.width, *q),
                Gate::Mcx { controls, target } => {
                    if controls_active(self.width, controls, index) {
                        index ^= qubit_bit(self.width, *target);
                    }
                }
            }
        }
        Some(index)
    }

    pub fn inverse(&self) -> Circuit {
        let mut out = Circuit::new(self.width).expect("width already validated");
        out.gates = self.gates.iter().rev().cloned().collect();
        out.constant = self.constant;
        out
    }
}

pub(crate) fn controls_active(width: usize, controls: &[Control], index: usize) -> bool {
    controls
        .iter()
        .all(|c| (index & qubit_bit(width, c.qubit) != 0) == c.active_value())
}

/// Concatenates labelled parts into one circuit with one stage per part.
pub fn compose<'a>(width: usize, parts: impl IntoIterator<Item = (&'a str, &'a Circuit)>) -> Result<Circuit> {
    let mut out = Circuit::new(width)?;
    for (label, c) in parts {
        if c.width != width {
            return Err(Error::WidthMismatch {
                expected: width,
                found: c.width,
            });
        }
        out.begin_stage(label)?;
        out.gates.extend(c.gates.iter().cloned());
        out.constant ^= c.constant;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ErrorLocation {
    /// Wire of `qubit` just before gate `boundary` (after the last gate when
    /// `boundary == len`).
    Wire {
        boundary: usize,
        qubit: usize,
    },
    Init(usize),
    Measure(usize),
}

impl ErrorLocation {
    pub fn qubit(&self) -> usize {
        match *self {
            ErrorLocation::Wire { qubit, .. } | ErrorLocation::Init(qubit) | ErrorLocation::Measure(qubit) => qubit,
        }
    }

    pub fn validate(&self, c: &Circuit) -> Result<()> {
        if self.qubit() >= c.width() {
            return Err(Error::LocationInvalid(format!(
                "{self}: qubit outside width {}",
                c.width()
            )));
        }
        if let ErrorLocation::Wire { boundary, .. } = self {
            if *boundary > c.len() {
                return Err(Error::LocationInvalid(format!(
                    "{self}: boundary beyond {} gates",
                    c.len()
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ErrorLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorLocation::Wire { boundary, qubit } => write!(f, "w{boundary}:q{qubit}"),
            ErrorLocation::Init(q) => write!(f, "init:q{q}"),
            ErrorLocation::Measure(q) => write!(f, "meas:q{q}"),
        }
    }
}

impl Serialize for ErrorLocation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Init sites, then wire sites boundary by boundary, then measurement sites.
pub fn enumerate_error_locations(c: &Circuit) -> Vec<ErrorLocation> {
    let w = c.width();
    let mut out: Vec<ErrorLocation> = (0..w).map(ErrorLocation::Init).collect();
    for boundary in 0..=c.len() {
        out.extend((0..w).map(|qubit| ErrorLocation::Wire { boundary, qubit }));
    }
    out.extend((0..w).map(ErrorLocation::Measure));
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GateCensus {
    pub h: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// Single-control NOT gates.
    pub cn: usize,
    /// Remaining MCX gates keyed by control count.
    pub mcx: BTreeMap<usize, usize>,
    /// Controls of any gate with open polarity.
    pub open_controls: usize,
}

impl GateCensus {
    pub fn total(&self) -> usize {
        self.h + self.x + self.y + self.z + self.cn + self.mcx.values().sum::<usize>()
    }

    pub fn add(&mut self, other: &GateCensus) {
        self.h += other.h;
        self.x += other.x;
        self.y += other.y;
        self.z += other.z;
        self.cn += other.cn;
        self.open_controls += other.open_controls;
        for (k, v) in &other.mcx {
            *self.mcx.entry(*k).or_default() += v;
        }
    }

    pub fn mcx_total(&self) -> usize {
        self.cn + self.mcx.values().sum::<usize>()
    }
}

impl fmt::Display for GateCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (n, name) in [
            (self.cn, "CN"),
            (self.h, "H"),
            (self.x, "X"),
            (self.y, "Y"),
            (self.z, "Z"),
        ] {
            if n > 0 {
                parts.push(format!("{n}{name}"));
            }
        }
        for (arity, n) in &self.mcx {
            parts.push(format!("{n}MCX{arity}"));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join("+"))
    }
}

pub fn gate_census(c: &Circuit) -> GateCensus {
    let mut out = GateCensus::default();
    for g in c.gates() {
        match g {
            Gate::H(_) => out.h += 1,
            Gate::X(_) => out.x += 1,
            Gate::Y(_) => out.y += 1,
            Gate::Z(_) => out.z += 1,
            Gate::Mcx { controls, .. } => {
                out.open_controls += controls.iter().filter(|c| !c.active_value()).count();
                if controls.len() == 1 {
                    out.cn += 1;
                } else {
                    *out.mcx.entry(controls.len()).or_default() += 1;
                }
            }
        }
    }
    out
}
