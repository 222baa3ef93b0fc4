// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::apply::{apply_gate, apply_range};
use super::StateVector;
use crate::circuit::{Circuit, ErrorLocation, Gate};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn gate(self, qubit: usize) -> Gate {
        match self {
            PauliAxis::X => Gate::X(qubit),
            PauliAxis::Y => Gate::Y(qubit),
            PauliAxis::Z => Gate::Z(qubit),
        }
    }

    /// Whether the error flips computational basis values.
    pub fn flips_bit(self) -> bool {
        self != PauliAxis::Z
    }

    /// Whether the error flips the sign of `|->`-like components.
    pub fn flips_phase(self) -> bool {
        self != PauliAxis::X
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum FaultModel {
    /// Unwanted Pauli gate on a wire, present with probability `probability`.
    Pauli { axis: PauliAxis, probability: f64 },
    /// Prepares the wrong basis value with probability `bias`.
    InitBias { bias: f64 },
    /// Reads `stuck` with probability `bias` regardless of the state.
    MeasureBias { stuck: bool, bias: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaultSpec {
    pub location: ErrorLocation,
    pub model: FaultModel,
}

impl FaultSpec {
    pub fn pauli(location: ErrorLocation, axis: PauliAxis, probability: f64) -> Self {
        Self {
            location,
            model: FaultModel::Pauli { axis, probability },
        }
    }

    pub fn init_bias(qubit: usize, bias: f64) -> Self {
        Self {
            location: ErrorLocation::Init(qubit),
            model: FaultModel::InitBias { bias },
        }
    }

    pub fn measure_bias(qubit: usize, stuck: bool, bias: f64) -> Self {
        Self {
            location: ErrorLocation::Measure(qubit),
            model: FaultModel::MeasureBias { stuck, bias },
        }
    }

    /// Probability that the fault manifests.
    pub fn weight(&self) -> f64 {
        match self.model {
            FaultModel::Pauli { probability, .. } => probability,
            FaultModel::InitBias { bias } | FaultModel::MeasureBias { bias, .. } => bias,
        }
    }

    pub fn is_measurement(&self) -> bool {
        matches!(self.model, FaultModel::MeasureBias { .. })
    }

    pub fn validate(&self, c: &Circuit) -> Result<()> {
        self.location.validate(c)?;
        let site_ok = matches!(
            (self.location, self.model),
            (ErrorLocation::Wire { .. }, FaultModel::Pauli { .. })
                | (ErrorLocation::Init(_), FaultModel::InitBias { .. })
                | (ErrorLocation::Measure(_), FaultModel::MeasureBias { .. })
        );
        if !site_ok {
            return Err(Error::LocationInvalid(format!("{self}: model does not fit the site")));
        }
        let w = self.weight();
        let range_ok = match self.model {
            FaultModel::Pauli { .. } => w > 0.0 && w <= 1.0,
            _ => (0.0..=1.0).contains(&w),
        };
        if !range_ok {
            return Err(Error::InvalidArgument(format!("{self}: probability {w} out of range")));
        }
        Ok(())
    }

    /// Same fault moved to another location.
    pub fn at(&self, location: ErrorLocation) -> Self {
        Self {
            location,
            model: self.model,
        }
    }
}

/// `X@w3:q1:p=1`, `init@q2:b=0.5`, `stuck1@q0:b=1`.
impl fmt::Display for FaultSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.model, self.location) {
            (FaultModel::Pauli { axis, probability }, ErrorLocation::Wire { boundary, qubit }) => {
                write!(f, "{axis:?}@w{boundary}:q{qubit}:p={probability}")
            }
            (FaultModel::InitBias { bias }, loc) => write!(f, "init@q{}:b={bias}", loc.qubit()),
            (FaultModel::MeasureBias { stuck, bias }, loc) => {
                write!(f, "stuck{}@q{}:b={bias}", u8::from(stuck), loc.qubit())
            }
            (FaultModel::Pauli { axis, probability }, loc) => write!(f, "{axis:?}@{loc}:p={probability}"),
        }
    }
}

impl Serialize for FaultSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FaultSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidArgument(format!("fault {s:?}: {why}"));
        let (kind, rest) = s.trim().split_once('@').ok_or_else(|| bad("expected <kind>@<site>"))?;
        let mut fields = rest.split(':');
        let mut site = fields.next().unwrap_or_default();
        let mut boundary = None;
        if let Some(b) = site.strip_prefix('w') {
            boundary = Some(b.parse::<usize>().map_err(|_| bad("invalid boundary"))?);
            site = fields.next().ok_or_else(|| bad("missing qubit"))?;
        }
        let qubit: usize = site
            .strip_prefix('q')
            .and_then(|q| q.parse().ok())
            .ok_or_else(|| bad("expected q<i>"))?;
        let mut prob = None;
        for field in fields {
            let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let v: f64 = value.parse().map_err(|_| bad("invalid probability"))?;
            if !matches!(key, "p" | "b") {
                return Err(bad("unknown field"));
            }
            prob = Some(v);
        }
        let p = prob.unwrap_or(1.0);
        let spec = match kind {
            "X" | "Y" | "Z" => {
                let axis = match kind {
                    "X" => PauliAxis::X,
                    "Y" => PauliAxis::Y,
                    _ => PauliAxis::Z,
                };
                let boundary = boundary.ok_or_else(|| bad("Pauli faults need a wire site w<b>"))?;
                FaultSpec::pauli(ErrorLocation::Wire { boundary, qubit }, axis, p)
            }
            "init" | "stuck0" | "stuck1" if boundary.is_some() => {
                return Err(bad("init and stuck faults take a bare qubit"))
            }
            "init" => FaultSpec::init_bias(qubit, p),
            "stuck0" => FaultSpec::measure_bias(qubit, false, p),
            "stuck1" => FaultSpec::measure_bias(qubit, true, p),
            _ => return Err(bad("kind must be X, Y, Z, init, stuck0 or stuck1")),
        };
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub weight: f64,
    pub state: StateVector,
}

pub type Ensemble = Vec<Branch>;

/// Runs `c` on `input` once for every combination of firing state faults.
///
/// Each branch carries the product of the fired faults' probabilities and
/// the complements of the rest. Zero-weight branches are dropped.
/// Measurement faults are ignored here; see `measure_distribution`.
pub fn apply_faulty(c: &Circuit, input: &StateVector, faults: &[FaultSpec]) -> Result<Ensemble> {
    if c.width() != input.width() {
        return Err(Error::WidthMismatch {
            expected: c.width(),
            found: input.width(),
        });
    }
    for f in faults {
        f.validate(c)?;
    }
    let active: Vec<&FaultSpec> = faults.iter().filter(|f| !f.is_measurement()).collect();
    if active.len() > 20 {
        return Err(Error::InvalidArgument(format!(
            "{} simultaneous state faults exceed the branch limit of 20",
            active.len()
        )));
    }
    let mut out = Vec::new();
    for subset in 0u32..1 << active.len() {
        let weight: f64 = active
            .iter()
            .enumerate()
            .map(|(i, f)| {
                if subset >> i & 1 == 1 {
                    f.weight()
                } else {
                    1.0 - f.weight()
                }
            })
            .product();
        if weight == 0.0 {
            continue;
        }
        let fired: Vec<&FaultSpec> = active
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, f)| *f)
            .collect();
        out.push(Branch {
            weight,
            state: run_with(c, input, &fired)?,
        });
    }
    Ok(out)
}

fn run_with(c: &Circuit, input: &StateVector, fired: &[&FaultSpec]) -> Result<StateVector> {
    let mut s = input.clone();
    for f in fired {
        if let ErrorLocation::Init(q) = f.location {
            apply_gate(&Gate::X(q), &mut s);
        }
    }
    let mut wire: Vec<(usize, Gate)> = fired
        .iter()
        .filter_map(|f| match (f.location, f.model) {
            (ErrorLocation::Wire { boundary, qubit }, FaultModel::Pauli { axis, .. }) => {
                Some((boundary, axis.gate(qubit)))
            }
            _ => None,
        })
        .collect();
    wire.sort_by_key(|(b, _)| *b);
    let mut next = 0;
    for (boundary, gate) in wire {
        apply_range(c, next..boundary, &mut s)?;
        apply_gate(&gate, &mut s);
        next = boundary;
    }
    apply_range(c, next..c.len(), &mut s)?;
    Ok(s)
}
