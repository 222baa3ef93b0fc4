// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{Branch, FaultModel, FaultSpec, StateVector};
use crate::circuit::{qubit_bit, ErrorLocation};
use crate::error::{Error, Result};

/// Probabilities below this are treated as numerical noise and dropped.
const NOISE: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measurement {
    Computational,
    /// Bell-basis measurement of a qubit pair, computational elsewhere.
    Bell(usize, usize),
}

impl fmt::Display for Measurement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measurement::Computational => f.write_str("computational"),
            Measurement::Bell(a, b) => write!(f, "bell:q{a},q{b}"),
        }
    }
}

impl FromStr for Measurement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "computational" {
            return Ok(Measurement::Computational);
        }
        let pair = s
            .strip_prefix("bell:")
            .and_then(|p| p.split_once(','))
            .and_then(|(a, b)| Some((a.strip_prefix('q')?.parse().ok()?, b.strip_prefix('q')?.parse().ok()?)));
        match pair {
            Some((a, b)) if a != b => Ok(Measurement::Bell(a, b)),
            _ => Err(Error::InvalidArgument(format!("invalid measurement {s:?}"))),
        }
    }
}

impl Serialize for Measurement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    /// `(phase, parity)` bits reported at the pair positions.
    pub fn bits(self) -> (bool, bool) {
        match self {
            BellState::PhiPlus => (false, false),
            BellState::PhiMinus => (true, false),
            BellState::PsiPlus => (false, true),
            BellState::PsiMinus => (true, true),
        }
    }

    pub fn from_bits(phase: bool, parity: bool) -> Self {
        match (phase, parity) {
            (false, false) => BellState::PhiPlus,
            (true, false) => BellState::PhiMinus,
            (false, true) => BellState::PsiPlus,
            (true, true) => BellState::PsiMinus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BellState::PhiPlus => "phi+",
            BellState::PhiMinus => "phi-",
            BellState::PsiPlus => "psi+",
            BellState::PsiMinus => "psi-",
        }
    }
}

/// One measurement record. For Bell measurements the pair positions hold
/// the decoded phase and parity bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome {
    pub bits: usize,
    pub width: usize,
    pub bell: Option<(usize, usize)>,
}

impl Outcome {
    pub fn computational(width: usize, bits: usize) -> Self {
        Self {
            bits,
            width,
            bell: None,
        }
    }

    pub fn bit(&self, qubit: usize) -> bool {
        self.bits & qubit_bit(self.width, qubit) != 0
    }

    pub fn with_bit(mut self, qubit: usize, value: bool) -> Self {
        let b = qubit_bit(self.width, qubit);
        if value {
            self.bits |= b;
        } else {
            self.bits &= !b;
        }
        self
    }

    pub fn bell_state(&self) -> Option<BellState> {
        self.bell.map(|(a, b)| BellState::from_bits(self.bit(a), self.bit(b)))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(state) = self.bell_state() {
            write!(f, "{}:", state.label())?;
        }
        for q in 0..self.width {
            let c = match self.bell {
                Some((a, b)) if q == a || q == b => '*',
                _ if self.bit(q) => '1',
                _ => '0',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Outcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Outcome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("invalid outcome {s:?}"));
        let (state, bits) = match s.split_once(':') {
            Some((label, bits)) => {
                let state = [
                    BellState::PhiPlus,
                    BellState::PhiMinus,
                    BellState::PsiPlus,
                    BellState::PsiMinus,
                ]
                .into_iter()
                .find(|b| b.label() == label)
                .ok_or_else(bad)?;
                (Some(state), bits)
            }
            None => (None, s),
        };
        let width = bits.len();
        let mut out = Outcome::computational(width, 0);
        let mut pair = Vec::new();
        for (q, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => out = out.with_bit(q, true),
                '*' => pair.push(q),
                _ => return Err(bad()),
            }
        }
        match (state, pair.as_slice()) {
            (None, []) if width > 0 => Ok(out),
            (Some(st), &[a, b]) => {
                let (phase, parity) = st.bits();
                out.bell = Some((a, b));
                Ok(out.with_bit(a, phase).with_bit(b, parity))
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutcomeDistribution {
    entries: BTreeMap<Outcome, f64>,
}

impl OutcomeDistribution {
    pub fn add(&mut self, outcome: Outcome, p: f64) {
        if p > NOISE {
            *self.entries.entry(outcome).or_default() += p;
        }
    }

    pub fn probability(&self, outcome: &Outcome) -> f64 {
        self.entries.get(outcome).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Outcome, f64)> {
        self.entries.iter().map(|(o, p)| (o, *p))
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn most_likely(&self) -> Option<(Outcome, f64)> {
        self.entries
            .iter()
            .max_by(|a, b| a.1.total_cmp(b.1).then(b.0.cmp(a.0)))
            .map(|(o, p)| (*o, *p))
    }

    fn scaled_into(&self, weight: f64, into: &mut OutcomeDistribution) {
        for (o, p) in &self.entries {
            into.add(*o, p * weight);
        }
    }

    fn stuck(&self, qubit: usize, value: bool, bias: f64) -> OutcomeDistribution {
        let mut out = OutcomeDistribution::default();
        for (o, p) in &self.entries {
            out.add(*o, p * (1.0 - bias));
            out.add(o.with_bit(qubit, value), p * bias);
        }
        out
    }
}

fn computational(s: &StateVector) -> OutcomeDistribution {
    let mut out = OutcomeDistribution::default();
    for (i, a) in s.amplitudes().iter().enumerate() {
        out.add(Outcome::computational(s.width(), i), a.norm_sqr());
    }
    out
}

/// Projects the pair onto the Bell basis and the rest onto the computational basis.
pub fn bell_measure(s: &StateVector, pair: (usize, usize)) -> Result<OutcomeDistribution> {
    let (a, b) = pair;
    let w = s.width();
    if a == b || a >= w || b >= w {
        return Err(Error::InvalidArgument(format!(
            "invalid Bell pair ({a}, {b}) for width {w}"
        )));
    }
    let (ba, bb) = (qubit_bit(w, a), qubit_bit(w, b));
    let amps = s.amplitudes();
    let mut out = OutcomeDistribution::default();
    for rest in (0..1usize << w).filter(|i| i & (ba | bb) == 0) {
        let (a00, a01, a10, a11) = (amps[rest], amps[rest | bb], amps[rest | ba], amps[rest | ba | bb]);
        for (state, amp) in [
            (BellState::PhiPlus, a00 + a11),
            (BellState::PhiMinus, a00 - a11),
            (BellState::PsiPlus, a01 + a10),
            (BellState::PsiMinus, a01 - a10),
        ] {
            let (phase, parity) = state.bits();
            let o = Outcome {
                bits: rest,
                width: w,
                bell: Some(pair),
            }
            .with_bit(a, phase)
            .with_bit(b, parity);
            out.add(o, (amp * FRAC_1_SQRT_2).norm_sqr());
        }
    }
    Ok(out)
}

/// Mixture of the branches' Born distributions, then measurement faults.
pub fn measure_distribution(
    ensemble: &[Branch],
    measurement: Measurement,
    measure_faults: &[FaultSpec],
) -> Result<OutcomeDistribution> {
    let mut out = OutcomeDistribution::default();
    for branch in ensemble {
        let d = match measurement {
            Measurement::Computational => computational(&branch.state),
            Measurement::Bell(a, b) => bell_measure(&branch.state, (a, b))?,
        };
        d.scaled_into(branch.weight, &mut out);
    }
    for f in measure_faults {
        if let (ErrorLocation::Measure(q), FaultModel::MeasureBias { stuck, bias }) = (f.location, f.model) {
            if let Some(w) = ensemble.first().map(|b| b.state.width()) {
                if q >= w {
                    return Err(Error::LocationInvalid(format!("{f}: qubit outside width {w}")));
                }
            }
            out = out.stuck(q, stuck, bias);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Circuit, Control, Gate};
    use crate::sim::{apply, prepare};

    fn pure(s: StateVector) -> Vec<Branch> {
        vec![Branch { weight: 1.0, state: s }]
    }

    #[test]
    fn stuck_readout() {
        let d = measure_distribution(
            &pure(prepare(5, "00000").unwrap()),
            Measurement::Computational,
            &[FaultSpec::measure_bias(0, true, 1.0)],
        )
        .unwrap();
        assert_eq!(d.probability(&"10000".parse().unwrap()), 1.0);
    }

    #[test]
    fn uniform_pair() {
        let c = Circuit::from_gates(2, [Gate::H(0), Gate::H(1)]).unwrap();
        let s = apply(&c, &prepare(2, "00").unwrap()).unwrap();
        let d = measure_distribution(&pure(s), Measurement::Computational, &[]).unwrap();
        assert_eq!(d.len(), 4);
        for (_, p) in d.iter() {
            assert!((p - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn bell_outcomes() {
        // (|01> + |10>)/sqrt2 on the pair, |1> on the third qubit
        let c = Circuit::from_gates(3, [Gate::H(0), Gate::cn(Control::pos(0), 1), Gate::X(1), Gate::X(2)]).unwrap();
        let s = apply(&c, &prepare(3, "000").unwrap()).unwrap();
        let d = bell_measure(&s, (0, 1)).unwrap();
        let (o, p) = d.most_likely().unwrap();
        assert!((p - 1.0).abs() < 1e-12);
        assert_eq!(o.to_string(), "psi+:**1");
        assert_eq!(o.to_string().parse::<Outcome>().unwrap(), o);
        let d = bell_measure(&prepare(2, "00").unwrap(), (0, 1)).unwrap();
        assert_eq!(d.len(), 2);
        assert!((d.probability(&"phi+:**".parse().unwrap()) - 0.5).abs() < 1e-12);
        assert!((d.probability(&"phi-:**".parse().unwrap()) - 0.5).abs() < 1e-12);
        assert!(bell_measure(&s, (1, 1)).is_err());
    }

    #[test]
    fn outcome_parsing() {
        assert!("".parse::<Outcome>().is_err());
        assert!("phi+:1*1".parse::<Outcome>().is_err());
        assert!("01x".parse::<Outcome>().is_err());
        assert_eq!("0101".parse::<Outcome>().unwrap().bits, 5);
    }
}
