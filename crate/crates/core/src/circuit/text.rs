// SPDX-License-Identifier: Apache-2.0

//! Line-oriented circuit text format.
//!
//! ```text
//! # width: 5
//! # constant: 1
//! # stage: p0
//! MCX t=q4 c=q0+
//! H q4
//! ```

use std::fmt;
use std::str::FromStr;

use super::gate::{Control, Gate, Polarity};
use super::Circuit;
use crate::error::{Error, Result};

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# width: {}", self.width())?;
        if self.constant() {
            writeln!(f, "# constant: 1")?;
        }
        let mut stages = self.stages().peekable();
        for (i, gate) in self.gates().iter().enumerate() {
            while let Some(s) = stages.next_if(|s| s.start == i) {
                writeln!(f, "# stage: {}", s.label)?;
            }
            writeln!(f, "{gate}")?;
        }
        for s in stages {
            writeln!(f, "# stage: {}", s.label)?;
        }
        Ok(())
    }
}

fn parse_qubit(token: &str, line: usize) -> Result<usize> {
    token
        .strip_prefix('q')
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected qubit like q3, got {token:?}")))
}

fn parse_gate(text: &str, line: usize) -> Result<Gate> {
    let mut parts = text.split_whitespace();
    let op = parts.next().unwrap_or_default();
    let gate = match op {
        "H" | "X" | "Y" | "Z" => {
            let q = parse_qubit(parts.next().ok_or_else(|| Error::parse(line, "missing qubit"))?, line)?;
            match op {
                "H" => Gate::H(q),
                "X" => Gate::X(q),
                "Y" => Gate::Y(q),
                _ => Gate::Z(q),
            }
        }
        "MCX" => {
            let t = parts
                .next()
                .and_then(|s| s.strip_prefix("t="))
                .ok_or_else(|| Error::parse(line, "expected t=q<i>"))?;
            let target = parse_qubit(t, line)?;
            let c = parts
                .next()
                .and_then(|s| s.strip_prefix("c="))
                .ok_or_else(|| Error::parse(line, "expected c=<controls>"))?;
            let controls = c
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let (q, polarity) = if let Some(q) = s.strip_suffix('+') {
                        (q, Polarity::Positive)
                    } else if let Some(q) = s.strip_suffix('-') {
                        (q, Polarity::Negative)
                    } else {
                        return Err(Error::parse(line, format!("control {s:?} needs + or -")));
                    };
                    Ok(Control {
                        qubit: parse_qubit(q, line)?,
                        polarity,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Gate::mcx(controls, target)
        }
        other => return Err(Error::parse(line, format!("unknown gate {other:?}"))),
    };
    if let Some(extra) = parts.next() {
        return Err(Error::parse(line, format!("unexpected token {extra:?}")));
    }
    Ok(gate)
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gate(s.trim(), 1)
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut circuit: Option<Circuit> = None;
        for (n, raw) in s.lines().enumerate() {
            let line = n + 1;
            let text = raw.trim();
            if text.is_empty() {
                continue;
            }
            if let Some(comment) = text.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(w) = comment.strip_prefix("width:") {
                    if circuit.is_some() {
                        return Err(Error::parse(line, "duplicate width header"));
                    }
                    let width: usize = w
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(line, format!("invalid width {w:?}")))?;
                    circuit = Some(Circuit::new(width).map_err(|e| Error::parse(line, e.to_string()))?);
                    continue;
                }
                let Some(c) = circuit.as_mut() else {
                    if comment.starts_with("stage:") || comment.starts_with("constant:") {
                        return Err(Error::parse(line, "width header must come first"));
                    }
                    continue;
                };
                if let Some(label) = comment.strip_prefix("stage:") {
                    c.begin_stage(label.trim())
                        .map_err(|e| Error::parse(line, e.to_string()))?;
                } else if let Some(v) = comment.strip_prefix("constant:") {
                    match v.trim() {
                        "0" => c.set_constant(false),
                        "1" => c.set_constant(true),
                        other => return Err(Error::parse(line, format!("invalid constant {other:?}"))),
                    }
                }
                continue;
            }
            let c = circuit
                .as_mut()
                .ok_or_else(|| Error::parse(line, "missing '# width: N' header"))?;
            let gate = parse_gate(text, line)?;
            c.push(gate).map_err(|e| Error::parse(line, e.to_string()))?;
        }
        circuit.ok_or_else(|| Error::parse(1, "missing '# width: N' header"))
    }
}
