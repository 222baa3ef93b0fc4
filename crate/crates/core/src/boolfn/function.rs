// SPDX-License-Identifier: Apache-2.0

//! Truth tables of k-variable switching functions.
//!
//! Minterm index `i` encodes the assignment with `x1` as the most significant
//! bit, so for `k = 4` the index `0b0010` is the row `x1=0 x2=0 x3=1 x4=0`.
//! Every module shares this ordering.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_K: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    k: usize,
    words: Vec<u64>,
}

/// Bit of variable `var` (0-based, `x1` is 0) inside a minterm index.
#[inline]
pub fn var_bit(k: usize, var: usize) -> usize {
    debug_assert!(var < k);
    1 << (k - 1 - var)
}

impl BooleanFunction {
    pub fn zero(k: usize) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::UnsupportedK(k));
        }
        let len = 1usize << k;
        Ok(Self {
            k,
            words: vec![0; len.div_ceil(64)],
        })
    }

    pub fn one(k: usize) -> Result<Self> {
        Self::from_fn(k, |_| true)
    }

    pub fn from_fn(k: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        let mut out = Self::zero(k)?;
        for i in 0..out.size() {
            if f(i) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn from_minterms(k: usize, minterms: &[usize]) -> Result<Self> {
        let mut out = Self::zero(k)?;
        for &m in minterms {
            if m >= out.size() {
                return Err(Error::InvalidArgument(format!("minterm {m} out of range for k = {k}")));
            }
            out.set(m, true);
        }
        Ok(out)
    }

    /// Builds a function with at most 64 minterms from a packed table
    /// (minterm 0 in bit 0).
    pub fn from_table(k: usize, table: u64) -> Result<Self> {
        if k > 6 {
            return Err(Error::InvalidArgument(format!(
                "packed tables hold at most 64 minterms, k = {k}"
            )));
        }
        Self::from_fn(k, |i| (table >> i) & 1 == 1)
    }

    /// The single variable `x_{var+1}`.
    pub fn variable(k: usize, var: usize) -> Result<Self> {
        if var >= k {
            return Err(Error::InvalidArgument(format!("variable {var} >= k = {k}")));
        }
        Self::from_fn(k, |i| i & var_bit(k, var) != 0)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of minterms, `2^k`.
    pub fn size(&self) -> usize {
        1 << self.k
    }

    #[inline]
    pub fn value(&self, index: usize) -> bool {
        (self.words[index / 64] >> (index % 64)) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        let mask = 1u64 << (index % 64);
        if value {
            self.words[index / 64] |= mask;
        } else {
            self.words[index / 64] &= !mask;
        }
    }

    /// Evaluates on an assignment `[x1, .., xk]`.
    pub fn evaluate(&self, assignment: &[bool]) -> Result<bool> {
        if assignment.len() != self.k {
            return Err(Error::InvalidArgument(format!(
                "assignment has {} bits, expected {}",
                assignment.len(),
                self.k
            )));
        }
        let index = assignment.iter().fold(0usize, |acc, &b| (acc << 1) | usize::from(b));
        Ok(self.value(index))
    }

    pub fn minterms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(|&i| self.value(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "xor of functions with different k");
        Self {
            k: self.k,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// Packed table for `k <= 6`, minterm 0 in bit 0.
    pub fn table(&self) -> Option<u64> {
        (self.k <= 6).then(|| self.words[0])
    }

    /// Hex encoding of the table, minterm 0 in the least significant bit.
    pub fn to_hex(&self) -> String {
        let digits = (self.size() / 4).max(1);
        (0..digits)
            .rev()
            .map(|d| {
                let nibble = (0..4)
                    .filter(|&b| 4 * d + b < self.size() && self.value(4 * d + b))
                    .fold(0u32, |acc, b| acc | (1 << b));
                char::from_digit(nibble, 16).unwrap()
            })
            .collect()
    }

    fn from_hex(k: usize, hex: &str) -> std::result::Result<Self, String> {
        let mut out = Self::zero(k).map_err(|e| e.to_string())?;
        if hex.is_empty() {
            return Err("empty hex table".into());
        }
        for (d, c) in hex.chars().rev().enumerate() {
            let nibble = c.to_digit(16).ok_or_else(|| format!("invalid hex digit {c:?}"))?;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let index = 4 * d + b;
                    if index >= out.size() {
                        return Err(format!("hex table has bits beyond 2^{k} minterms"));
                    }
                    out.set(index, true);
                }
            }
        }
        Ok(out)
    }

    /// Row label such as `0010` for minterm 2 with `k = 4`.
    pub fn minterm_label(k: usize, index: usize) -> String {
        format!("{index:0k$b}")
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(k={}, tt={})", self.k, self.to_hex())
    }
}

/// Text format: `k=<n>` then `tt=<hex>` or `minterms=<i,j,..>`.
impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={}", self.k)?;
        writeln!(f, "tt={}", self.to_hex())
    }
}

impl FromStr for BooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut k: Option<(usize, usize)> = None;
        let mut table: Option<Self> = None;
        for (n, raw) in s.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(line_no, format!("expected key=value, got {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "k" => {
                    if k.is_some() {
                        return Err(Error::parse(line_no, "duplicate k"));
                    }
                    let parsed: usize = value
                        .parse()
                        .map_err(|_| Error::parse(line_no, format!("invalid k {value:?}")))?;
                    if parsed == 0 || parsed > MAX_K {
                        return Err(Error::parse(line_no, format!("k = {parsed} outside 1..={MAX_K}")));
                    }
                    k = Some((parsed, line_no));
                }
                key @ ("tt" | "minterms") => {
                    let (kv, _) = k.ok_or_else(|| Error::parse(line_no, "k must precede the table"))?;
                    if table.is_some() {
                        return Err(Error::parse(line_no, "duplicate table"));
                    }
                    let f = if key == "tt" {
                        Self::from_hex(kv, value).map_err(|m| Error::parse(line_no, m))?
                    } else {
                        let list = value
                            .split(',')
                            .map(str::trim)
                            .filter(|t| !t.is_empty())
                            .map(|t| {
                                t.parse::<usize>()
                                    .map_err(|_| Error::parse(line_no, format!("invalid minterm {t:?}")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Self::from_minterms(kv, &list).map_err(|e| Error::parse(line_no, e.to_string()))?
                    };
                    table = Some(f);
                }
                other => return Err(Error::parse(line_no, format!("unknown key {other:?}"))),
            }
        }
        match (k, table) {
            (Some(_), Some(t)) => Ok(t),
            (None, _) => Err(Error::parse(s.lines().count().max(1), "missing k=<n>")),
            (Some((_, line)), None) => Err(Error::parse(line, "missing tt= or minterms=")),
        }
    }
}
