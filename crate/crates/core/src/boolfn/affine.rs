// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::function::BooleanFunction;
use super::pprm::pprm_expand;
use crate::error::{Error, Result};

/// `c0 ⊕ (linear · x)` with the mask in minterm-index layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineCoeffs {
    pub constant: bool,
    pub linear: usize,
}

impl AffineCoeffs {
    pub fn evaluate(&self, index: usize) -> bool {
        self.constant ^ ((index & self.linear).count_ones() & 1 == 1)
    }

    pub fn to_function(&self, k: usize) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(k, |i| self.evaluate(i))
    }

    /// Tie-break key: `linear << 1 | c0`.
    pub fn encoding(&self) -> usize {
        (self.linear << 1) | usize::from(self.constant)
    }

    pub fn from_encoding(code: usize) -> Self {
        Self {
            constant: code & 1 == 1,
            linear: code >> 1,
        }
    }

    pub fn describe(&self, k: usize) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.constant {
            parts.push("1".into());
        }
        for v in 0..k {
            if self.linear & (1 << (k - 1 - v)) != 0 {
                parts.push(format!("x{}", v + 1));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ^ ")
        }
    }
}

pub fn is_affine(f: &BooleanFunction) -> Option<AffineCoeffs> {
    let p = pprm_expand(f);
    if p.terms.iter().any(|m| m.count_ones() > 1) {
        return None;
    }
    Some(AffineCoeffs {
        constant: p.constant,
        linear: p.terms.iter().fold(0, |acc, m| acc | m),
    })
}

/// All `2^(k+1)` affine functions, ordered by encoding.
pub fn enumerate_affine(k: usize) -> Result<Vec<AffineCoeffs>> {
    if k == 0 || k > super::MAX_K {
        return Err(Error::UnsupportedK(k));
    }
    Ok((0..1usize << (k + 1)).map(AffineCoeffs::from_encoding).collect())
}
