// SPDX-License-Identifier: Apache-2.0

use super::function::BooleanFunction;
use crate::error::{Error, Result};

/// Phase signs `(-1)^f(i)` in minterm order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    k: usize,
    signs: Vec<i8>,
}

impl SignVector {
    pub fn new(k: usize, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != 1usize << k {
            return Err(Error::WidthMismatch {
                expected: 1 << k,
                found: signs.len(),
            });
        }
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument(format!("sign {bad} is not +1 or -1")));
        }
        Ok(Self { k, signs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

pub fn sign_vector(f: &BooleanFunction) -> SignVector {
    SignVector {
        k: f.k(),
        signs: (0..f.size()).map(|i| if f.value(i) { -1 } else { 1 }).collect(),
    }
}

pub fn sign_decode(v: &SignVector) -> Result<BooleanFunction> {
    BooleanFunction::from_fn(v.k, |i| v.signs[i] == -1)
}
