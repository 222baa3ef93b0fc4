// SPDX-License-Identifier: Apache-2.0

use std::cmp::Reverse;
use std::fmt;

use super::function::{var_bit, BooleanFunction};

/// Positive-polarity Reed-Muller form: `constant ⊕ t1 ⊕ t2 ⊕ ..`.
///
/// Each term is a nonempty variable mask in minterm-index layout
/// (`x1` is the most significant of the `k` bits).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PprmExpansion {
    pub k: usize,
    pub constant: bool,
    pub terms: Vec<usize>,
}

/// Orders terms by literal count, then by variable indices with `x1` first.
pub fn term_order_key(mask: usize) -> (u32, Reverse<usize>) {
    (mask.count_ones(), Reverse(mask))
}

/// Reed-Muller (GF(2) Möbius) transform of the truth table.
pub fn pprm_expand(f: &BooleanFunction) -> PprmExpansion {
    let n = f.size();
    let mut coeffs: Vec<bool> = (0..n).map(|i| f.value(i)).collect();
    let mut step = 1;
    while step < n {
        for i in 0..n {
            if i & step != 0 {
                coeffs[i] ^= coeffs[i ^ step];
            }
        }
        step <<= 1;
    }
    let mut terms: Vec<usize> = (1..n).filter(|&m| coeffs[m]).collect();
    terms.sort_by_key(|&m| term_order_key(m));
    PprmExpansion {
        k: f.k(),
        constant: coeffs[0],
        terms,
    }
}

impl PprmExpansion {
    pub fn evaluate(&self, index: usize) -> bool {
        self.terms.iter().fold(self.constant, |acc, &m| acc ^ (index & m == m))
    }

    pub fn to_function(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.k, |i| self.evaluate(i)).expect("k validated on construction")
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    /// 0-based variable indices of a term mask, `x1` first.
    pub fn variables(&self, mask: usize) -> Vec<usize> {
        (0..self.k).filter(|&v| mask & var_bit(self.k, v) != 0).collect()
    }
}

impl fmt::Display for PprmExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.constant {
            parts.push("1".into());
        }
        for &m in &self.terms {
            parts.push(
                self.variables(m)
                    .iter()
                    .map(|v| format!("x{}", v + 1))
                    .collect::<String>(),
            );
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" ^ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_function_terms() {
        let f = BooleanFunction::from_minterms(4, &[2, 4, 5, 8, 9, 15]).unwrap();
        let p = pprm_expand(&f);
        assert!(!p.constant);
        assert_eq!(p.to_string(), "x1 ^ x2 ^ x3 ^ x3x4 ^ x1x2x3 ^ x1x3x4 ^ x2x3x4");
        assert_eq!(p.degree(), 3);
        assert_eq!(p.to_function(), f);
    }

    #[test]
    fn and_and_zero() {
        let and = BooleanFunction::from_minterms(2, &[3]).unwrap();
        let p = pprm_expand(&and);
        assert_eq!(p.terms, vec![0b11]);
        let zero = BooleanFunction::zero(3).unwrap();
        let p = pprm_expand(&zero);
        assert!(p.terms.is_empty() && !p.constant);
        assert_eq!(p.to_string(), "0");
    }
}
