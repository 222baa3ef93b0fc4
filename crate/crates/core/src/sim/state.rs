// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    width: usize,
    amps: Vec<Complex64>,
}

fn check_width(width: usize) -> Result<()> {
    if width == 0 {
        return Err(Error::InvalidArgument("state width must be positive".into()));
    }
    if width > super::MAX_WIDTH {
        return Err(Error::WidthTooLarge(width));
    }
    Ok(())
}

/// Computational basis state from a bit string, qubit 0 first.
pub fn prepare(width: usize, basis: &str) -> Result<StateVector> {
    if basis.len() != width {
        return Err(Error::WidthMismatch {
            expected: width,
            found: basis.len(),
        });
    }
    let index = basis.chars().try_fold(0usize, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok(acc << 1 | 1),
        other => Err(Error::InvalidArgument(format!("basis bit {other:?} is not 0 or 1"))),
    })?;
    StateVector::basis(width, index)
}

impl StateVector {
    pub fn basis(width: usize, index: usize) -> Result<Self> {
        check_width(width)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
        *amps
            .get_mut(index)
            .ok_or_else(|| Error::InvalidArgument(format!("basis index {index} outside width {width}")))? =
            Complex64::new(1.0, 0.0);
        Ok(Self { width, amps })
    }

    /// Takes raw amplitudes; the length must be a power of two.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if !amps.len().is_power_of_two() || amps.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "{} amplitudes is not a power of two >= 2",
                amps.len()
            )));
        }
        let width = amps.len().trailing_zeros() as usize;
        check_width(width)?;
        Ok(Self { width, amps })
    }

    /// Tensor product of single-qubit states, qubit 0 first.
    pub fn product(factors: &[[Complex64; 2]]) -> Result<Self> {
        check_width(factors.len())?;
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for f in factors {
            amps = amps.iter().flat_map(|a| [a * f[0], a * f[1]]).collect();
        }
        Ok(Self {
            width: factors.len(),
            amps,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|<self|other>|^2`.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prepare_basis() {
        let s = prepare(5, "00000").unwrap();
        assert_eq!(s.amplitude(0), Complex64::new(1.0, 0.0));
        let s = prepare(5, "11111").unwrap();
        assert_eq!(s.amplitude(31), Complex64::new(1.0, 0.0));
        assert!((s.norm() - 1.0).abs() < 1e-12);
        assert!(prepare(3, "01").is_err());
        assert!(prepare(2, "0a").is_err());
        assert!(matches!(StateVector::basis(25, 0), Err(Error::WidthTooLarge(25))));
    }
}
