// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::detect::to_composite;
use super::faults::{enumerate_single_faults, FaultModels};
use crate::circuit::{Circuit, ErrorLocation};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::sim::{FaultModel, FaultSpec, PauliAxis};
use crate::testgen::TestPlan;
use crate::tolerance::tolerance;

/// Monte Carlo estimate of how well a single-fault suite catches several
/// simultaneous Pauli faults. An experiment, not a proof.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiFaultReport {
    pub n_faults: usize,
    pub trials: usize,
    pub seed: u64,
    /// Trials whose faults multiply to the identity at every site.
    pub cancelled: usize,
    /// Non-cancelled trials detected with certainty by some test.
    pub detected: usize,
    pub detected_fraction: f64,
    /// Mean over non-cancelled trials of the best test's detection probability.
    pub mean_best_probability: f64,
    pub note: String,
}

/// Whether the Pauli faults multiply to the identity (up to phase) at each site.
fn cancels(faults: &[FaultSpec]) -> bool {
    let mut per_site: BTreeMap<ErrorLocation, (bool, bool)> = BTreeMap::new();
    for f in faults {
        if let FaultModel::Pauli { axis, .. } = f.model {
            let e = per_site.entry(f.location).or_default();
            // X = (1,0), Z = (0,1), Y = (1,1) in the binary symplectic form
            e.0 ^= axis != PauliAxis::Z;
            e.1 ^= axis != PauliAxis::X;
        }
    }
    per_site.values().all(|&(x, z)| !x && !z)
}

/// Places `n_faults` Pauli faults (p = 1) uniformly at random on the
/// oracle's wires, with repetition, and runs every plan on each placement.
pub fn multi_fault_experiment(
    oracle: &Circuit,
    plans: &[TestPlan],
    n_faults: usize,
    trials: usize,
    seed: u64,
    execution: Execution,
) -> Result<MultiFaultReport> {
    if n_faults == 0 {
        return Err(Error::InvalidArgument("n_faults must be at least 1".into()));
    }
    let singles = enumerate_single_faults(oracle, &FaultModels::pauli_only());
    if singles.is_empty() || plans.is_empty() {
        return Err(Error::InvalidArgument("no fault sites or no plans".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let placements: Vec<Vec<FaultSpec>> = (0..trials)
        .map(|_| {
            (0..n_faults)
                .map(|_| singles[rng.gen_range(0..singles.len())])
                .collect()
        })
        .collect();

    let tol = tolerance();
    let outcomes = exec::map(execution, &placements, |faults| -> Result<Option<f64>> {
        if cancels(faults) {
            return Ok(None);
        }
        let mut best = 0.0f64;
        for plan in plans {
            let composite = faults
                .iter()
                .map(|f| to_composite(f, plan, oracle))
                .collect::<Result<Vec<_>>>()?;
            let dist = plan.distribution(oracle, &composite)?;
            best = best.max((1.0 - dist.probability(&plan.expected)).clamp(0.0, 1.0));
        }
        Ok(Some(best))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let live: Vec<f64> = outcomes.iter().flatten().copied().collect();
    let detected = live.iter().filter(|&&p| p >= 1.0 - tol).count();
    let frac = |n: f64| if live.is_empty() { 0.0 } else { n / live.len() as f64 };
    Ok(MultiFaultReport {
        n_faults,
        trials,
        seed,
        cancelled: trials - live.len(),
        detected,
        detected_fraction: frac(detected as f64),
        mean_best_probability: frac(live.iter().sum()),
        note: "Monte Carlo experiment; supports but does not prove multi-fault detectability".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation() {
        let loc = ErrorLocation::Wire { boundary: 1, qubit: 0 };
        let x = FaultSpec::pauli(loc, PauliAxis::X, 1.0);
        let y = FaultSpec::pauli(loc, PauliAxis::Y, 1.0);
        let z = FaultSpec::pauli(loc, PauliAxis::Z, 1.0);
        assert!(cancels(&[x, x]));
        assert!(cancels(&[x, y, z]));
        assert!(!cancels(&[x, z]));
        let other = FaultSpec::pauli(ErrorLocation::Wire { boundary: 2, qubit: 0 }, PauliAxis::X, 1.0);
        assert!(!cancels(&[x, other]));
    }
}
