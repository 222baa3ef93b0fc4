// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use super::StateVector;
use crate::boolfn::SignVector;
use crate::error::{Error, Result};
use crate::tolerance::tolerance;

pub type QubitFactor = [Complex64; 2];

/// Smaller singular value of the 2 x m matrix with rows `r0`, `r1`.
fn second_singular_value(r0: &[Complex64], r1: &[Complex64]) -> f64 {
    let n0: f64 = r0.iter().map(|a| a.norm_sqr()).sum();
    let n1: f64 = r1.iter().map(|a| a.norm_sqr()).sum();
    let (big, small, nb) = if n0 >= n1 { (r0, r1, n0) } else { (r1, r0, n1) };
    if nb == 0.0 {
        return 0.0;
    }
    // the determinant via an explicit residual; n0*n1 - |<r0,r1>|^2 cancels badly
    let overlap: Complex64 = big.iter().zip(small).map(|(a, b)| a.conj() * b).sum();
    let coeff = overlap / nb;
    let residual: f64 = big.iter().zip(small).map(|(a, b)| (b - coeff * a).norm_sqr()).sum();
    let det = nb * residual;
    let trace = n0 + n1;
    let disc = (trace * trace - 4.0 * det).max(0.0).sqrt();
    // (trace - disc) / 2 written to avoid cancellation
    let lambda = if trace + disc > 0.0 {
        2.0 * det / (trace + disc)
    } else {
        0.0
    };
    lambda.sqrt()
}

/// Splits `s` into single-qubit factors when it is a product state.
///
/// Each factor is normalized; the global phase sits on the first one and
/// every later factor has a real non-negative leading component.
pub fn is_product(s: &StateVector) -> Option<Vec<QubitFactor>> {
    let tol = tolerance();
    let mut rest: Vec<Complex64> = s.amplitudes().to_vec();
    let mut factors = Vec::with_capacity(s.width());
    while rest.len() > 1 {
        let half = rest.len() / 2;
        let (r0, r1) = rest.split_at(half);
        if second_singular_value(r0, r1) > tol {
            return None;
        }
        let n0: f64 = r0.iter().map(|a| a.norm_sqr()).sum();
        let n1: f64 = r1.iter().map(|a| a.norm_sqr()).sum();
        let dominant = if n0 >= n1 { r0 } else { r1 };
        let norm = n0.max(n1).sqrt();
        let v: Vec<Complex64> = dominant.iter().map(|a| a / norm).collect();
        let project = |r: &[Complex64]| -> Complex64 { v.iter().zip(r).map(|(a, b)| a.conj() * b).sum() };
        factors.push([project(r0), project(r1)]);
        rest = v;
    }
    // the last split leaves one unit amplitude holding a phase
    let last = factors.last_mut().expect("width >= 1");
    last[0] *= rest[0];
    last[1] *= rest[0];
    let mut global = Complex64::new(1.0, 0.0);
    for f in factors.iter_mut() {
        let n = (f[0].norm_sqr() + f[1].norm_sqr()).sqrt();
        let lead = if f[0].norm() > tol { f[0] } else { f[1] };
        let phase = lead / lead.norm();
        f[0] /= phase * n;
        f[1] /= phase * n;
        global *= phase * n;
    }
    factors[0][0] *= global;
    factors[0][1] *= global;
    Some(factors)
}

/// Signs `(-1)^f(x)` carried by a state `sum_x s_x |x> (x) |+->` with
/// balanced magnitudes, normalized so minterm 0 is `+1`.
pub fn phase_vector(s: &StateVector) -> Result<SignVector> {
    let tol = tolerance();
    let w = s.width();
    if w < 2 {
        return Err(Error::InvalidArgument("phase vectors need a target qubit".into()));
    }
    let k = w - 1;
    let amps = s.amplitudes();
    let even: Vec<Complex64> = amps.iter().step_by(2).copied().collect();
    let odd: Vec<Complex64> = amps.iter().skip(1).step_by(2).copied().collect();
    let n0: f64 = even.iter().map(|a| a.norm_sqr()).sum();
    let n1: f64 = odd.iter().map(|a| a.norm_sqr()).sum();
    let overlap: Complex64 = even.iter().zip(&odd).map(|(a, b)| a.conj() * b).sum();
    // target factor must be |+> (overlap 1/2) or |-> (overlap -1/2)
    if (n0 - 0.5).abs() > tol || (n1 - 0.5).abs() > tol || (overlap.norm() - 0.5).abs() > tol || overlap.im.abs() > tol
    {
        return Err(Error::TargetEntangled);
    }
    let expected = 0.5f64.powi(k as i32).sqrt();
    let top: Vec<Complex64> = even.iter().map(|a| a * std::f64::consts::SQRT_2).collect();
    if let Some(x) = top.iter().position(|a| (a.norm() - expected).abs() > tol) {
        return Err(Error::NotBalanced(format!(
            "minterm {x} has magnitude {:.6}, expected {expected:.6}",
            top[x].norm()
        )));
    }
    let reference = top[0];
    let mut signs = Vec::with_capacity(top.len());
    for (x, a) in top.iter().enumerate() {
        let ratio = a / reference;
        if (ratio - 1.0).norm() <= tol {
            signs.push(1);
        } else if (ratio + 1.0).norm() <= tol {
            signs.push(-1);
        } else {
            return Err(Error::NotBalanced(format!("minterm {x} has a phase other than +-1")));
        }
    }
    SignVector::new(k, signs)
}
