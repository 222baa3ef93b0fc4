// SPDX-License-Identifier: Apache-2.0

//! Independent reference computations used to check the library.
#![allow(dead_code)]

use std::collections::HashMap;

use num_complex::Complex64;
use qtpg::boolfn::{pprm_expand, BooleanFunction};
use qtpg::circuit::{build_oracle, Circuit, Gate};
use qtpg::sim::StateVector;

pub const EXAMPLE_MINTERMS: [usize; 6] = [0b0010, 0b0100, 0b0101, 0b1000, 0b1001, 0b1111];

pub fn example_function() -> BooleanFunction {
    BooleanFunction::from_minterms(4, &EXAMPLE_MINTERMS).unwrap()
}

pub fn oracle_for(f: &BooleanFunction) -> Circuit {
    build_oracle(&pprm_expand(f))
}

pub fn all_functions(k: usize) -> impl Iterator<Item = BooleanFunction> {
    (0..1u64 << (1 << k)).map(move |t| BooleanFunction::from_table(k, t).unwrap())
}

/// Truth tables of every cube over `k <= 3` variables, built literal by
/// literal from the minterm definition.
fn cube_tables(k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(k as u32) {
        let mut lits = Vec::new();
        let mut c = code;
        for _ in 0..k {
            lits.push(c % 3);
            c /= 3;
        }
        let mut t = 0u64;
        for x in 0..1usize << k {
            let ok = lits.iter().enumerate().all(|(v, &l)| {
                let bit = (x >> v) & 1;
                l == 0 || (l == 1 && bit == 1) || (l == 2 && bit == 0)
            });
            if ok {
                t |= 1 << x;
            }
        }
        out.push(t);
    }
    out
}

/// Minimum ESOP size of every function over `k <= 3` variables, by
/// enumerating cube subsets of increasing size.
pub fn brute_esop_costs(k: usize) -> HashMap<u64, usize> {
    assert!(k <= 3);
    let cubes = cube_tables(k);
    let total = 1usize << (1 << k);
    let mut best: HashMap<u64, usize> = HashMap::new();
    best.insert(0, 0);
    fn rec(cubes: &[u64], start: usize, depth: usize, max: usize, acc: u64, best: &mut HashMap<u64, usize>) {
        if depth == max {
            best.entry(acc).or_insert(depth);
            return;
        }
        for i in start..cubes.len() {
            rec(cubes, i + 1, depth + 1, max, acc ^ cubes[i], best);
        }
    }
    let mut size = 1;
    while best.len() < total {
        rec(&cubes, 0, 0, size, 0, &mut best);
        size += 1;
    }
    best
}

fn kron(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn single_qubit(gate: &Gate) -> [[Complex64; 2]; 2] {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match gate {
        Gate::H(_) => [[c(h, 0.0), c(h, 0.0)], [c(h, 0.0), c(-h, 0.0)]],
        Gate::X(_) => [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        Gate::Y(_) => [[c(0.0, 0.0), c(0.0, 1.0)], [c(0.0, -1.0), c(0.0, 0.0)]],
        Gate::Z(_) => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        Gate::Mcx { .. } => unreachable!(),
    }
}

/// Full unitary of one gate: Kronecker products for single-qubit gates,
/// an explicit permutation matrix for MCX.
#[allow(clippy::needless_range_loop)]
fn gate_unitary(width: usize, gate: &Gate) -> Vec<Vec<Complex64>> {
    let n = 1 << width;
    if let Gate::Mcx { controls, target } = gate {
        let mut u = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for col in 0..n {
            let bit = |q: usize| (col >> (width - 1 - q)) & 1 == 1;
            let fire = controls.iter().all(|c| bit(c.qubit) == c.active_value());
            let row = if fire { col ^ (1 << (width - 1 - target)) } else { col };
            u[row][col] = Complex64::new(1.0, 0.0);
        }
        return u;
    }
    let id = vec![
        vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    ];
    let m = single_qubit(gate);
    let g: Vec<Vec<Complex64>> = m.iter().map(|r| r.to_vec()).collect();
    let mut u = vec![vec![Complex64::new(1.0, 0.0)]];
    for q in 0..width {
        u = kron(&u, if q == gate.target() { &g } else { &id });
    }
    u
}

pub fn reference_apply(c: &Circuit, input: &[Complex64]) -> Vec<Complex64> {
    let mut v = input.to_vec();
    for g in c.gates() {
        let u = gate_unitary(c.width(), g);
        v = u
            .iter()
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
    }
    v
}

/// Product test via purity of every single-qubit reduced density matrix.
pub fn reference_is_product(s: &StateVector) -> bool {
    let w = s.width();
    let a = s.amplitudes();
    (0..w).all(|q| {
        let bit = 1 << (w - 1 - q);
        let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..a.len() {
            for j in 0..a.len() {
                if i & !bit == j & !bit {
                    rho[usize::from(i & bit != 0)][usize::from(j & bit != 0)] += a[i] * a[j].conj();
                }
            }
        }
        let purity: f64 = (0..2)
            .flat_map(|r| (0..2).map(move |c| (r, c)))
            .map(|(r, c)| rho[r][c].norm_sqr())
            .sum();
        (purity - 1.0).abs() < 1e-7
    })
}
