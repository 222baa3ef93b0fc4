// SPDX-License-Identifier: Apache-2.0

//! Exact ESOP minimization and BIST residue selection.

use std::fmt;
use std::sync::OnceLock;

use super::affine::{enumerate_affine, AffineCoeffs};
use super::function::{var_bit, BooleanFunction};
use super::pprm::pprm_expand;
use crate::error::{Error, Result};

/// Largest `k` for which exact minimization is supported.
pub const EXACT_MAX_K: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Literal {
    Absent,
    Positive,
    Negative,
}

/// Product of literals; all-absent is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    literals: Vec<Literal>,
}

impl Cube {
    pub fn new(literals: Vec<Literal>) -> Self {
        Self { literals }
    }

    pub fn constant_one(k: usize) -> Self {
        Self::new(vec![Literal::Absent; k])
    }

    /// Positive cube over the variables of a minterm-layout mask.
    pub fn positive(k: usize, mask: usize) -> Self {
        Self::new(
            (0..k)
                .map(|v| {
                    if mask & var_bit(k, v) != 0 {
                        Literal::Positive
                    } else {
                        Literal::Absent
                    }
                })
                .collect(),
        )
    }

    /// Full cube selecting exactly one minterm.
    pub fn minterm(k: usize, index: usize) -> Self {
        Self::new(
            (0..k)
                .map(|v| {
                    if index & var_bit(k, v) != 0 {
                        Literal::Positive
                    } else {
                        Literal::Negative
                    }
                })
                .collect(),
        )
    }

    pub fn k(&self) -> usize {
        self.literals.len()
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn literal_count(&self) -> usize {
        self.literals.iter().filter(|l| **l != Literal::Absent).count()
    }

    pub fn is_constant_one(&self) -> bool {
        self.literal_count() == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        let k = self.k();
        self.literals.iter().enumerate().all(|(v, l)| {
            let bit = index & var_bit(k, v) != 0;
            match l {
                Literal::Absent => true,
                Literal::Positive => bit,
                Literal::Negative => !bit,
            }
        })
    }

    pub fn to_function(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.k(), |i| self.contains(i)).expect("cube width validated")
    }

    /// Truth table packed into a word, valid for `k <= 5`.
    fn table(&self) -> u32 {
        (0..1usize << self.k())
            .filter(|&i| self.contains(i))
            .fold(0u32, |acc, i| acc | (1 << i))
    }

    /// Every cube over `k` variables, constant 1 included, in literal-vector order.
    pub fn all(k: usize) -> Vec<Cube> {
        let total = 3usize.pow(k as u32);
        (0..total)
            .map(|mut code| {
                let mut lits = vec![Literal::Absent; k];
                for v in (0..k).rev() {
                    lits[v] = match code % 3 {
                        0 => Literal::Absent,
                        1 => Literal::Positive,
                        _ => Literal::Negative,
                    };
                    code /= 3;
                }
                Cube::new(lits)
            })
            .collect()
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant_one() {
            return f.write_str("1");
        }
        for (v, l) in self.literals.iter().enumerate() {
            match l {
                Literal::Absent => {}
                Literal::Positive => write!(f, "x{}", v + 1)?,
                Literal::Negative => write!(f, "x{}'", v + 1)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Esop {
    pub k: usize,
    pub cubes: Vec<Cube>,
}

impl Esop {
    pub fn empty(k: usize) -> Self {
        Self { k, cubes: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn evaluate(&self, index: usize) -> bool {
        self.cubes.iter().fold(false, |acc, c| acc ^ c.contains(index))
    }

    pub fn to_function(&self) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(self.k, |i| self.evaluate(i))
    }
}

impl fmt::Display for Esop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cubes.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.cubes.iter().map(Cube::to_string).collect();
        f.write_str(&parts.join(" ^ "))
    }
}

/// Distance of every truth table from zero under XOR-with-a-cube moves.
struct DistanceTable {
    cubes: Vec<Cube>,
    cube_tables: Vec<u32>,
    dist: Vec<u8>,
}

impl DistanceTable {
    fn build(k: usize) -> Self {
        let cubes = Cube::all(k);
        let cube_tables: Vec<u32> = cubes.iter().map(Cube::table).collect();
        let states = 1usize << (1 << k);
        let mut dist = vec![u8::MAX; states];
        dist[0] = 0;
        let mut frontier = vec![0u32];
        let mut depth = 0u8;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for &s in &frontier {
                for &c in &cube_tables {
                    let t = (s ^ c) as usize;
                    if dist[t] == u8::MAX {
                        dist[t] = depth;
                        next.push(t as u32);
                    }
                }
            }
            frontier = next;
        }
        Self {
            cubes,
            cube_tables,
            dist,
        }
    }

    fn get(k: usize) -> &'static DistanceTable {
        static TABLES: [OnceLock<DistanceTable>; EXACT_MAX_K + 1] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        TABLES[k].get_or_init(|| Self::build(k))
    }

    /// Greedy descent taking the smallest cube at each step; the result is
    /// the lexicographically smallest minimum witness once sorted.
    fn witness(&self, k: usize, mut table: u32) -> Esop {
        let mut cubes = Vec::new();
        while table != 0 {
            let d = self.dist[table as usize];
            let (i, t) = self
                .cube_tables
                .iter()
                .enumerate()
                .find(|(_, &c)| self.dist[(table ^ c) as usize] + 1 == d)
                .expect("BFS distances are consistent");
            cubes.push(self.cubes[i].clone());
            table ^= t;
        }
        cubes.sort();
        Esop { k, cubes }
    }
}

fn packed(f: &BooleanFunction) -> u32 {
    f.table().expect("k <= 4") as u32
}

/// Minimum number of cubes whose XOR is `f`, with a witness.
pub fn esop_min_cubes(f: &BooleanFunction) -> Result<(usize, Esop)> {
    let k = f.k();
    if k > EXACT_MAX_K {
        return Err(Error::KTooLarge(k));
    }
    let table = DistanceTable::get(k);
    let t = packed(f);
    Ok((table.dist[t as usize] as usize, table.witness(k, t)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BistResidue {
    pub affine: AffineCoeffs,
    pub bist: BooleanFunction,
    pub esop: Esop,
    /// False when the residue comes from degree truncation rather than
    /// exact minimization.
    pub exact: bool,
}

/// Splits `f` into an affine part and a residue realized as an ESOP,
/// minimizing the residue's cube count when `k <= 4`.
pub fn bist_residue(f: &BooleanFunction) -> BistResidue {
    let k = f.k();
    if k <= EXACT_MAX_K {
        let table = DistanceTable::get(k);
        let ft = packed(f);
        let best = enumerate_affine(k)
            .expect("k validated")
            .into_iter()
            .map(|a| {
                let at = packed(&a.to_function(k).expect("k validated"));
                let residue = ft ^ at;
                let esop = table.witness(k, residue);
                (table.dist[residue as usize], esop, a)
            })
            .min_by(|x, y| (x.0, &x.1.cubes, x.2.encoding()).cmp(&(y.0, &y.1.cubes, y.2.encoding())))
            .expect("at least one affine candidate");
        let (_, esop, affine) = best;
        let bist = f.xor(&affine.to_function(k).expect("k validated"));
        return BistResidue {
            affine,
            bist,
            esop,
            exact: true,
        };
    }
    let p = pprm_expand(f);
    let affine = AffineCoeffs {
        constant: p.constant,
        linear: p.terms.iter().filter(|m| m.count_ones() == 1).fold(0, |a, m| a | m),
    };
    let cubes = p
        .terms
        .iter()
        .filter(|m| m.count_ones() > 1)
        .map(|&m| Cube::positive(k, m))
        .collect();
    let bist = f.xor(&affine.to_function(k).expect("k validated"));
    BistResidue {
        affine,
        bist,
        esop: Esop { k, cubes },
        exact: false,
    }
}
