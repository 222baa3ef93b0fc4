// SPDX-License-Identifier: Apache-2.0

//! Boolean-function algebra: truth tables, Reed-Muller expansion, affine
//! classification and exact ESOP minimization.

mod affine;
mod esop;
mod function;
mod pprm;
mod sign;

pub use affine::{enumerate_affine, is_affine, AffineCoeffs};
pub use esop::{bist_residue, esop_min_cubes, BistResidue, Cube, Esop, Literal, EXACT_MAX_K};
pub use function::{var_bit, BooleanFunction, MAX_K};
pub use pprm::{pprm_expand, term_order_key, PprmExpansion};
pub use sign::{sign_decode, sign_vector, SignVector};
