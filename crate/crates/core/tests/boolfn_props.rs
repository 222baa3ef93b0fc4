// SPDX-License-Identifier: Apache-2.0

mod common;

use common::*;
use proptest::prelude::*;
use qtpg::boolfn::*;

#[test]
fn pprm_roundtrip_exhaustive_k3() {
    for k in 1..=3 {
        for f in all_functions(k) {
            let p = pprm_expand(&f);
            assert!(!p.terms.contains(&0));
            for i in 0..f.size() {
                assert_eq!(p.evaluate(i), f.value(i));
            }
        }
    }
}

#[test]
fn pprm_perturbation_changes_function() {
    for f in all_functions(3) {
        let p = pprm_expand(&f);
        for mask in 0..8usize {
            let mut q = p.clone();
            if mask == 0 {
                q.constant ^= true;
            } else if let Some(pos) = q.terms.iter().position(|&m| m == mask) {
                q.terms.remove(pos);
            } else {
                q.terms.push(mask);
            }
            assert_ne!(q.to_function(), f);
        }
    }
}

#[test]
fn affine_criterion_exhaustive_k3() {
    let mut count = 0;
    for f in all_functions(3) {
        let p = pprm_expand(&f);
        let low_degree = p.terms.iter().all(|m| m.count_ones() <= 1);
        match is_affine(&f) {
            Some(a) => {
                assert!(low_degree);
                assert_eq!(a.to_function(3).unwrap(), f);
                count += 1;
            }
            None => assert!(!low_degree),
        }
    }
    assert_eq!(count, 16);
}

#[test]
fn enumerate_affine_is_complete() {
    for k in 1..=4 {
        let all = enumerate_affine(k).unwrap();
        assert_eq!(all.len(), 1 << (k + 1));
        let tables: std::collections::HashSet<_> = all.iter().map(|a| a.to_function(k).unwrap()).collect();
        assert_eq!(tables.len(), all.len());
        assert!(tables.iter().all(|f| is_affine(f).is_some()));
    }
}

#[test]
fn esop_costs_match_brute_force() {
    for k in 1..=3 {
        let brute = brute_esop_costs(k);
        for f in all_functions(k) {
            let (cost, witness) = esop_min_cubes(&f).unwrap();
            assert_eq!(cost, brute[&f.table().unwrap()], "{f:?}");
            assert_eq!(witness.len(), cost);
            assert_eq!(witness.to_function().unwrap(), f);
        }
    }
}

#[test]
fn esop_affine_decrease_bounded_k3() {
    let brute = brute_esop_costs(3);
    let affine = enumerate_affine(3).unwrap();
    for f in all_functions(3) {
        let base = brute[&f.table().unwrap()];
        for a in &affine {
            let g = f.xor(&a.to_function(3).unwrap());
            assert!(brute[&g.table().unwrap()] + 3 >= base);
        }
    }
}

#[test]
fn bist_residue_is_minimal_k3() {
    let brute = brute_esop_costs(3);
    let affine = enumerate_affine(3).unwrap();
    for f in all_functions(3) {
        let r = bist_residue(&f);
        let best = affine
            .iter()
            .map(|a| brute[&f.xor(&a.to_function(3).unwrap()).table().unwrap()])
            .min()
            .unwrap();
        assert_eq!(r.esop.len(), best);
        assert!(r.exact);
        assert_eq!(r.esop.to_function().unwrap(), r.bist);
        assert_eq!(r.bist.xor(&f), r.affine.to_function(3).unwrap());
        if is_affine(&f).is_some() {
            assert!(r.bist.is_zero() && r.esop.is_empty());
        }
    }
}

#[test]
fn sign_vector_marks_example_minterms() {
    let v = sign_vector(&example_function());
    let negative: Vec<usize> = (0..16).filter(|&i| v.signs()[i] == -1).collect();
    assert_eq!(negative, EXAMPLE_MINTERMS);
    assert!(sign_vector(&BooleanFunction::zero(3).unwrap())
        .signs()
        .iter()
        .all(|&s| s == 1));
}

fn k4_function() -> impl Strategy<Value = BooleanFunction> {
    any::<u16>().prop_map(|t| BooleanFunction::from_table(4, u64::from(t)).unwrap())
}

proptest! {
    #[test]
    fn pprm_roundtrip_k4(f in k4_function()) {
        prop_assert_eq!(pprm_expand(&f).to_function(), f);
    }

    #[test]
    fn evaluate_matches_pprm(f in k4_function(), x in 0usize..16) {
        let bits: Vec<bool> = (0..4).map(|v| x & var_bit(4, v) != 0).collect();
        prop_assert_eq!(f.evaluate(&bits).unwrap(), pprm_expand(&f).evaluate(x));
    }

    #[test]
    fn witness_valid_k4(f in k4_function()) {
        let (cost, w) = esop_min_cubes(&f).unwrap();
        prop_assert_eq!(w.len(), cost);
        prop_assert!(cost <= 6);
        prop_assert_eq!(w.to_function().unwrap(), f);
    }

    #[test]
    fn bist_consistency_k4(f in k4_function()) {
        let r = bist_residue(&f);
        let affine = f.xor(&r.bist);
        prop_assert_eq!(is_affine(&affine), Some(r.affine));
        prop_assert_eq!(r.esop.to_function().unwrap(), r.bist.clone());
        let best = enumerate_affine(4).unwrap().iter()
            .map(|a| esop_min_cubes(&f.xor(&a.to_function(4).unwrap())).unwrap().0)
            .min().unwrap();
        prop_assert_eq!(r.esop.len(), best);
    }

    #[test]
    fn truncated_residue_large_k(t in proptest::collection::vec(any::<bool>(), 64)) {
        let f = BooleanFunction::from_fn(6, |i| t[i]).unwrap();
        let r = bist_residue(&f);
        prop_assert!(!r.exact);
        prop_assert_eq!(r.esop.to_function().unwrap(), r.bist.clone());
        prop_assert_eq!(f.xor(&r.bist), r.affine.to_function(6).unwrap());
    }

    #[test]
    fn text_roundtrip(k in 1usize..=10, seed in any::<u64>()) {
        let f = BooleanFunction::from_fn(k, |i| (seed.rotate_left(i as u32 % 64) ^ i as u64) & 1 == 1).unwrap();
        let back: BooleanFunction = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn sign_roundtrip(f in k4_function()) {
        prop_assert_eq!(sign_decode(&sign_vector(&f)).unwrap(), f);
    }
}
