mod common;

use common::{partition, partitions_up_to, sig};
use isotypic::characters::{dim, greedy_decompose, schur_polynomial, so_character, sp_character};
use isotypic::{Decomposition, Family, Group, LaurentPoly, Signature};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn binom(n: i64, r: i64) -> BigUint {
    if r < 0 || n < r {
        return BigUint::from(0u32);
    }
    (0..r).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64))
}

#[test]
fn gl_dimension_is_tableau_count() {
    for k in 1..=5 {
        for lambda in partitions_up_to(6, k) {
            let chi = schur_polynomial(&lambda, k);
            assert_eq!(BigInt::from(dim(&Group::gl(k), &lambda).unwrap()), chi.eval_ones(), "{lambda} k={k}");
        }
    }
}

#[test]
fn so_character_at_identity_is_dimension() {
    for k in 3..=7 {
        for mu in partitions_up_to(5, (k - 1) / 2) {
            let chi = so_character(&mu, k).unwrap();
            assert_eq!(BigInt::from(dim(&Group::so(k), &mu).unwrap()), chi.eval_ones(), "{mu} k={k}");
        }
    }
}

#[test]
fn sp_character_at_identity_is_dimension() {
    let g = |k| Group::new(Family::Sp, k).unwrap();
    for k in [2, 4, 6] {
        for mu in partitions_up_to(5, k / 2) {
            let chi = sp_character(&mu, k).unwrap();
            assert_eq!(BigInt::from(dim(&g(k), &mu).unwrap()), chi.eval_ones(), "{mu} k={k}");
        }
    }
}

#[test]
fn harmonic_dimension_formula() {
    for k in 3..=7usize {
        for r in 0..=8u32 {
            let (ki, ri) = (k as i64, r as i64);
            let want = binom(ki + ri - 1, ri) - binom(ki + ri - 3, ri - 2);
            assert_eq!(dim(&Group::so(k), &Signature::row(r)).unwrap(), want, "k={k} r={r}");
        }
    }
}

#[test]
fn b_type_single_sign_changes() {
    for k in [3, 5, 7] {
        for mu in partitions_up_to(4, (k - 1) / 2) {
            let chi = so_character(&mu, k).unwrap();
            for i in 0..k / 2 {
                assert_eq!(chi.invert_var(i), chi, "{mu} k={k} var {i}");
            }
        }
    }
}

#[test]
fn d_type_even_sign_changes() {
    for k in [4, 6] {
        for mu in partitions_up_to(4, k / 2 - 1) {
            let chi = so_character(&mu, k).unwrap();
            for i in 0..k / 2 {
                for j in i + 1..k / 2 {
                    assert_eq!(chi.invert_var(i).invert_var(j), chi, "{mu} k={k} vars {i},{j}");
                }
            }
        }
    }
}

fn sum_characters(terms: &[(Signature, u64)], k: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(k / 2);
    for (mu, m) in terms {
        let chi = so_character(mu, k).unwrap().scale(&BigInt::from(*m));
        for (e, c) in chi.terms() {
            acc.add_term(e.clone(), c.clone());
        }
    }
    acc
}

#[test]
fn greedy_round_trip_single() {
    for k in 3..=7 {
        for mu in partitions_up_to(4, (k - 1) / 2) {
            let d = greedy_decompose(&so_character(&mu, k).unwrap(), &Group::so(k)).unwrap();
            assert_eq!(d, Decomposition::from_terms(Group::so(k), [(mu.clone(), 1)]), "{mu} k={k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn greedy_round_trip_sums(
        terms in proptest::collection::vec((partition(3, 2), 1u64..4), 1..4),
        k in 5usize..=7,
    ) {
        let chi = sum_characters(&terms, k);
        let d = greedy_decompose(&chi, &Group::so(k)).unwrap();
        let mut want = Decomposition::new(Group::so(k));
        for (mu, m) in terms {
            want.add(mu, m);
        }
        prop_assert_eq!(d, want);
    }
}

#[test]
fn greedy_rejects_non_characters() {
    let chi = so_character(&sig(&[1]), 5).unwrap().scale(&BigInt::from(-1));
    assert!(greedy_decompose(&chi, &Group::so(5)).is_err());
}
