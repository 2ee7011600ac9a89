//! Closed forms against exhaustive Riemann-Roch scans on every curve of
//! genus at most 10.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use puregaps::maximals::{gamma_hat_box, gamma_star, h_one_place, lambda_hat_box, lambda_star};
use puregaps::pure_gaps::{pure_gap_count, pure_gaps, pure_gaps_by_boxes};
use puregaps::semigroup::{permutation_closed, pure_gaps_from_relative_maximals};
use puregaps::{KummerCurve, Oracle, TupleZ};

mod common;
use common::{lattice_box, maximal_search_box, small_curves};

fn oracle_pure_gaps(c: &KummerCurve, n: usize) -> BTreeSet<TupleZ> {
    let o = Oracle::first_places(c, n).unwrap();
    let hi = vec![2 * c.genus(); n];
    lattice_box(&vec![0; n], &hi)
        .into_iter()
        .filter(|t| o.is_pure_gap(t).unwrap())
        .collect()
}

#[test]
fn pure_gaps_match_oracle_scan() {
    for c in small_curves(10) {
        for n in 2..=3usize.min(c.r() as usize) {
            let scanned = oracle_pure_gaps(&c, n);
            let streamed: BTreeSet<TupleZ> = pure_gaps(&c, n).unwrap().iter().collect();
            assert_eq!(streamed, scanned, "{c} n={n}");
            assert_eq!(
                pure_gap_count(&c, n).unwrap(),
                BigUint::from(scanned.len()),
                "{c} n={n}"
            );
            assert!(scanned.iter().all(TupleZ::is_positive));
            assert!(permutation_closed(&scanned));
        }
    }
}

#[test]
fn box_route_and_glb_route_agree() {
    for c in small_curves(10) {
        for n in 2..=c.max_n_pure_gaps().min(4) as usize {
            let boxes = pure_gaps_by_boxes(&c, n).unwrap();
            let glb = pure_gaps_from_relative_maximals(&lambda_star(&c, n).unwrap(), n).unwrap();
            assert_eq!(boxes, glb, "{c} n={n}");
        }
    }
}

#[test]
fn maximal_boxes_match_oracle_scan() {
    for c in small_curves(10) {
        for n in 2..=c.max_n_maximals().min(3) as usize {
            let o = Oracle::first_places(&c, n).unwrap();
            let candidates = maximal_search_box(&c, n);
            let relative: BTreeSet<TupleZ> = candidates
                .iter()
                .filter(|t| o.is_relative_maximal(t).unwrap())
                .cloned()
                .collect();
            let absolute: BTreeSet<TupleZ> = candidates
                .iter()
                .filter(|t| o.is_absolute_maximal(t).unwrap())
                .cloned()
                .collect();
            assert_eq!(
                relative,
                lambda_hat_box(&c, n).unwrap(),
                "{c} n={n} relative"
            );
            assert_eq!(
                absolute,
                gamma_hat_box(&c, n).unwrap(),
                "{c} n={n} absolute"
            );
        }
    }
}

#[test]
fn positive_maximals_match_oracle_scan() {
    for c in small_curves(8) {
        for n in 2..=c.max_n_maximals().min(3) as usize {
            let o = Oracle::first_places(&c, n).unwrap();
            let region = lattice_box(&vec![1; n], &vec![2 * c.genus() + n as i64; n]);
            let relative: BTreeSet<TupleZ> = region
                .iter()
                .filter(|t| o.is_relative_maximal(t).unwrap())
                .cloned()
                .collect();
            let absolute: BTreeSet<TupleZ> = region
                .iter()
                .filter(|t| o.is_absolute_maximal(t).unwrap())
                .cloned()
                .collect();
            assert_eq!(relative, lambda_star(&c, n).unwrap(), "{c} n={n}");
            assert_eq!(absolute, gamma_star(&c, n).unwrap(), "{c} n={n}");
        }
    }
}

#[test]
fn one_place_gaps_match_oracle() {
    for c in small_curves(10) {
        let o = Oracle::first_places(&c, 1).unwrap();
        let scanned: BTreeSet<i64> = (1..2 * c.genus())
            .filter(|&a| o.ell_of(&[a]) == o.ell_of(&[a - 1]))
            .collect();
        assert_eq!(h_one_place(&c, false).gaps, scanned, "{c}");
    }
}
