//! Lemma-level properties checked by brute force over enumerated elements:
//! the zigzag subword criterion, the above-diagonal shape of normal form
//! factorizations, cover constraints on heaps of non-cancellable elements,
//! and the alternating-row stacking of odd and even rows.

use coxfc::families::{
    is_type_i, normal_form_factorization, x_even, x_odd, z_dir, ZigzagDir,
};
use coxfc::fc::commutation_class_bounded;
use coxfc::harness::enumerate_fc;
use coxfc::star::is_non_cancellable;
use coxfc::{CoxeterGraph, Family, FcElement, Word};

fn affine(n: usize) -> CoxeterGraph {
    CoxeterGraph::new(Family::Ctilde, n).unwrap()
}

/// True iff some member of the commutation class contains `factor` as a
/// contiguous subword; equivalently, the factor's chain is a convex subheap.
fn class_has_factor(e: &FcElement, factor: &[usize]) -> bool {
    for member in commutation_class_bounded(e.canonical(), e.graph(), 16).unwrap() {
        if member
            .letters()
            .windows(factor.len())
            .any(|win| win == factor)
        {
            return true;
        }
    }
    false
}

#[test]
fn zigzag_subwords_force_type_i() {
    for (n, bound) in [(2usize, 12usize), (3, 10)] {
        let g = affine(n);
        let markers = [
            z_dir(&g, ZigzagDir::L, 2, 2, n).unwrap(),
            z_dir(&g, ZigzagDir::R, 2, n, 2).unwrap(),
            z_dir(&g, ZigzagDir::R, 2, 1, 1).unwrap(),
            z_dir(&g, ZigzagDir::L, 2, n + 1, n + 1).unwrap(),
        ];
        for e in enumerate_fc(&g, Some(bound)).unwrap() {
            if markers.iter().any(|m| class_has_factor(&e, m)) {
                assert!(
                    is_type_i(&e),
                    "{} contains a zigzag marker but is not type I",
                    e.canonical()
                );
            }
        }
    }
}

#[test]
fn factorizations_above_a_full_run_are_full_runs_or_empty() {
    for n in 2..=4 {
        let g = CoxeterGraph::new(Family::B, n).unwrap();
        for e in enumerate_fc(&g, None).unwrap() {
            let factors = normal_form_factorization(&e).unwrap();
            for k in 1..=n {
                let full_run: Word = (1..=k).rev().collect();
                if factors[k - 1] != full_run {
                    continue;
                }
                for i in 1..k {
                    let run_i: Word = (1..=i).rev().collect();
                    assert!(
                        factors[i - 1].is_empty() || factors[i - 1] == run_i,
                        "factorization of {} breaks above the run at k = {k}",
                        e.canonical()
                    );
                }
            }
        }
    }
}

/// Finds the heap entries labeled `label` and returns, for each, the labels
/// of the entries covering it.
fn covering_labels(e: &FcElement, entry: usize) -> Vec<usize> {
    let h = e.heap();
    (0..h.len())
        .filter(|&j| h.is_cover(entry, j))
        .map(|j| h.label(j))
        .collect()
}

#[test]
fn interior_entries_of_irreducible_heaps_are_covered_on_both_sides() {
    // over rank >= 4: entries away from the four boundary columns, below the
    // top row, are covered by both neighbors
    for (n, bound) in [(4usize, 10usize), (5, 10)] {
        let g = affine(n);
        for e in enumerate_fc(&g, Some(bound)).unwrap() {
            if !is_non_cancellable(&e) || is_type_i(&e) {
                continue;
            }
            let h = e.heap();
            for entry in 0..h.len() {
                let i = h.label(entry);
                if h.level(entry) < 2 || [1, 2, n, n + 1].contains(&i) {
                    continue;
                }
                let covers = covering_labels(&e, entry);
                assert!(
                    covers.contains(&(i - 1)) && covers.contains(&(i + 1)),
                    "entry s{i} of {} lacks a neighbor cover",
                    e.canonical()
                );
            }
        }
    }
}

#[test]
fn near_end_entries_covered_inward_are_covered_by_the_end() {
    // an entry labeled s_2 covered by s_3 must also be covered by s_1, and
    // mirrored at the high end
    for (n, bound) in [(3usize, 12usize), (4, 10), (5, 10)] {
        let g = affine(n);
        for e in enumerate_fc(&g, Some(bound)).unwrap() {
            if !is_non_cancellable(&e) || is_type_i(&e) {
                continue;
            }
            let h = e.heap();
            for entry in 0..h.len() {
                let covers = covering_labels(&e, entry);
                if h.label(entry) == 2 && covers.contains(&3) {
                    assert!(
                        covers.contains(&1),
                        "s2 entry of {} covered by s3 but not s1",
                        e.canonical()
                    );
                }
                if h.label(entry) == n && covers.contains(&(n - 1)) {
                    assert!(
                        covers.contains(&(n + 1)),
                        "s{n} entry of {} covered by s{} but not s{}",
                        e.canonical(),
                        n - 1,
                        n + 1
                    );
                }
            }
        }
    }
}

#[test]
fn odd_and_even_rows_stack_alternately() {
    // hypotheses vary by rank: rank 2 excludes type I, rank 4 requires full
    // support, ranks 3 and above 4 need non-cancellability only
    for (n, bound) in [(2usize, 12usize), (3, 12), (4, 10), (5, 10)] {
        let g = affine(n);
        let odd = x_odd(&g).letters().to_vec();
        let even = x_even(&g).letters().to_vec();
        let full: std::collections::BTreeSet<usize> = g.generators().collect();
        for e in enumerate_fc(&g, Some(bound)).unwrap() {
            if !is_non_cancellable(&e) {
                continue;
            }
            if n == 2 && is_type_i(&e) {
                continue;
            }
            if n == 4 && e.support() != full {
                continue;
            }
            let rows = e.heap().rows();
            for idx in 1..rows.len() {
                if rows[idx] == odd {
                    assert_eq!(
                        rows[idx - 1],
                        even,
                        "row above an odd row of {} is not the even row",
                        e.canonical()
                    );
                }
                if rows[idx] == even {
                    assert_eq!(
                        rows[idx - 1],
                        odd,
                        "row above an even row of {} is not the odd row",
                        e.canonical()
                    );
                }
            }
        }
    }
}
