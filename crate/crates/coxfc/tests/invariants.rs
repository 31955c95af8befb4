//! Cross-module invariants: heap properties under random words, oracle
//! equivalences, and coherence between descents, peeling, and reductions.

use coxfc::families::coset_reps;
use coxfc::fc::{
    commutation_class, is_fc_reduced, is_fc_reduced_by_class, lex_min_class_member,
};
use coxfc::harness::{enumerate_fc, verify_fc_oracle};
use coxfc::star;
use coxfc::{heap_of, CoxeterGraph, Family, FcElement, RightMul, Word};
use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

fn affine(n: usize) -> CoxeterGraph {
    CoxeterGraph::new(Family::Ctilde, n).unwrap()
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2usize..=5).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(1..=n + 1, 0..=max_len),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_word_is_invariant_under_commuting_swaps((n, w) in word_strategy(10)) {
        let g = affine(n);
        let canon = heap_of(&w, &g).unwrap().canonical_word();
        for p in 0..w.len().saturating_sub(1) {
            if g.commutes(w[p], w[p + 1]).unwrap() {
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                prop_assert_eq!(
                    heap_of(&swapped, &g).unwrap().canonical_word(),
                    canon.clone()
                );
            }
        }
    }

    #[test]
    fn levels_decrease_strictly_upward((n, w) in word_strategy(10)) {
        let g = affine(n);
        let h = heap_of(&w, &g).unwrap();
        for a in 0..h.len() {
            for b in 0..h.len() {
                if h.is_below(a, b) {
                    prop_assert!(h.level(a) > h.level(b));
                }
                if h.is_cover(a, b) {
                    prop_assert!(h.level(a) >= h.level(b) + 1);
                }
            }
        }
        // top rows are exactly the entries with nothing above
        for i in 0..h.len() {
            let top = (0..h.len()).all(|j| !h.is_below(i, j));
            prop_assert_eq!(h.level(i) == 1, top);
        }
    }

    #[test]
    fn heap_of_canonical_word_round_trips((n, w) in word_strategy(10)) {
        let g = affine(n);
        let h = heap_of(&w, &g).unwrap();
        let c = h.canonical_word();
        let h2 = heap_of(&c, &g).unwrap();
        prop_assert_eq!(h2.canonical_word(), c.clone());
        prop_assert_eq!(h2.rows(), h.rows());
        prop_assert_eq!(h2.antichain_width(), h.antichain_width());
        // rebuilding from the canonical word is a fixed point
        let h3 = heap_of(&h2.canonical_word(), &g).unwrap();
        prop_assert_eq!(&h3, &h2);
    }

    #[test]
    fn antichain_width_matches_subset_search((n, w) in word_strategy(12)) {
        let g = affine(n);
        let h = heap_of(&w, &g).unwrap();
        // brute-force maximum independent set in the incomparability graph
        let mut best = 0usize;
        for mask in 0u32..(1 << h.len()) {
            let picked: Vec<usize> = (0..h.len()).filter(|&i| mask >> i & 1 == 1).collect();
            if picked.len() <= best {
                continue;
            }
            let independent = picked
                .iter()
                .enumerate()
                .all(|(idx, &a)| picked[idx + 1..].iter().all(|&b| !h.comparable(a, b)));
            if independent {
                best = picked.len();
            }
        }
        prop_assert_eq!(h.antichain_width(), best);
    }

    #[test]
    fn commutation_class_closure_properties((n, w) in word_strategy(8)) {
        let g = affine(n);
        let class = commutation_class(&w, &g).unwrap();
        prop_assert!(class.contains(&Word::from(w.as_slice())));
        let canon = heap_of(&w, &g).unwrap().canonical_word();
        let mut sorted_w = w.clone();
        sorted_w.sort_unstable();
        for member in &class {
            let mut sorted_m = member.letters().to_vec();
            sorted_m.sort_unstable();
            prop_assert_eq!(&sorted_m, &sorted_w);
            prop_assert_eq!(heap_of(member, &g).unwrap().canonical_word(), canon.clone());
        }
    }
}

#[test]
fn fc_test_agrees_with_class_criterion_exhaustively() {
    let report = verify_fc_oracle(2, 10).unwrap();
    assert!(report.matched, "{report:?}");
    let report = verify_fc_oracle(3, 8).unwrap();
    assert!(report.matched, "{report:?}");
}

#[test]
fn equal_elements_are_exactly_commutation_classes() {
    // over all words of length <= 6: two reduced fc words give the same
    // element iff they lie in the same commutation class
    let g = affine(2);
    let gens: Vec<usize> = g.generators().collect();
    let mut by_canonical: BTreeMap<Word, BTreeSet<Word>> = BTreeMap::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(w) = stack.pop() {
        if is_fc_reduced(&w, &g).unwrap() {
            let e = FcElement::from_word(&w, &g).unwrap();
            by_canonical
                .entry(e.canonical().clone())
                .or_default()
                .insert(Word::from(w.as_slice()));
            if w.len() < 6 {
                for &s in &gens {
                    let mut next = w.clone();
                    next.push(s);
                    stack.push(next);
                }
            }
        }
    }
    for (canonical, words) in by_canonical {
        let class = commutation_class(&canonical, &g).unwrap();
        assert_eq!(words, class, "words of {canonical} differ from its class");
    }
}

#[test]
fn descents_prefixes_and_length_changes_cohere() {
    let g = affine(3);
    for e in enumerate_fc(&g, Some(8)).unwrap() {
        for s in g.generators() {
            assert_eq!(
                e.left_descents().contains(&s),
                e.peel_prefix(&[s]).is_some()
            );
            assert_eq!(
                e.right_descents().contains(&s),
                e.peel_suffix(&[s]).is_some()
            );
            match e.multiply_right(s).unwrap() {
                RightMul::ShorterFc(r) => assert_eq!(r.len() + 1, e.len()),
                RightMul::LongerFc(r) => assert_eq!(r.len(), e.len() + 1),
                RightMul::LongerNotFc => {}
            }
        }
    }
}

#[test]
fn weak_star_moves_are_star_moves_and_stay_fc() {
    for (n, bound) in [(2, 10), (3, 8)] {
        let g = affine(n);
        for e in enumerate_fc(&g, Some(bound)).unwrap() {
            for mv in star::weak_star_moves(&e) {
                let star_ok = match mv.side {
                    star::Side::Left => star::is_left_star_reducible_by(&e, mv.s, mv.t),
                    star::Side::Right => star::is_right_star_reducible_by(&e, mv.s, mv.t),
                };
                assert!(star_ok, "weak move {mv} of {} is not a star move", e.canonical());
                let shorter = star::apply_move(&e, &mv).unwrap();
                assert_eq!(shorter.len() + 1, e.len());
                assert!(is_fc_reduced(shorter.canonical(), &g).unwrap());
            }
        }
    }
}

/// The prefix characterization: left weak-star reducibility by `s` w.r.t.
/// `t` is `w = stv` reduced when `m(s,t) = 3` and `w = stsv` reduced when
/// `m(s,t) = 4`; mirrored on the right.
fn prefix_form_left(e: &FcElement, s: usize, t: usize) -> bool {
    match e.graph().bond(s, t) {
        Ok(3) => e.peel_prefix(&[s, t]).is_some(),
        Ok(4) => e.peel_prefix(&[s, t, s]).is_some(),
        _ => false,
    }
}

fn prefix_form_right(e: &FcElement, s: usize, t: usize) -> bool {
    match e.graph().bond(s, t) {
        Ok(3) => e.peel_suffix(&[t, s]).is_some(),
        Ok(4) => e.peel_suffix(&[s, t, s]).is_some(),
        _ => false,
    }
}

/// The heap characterization: an order-maximal (resp. minimal) entry labeled
/// `s`, and prepending (resp. appending) `t` creates an impermissible
/// configuration.
fn heap_form_left(e: &FcElement, s: usize, t: usize) -> bool {
    if !e.left_descents().contains(&s) {
        return false;
    }
    let mut tw = vec![t];
    tw.extend_from_slice(e.canonical());
    !is_fc_reduced(&tw, e.graph()).unwrap()
}

fn heap_form_right(e: &FcElement, s: usize, t: usize) -> bool {
    if !e.right_descents().contains(&s) {
        return false;
    }
    let mut wt = e.canonical().letters().to_vec();
    wt.push(t);
    !is_fc_reduced(&wt, e.graph()).unwrap()
}

#[test]
fn weak_star_characterizations_coincide() {
    for (n, bound) in [(2, 10), (3, 10)] {
        let g = affine(n);
        for e in enumerate_fc(&g, Some(bound)).unwrap() {
            for s in g.generators() {
                for t in g.generators() {
                    if g.bond(s, t).unwrap() < 3 {
                        continue;
                    }
                    let def_l = star::is_left_weak_star_reducible_by(&e, s, t);
                    assert_eq!(
                        def_l,
                        prefix_form_left(&e, s, t),
                        "prefix form disagrees at {} ({s},{t})",
                        e.canonical()
                    );
                    assert_eq!(
                        def_l,
                        heap_form_left(&e, s, t),
                        "heap form disagrees at {} ({s},{t})",
                        e.canonical()
                    );
                    let def_r = star::is_right_weak_star_reducible_by(&e, s, t);
                    assert_eq!(def_r, prefix_form_right(&e, s, t));
                    assert_eq!(def_r, heap_form_right(&e, s, t));
                }
            }
        }
    }
}

/// Counts fully commutative elements by depth-first search over reduced fc
/// words, filtering with the commutation-class criterion and deduplicating
/// by the least member of each class. Independent of the breadth-first
/// enumeration and of the heap machinery.
fn dfs_class_count(g: &CoxeterGraph) -> usize {
    let gens: Vec<usize> = g.generators().collect();
    let mut keys: BTreeSet<Word> = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(w) = stack.pop() {
        keys.insert(lex_min_class_member(&w, g).unwrap());
        for &s in &gens {
            let mut next = w.clone();
            next.push(s);
            if is_fc_reduced_by_class(&next, g, 24).unwrap() {
                stack.push(next);
            }
        }
    }
    keys.len()
}

#[test]
fn greedy_lex_min_equals_class_minimum() {
    let g = affine(3);
    let gens: Vec<usize> = g.generators().collect();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(w) = stack.pop() {
        let closure_min = commutation_class(&w, &g)
            .unwrap()
            .into_iter()
            .next()
            .unwrap();
        assert_eq!(lex_min_class_member(&w, &g).unwrap(), closure_min);
        if w.len() < 5 {
            for &s in &gens {
                let mut next = w.clone();
                next.push(s);
                stack.push(next);
            }
        }
    }
}

#[test]
fn fc_counts_match_dfs_class_oracle() {
    for (n, expected) in [(2, 7), (3, 24), (4, 83)] {
        let g = CoxeterGraph::new(Family::B, n).unwrap();
        let enumerated = enumerate_fc(&g, None).unwrap().len();
        let counted = dfs_class_count(&g);
        assert_eq!(enumerated, counted);
        assert_eq!(enumerated, expected);
    }
}

#[test]
fn coset_reps_are_genuine_minimal_representatives() {
    // for every element of FC(B_k), exactly one representative peels off the
    // right with the remainder supported below k
    for k in 2..=4 {
        let g = CoxeterGraph::new(Family::B, k).unwrap();
        for e in enumerate_fc(&g, None).unwrap() {
            let hits = coset_reps(k)
                .into_iter()
                .filter(|cand| {
                    e.peel_suffix(cand)
                        .map(|rem| rem.support().iter().all(|&s| s < k))
                        .unwrap_or(false)
                })
                .count();
            assert_eq!(hits, 1, "element {} has {hits} candidates", e.canonical());
        }
    }
}

#[test]
fn reduce_fully_terminates_at_non_cancellable_elements() {
    let g = affine(3);
    for e in enumerate_fc(&g, Some(8)).unwrap() {
        let (result, trace) = star::reduce_fully(&e);
        assert!(star::is_non_cancellable(&result));
        assert_eq!(result.len() + trace.len(), e.len());
    }
}
