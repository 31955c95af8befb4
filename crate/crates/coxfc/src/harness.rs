//! Exhaustive enumeration of fully commutative elements and brute-force
//! verification of the classification results.

use crate::coxeter::{CoxeterGraph, Family};
use crate::error::{Error, Result};
use crate::families::{
    b_noncancellable_member, c_classification, is_commuting_product, type_i_words_up_to, type_ii,
    x_odd, BSide, Clause, Parity,
};
use crate::fc::{is_fc_reduced, is_fc_reduced_by_class, FcElement, RightMul};
use crate::star::{is_non_cancellable, is_star_reducible};
use crate::word::Word;
use serde::Serialize;
use std::collections::BTreeMap;

/// Largest rank the finite-type verifications run at.
pub const MAX_FINITE_RANK: usize = 6;

/// Witness lists are capped to keep reports readable.
pub const MAX_WITNESSES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    Bwsrm,
    AffineCwsrm,
    PropZigzags,
    StarRemark,
    OracleFc,
    NormalForm,
}

/// Outcome of one verification run. `extra` lists elements found irreducible
/// but unclassified, `missing` lists classified elements that turned out
/// reducible; both are empty exactly when `matched` holds.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub rank: usize,
    pub max_length: Option<usize>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub extra: Vec<Word>,
    pub missing: Vec<Word>,
    pub stats: BTreeMap<String, u64>,
}

impl VerificationReport {
    fn new(theorem: Theorem, rank: usize, max_length: Option<usize>) -> Self {
        VerificationReport {
            theorem,
            rank,
            max_length,
            matched: true,
            extra: Vec::new(),
            missing: Vec::new(),
            stats: BTreeMap::new(),
        }
    }

    fn push_extra(&mut self, w: Word) {
        self.matched = false;
        if self.extra.len() < MAX_WITNESSES {
            self.extra.push(w);
        }
    }

    fn push_missing(&mut self, w: Word) {
        self.matched = false;
        if self.missing.len() < MAX_WITNESSES {
            self.missing.push(w);
        }
    }

    fn bump(&mut self, key: &str) {
        *self.stats.entry(key.to_string()).or_insert(0) += 1;
    }
}

/// Visits every fully commutative element of length at most `max_length`
/// exactly once, ordered by length and then canonical word. The search is a
/// breadth-first closure under right multiplication, deduplicated by
/// canonical word.
pub(crate) fn for_each_fc<F>(
    g: &CoxeterGraph,
    max_length: Option<usize>,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&FcElement) -> Result<()>,
{
    if g.family() == Family::Ctilde && max_length.is_none() {
        return Err(Error::UnboundedEnumeration);
    }
    let identity = FcElement::identity(g);
    visit(&identity)?;
    let mut frontier = vec![identity];
    let mut produced = 0usize;
    while !frontier.is_empty() && max_length.map_or(true, |limit| produced < limit) {
        let mut next: BTreeMap<Word, FcElement> = BTreeMap::new();
        for e in &frontier {
            for s in g.generators() {
                if let RightMul::LongerFc(longer) = e.multiply_right(s)? {
                    next.entry(longer.canonical().clone()).or_insert(longer);
                }
            }
        }
        frontier = next.into_values().collect();
        for e in &frontier {
            visit(e)?;
        }
        produced += 1;
    }
    Ok(())
}

/// All fully commutative elements up to `max_length` (or all of them, for
/// the finite families), in the deterministic enumeration order.
pub fn enumerate_fc(g: &CoxeterGraph, max_length: Option<usize>) -> Result<Vec<FcElement>> {
    let mut out = Vec::new();
    for_each_fc(g, max_length, |e| {
        out.push(e.clone());
        Ok(())
    })?;
    Ok(out)
}

fn check_finite_rank(n: usize) -> Result<()> {
    if !(2..=MAX_FINITE_RANK).contains(&n) {
        return Err(Error::RankOutOfRange {
            rank: n,
            min: 2,
            max: MAX_FINITE_RANK,
        });
    }
    Ok(())
}

/// Compares non-cancellability against the type `B` membership list over all
/// of `FC(B_n)` and, mirrored, all of `FC(B'_n)`.
pub fn verify_theorem_b(n: usize) -> Result<VerificationReport> {
    check_finite_rank(n)?;
    let mut report = VerificationReport::new(Theorem::Bwsrm, n, None);
    for (family, side, tag) in [
        (Family::B, BSide::B, "b"),
        (Family::Bprime, BSide::Bprime, "bprime"),
    ] {
        let g = CoxeterGraph::new(family, n)?;
        for_each_fc(&g, None, |e| {
            let irreducible = is_non_cancellable(e);
            let member = b_noncancellable_member(e, side)?;
            report.bump(&format!("fc_{tag}"));
            if irreducible {
                report.bump(&format!("non_cancellable_{tag}"));
            }
            if irreducible && !member {
                report.push_extra(e.canonical().clone());
            }
            if member && !irreducible {
                report.push_missing(e.canonical().clone());
            }
            Ok(())
        })?;
    }
    Ok(report)
}

/// Compares non-cancellability against the affine classification over all
/// fully commutative elements of `C~_n` up to `max_length`. Truncation is
/// sound: both predicates depend only on the element itself.
pub fn verify_theorem_c(n: usize, max_length: usize) -> Result<VerificationReport> {
    let g = CoxeterGraph::new(Family::Ctilde, n)?;
    let mut report = VerificationReport::new(Theorem::AffineCwsrm, n, Some(max_length));
    for_each_fc(&g, Some(max_length), |e| {
        let irreducible = is_non_cancellable(e);
        let verdict = c_classification(e)?;
        report.bump("fc_total");
        report.bump(&format!("len_{}", e.len()));
        if irreducible {
            report.bump("non_cancellable");
            match verdict.clause {
                Some(Clause::GapProduct) => report.bump("clause_gap_product"),
                Some(Clause::TypeIEnd) => report.bump("clause_type_i_end"),
                Some(Clause::TypeII) => report.bump("clause_type_ii"),
                None => {}
            }
        }
        if irreducible && !verdict.member() {
            report.push_extra(e.canonical().clone());
        }
        if verdict.member() && !irreducible {
            report.push_missing(e.canonical().clone());
        }
        Ok(())
    })?;
    Ok(report)
}

/// Checks that the fully commutative elements with antichain width 1 are
/// exactly the structural type I chains.
pub fn verify_prop_zigzags(n: usize, max_length: usize) -> Result<VerificationReport> {
    let g = CoxeterGraph::new(Family::Ctilde, n)?;
    let chains = type_i_words_up_to(&g, max_length);
    let mut report = VerificationReport::new(Theorem::PropZigzags, n, Some(max_length));
    for_each_fc(&g, Some(max_length), |e| {
        if e.is_empty() {
            return Ok(());
        }
        report.bump("fc_total");
        let width_one = e.heap().antichain_width() == 1;
        let matched = chains.contains(e.canonical());
        if width_one {
            report.bump("width_one");
        }
        if matched {
            report.bump("type_i");
        }
        if width_one && !matched {
            report.push_extra(e.canonical().clone());
        }
        if matched && !width_one {
            report.push_missing(e.canonical().clone());
        }
        Ok(())
    })?;
    Ok(report)
}

/// Checks, for even `n`, that `(x_O x_E)^k x_O` is never star reducible for
/// `k = 1..=k_max`, and that every other non-cancellable element up to
/// `max_length` apart from products of commuting generators is star
/// reducible.
pub fn verify_star_remark(n: usize, k_max: usize, max_length: usize) -> Result<VerificationReport> {
    star_remark_report(n, k_max, max_length, false)
}

// `invert_claim` flips the expected reducibility of the (x_O x_E)^k x_O
// family; used to exercise the mismatch reporting path.
pub(crate) fn star_remark_report(
    n: usize,
    k_max: usize,
    max_length: usize,
    invert_claim: bool,
) -> Result<VerificationReport> {
    if n % 2 != 0 {
        return Err(Error::OddRank(n));
    }
    let g = CoxeterGraph::new(Family::Ctilde, n)?;
    let mut report = VerificationReport::new(Theorem::StarRemark, n, Some(max_length));
    report
        .stats
        .insert("k_max".to_string(), k_max as u64);

    let mut family_words = std::collections::BTreeSet::new();
    for k in 1..=k_max {
        let e = type_ii(&g, Parity::Odd, 2 * k + 1)?;
        family_words.insert(e.canonical().clone());
        report.bump("family_checked");
        let reducible = is_star_reducible(&e);
        if reducible != invert_claim {
            report.push_missing(e.canonical().clone());
        }
    }
    // members of the family inside the enumeration bound, whatever k
    for factors in (3..).step_by(2) {
        let e = type_ii(&g, Parity::Odd, factors)?;
        if e.len() > max_length {
            break;
        }
        family_words.insert(e.canonical().clone());
    }

    for_each_fc(&g, Some(max_length), |e| {
        if e.is_empty() || !is_non_cancellable(e) || is_commuting_product(e) {
            return Ok(());
        }
        report.bump("non_cancellable_non_commuting");
        if family_words.contains(e.canonical()) {
            if is_star_reducible(e) {
                report.push_missing(e.canonical().clone());
            }
        } else if !is_star_reducible(e) {
            report.push_extra(e.canonical().clone());
        }
        Ok(())
    })?;
    Ok(report)
}

/// Exhaustively compares the heap-based reducedness test against the
/// commutation-class criterion over every word of length at most
/// `max_length`.
pub fn verify_fc_oracle(n: usize, max_length: usize) -> Result<VerificationReport> {
    let g = CoxeterGraph::new(Family::Ctilde, n)?;
    let gens: Vec<usize> = g.generators().collect();
    let mut report = VerificationReport::new(Theorem::OracleFc, n, Some(max_length));
    let bound = max_length.max(crate::fc::DEFAULT_CLASS_BOUND);
    let mut word: Vec<usize> = Vec::new();
    loop {
        report.bump("words_checked");
        let fast = is_fc_reduced(&word, &g)?;
        let slow = is_fc_reduced_by_class(&word, &g, bound)?;
        if fast {
            report.bump("fc_words");
        }
        if fast && !slow {
            report.push_extra(Word::from(word.as_slice()));
        }
        if slow && !fast {
            report.push_missing(Word::from(word.as_slice()));
        }
        // odometer over all words of length <= max_length
        if word.len() < max_length {
            word.push(gens[0]);
            continue;
        }
        loop {
            match word.pop() {
                None => return Ok(report),
                Some(last) => {
                    let idx = gens.iter().position(|&s| s == last).expect("gen");
                    if idx + 1 < gens.len() {
                        word.push(gens[idx + 1]);
                        break;
                    }
                }
            }
        }
    }
}

/// Verifies the normal form factorization over all of `FC(B_n)`: it exists,
/// is unique among the coset representatives, recomposes to the element, and
/// has additive lengths.
pub fn verify_normal_form(n: usize) -> Result<VerificationReport> {
    check_finite_rank(n)?;
    let g = CoxeterGraph::new(Family::B, n)?;
    let mut report = VerificationReport::new(Theorem::NormalForm, n, None);
    for_each_fc(&g, None, |e| {
        report.bump("fc_total");
        match crate::families::normal_form_factorization(e) {
            Err(_) => report.push_extra(e.canonical().clone()),
            Ok(factors) => {
                let mut concat = Word::empty();
                for f in &factors {
                    concat = concat.concat(f);
                }
                let ok = concat.len() == e.len()
                    && FcElement::from_word(&concat, &g)
                        .map(|back| back == *e)
                        .unwrap_or(false);
                if !ok {
                    report.push_extra(e.canonical().clone());
                }
            }
        }
        Ok(())
    })?;
    Ok(report)
}

/// Measured antichain widths of the alternating products, recorded per
/// element.
#[derive(Debug, Clone, Serialize)]
pub struct TypeIiWidthEntry {
    pub start: String,
    pub factors: usize,
    pub length: usize,
    pub width: usize,
    pub has_odd_factor: bool,
}

/// Instrumentation for the width of type II elements. For every element
/// containing an `x_O` factor the measured width equals `lambda + 1` with
/// `lambda = ceil((n - 1) / 2)`; `all_match` records that. The lone
/// exception is the single-factor `x_E`, which is listed but not asserted.
#[derive(Debug, Clone, Serialize)]
pub struct TypeIiWidthReport {
    pub rank: usize,
    pub lambda: usize,
    pub expected_width: usize,
    pub entries: Vec<TypeIiWidthEntry>,
    pub all_match: bool,
}

pub fn measure_type_ii_widths(n: usize, max_factors: usize) -> Result<TypeIiWidthReport> {
    let g = CoxeterGraph::new(Family::Ctilde, n)?;
    let lambda = n / 2; // = ceil((n - 1) / 2)
    let expected = lambda + 1;
    debug_assert_eq!(expected, x_odd(&g).len());
    let mut entries = Vec::new();
    let mut all_match = true;
    for start in [Parity::Odd, Parity::Even] {
        for factors in 1..=max_factors {
            let e = type_ii(&g, start, factors)?;
            let width = e.heap().antichain_width();
            let has_odd_factor = start == Parity::Odd || factors >= 2;
            if has_odd_factor && width != expected {
                all_match = false;
            }
            entries.push(TypeIiWidthEntry {
                start: start.as_str().to_string(),
                factors,
                length: e.len(),
                width,
                has_odd_factor,
            });
        }
    }
    Ok(TypeIiWidthReport {
        rank: n,
        lambda,
        expected_width: expected,
        entries,
        all_match,
    })
}
