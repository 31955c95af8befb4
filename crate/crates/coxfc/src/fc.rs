//! Full commutativity: reducedness tests, element values, and the
//! commutation-class brute-force oracle.
//!
//! A word is a reduced expression of a fully commutative element iff its
//! heap contains no convex chain of two equal labels (the word is not
//! reduced) and no convex alternating chain in two noncommuting labels `s`,
//! `t` of length `m(s, t)` (a braid is reachable). In these path-shaped
//! graphs the only noncommuting pairs are adjacent columns, so the search
//! scans each column for consecutive equal labels and each adjacent column
//! pair for alternating windows, checking convexity against the heap order.

use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::heap::{heap_of, Heap};
use crate::word::Word;
use std::collections::{BTreeSet, VecDeque};

/// Default cap for commutation-class closures.
pub const DEFAULT_CLASS_BOUND: usize = 14;

pub(crate) struct Violation {
    pub positions: Vec<usize>,
    pub letters: Vec<usize>,
}

pub(crate) fn find_violation(w: &[usize], g: &CoxeterGraph) -> Result<Option<Violation>> {
    let h = heap_of(w, g)?;
    // Convex pair of equal labels: the word is not reduced.
    for c in g.generators() {
        let occ: Vec<usize> = (0..w.len()).filter(|&p| w[p] == c).collect();
        for win in occ.windows(2) {
            let (upper, lower) = (win[0], win[1]);
            if h.above_mask(lower) & h.below_mask(upper) == 0 {
                return Ok(Some(Violation {
                    positions: vec![upper, lower],
                    letters: vec![c, c],
                }));
            }
        }
    }
    // Convex alternating chain of length m(c, c+1) on an adjacent pair.
    for c in g.min_generator()..g.max_generator() {
        let m = g.bond_unchecked(c, c + 1) as usize;
        let merged: Vec<usize> = (0..w.len())
            .filter(|&p| w[p] == c || w[p] == c + 1)
            .collect();
        for win in merged.windows(m) {
            if !win.windows(2).all(|pq| w[pq[0]] != w[pq[1]]) {
                continue;
            }
            let mut window_mask = 0u128;
            for &p in win {
                window_mask |= 1 << p;
            }
            let between = h.above_mask(win[m - 1]) & h.below_mask(win[0]);
            if between & !window_mask == 0 {
                return Ok(Some(Violation {
                    positions: win.to_vec(),
                    letters: win.iter().map(|&p| w[p]).collect(),
                }));
            }
        }
    }
    Ok(None)
}

/// True iff `w` is a reduced expression of a fully commutative element.
pub fn is_fc_reduced(w: &[usize], g: &CoxeterGraph) -> Result<bool> {
    Ok(find_violation(w, g)?.is_none())
}

/// All words reachable from `w` by swaps of adjacent commuting letters,
/// using the default length bound.
pub fn commutation_class(w: &[usize], g: &CoxeterGraph) -> Result<BTreeSet<Word>> {
    commutation_class_bounded(w, g, DEFAULT_CLASS_BOUND)
}

/// Commutation-class closure with an explicit length bound.
pub fn commutation_class_bounded(
    w: &[usize],
    g: &CoxeterGraph,
    bound: usize,
) -> Result<BTreeSet<Word>> {
    g.validate_word(w)?;
    if w.len() > bound {
        return Err(Error::ClassBoundExceeded {
            len: w.len(),
            bound,
        });
    }
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(Word::from(w));
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for p in 0..cur.len().saturating_sub(1) {
            if g.commutes_unchecked(cur[p], cur[p + 1]) {
                let mut next = cur.clone();
                next.swap(p, p + 1);
                if seen.insert(Word::new(next.clone())) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

fn has_forbidden_factor(v: &[usize], g: &CoxeterGraph) -> bool {
    for p in 0..v.len().saturating_sub(1) {
        let (s, t) = (v[p], v[p + 1]);
        if s == t {
            return true;
        }
        let m = g.bond_unchecked(s, t) as usize;
        if m >= 3
            && p + m <= v.len()
            && (p..p + m).all(|q| v[q] == if (q - p) % 2 == 0 { s } else { t })
        {
            return true;
        }
    }
    false
}

/// Brute-force full-commutativity criterion, independent of the heap
/// machinery: `w` is a reduced word of a fully commutative element iff no
/// member of its commutation class contains two adjacent equal letters or a
/// contiguous braid factor `s t s ...` of length `m(s, t) >= 3`. Members are
/// scanned as the closure grows, so a negative answer returns early.
pub fn is_fc_reduced_by_class(w: &[usize], g: &CoxeterGraph, bound: usize) -> Result<bool> {
    g.validate_word(w)?;
    if w.len() > bound {
        return Err(Error::ClassBoundExceeded {
            len: w.len(),
            bound,
        });
    }
    if has_forbidden_factor(w, g) {
        return Ok(false);
    }
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for p in 0..cur.len().saturating_sub(1) {
            if g.commutes_unchecked(cur[p], cur[p + 1]) {
                let mut next = cur.clone();
                next.swap(p, p + 1);
                if seen.insert(next.clone()) {
                    if has_forbidden_factor(&next, g) {
                        return Ok(false);
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(true)
}

/// Lexicographically least member of the commutation class, computed
/// greedily without building the closure: repeatedly emit the smallest
/// letter that commutes past everything before it. Serves as an
/// implementation-independent deduplication key for class counting.
pub fn lex_min_class_member(w: &[usize], g: &CoxeterGraph) -> Result<Word> {
    g.validate_word(w)?;
    let mut rest = w.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for (i, &l) in rest.iter().enumerate() {
            if rest[..i].iter().all(|&m| g.commutes_unchecked(l, m)) {
                match best {
                    Some(b) if rest[b] <= l => {}
                    _ => best = Some(i),
                }
            }
        }
        let i = best.expect("the first letter is always available");
        out.push(rest.remove(i));
    }
    Ok(Word::new(out))
}

/// A fully commutative element, identified by the canonical word of its
/// heap. Equality and hashing go through the canonical word, which is sound
/// because a fully commutative element has a single commutation class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FcElement {
    graph: CoxeterGraph,
    canonical: Word,
    heap: Heap,
}

/// Outcome of multiplying an element by a generator on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RightMul {
    /// The generator was a right descent; the product is one letter shorter.
    ShorterFc(FcElement),
    /// The product is longer and still fully commutative.
    LongerFc(FcElement),
    /// The product is longer but not fully commutative; no element value is
    /// carried since equality is only defined for fully commutative elements.
    LongerNotFc,
}

impl FcElement {
    /// Wraps `w` as an element, failing with the offending convex chain if
    /// `w` is not a reduced word of a fully commutative element.
    pub fn from_word(w: &[usize], g: &CoxeterGraph) -> Result<FcElement> {
        if let Some(v) = find_violation(w, g)? {
            return Err(Error::NotFcReduced {
                letters: v.letters,
                positions: v.positions,
            });
        }
        let canonical = heap_of(w, g)?.canonical_word();
        let heap = heap_of(&canonical, g)?;
        Ok(FcElement {
            graph: g.clone(),
            canonical,
            heap,
        })
    }

    pub fn identity(g: &CoxeterGraph) -> FcElement {
        FcElement::from_word(&[], g).expect("empty word is always reduced")
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    /// The canonical word; also a reduced expression of the element.
    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    /// The heap, with entries indexed in canonical-word order.
    pub fn heap(&self) -> &Heap {
        &self.heap
    }

    /// Coxeter length, the number of heap entries.
    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Set of generators appearing in the element.
    pub fn support(&self) -> BTreeSet<usize> {
        self.canonical.iter().copied().collect()
    }

    pub fn left_descents(&self) -> BTreeSet<usize> {
        self.heap.left_descents()
    }

    pub fn right_descents(&self) -> BTreeSet<usize> {
        self.heap.right_descents()
    }

    /// Multiplies by `s` on the right and classifies the result.
    pub fn multiply_right(&self, s: usize) -> Result<RightMul> {
        self.graph.bond(s, s)?; // unknown-generator check
        if self.right_descents().contains(&s) {
            // the minimal s-entry is the last occurrence of s in the
            // canonical word; it can be commuted to the end and cancelled
            let pos = self
                .canonical
                .iter()
                .rposition(|&l| l == s)
                .expect("descent letter occurs");
            let mut w = self.canonical.letters().to_vec();
            w.remove(pos);
            let shorter = FcElement::from_word(&w, &self.graph)
                .expect("removing a minimal entry keeps the word reduced and fully commutative");
            return Ok(RightMul::ShorterFc(shorter));
        }
        let mut w = self.canonical.letters().to_vec();
        w.push(s);
        match find_violation(&w, &self.graph)? {
            None => Ok(RightMul::LongerFc(
                FcElement::from_word(&w, &self.graph).expect("violation-free word"),
            )),
            Some(_) => Ok(RightMul::LongerNotFc),
        }
    }

    /// Strips the prefix `p`, requiring each letter in turn to be a left
    /// descent of the remainder. Returns `None` when `p` is not a prefix of
    /// any reduced expression of the element.
    pub fn peel_prefix(&self, p: &[usize]) -> Option<FcElement> {
        let mut cur = self.clone();
        for &a in p {
            if !cur.left_descents().contains(&a) {
                return None;
            }
            let pos = cur
                .canonical
                .iter()
                .position(|&l| l == a)
                .expect("descent letter occurs");
            let mut w = cur.canonical.letters().to_vec();
            w.remove(pos);
            cur = FcElement::from_word(&w, &cur.graph)
                .expect("removing a maximal entry keeps the word reduced and fully commutative");
        }
        Some(cur)
    }

    /// Mirror of [`peel_prefix`](Self::peel_prefix): strips the suffix `p`,
    /// peeling its letters from the right end inward.
    pub fn peel_suffix(&self, p: &[usize]) -> Option<FcElement> {
        let mut cur = self.clone();
        for &a in p.iter().rev() {
            if !cur.right_descents().contains(&a) {
                return None;
            }
            let pos = cur
                .canonical
                .iter()
                .rposition(|&l| l == a)
                .expect("descent letter occurs");
            let mut w = cur.canonical.letters().to_vec();
            w.remove(pos);
            cur = FcElement::from_word(&w, &cur.graph)
                .expect("removing a minimal entry keeps the word reduced and fully commutative");
        }
        Some(cur)
    }
}
