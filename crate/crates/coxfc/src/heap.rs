//! The heap poset of a word and its canonical leveled representation.
//!
//! For a word `s_{x_1} ... s_{x_r}` the heap is the partial order on the
//! letter positions `0..r` generated by `j < i` (as positions) and `s_{x_i}`,
//! `s_{x_j}` not commuting, taken with *earlier* positions on top: position
//! `j` sits strictly *below* position `i` whenever `i < j` and the labels do
//! not commute. The order depends only on the commutation class of the word.
//!
//! Levels realize the "as high as possible" placement: an entry's level is
//! one more than the maximum level of the entries strictly above it, with
//! top entries at level 1. Reading the rows top to bottom, letters within a
//! row in ascending order, gives the canonical word of the class.

use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::word::Word;

/// Hard limit on heap size; entries are tracked in 128-bit masks.
pub const MAX_HEAP_ENTRIES: usize = 128;

/// The heap of a word: labels, strict order (as above/below bitmasks), and
/// canonical levels. Entries are indexed by letter position in the word the
/// heap was built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Heap {
    labels: Vec<usize>,
    above: Vec<u128>,
    below: Vec<u128>,
    levels: Vec<u32>,
    col_lo: usize,
    col_hi: usize,
}

/// Builds the heap of `w` over `g`.
pub fn heap_of(w: &[usize], g: &CoxeterGraph) -> Result<Heap> {
    g.validate_word(w)?;
    let r = w.len();
    if r > MAX_HEAP_ENTRIES {
        return Err(Error::WordTooLong {
            len: r,
            max: MAX_HEAP_ENTRIES,
        });
    }
    let mut above = vec![0u128; r];
    let mut levels = vec![0u32; r];
    for i in 0..r {
        let mut mask = 0u128;
        let mut level = 0u32;
        for j in 0..i {
            if !g.commutes_unchecked(w[i], w[j]) {
                mask |= (1 << j) | above[j];
                level = level.max(levels[j]);
            }
        }
        above[i] = mask;
        levels[i] = level + 1;
    }
    let mut below = vec![0u128; r];
    for i in 0..r {
        let mut m = above[i];
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            below[j] |= 1 << i;
            m &= m - 1;
        }
    }
    Ok(Heap {
        labels: w.to_vec(),
        above,
        below,
        levels,
        col_lo: g.min_generator(),
        col_hi: g.max_generator(),
    })
}

impl Heap {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The generator labeling entry `i`, i.e. its column.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Canonical level of entry `i`; level 1 is the top row.
    pub fn level(&self, i: usize) -> usize {
        self.levels[i] as usize
    }

    pub fn num_rows(&self) -> usize {
        self.levels.iter().copied().max().unwrap_or(0) as usize
    }

    pub(crate) fn above_mask(&self, i: usize) -> u128 {
        self.above[i]
    }

    pub(crate) fn below_mask(&self, i: usize) -> u128 {
        self.below[i]
    }

    /// True iff entry `a` is strictly below entry `b` in the heap order.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.above[a] >> b & 1 == 1
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.is_below(a, b) || self.is_below(b, a)
    }

    /// True iff `upper` covers `lower`: `lower` is strictly below `upper`
    /// with no entry in between.
    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.is_below(lower, upper) && self.above[lower] & self.below[upper] == 0
    }

    /// Labels of the `k`-th canonical row (1-based), in ascending order.
    pub fn row(&self, k: usize) -> Vec<usize> {
        let mut row: Vec<usize> = (0..self.len())
            .filter(|&i| self.levels[i] as usize == k)
            .map(|i| self.labels[i])
            .collect();
        row.sort_unstable();
        row
    }

    /// All canonical rows, top row first.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.num_rows()).map(|k| self.row(k)).collect()
    }

    /// The canonical word: rows top to bottom, ascending within a row. Two
    /// words over the same graph lie in the same commutation class iff their
    /// canonical words are equal.
    pub fn canonical_word(&self) -> Word {
        let mut keyed: Vec<(u32, usize)> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (self.levels[i], l))
            .collect();
        keyed.sort_unstable();
        keyed.into_iter().map(|(_, l)| l).collect()
    }

    /// Labels of the order-maximal entries (the top row). For the heap of a
    /// reduced word of a fully commutative element this is the left descent
    /// set.
    pub fn left_descents(&self) -> std::collections::BTreeSet<usize> {
        (0..self.len())
            .filter(|&i| self.above[i] == 0)
            .map(|i| self.labels[i])
            .collect()
    }

    /// Labels of the order-minimal entries; the right descent set for heaps
    /// of reduced words of fully commutative elements.
    pub fn right_descents(&self) -> std::collections::BTreeSet<usize> {
        (0..self.len())
            .filter(|&i| self.below[i] == 0)
            .map(|i| self.labels[i])
            .collect()
    }

    /// Order convexity of a set of entries: for all `x < y < z` with `x, z`
    /// in the set, `y` is in the set too.
    pub fn is_convex(&self, positions: &[usize]) -> bool {
        let mut set = 0u128;
        for &p in positions {
            set |= 1 << p;
        }
        for y in 0..self.len() {
            if set >> y & 1 == 1 {
                continue;
            }
            if self.below[y] & set != 0 && self.above[y] & set != 0 {
                return false;
            }
        }
        true
    }

    /// Maximum size of a pairwise-incomparable set of entries; 0 for the
    /// empty heap.
    ///
    /// Entries sharing a column are always comparable, so an antichain picks
    /// at most one entry per column; the search branches over columns.
    pub fn antichain_width(&self) -> usize {
        let mut columns: Vec<Vec<usize>> = Vec::new();
        for c in self.col_lo..=self.col_hi {
            let col: Vec<usize> = (0..self.len()).filter(|&i| self.labels[i] == c).collect();
            if !col.is_empty() {
                columns.push(col);
            }
        }
        let mut best = 0;
        let mut chosen: Vec<usize> = Vec::new();
        self.antichain_search(&columns, 0, &mut chosen, &mut best);
        best
    }

    fn antichain_search(
        &self,
        columns: &[Vec<usize>],
        next: usize,
        chosen: &mut Vec<usize>,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        if next == columns.len() || chosen.len() + (columns.len() - next) <= *best {
            return;
        }
        // skip this column
        self.antichain_search(columns, next + 1, chosen, best);
        for &cand in &columns[next] {
            if chosen.iter().all(|&c| !self.comparable(c, cand)) {
                chosen.push(cand);
                self.antichain_search(columns, next + 1, chosen, best);
                chosen.pop();
            }
        }
    }

    /// ASCII rendering of the canonical representation: one line per row,
    /// top row first; one 4-character cell per generator column in ascending
    /// order. Occupied cells print the generator index right-aligned in 3
    /// characters plus a trailing space; empty cells print `"  . "`.
    pub fn render_ascii(&self) -> String {
        let mut lines = Vec::with_capacity(self.num_rows());
        for k in 1..=self.num_rows() {
            let row = self.row(k);
            let mut line = String::new();
            for c in self.col_lo..=self.col_hi {
                if row.contains(&c) {
                    line.push_str(&format!("{c:>3} "));
                } else {
                    line.push_str("  . ");
                }
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}
