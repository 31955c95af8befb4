//! The named element families and the classification of non-cancellable
//! elements.
//!
//! Zigzag words (type I) are the rigid chains that run back and forth
//! between the two columns carrying bond 4. Type II elements are alternating
//! products of `x_O` (all odd generators) and `x_E` (all even generators).
//! Together with products over a missing generator built from the finite
//! type B lists, these account for every non-cancellable fully commutative
//! element of the affine family; the [`harness`](crate::harness) checks this
//! exhaustively.

use crate::coxeter::{CoxeterGraph, Family};
use crate::error::{Error, Result};
use crate::fc::FcElement;
use crate::word::Word;
use std::collections::BTreeSet;

/// Ascending or descending run of consecutive generators (no graph checks).
fn z_run(i: usize, j: usize) -> Vec<usize> {
    if i <= j {
        (i..=j).collect()
    } else {
        (j..=i).rev().collect()
    }
}

/// The run `z_{i,j}`: `s_i s_{i+1} ... s_j` when `i < j`, the descending run
/// when `i > j`, and the single letter `s_i` when `i = j`.
pub fn z(g: &CoxeterGraph, i: usize, j: usize) -> Result<Word> {
    g.validate_word(&[i, j])?;
    Ok(Word::new(z_run(i, j)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZigzagDir {
    L,
    R,
}

impl ZigzagDir {
    fn as_str(self) -> &'static str {
        match self {
            ZigzagDir::L => "L",
            ZigzagDir::R => "R",
        }
    }
}

/// The zigzag word `z^{dir,c}_{i,j}` over the affine graph `g`.
///
/// With `n` the rank parameter and writing `c = 2k` or `c = 2k + 1`:
///
/// * `L, 2k` (`k >= 1`, `1 < i <= n+1`, `1 < j <= n+1`):
///   `z_{i,2} (z_{1,n} z_{n+1,2})^{k-1} z_{1,n} z_{n+1,j}`
/// * `L, 2k+1` (`k >= 0`, `1 < i <= n+1`, `1 <= j < n+1`):
///   `z_{i,2} (z_{1,n} z_{n+1,2})^{k} z_{1,j}`
/// * `R, 2k` (`k >= 1`, `1 <= i < n+1`, `1 <= j < n+1`):
///   `z_{i,n} (z_{n+1,2} z_{1,n})^{k-1} z_{n+1,2} z_{1,j}`
/// * `R, 2k+1` (`k >= 0`, `1 <= i < n+1`, `1 < j <= n+1`):
///   `z_{i,n} (z_{n+1,2} z_{1,n})^{k} z_{n+1,j}`
///
/// Every output is a rigid reduced word of a fully commutative element.
pub fn z_dir(g: &CoxeterGraph, dir: ZigzagDir, c: usize, i: usize, j: usize) -> Result<Word> {
    require_affine(g)?;
    let n = g.rank();
    let bad = || Error::InvalidZigzag {
        dir: dir.as_str().to_string(),
        c,
        i,
        j,
        rank: n,
    };
    if c == 0 {
        return Err(bad());
    }
    let even = c % 2 == 0;
    let k = c / 2;
    let mut w: Vec<usize> = Vec::new();
    match (dir, even) {
        (ZigzagDir::L, true) => {
            if !(1 < i && i <= n + 1 && 1 < j && j <= n + 1) {
                return Err(bad());
            }
            w.extend(z_run(i, 2));
            for _ in 0..k - 1 {
                w.extend(z_run(1, n));
                w.extend(z_run(n + 1, 2));
            }
            w.extend(z_run(1, n));
            w.extend(z_run(n + 1, j));
        }
        (ZigzagDir::L, false) => {
            if !(1 < i && i <= n + 1 && 1 <= j && j < n + 1) {
                return Err(bad());
            }
            w.extend(z_run(i, 2));
            for _ in 0..k {
                w.extend(z_run(1, n));
                w.extend(z_run(n + 1, 2));
            }
            w.extend(z_run(1, j));
        }
        (ZigzagDir::R, true) => {
            if !(1 <= i && i < n + 1 && 1 <= j && j < n + 1) {
                return Err(bad());
            }
            w.extend(z_run(i, n));
            for _ in 0..k - 1 {
                w.extend(z_run(n + 1, 2));
                w.extend(z_run(1, n));
            }
            w.extend(z_run(n + 1, 2));
            w.extend(z_run(1, j));
        }
        (ZigzagDir::R, false) => {
            if !(1 <= i && i < n + 1 && 1 < j && j <= n + 1) {
                return Err(bad());
            }
            w.extend(z_run(i, n));
            for _ in 0..k {
                w.extend(z_run(n + 1, 2));
                w.extend(z_run(1, n));
            }
            w.extend(z_run(n + 1, j));
        }
    }
    Ok(Word::new(w))
}

fn require_affine(g: &CoxeterGraph) -> Result<()> {
    if g.family() == Family::Ctilde {
        Ok(())
    } else {
        Err(Error::WrongFamily {
            expected: Family::Ctilde.as_str().to_string(),
            got: g.family().as_str().to_string(),
        })
    }
}

/// Product of all odd-indexed generators of `g`, ascending.
pub fn x_odd(g: &CoxeterGraph) -> Word {
    g.generators().filter(|s| s % 2 == 1).collect()
}

/// Product of all even-indexed generators of `g`, ascending.
pub fn x_even(g: &CoxeterGraph) -> Word {
    g.generators().filter(|s| s % 2 == 0).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Odd => Parity::Even,
            Parity::Even => Parity::Odd,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

fn type_ii_word(g: &CoxeterGraph, start: Parity, factors: usize) -> Word {
    let odd = x_odd(g);
    let even = x_even(g);
    let mut w = Word::empty();
    let mut parity = start;
    for _ in 0..factors {
        let factor = match parity {
            Parity::Odd => &odd,
            Parity::Even => &even,
        };
        w = w.concat(factor);
        parity = parity.flip();
    }
    w
}

/// The alternating product of `x_O` and `x_E` with the given first factor
/// and factor count, as a fully commutative element.
pub fn type_ii(g: &CoxeterGraph, start: Parity, factors: usize) -> Result<FcElement> {
    require_affine(g)?;
    if factors == 0 {
        return Err(Error::EmptyProduct);
    }
    let w = type_ii_word(g, start, factors);
    FcElement::from_word(&w, g)
}

/// The `2k` minimum-length representatives of the right cosets of
/// `W(B_{k-1})` in `W(B_k)`: the identity, the descending runs `z_{k,m}` for
/// `m = k..1`, and `z_{k,2} z_{1,j}` for `j = 2..k`.
pub fn coset_reps(k: usize) -> Vec<Word> {
    assert!(k >= 1, "coset representatives need k >= 1");
    let mut reps = vec![Word::empty()];
    for m in (1..=k).rev() {
        reps.push(Word::new(z_run(k, m)));
    }
    for j in 2..=k {
        let mut w = z_run(k, 2);
        w.extend(z_run(1, j));
        reps.push(Word::new(w));
    }
    reps
}

/// True iff the element is a product of pairwise-commuting generators
/// (including the empty product).
pub fn is_commuting_product(e: &FcElement) -> bool {
    let w = e.canonical();
    let g = e.graph();
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if !g.commutes_unchecked(w[a], w[b]) {
                return false;
            }
        }
    }
    true
}

/// Which end of the diagram a finite-type membership test anchors at:
/// `B` uses `s_1, s_2, s_3`, `Bprime` the mirror `s_{n+1}, s_n, s_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BSide {
    B,
    Bprime,
}

/// Membership in the classified list of type `B` (resp. `B'`)
/// non-cancellable elements: a product of commuting generators, or
/// `s_1 s_2 u` / `s_2 s_1 u` with `u` a product of commuting generators and
/// `s_1, s_2, s_3` outside the support of `u` (mirrored indices for `B'`).
pub fn b_noncancellable_member(e: &FcElement, side: BSide) -> Result<bool> {
    let n = e.graph().rank();
    let (lo, hi) = match side {
        BSide::B => (1, n),
        BSide::Bprime => (2, n + 1),
    };
    let support = e.support();
    if support.iter().any(|&s| s < lo || s > hi) {
        return Err(Error::SupportOutOfRange {
            support: support.into_iter().collect(),
            lo,
            hi,
        });
    }
    if is_commuting_product(e) {
        return Ok(true);
    }
    let (a, b, forbidden) = match side {
        BSide::B => (1, 2, [1, 2, 3]),
        BSide::Bprime => (n + 1, n, [n + 1, n, n - 1]),
    };
    for prefix in [[a, b], [b, a]] {
        if let Some(u) = e.peel_prefix(&prefix) {
            if is_commuting_product(&u) && forbidden.iter().all(|f| !u.support().contains(f)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Which clause of the non-cancellable classification an element falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    GapProduct,
    TypeIEnd,
    TypeII,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::GapProduct => "gap_product",
            Clause::TypeIEnd => "type_i_end",
            Clause::TypeII => "type_ii",
        }
    }
}

/// The four end-to-end zigzag shapes of the classification, those whose left
/// and right descent sets are end generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZigzagForm {
    REven,
    LEven,
    LOdd,
    ROdd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseWitness {
    /// Split at the missing generator `gap`: `left` letters below it, `right`
    /// letters above it.
    Gap { gap: usize, left: Word, right: Word },
    /// Matched `z^{form}` with the given parameters.
    ZigzagEnd {
        form: ZigzagForm,
        i: usize,
        j: usize,
        k: usize,
    },
    /// Alternating product with the given first factor and factor count.
    Alternating { start: Parity, factors: usize },
}

/// Result of classifying an element against the non-cancellable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub clause: Option<Clause>,
    pub witness: Option<ClauseWitness>,
}

impl ClassificationVerdict {
    pub fn member(&self) -> bool {
        self.clause.is_some()
    }

    fn none() -> Self {
        ClassificationVerdict {
            clause: None,
            witness: None,
        }
    }
}

/// Classifies `e` against the list of non-cancellable elements of the affine
/// family:
///
/// * `GapProduct` — some generator `s_j` is missing from the support and the
///   letters below (resp. above) `j` form a type `B` (resp. `B'`)
///   non-cancellable element. The split reading is used rather than plain
///   support disjointness: `s_1 s_2 s_3` factors as `s_1 s_2 . s_3` with
///   disjoint supports yet is weak-star reducible, so a genuine gap is
///   required.
/// * `TypeIEnd` — one of `z^{R,2k}_{1,1}`, `z^{L,2k}_{n+1,n+1}` (`k >= 1`),
///   `z^{L,2k+1}_{n+1,1}`, `z^{R,2k+1}_{1,n+1}` (`k >= 0`).
/// * `TypeII` — an alternating product of `x_O` and `x_E`.
///
/// Overlaps are resolved in that order. Elements over the finite families
/// are classified by reading their word in the ambient affine graph.
pub fn c_classification(e: &FcElement) -> Result<ClassificationVerdict> {
    let owned;
    let e = if e.graph().family() == Family::Ctilde {
        e
    } else {
        let ambient = CoxeterGraph::new(Family::Ctilde, e.graph().rank())?;
        owned = FcElement::from_word(e.canonical(), &ambient)?;
        &owned
    };
    let g = e.graph();
    let n = g.rank();

    // (i) split at a missing generator
    let support = e.support();
    for gap in g.generators() {
        if support.contains(&gap) {
            continue;
        }
        let left: Word = e.canonical().iter().copied().filter(|&l| l < gap).collect();
        let right: Word = e.canonical().iter().copied().filter(|&l| l > gap).collect();
        let left_e = FcElement::from_word(&left, g)?;
        let right_e = FcElement::from_word(&right, g)?;
        if b_noncancellable_member(&left_e, BSide::B)?
            && b_noncancellable_member(&right_e, BSide::Bprime)?
        {
            return Ok(ClassificationVerdict {
                clause: Some(Clause::GapProduct),
                witness: Some(ClauseWitness::Gap { gap, left, right }),
            });
        }
    }

    // (ii) end-to-end zigzags; lengths are 2nk + 1 (even c) or 2nk + n + 1
    // (odd c)
    let len = e.len();
    if len >= 2 && (len - 1) % (2 * n) == 0 && (len - 1) / (2 * n) >= 1 {
        let k = (len - 1) / (2 * n);
        let candidates = [
            (ZigzagForm::REven, ZigzagDir::R, 1, 1),
            (ZigzagForm::LEven, ZigzagDir::L, n + 1, n + 1),
        ];
        for (form, dir, i, j) in candidates {
            let w = z_dir(g, dir, 2 * k, i, j)?;
            if e.canonical() == FcElement::from_word(&w, g)?.canonical() {
                return Ok(ClassificationVerdict {
                    clause: Some(Clause::TypeIEnd),
                    witness: Some(ClauseWitness::ZigzagEnd { form, i, j, k }),
                });
            }
        }
    }
    if len >= n + 1 && (len - n - 1) % (2 * n) == 0 {
        let k = (len - n - 1) / (2 * n);
        let candidates = [
            (ZigzagForm::LOdd, ZigzagDir::L, n + 1, 1),
            (ZigzagForm::ROdd, ZigzagDir::R, 1, n + 1),
        ];
        for (form, dir, i, j) in candidates {
            let w = z_dir(g, dir, 2 * k + 1, i, j)?;
            if e.canonical() == FcElement::from_word(&w, g)?.canonical() {
                return Ok(ClassificationVerdict {
                    clause: Some(Clause::TypeIEnd),
                    witness: Some(ClauseWitness::ZigzagEnd { form, i, j, k }),
                });
            }
        }
    }

    // (iii) alternating products
    for start in [Parity::Odd, Parity::Even] {
        for factors in 1.. {
            let w = type_ii_word(g, start, factors);
            if w.len() > len {
                break;
            }
            if w.len() == len && e.canonical() == FcElement::from_word(&w, g)?.canonical() {
                return Ok(ClassificationVerdict {
                    clause: Some(Clause::TypeII),
                    witness: Some(ClauseWitness::Alternating { start, factors }),
                });
            }
        }
    }

    Ok(ClassificationVerdict::none())
}

/// All zigzag words of the given length, including the two chains
/// `s_1 s_2 s_1` and `s_{n+1} s_n s_{n+1}`.
///
/// Those two turn at the column *next to* an end of the diagram; they are
/// legal chains because the end bond is 4, but the `z` constructors cannot
/// produce them since their turns always pass through an end column. They
/// are exactly the fully commutative chains the constructors miss.
pub(crate) fn type_i_words_up_to(g: &CoxeterGraph, max_len: usize) -> BTreeSet<Word> {
    let n = g.rank();
    let mut out = BTreeSet::new();
    for i in g.generators() {
        for j in g.generators() {
            let w = z_run(i, j);
            if w.len() <= max_len {
                out.insert(Word::new(w));
            }
        }
    }
    // one back-and-forth sweep adds 2n letters, so this covers every length
    let max_c = max_len / n + 3;
    for dir in [ZigzagDir::L, ZigzagDir::R] {
        for c in 1..=max_c {
            for i in g.generators() {
                for j in g.generators() {
                    if let Ok(w) = z_dir(g, dir, c, i, j) {
                        if w.len() <= max_len {
                            out.insert(w);
                        }
                    }
                }
            }
        }
    }
    if max_len >= 3 {
        out.insert(Word::new(vec![1, 2, 1]));
        out.insert(Word::new(vec![n + 1, n, n + 1]));
    }
    out
}

/// Structural test for type I: the element is one of the zigzag chains.
pub fn is_type_i(e: &FcElement) -> bool {
    if e.is_empty() {
        return false;
    }
    let owned;
    let e = if e.graph().family() == Family::Ctilde {
        e
    } else {
        let ambient = match CoxeterGraph::new(Family::Ctilde, e.graph().rank()) {
            Ok(g) => g,
            Err(_) => return false,
        };
        owned = match FcElement::from_word(e.canonical(), &ambient) {
            Ok(e) => e,
            Err(_) => return false,
        };
        &owned
    };
    type_i_words_up_to(e.graph(), e.len()).contains(e.canonical())
}

/// The unique factorization `w = w_1 w_2 ... w_n` of an element of `W(B_n)`
/// with each `w_k` among [`coset_reps`]`(k)`. Factors are found from `k = n`
/// downward: exactly one representative peels off the right with the
/// remainder supported in `1..k`.
pub fn normal_form_factorization(e: &FcElement) -> Result<Vec<Word>> {
    if e.graph().family() != Family::B {
        return Err(Error::WrongFamily {
            expected: Family::B.as_str().to_string(),
            got: e.graph().family().as_str().to_string(),
        });
    }
    let n = e.graph().rank();
    let mut factors = vec![Word::empty(); n];
    let mut cur = e.clone();
    for k in (1..=n).rev() {
        let mut hits: Vec<(Word, FcElement)> = Vec::new();
        for cand in coset_reps(k) {
            if let Some(rem) = cur.peel_suffix(&cand) {
                if rem.support().iter().all(|&s| s < k) {
                    hits.push((cand, rem));
                }
            }
        }
        if hits.len() != 1 {
            return Err(Error::InternalInvariant(format!(
                "normal form factorization found {} candidates at k = {k} for {}",
                hits.len(),
                e.canonical()
            )));
        }
        let (cand, rem) = hits.pop().expect("checked length");
        factors[k - 1] = cand;
        cur = rem;
    }
    if !cur.is_empty() {
        return Err(Error::InternalInvariant(format!(
            "normal form factorization left a remainder for {}",
            e.canonical()
        )));
    }
    Ok(factors)
}
