//! The Coxeter graphs of types `B_n`, `B'_n`, and affine `C~_n`.

use crate::error::{Error, Result};
use std::fmt;

/// The three graph families. `B` and `Bprime` are the finite subgraphs of the
/// affine diagram obtained by dropping the high (resp. low) end generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    B,
    Bprime,
    Ctilde,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::B => "B",
            Family::Bprime => "Bprime",
            Family::Ctilde => "Ctilde",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A Coxeter graph with its bond table `m(s, t)`.
///
/// The affine diagram of rank parameter `n` is the path `s_1 - s_2 - ... -
/// s_{n+1}` with bond 4 on the two end edges `{s_1, s_2}` and `{s_n,
/// s_{n+1}}`, bond 3 on interior edges, and bond 2 (commutation) between
/// non-adjacent generators. `B_n` restricts the index set to `1..=n` and
/// `B'_n` to `2..=n+1`, keeping the same bonds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    family: Family,
    rank: usize,
    lo: usize,
    hi: usize,
    bond: Vec<u8>,
}

fn affine_bond(n: usize, s: usize, t: usize) -> u8 {
    if s == t {
        1
    } else if s.abs_diff(t) >= 2 {
        2
    } else {
        let a = s.min(t);
        if a == 1 || a == n {
            4
        } else {
            3
        }
    }
}

impl CoxeterGraph {
    /// Builds the graph of the given family with rank parameter `n >= 2`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::RankTooSmall(rank));
        }
        let (lo, hi) = match family {
            Family::B => (1, rank),
            Family::Bprime => (2, rank + 1),
            Family::Ctilde => (1, rank + 1),
        };
        let width = hi - lo + 1;
        let mut bond = vec![0u8; width * width];
        for s in lo..=hi {
            for t in lo..=hi {
                bond[(s - lo) * width + (t - lo)] = affine_bond(rank, s, t);
            }
        }
        Ok(CoxeterGraph {
            family,
            rank,
            lo,
            hi,
            bond,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The rank parameter `n` the family was built with. Note `B'_n` and
    /// `C~_n` have generators up to index `n + 1`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn min_generator(&self) -> usize {
        self.lo
    }

    pub fn max_generator(&self) -> usize {
        self.hi
    }

    pub fn generator_count(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn generators(&self) -> impl DoubleEndedIterator<Item = usize> {
        self.lo..=self.hi
    }

    pub fn contains(&self, s: usize) -> bool {
        (self.lo..=self.hi).contains(&s)
    }

    fn check(&self, s: usize) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::UnknownGenerator {
                gen: s,
                lo: self.lo,
                hi: self.hi,
            })
        }
    }

    /// The bond `m(s, t)`.
    pub fn bond(&self, s: usize, t: usize) -> Result<u8> {
        self.check(s)?;
        self.check(t)?;
        Ok(self.bond_unchecked(s, t))
    }

    pub(crate) fn bond_unchecked(&self, s: usize, t: usize) -> u8 {
        let w = self.hi - self.lo + 1;
        self.bond[(s - self.lo) * w + (t - self.lo)]
    }

    /// True iff `m(s, t) = 2`.
    pub fn commutes(&self, s: usize, t: usize) -> Result<bool> {
        Ok(self.bond(s, t)? == 2)
    }

    pub(crate) fn commutes_unchecked(&self, s: usize, t: usize) -> bool {
        self.bond_unchecked(s, t) == 2
    }

    /// Checks that every letter of `w` is a generator of this graph.
    pub fn validate_word(&self, w: &[usize]) -> Result<()> {
        for &l in w {
            self.check(l)?;
        }
        Ok(())
    }
}
