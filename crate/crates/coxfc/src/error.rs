//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("rank {rank} outside supported range {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },

    #[error("rank must be even, got {0}")]
    OddRank(usize),

    #[error("generator s{gen} is not in the generator set {lo}..={hi}")]
    UnknownGenerator { gen: usize, lo: usize, hi: usize },

    #[error("word has {len} letters; heaps support at most {max}")]
    WordTooLong { len: usize, max: usize },

    /// The word is not a reduced expression of a fully commutative element.
    /// `letters` is the offending convex chain and `positions` its 0-based
    /// letter indices in the word.
    #[error("not a reduced word of a fully commutative element: impermissible convex chain {letters:?} at letter positions {positions:?}")]
    NotFcReduced {
        letters: Vec<usize>,
        positions: Vec<usize>,
    },

    #[error("commutation class closure is bounded to words of length <= {bound}, got {len}")]
    ClassBoundExceeded { len: usize, bound: usize },

    #[error("not a weak star reduction move for this element: {side} s{s} with respect to s{t}")]
    InvalidMove { side: String, s: usize, t: usize },

    #[error("zigzag parameters out of range: {dir},{c} from {i} to {j} over rank {rank}")]
    InvalidZigzag {
        dir: String,
        c: usize,
        i: usize,
        j: usize,
        rank: usize,
    },

    #[error("operation requires a type {expected} graph, got type {got}")]
    WrongFamily { expected: String, got: String },

    #[error("support {support:?} not contained in {lo}..={hi}")]
    SupportOutOfRange {
        support: Vec<usize>,
        lo: usize,
        hi: usize,
    },

    #[error("enumeration of the affine family requires a length bound")]
    UnboundedEnumeration,

    #[error("alternating product needs at least one factor")]
    EmptyProduct,

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
