//! Combinatorics of fully commutative elements in Coxeter groups of types
//! `B_n`, `B'_n`, and affine `C~_n`.
//!
//! The crate provides:
//!
//! * [`coxeter`] — the three Coxeter graphs and their bond tables;
//! * [`heap`] — the heap poset of a word, its canonical leveled
//!   representation, descents, convexity, antichain width, and an ASCII
//!   renderer;
//! * [`fc`] — full commutativity and reducedness tests, [`FcElement`] values,
//!   and the commutation-class brute-force oracle;
//! * [`star`] — star and weak-star reductions and non-cancellability;
//! * [`families`] — the named element families (zigzags, alternating
//!   odd/even products, coset representatives, normal form factorization)
//!   and the classification of non-cancellable elements;
//! * [`harness`] — exhaustive enumeration and theorem verification reports.
//!
//! Generator indices are 1-based throughout: `B_n` is generated by
//! `s_1..s_n`, `B'_n` by `s_2..s_{n+1}`, and `C~_n` by `s_1..s_{n+1}`.

pub mod coxeter;
pub mod error;
pub mod families;
pub mod fc;
pub mod harness;
pub mod heap;
pub mod star;
pub mod word;

pub use coxeter::{CoxeterGraph, Family};
pub use error::{Error, Result};
pub use fc::{FcElement, RightMul};
pub use heap::{heap_of, Heap};
pub use word::Word;
