//! Star and weak-star reductions.
//!
//! For `s` a left descent of a fully commutative `w` and `t` a noncommuting
//! neighbor, `w` is left star reducible by `s` with respect to `t` when `t`
//! is a left descent of `sw`; it is left weak-star reducible when moreover
//! `tw` is no longer fully commutative. Mirror definitions on the right.
//! An element is non-cancellable when no weak-star reduction applies.

use crate::error::{Error, Result};
use crate::fc::{is_fc_reduced, FcElement};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "L",
            Side::Right => "R",
        })
    }
}

/// One weak-star reduction step: remove the descent `s`, witnessed by the
/// noncommuting generator `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReductionMove {
    pub side: Side,
    pub s: usize,
    pub t: usize,
}

impl fmt::Display for ReductionMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.side, self.s, self.t)
    }
}

pub fn is_left_star_reducible_by(e: &FcElement, s: usize, t: usize) -> bool {
    let g = e.graph();
    if !g.contains(s) || !g.contains(t) || g.bond_unchecked(s, t) < 3 {
        return false;
    }
    if !e.left_descents().contains(&s) {
        return false;
    }
    let rest = e.peel_prefix(&[s]).expect("s is a left descent");
    rest.left_descents().contains(&t)
}

pub fn is_right_star_reducible_by(e: &FcElement, s: usize, t: usize) -> bool {
    let g = e.graph();
    if !g.contains(s) || !g.contains(t) || g.bond_unchecked(s, t) < 3 {
        return false;
    }
    if !e.right_descents().contains(&s) {
        return false;
    }
    let rest = e.peel_suffix(&[s]).expect("s is a right descent");
    rest.right_descents().contains(&t)
}

pub fn is_left_weak_star_reducible_by(e: &FcElement, s: usize, t: usize) -> bool {
    if !is_left_star_reducible_by(e, s, t) {
        return false;
    }
    let mut tw = vec![t];
    tw.extend_from_slice(e.canonical());
    !is_fc_reduced(&tw, e.graph()).expect("letters already validated")
}

pub fn is_right_weak_star_reducible_by(e: &FcElement, s: usize, t: usize) -> bool {
    if !is_right_star_reducible_by(e, s, t) {
        return false;
    }
    let mut wt = e.canonical().letters().to_vec();
    wt.push(t);
    !is_fc_reduced(&wt, e.graph()).expect("letters already validated")
}

/// All applicable weak-star moves, ordered left side first, then by `s`,
/// then by `t`.
pub fn weak_star_moves(e: &FcElement) -> Vec<ReductionMove> {
    let mut moves = Vec::new();
    let g = e.graph();
    for side in [Side::Left, Side::Right] {
        for s in g.generators() {
            for t in g.generators() {
                let hit = match side {
                    Side::Left => is_left_weak_star_reducible_by(e, s, t),
                    Side::Right => is_right_weak_star_reducible_by(e, s, t),
                };
                if hit {
                    moves.push(ReductionMove { side, s, t });
                }
            }
        }
    }
    moves
}

/// Applies a weak-star move, yielding the element one letter shorter.
pub fn apply_move(e: &FcElement, mv: &ReductionMove) -> Result<FcElement> {
    let applicable = match mv.side {
        Side::Left => is_left_weak_star_reducible_by(e, mv.s, mv.t),
        Side::Right => is_right_weak_star_reducible_by(e, mv.s, mv.t),
    };
    if !applicable {
        return Err(Error::InvalidMove {
            side: mv.side.to_string(),
            s: mv.s,
            t: mv.t,
        });
    }
    let shorter = match mv.side {
        Side::Left => e.peel_prefix(&[mv.s]),
        Side::Right => e.peel_suffix(&[mv.s]),
    };
    Ok(shorter.expect("move implies the descent"))
}

pub fn is_non_cancellable(e: &FcElement) -> bool {
    let g = e.graph();
    for s in e.left_descents() {
        for t in g.generators() {
            if is_left_weak_star_reducible_by(e, s, t) {
                return false;
            }
        }
    }
    for s in e.right_descents() {
        for t in g.generators() {
            if is_right_weak_star_reducible_by(e, s, t) {
                return false;
            }
        }
    }
    true
}

/// Repeatedly applies the first move in [`weak_star_moves`] order until no
/// move remains; returns the irreducible element and the move trace. The
/// policy is deterministic, and termination is guaranteed since each move
/// shortens the element.
pub fn reduce_fully(e: &FcElement) -> (FcElement, Vec<ReductionMove>) {
    let mut cur = e.clone();
    let mut trace = Vec::new();
    loop {
        let moves = weak_star_moves(&cur);
        match moves.first() {
            None => return (cur, trace),
            Some(mv) => {
                cur = apply_move(&cur, mv).expect("listed move applies");
                trace.push(*mv);
            }
        }
    }
}

/// True iff some plain star reduction (left or right) applies.
pub fn is_star_reducible(e: &FcElement) -> bool {
    let g = e.graph();
    for s in e.left_descents() {
        for t in g.generators() {
            if is_left_star_reducible_by(e, s, t) {
                return true;
            }
        }
    }
    for s in e.right_descents() {
        for t in g.generators() {
            if is_right_star_reducible_by(e, s, t) {
                return true;
            }
        }
    }
    false
}
