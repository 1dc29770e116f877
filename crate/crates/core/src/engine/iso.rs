//! Strategy transport along tag-adjustment isomorphisms.
//!
//! The currying of dependent function spaces (and its inverse) is a bijective
//! re-tagging of positions that preserves occurrence order and justifiers, so
//! a strategy on one side is executed by translating positions to the other
//! side, querying, and translating the response back.

use super::{Oracle, OracleRef, Outcome, Response};
use crate::arena::{Position, RankedMove, Tag};

/// An order- and justifier-preserving bijection between the positions of two
/// games, given by per-move translation with walk state.
pub trait PosIso {
    /// Translates a whole position into base coordinates.
    fn to_base(&self, pos: &Position) -> Option<Position>;
    /// Translates the base strategy's response back, in the context of the
    /// original position.
    fn response_from_base(&self, pos: &Position, r: &Response) -> Option<Response>;
}

/// Runs `base` through the iso: the composite is a strategy on the iso's
/// source game while `base` lives on its target.
pub struct IsoOracle<I> {
    pub iso: I,
    pub base: OracleRef,
}

impl<I: PosIso> Oracle for IsoOracle<I> {
    fn respond(&self, pos: &Position) -> Outcome {
        let base_pos = match self.iso.to_base(pos) {
            Some(p) => p,
            None => return Outcome::Silent,
        };
        match self.base.respond(&base_pos) {
            Outcome::Silent => Outcome::Silent,
            Outcome::Diverge => Outcome::Diverge,
            Outcome::Move(r) => match self.iso.response_from_base(pos, &r) {
                Some(r) => Outcome::Move(r),
                None => Outcome::Silent,
            },
        }
    }
}

/// Which side of a curried domain a thread belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ThreadKind {
    Ctx,
    Arg,
}

/// The currying correspondence
/// `Π̂(Σ̂(Γ,A), B)  ≅  Π̂(Γ, Π(A,B))`.
///
/// Uncurried coordinates: `L.T(t).L.γ | L.T(t).R.a | R.b`.
/// Curried coordinates:   `L.T(g).γ   | R.L.T(h).a | R.R.b`.
///
/// Threads translate by appearance order; occurrence order and justifier
/// indices are untouched.
#[derive(Debug, Clone, Copy, Default)]
pub struct CurryIso;

/// Walk state: source thread `t` per curried thread, in appearance order.
#[derive(Default)]
struct CurryState {
    /// For each uncurried thread index `t`: its kind and curried index.
    threads: Vec<(ThreadKind, u32)>,
    ctx_count: u32,
    arg_count: u32,
}

impl CurryState {
    fn uncurried_of(&mut self, kind: ThreadKind, idx: u32) -> u32 {
        if let Some(t) = self.threads.iter().position(|&(k, i)| k == kind && i == idx) {
            return t as u32;
        }
        self.threads.push((kind, idx));
        match kind {
            ThreadKind::Ctx => self.ctx_count += 1,
            ThreadKind::Arg => self.arg_count += 1,
        }
        (self.threads.len() - 1) as u32
    }

    fn curried_of(&mut self, t: u32, kind_hint: ThreadKind) -> (ThreadKind, u32) {
        if let Some(&(k, i)) = self.threads.get(t as usize) {
            return (k, i);
        }
        debug_assert_eq!(t as usize, self.threads.len());
        let idx = match kind_hint {
            ThreadKind::Ctx => {
                let i = self.ctx_count;
                self.ctx_count += 1;
                i
            }
            ThreadKind::Arg => {
                let i = self.arg_count;
                self.arg_count += 1;
                i
            }
        };
        self.threads.push((kind_hint, idx));
        (kind_hint, idx)
    }
}

/// Curried move -> uncurried move, updating the walk state.
fn curry_to_base_move(st: &mut CurryState, mv: &RankedMove) -> Option<RankedMove> {
    match mv.head_tag() {
        Some(Tag::L) => {
            let inner = mv.untag(Tag::L)?;
            let g = match inner.head_tag() {
                Some(Tag::T(g)) => g,
                _ => return None,
            };
            let t = st.uncurried_of(ThreadKind::Ctx, g);
            Some(inner.untag(Tag::T(g))?.tagged(Tag::L).tagged(Tag::T(t)).tagged(Tag::L))
        }
        Some(Tag::R) => {
            let inner = mv.untag(Tag::R)?;
            match inner.head_tag() {
                Some(Tag::L) => {
                    let inner = inner.untag(Tag::L)?;
                    let h = match inner.head_tag() {
                        Some(Tag::T(h)) => h,
                        _ => return None,
                    };
                    let t = st.uncurried_of(ThreadKind::Arg, h);
                    Some(inner.untag(Tag::T(h))?.tagged(Tag::R).tagged(Tag::T(t)).tagged(Tag::L))
                }
                Some(Tag::R) => Some(inner.untag(Tag::R)?.tagged(Tag::R)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Uncurried move -> curried move, updating the walk state.
fn curry_from_base_move(st: &mut CurryState, mv: &RankedMove) -> Option<RankedMove> {
    match mv.head_tag() {
        Some(Tag::L) => {
            let inner = mv.untag(Tag::L)?;
            let t = match inner.head_tag() {
                Some(Tag::T(t)) => t,
                _ => return None,
            };
            let rest = inner.untag(Tag::T(t))?;
            let kind_hint = match rest.head_tag() {
                Some(Tag::L) => ThreadKind::Ctx,
                Some(Tag::R) => ThreadKind::Arg,
                _ => return None,
            };
            let (kind, idx) = st.curried_of(t, kind_hint);
            if kind != kind_hint {
                return None;
            }
            match kind {
                ThreadKind::Ctx => Some(rest.untag(Tag::L)?.tagged(Tag::T(idx)).tagged(Tag::L)),
                ThreadKind::Arg => {
                    Some(rest.untag(Tag::R)?.tagged(Tag::T(idx)).tagged(Tag::L).tagged(Tag::R))
                }
            }
        }
        Some(Tag::R) => Some(mv.untag(Tag::R)?.tagged(Tag::R).tagged(Tag::R)),
        _ => None,
    }
}

impl PosIso for CurryIso {
    fn to_base(&self, pos: &Position) -> Option<Position> {
        let mut st = CurryState::default();
        let mut out = Position::empty();
        for occ in &pos.items {
            let mv = curry_to_base_move(&mut st, &occ.mv)?;
            out.push(mv, occ.label, occ.justifier);
        }
        Some(out)
    }

    fn response_from_base(&self, pos: &Position, r: &Response) -> Option<Response> {
        let mut st = CurryState::default();
        for occ in &pos.items {
            curry_to_base_move(&mut st, &occ.mv)?;
        }
        let mv = curry_from_base_move(&mut st, &r.mv)?;
        Some(Response { mv, label: r.label, justifier: r.justifier })
    }
}

/// The inverse transport: a strategy on the uncurried game from one on the
/// curried game.
#[derive(Debug, Clone, Copy, Default)]
pub struct UncurryIso;

impl PosIso for UncurryIso {
    fn to_base(&self, pos: &Position) -> Option<Position> {
        let mut st = CurryState::default();
        let mut out = Position::empty();
        for occ in &pos.items {
            let mv = curry_from_base_move(&mut st, &occ.mv)?;
            out.push(mv, occ.label, occ.justifier);
        }
        Some(out)
    }

    fn response_from_base(&self, pos: &Position, r: &Response) -> Option<Response> {
        let mut st = CurryState::default();
        for occ in &pos.items {
            curry_from_base_move(&mut st, &occ.mv)?;
        }
        let mv = curry_to_base_move(&mut st, &r.mv)?;
        Some(Response { mv, label: r.label, justifier: r.justifier })
    }
}
