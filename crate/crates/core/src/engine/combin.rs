//! Basic strategy combinators: copy-cats, derelictions, componentwise
//! dispatch for tensor and pairing, numerals, and table-driven strategies.

use super::wiring::Wiring;
use super::{Oracle, OracleRef, Outcome, Response};
use crate::arena::{Ident, Kind, MoveLabel, Polarity, Position, RankedMove, Tag};
use std::collections::BTreeSet;
use std::rc::Rc;

/// The copy-cat strategy on `X ⊸ X`.
pub fn copy_cat() -> Rc<Wiring> {
    Rc::new(Wiring::copycat())
}

/// The dereliction on `!X ⊸ X`.
pub fn dereliction() -> Rc<Wiring> {
    Rc::new(Wiring::derelict())
}

/// The everywhere-silent strategy.
pub struct SilentOracle;

impl Oracle for SilentOracle {
    fn respond(&self, _pos: &Position) -> Outcome {
        Outcome::Silent
    }
}

pub fn silent() -> OracleRef {
    Rc::new(SilentOracle)
}

/// The bottom of the eliminator chain: undefined everywhere, reported as
/// divergence so budget exhaustion is distinguishable from plain silence.
pub struct DivergeOracle;

impl Oracle for DivergeOracle {
    fn respond(&self, _pos: &Position) -> Outcome {
        Outcome::Diverge
    }
}

pub fn diverge() -> OracleRef {
    Rc::new(DivergeOracle)
}

/// Answers the opening codomain question with a fixed answer move, ignoring
/// the rest of the game.
pub struct ValueOracle {
    pub answer: RankedMove,
}

impl Oracle for ValueOracle {
    fn respond(&self, pos: &Position) -> Outcome {
        let last = pos.last().expect("odd position");
        if pos.len() == 1 && last.mv.head_tag() == Some(Tag::R) {
            return Outcome::mv(
                self.answer.tagged(Tag::R),
                MoveLabel::PA,
                Some(0),
            );
        }
        Outcome::Silent
    }
}

/// The numeral strategy `n̲` on an implication into the flat game of numbers.
pub fn numeral(n: u64) -> OracleRef {
    Rc::new(ValueOracle { answer: RankedMove::num(n) })
}

/// `succ` on `N ⊸ N`: `q ↦ q` (domain), `q·q·n ↦ n+1`.
pub struct SuccFlat;

impl Oracle for SuccFlat {
    fn respond(&self, pos: &Position) -> Outcome {
        let last = pos.last().expect("odd position");
        match last.mv.head_tag() {
            Some(Tag::R) if pos.len() == 1 => Outcome::mv(
                RankedMove::tok("q").tagged(Tag::L),
                MoveLabel { polarity: Polarity::P, kind: Kind::Q },
                Some(0),
            ),
            Some(Tag::L) => {
                let n = match last.mv.untag(Tag::L).and_then(|m| m.ident.as_num()) {
                    Some(n) => n,
                    None => return Outcome::Silent,
                };
                // Answer the codomain question that started the exchange.
                let q = pos.items[pos.len() - 2]
                    .justifier
                    .expect("domain question is justified");
                Outcome::mv(RankedMove::num(n + 1).tagged(Tag::R), MoveLabel::PA, Some(q))
            }
            _ => Outcome::Silent,
        }
    }
}

pub fn succ_flat() -> OracleRef {
    Rc::new(SuccFlat)
}

/// Restriction of a position to the occurrences whose tag path has `side` at
/// `depth`, deleting that tag; returns the kept original indices.
pub fn split_at(pos: &Position, depth: usize, side: Tag) -> (Position, Vec<usize>) {
    let mut kept = Vec::new();
    let mut new_index = vec![None; pos.len()];
    let mut out = Position::empty();
    for (i, occ) in pos.items.iter().enumerate() {
        if occ.mv.tag_path.get(depth) == Some(&side) {
            let mut mv = occ.mv.clone();
            mv.tag_path.remove(depth);
            let j = occ.justifier.and_then(|j| new_index[j]);
            new_index[i] = Some(out.len());
            out.push(mv, occ.label, j);
            kept.push(i);
        }
    }
    (out, kept)
}

/// `σ ⊗ τ` on `X⊗X' ⊸ Y⊗Y'`: moves route to the component named by the
/// second tag of their path.
pub struct TensorOracle {
    pub left: OracleRef,
    pub right: OracleRef,
}

impl Oracle for TensorOracle {
    fn respond(&self, pos: &Position) -> Outcome {
        let last = pos.last().expect("odd position");
        let side = match last.mv.tag_path.get(1) {
            Some(&t) => t,
            None => return Outcome::Silent,
        };
        let (sub, kept) = split_at(pos, 1, side);
        let oracle: &dyn Oracle = if side == Tag::L { &*self.left } else { &*self.right };
        match oracle.respond(&sub) {
            Outcome::Move(r) => {
                let mut mv = r.mv.clone();
                mv.tag_path.insert(1, side);
                let justifier = r.justifier.map(|j| kept[j]);
                Outcome::Move(Response { mv, label: r.label, justifier })
            }
            other => other,
        }
    }
}

pub fn tensor_strategies(left: OracleRef, right: OracleRef) -> OracleRef {
    Rc::new(TensorOracle { left, right })
}

/// `⟨σ, τ⟩` on `X ⊸ Y & Y'`: the codomain component chosen by Opponent's
/// first move selects the strategy; the domain is shared.
pub struct PairingOracle {
    pub left: OracleRef,
    pub right: OracleRef,
}

impl PairingOracle {
    /// The codomain component of this play, read off the first occurrence.
    fn side(pos: &Position) -> Option<Tag> {
        pos.items.iter().find_map(|occ| {
            if occ.mv.head_tag() == Some(Tag::R) {
                occ.mv.untag(Tag::R).and_then(|m| m.head_tag())
            } else {
                None
            }
        })
    }

    /// Keeps domain moves as they are and strips the component tag from
    /// codomain moves.
    fn project(pos: &Position, side: Tag) -> Option<Position> {
        let mut out = Position::empty();
        for occ in &pos.items {
            let mv = match occ.mv.head_tag() {
                Some(Tag::R) => {
                    let inner = occ.mv.untag(Tag::R)?;
                    if inner.head_tag() != Some(side) {
                        return None;
                    }
                    inner.untag(side)?.tagged(Tag::R)
                }
                _ => occ.mv.clone(),
            };
            out.push(mv, occ.label, occ.justifier);
        }
        Some(out)
    }
}

impl Oracle for PairingOracle {
    fn respond(&self, pos: &Position) -> Outcome {
        let side = match PairingOracle::side(pos) {
            Some(s) => s,
            None => return Outcome::Silent,
        };
        let sub = match PairingOracle::project(pos, side) {
            Some(p) => p,
            None => return Outcome::Silent,
        };
        let oracle: &dyn Oracle = if side == Tag::L { &*self.left } else { &*self.right };
        match oracle.respond(&sub) {
            Outcome::Move(r) => {
                let mv = match r.mv.head_tag() {
                    Some(Tag::R) => match r.mv.untag(Tag::R) {
                        Some(m) => m.tagged(side).tagged(Tag::R),
                        None => return Outcome::Silent,
                    },
                    _ => r.mv.clone(),
                };
                Outcome::Move(Response { mv, label: r.label, justifier: r.justifier })
            }
            other => other,
        }
    }
}

pub fn pairing(left: OracleRef, right: OracleRef) -> OracleRef {
    Rc::new(PairingOracle { left, right })
}

/// A strategy read off an explicit table of plays.
pub struct FromTable {
    pub plays: BTreeSet<Position>,
}

impl FromTable {
    pub fn new(plays: BTreeSet<Position>) -> FromTable {
        FromTable { plays }
    }
}

impl Oracle for FromTable {
    fn respond(&self, pos: &Position) -> Outcome {
        for q in &self.plays {
            if q.len() == pos.len() + 1 && pos.is_prefix_of(q) {
                let occ = q.last().unwrap();
                return Outcome::mv(occ.mv.clone(), occ.label, occ.justifier);
            }
        }
        Outcome::Silent
    }
}

/// The conditional used by the natural-number eliminator: parameters name
/// where the scrutinee and the two branches live under the domain.
pub struct CondOracle {
    /// Tag path of the scrutinee's flat component within one domain thread.
    pub scrutinee: Vec<Tag>,
    /// Tag paths of the zero and successor branches within one domain thread.
    pub zero_branch: Vec<Tag>,
    pub succ_branch: Vec<Tag>,
}

impl Oracle for CondOracle {
    fn respond(&self, pos: &Position) -> Outcome {
        let last = pos.last().expect("odd position");
        // Opening question: ask the scrutinee in a fresh domain thread.
        if pos.len() == 1 && last.mv.head_tag() == Some(Tag::R) {
            let mut path = vec![Tag::L, Tag::T(0)];
            path.extend_from_slice(&self.scrutinee);
            let mut mv = RankedMove::tok("q");
            mv.tag_path = path;
            return Outcome::mv(mv, MoveLabel { polarity: Polarity::P, kind: Kind::Q }, Some(0));
        }
        // Scrutinee answered: from then on mirror the codomain against the
        // selected branch in domain thread 1.
        let answer = pos.items.iter().enumerate().find_map(|(i, occ)| {
            let m = occ.mv.untag(Tag::L)?.untag(Tag::T(0))?;
            if m.tag_path == self.scrutinee && occ.label.kind == Kind::A {
                occ.mv.ident.as_num().map(|n| (i, n))
            } else {
                None
            }
        });
        let (_, n) = match answer {
            Some(x) => x,
            None => return Outcome::Silent,
        };
        let branch = if n == 0 { &self.zero_branch } else { &self.succ_branch };
        let mut pair = vec![Tag::L, Tag::T(1)];
        pair.extend_from_slice(branch);
        let wiring = Wiring::new(vec![super::wiring::WirePair::fixed(pair, vec![Tag::R])]);
        // The mirror pairing of the wiring is offset by the scrutinee
        // exchange, so rebuild it on the subsequence without that exchange.
        let keep: Vec<bool> = pos
            .items
            .iter()
            .map(|occ| {
                !matches!(occ.mv.untag(Tag::L).and_then(|m| m.untag(Tag::T(0))), Some(m) if m.tag_path == self.scrutinee)
            })
            .collect();
        let mut kept = Vec::new();
        let mut sub = Position::empty();
        let mut new_index = vec![None; pos.len()];
        for (i, occ) in pos.items.iter().enumerate() {
            if keep[i] {
                let j = occ.justifier.and_then(|j| new_index[j]);
                new_index[i] = Some(sub.len());
                sub.push(occ.mv.clone(), occ.label, j);
                kept.push(i);
            }
        }
        match wiring.respond(&sub) {
            Outcome::Move(r) => {
                let justifier = r.justifier.map(|j| kept[j]);
                Outcome::Move(Response { justifier, ..r })
            }
            other => other,
        }
    }
}

/// Conditional branching on the first numeric answer, used by eliminators.
pub fn cond(scrutinee: Vec<Tag>, zero_branch: Vec<Tag>, succ_branch: Vec<Tag>) -> OracleRef {
    Rc::new(CondOracle { scrutinee, zero_branch, succ_branch })
}
