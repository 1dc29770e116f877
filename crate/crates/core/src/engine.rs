//! Strategies as next-move oracles, the interaction machine implementing
//! composition, and bounded checkers for the constraints on morphisms.

use crate::arena::{Bounds, MoveLabel, Position, RankedMove};
use std::rc::Rc;

pub mod checks;
pub mod combin;
pub mod interact;
pub mod iso;
pub mod wiring;

pub use checks::{
    check_innocent, check_noetherian, check_total, check_well_bracketed, CheckReport,
    NoetherianVerdict,
};
pub use combin::{
    cond, copy_cat, dereliction, diverge, numeral, pairing, silent, succ_flat, tensor_strategies,
    FromTable,
};
pub use interact::{bullet, compose, Composite, Promotion};
pub use iso::{IsoOracle, PosIso};
pub use wiring::{Seg, WirePair, Wiring};

/// A Player response: move, its label in the strategy's own game, justifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub mv: RankedMove,
    pub label: MoveLabel,
    pub justifier: Option<usize>,
}

/// Result of asking a strategy for its next move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Move(Response),
    /// The strategy is undefined at this position.
    Silent,
    /// The interaction budget was exhausted: infinite internal chattering is
    /// reported distinctly from mere undefinedness.
    Diverge,
}

impl Outcome {
    pub fn mv(mv: RankedMove, label: MoveLabel, justifier: Option<usize>) -> Outcome {
        Outcome::Move(Response { mv, label, justifier })
    }

    pub fn is_move(&self) -> bool {
        matches!(self, Outcome::Move(_))
    }
}

/// A computable strategy: a partial next-move function on odd-length
/// positions of its declared game.
pub trait Oracle {
    fn respond(&self, pos: &Position) -> Outcome;
}

pub type OracleRef = Rc<dyn Oracle>;

impl Oracle for OracleRef {
    fn respond(&self, pos: &Position) -> Outcome {
        (**self).respond(pos)
    }
}

/// What the engine needs to know about a game in order to probe a strategy:
/// the legal Opponent extensions of an even position, bounded.
pub trait GameView {
    /// Legal O-moves (with label and justifier) extending `pos`.
    fn o_moves(&self, pos: &Position, bounds: &Bounds)
        -> Vec<(RankedMove, MoveLabel, Option<usize>)>;
}

impl GameView for crate::finite::FiniteGame {
    fn o_moves(
        &self,
        pos: &Position,
        _bounds: &Bounds,
    ) -> Vec<(RankedMove, MoveLabel, Option<usize>)> {
        self.extensions(pos)
            .into_iter()
            .filter_map(|q| {
                let occ = q.last().unwrap().clone();
                if occ.polarity() == crate::arena::Polarity::O {
                    Some((occ.mv, occ.label, occ.justifier))
                } else {
                    None
                }
            })
            .collect()
    }
}

/// All odd positions reachable against an arbitrary Opponent within
/// `bounds.depth` moves, paired with the strategy's outcome at each.
pub fn reachable(
    oracle: &dyn Oracle,
    view: &dyn GameView,
    bounds: &Bounds,
) -> Vec<(Position, Outcome)> {
    let mut out = Vec::new();
    let mut frontier = vec![Position::empty()];
    while let Some(even) = frontier.pop() {
        if even.len() >= bounds.depth {
            continue;
        }
        for (mv, label, j) in view.o_moves(&even, bounds) {
            let odd = even.extended(mv, label, j);
            let outcome = oracle.respond(&odd);
            if let Outcome::Move(r) = &outcome {
                frontier.push(odd.extended(r.mv.clone(), r.label, r.justifier));
            }
            out.push((odd, outcome));
        }
    }
    out
}

/// Depth-bounded behavioral equivalence verdict.
#[derive(Debug, Clone)]
pub enum Equivalence {
    Agree,
    /// A minimal distinguishing odd position with the two outcomes.
    Distinguished(Position, Outcome, Outcome),
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        matches!(self, Equivalence::Agree)
    }
}

/// Compares `a` and `b` (moves, justifiers and definedness) on every odd
/// position reachable in `view` up to `bounds.depth` moves, exploring in
/// canonical order so the returned witness is minimal.
pub fn equiv_at_depth(
    a: &dyn Oracle,
    b: &dyn Oracle,
    view: &dyn GameView,
    bounds: &Bounds,
) -> Equivalence {
    let mut frontier = std::collections::BTreeSet::new();
    frontier.insert(Position::empty());
    while let Some(even) = frontier.pop_first() {
        if even.len() >= bounds.depth {
            continue;
        }
        for (mv, label, j) in view.o_moves(&even, bounds) {
            let odd = even.extended(mv, label, j);
            let oa = a.respond(&odd);
            let ob = b.respond(&odd);
            match (&oa, &ob) {
                (Outcome::Move(r1), Outcome::Move(r2)) => {
                    if r1.mv != r2.mv || r1.justifier != r2.justifier {
                        return Equivalence::Distinguished(odd, oa, ob);
                    }
                    frontier.insert(odd.extended(r1.mv.clone(), r1.label, r1.justifier));
                }
                (Outcome::Silent, Outcome::Silent) | (Outcome::Diverge, Outcome::Diverge) => {}
                _ => return Equivalence::Distinguished(odd, oa, ob),
            }
        }
    }
    Equivalence::Agree
}
