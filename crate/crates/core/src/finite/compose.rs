//! Composition of explicit games: interaction sequences over the four-part
//! arena, the copy-cat bridge over the middle game, and hiding.

use super::{relabel_in, FiniteGame};
use crate::arena::{MoveLabel, MoveSpace, Position, RankedMove, Tag};
use std::collections::BTreeSet;
use thiserror::Error;

/// Component of an interaction occurrence within `((A ⊸ B1) ⊸ B2) ⊸ C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Comp {
    A,
    B1,
    B2,
    C,
}

impl Comp {
    pub fn hidden(self) -> bool {
        matches!(self, Comp::B1 | Comp::B2)
    }
}

/// One occurrence of an interaction sequence; the move is kept in its
/// component's own coordinates and the label is the global one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IOcc {
    pub comp: Comp,
    pub mv: RankedMove,
    pub label: MoveLabel,
    pub justifier: Option<usize>,
}

/// An interaction sequence over the four-part arena.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Interaction {
    pub items: Vec<IOcc>,
}

impl Interaction {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn restrict_two(&self, left: Comp, right: Comp) -> Position {
        let mut new_index = vec![None; self.items.len()];
        let mut pos = Position::empty();
        for (i, occ) in self.items.iter().enumerate() {
            if occ.comp == left || occ.comp == right {
                let tag = if occ.comp == left { Tag::L } else { Tag::R };
                let justifier = occ.justifier.and_then(|j| new_index[j]);
                new_index[i] = Some(pos.len());
                pos.push(occ.mv.tagged(tag), occ.label, justifier);
            }
        }
        pos
    }

    /// `u ↾ A, B1` in the coordinates of the left game.
    pub fn restrict_left(&self) -> Position {
        self.restrict_two(Comp::A, Comp::B1)
    }

    /// `u ↾ B2, C` in the coordinates of the right game.
    pub fn restrict_right(&self) -> Position {
        self.restrict_two(Comp::B2, Comp::C)
    }

    /// `u ↾ A, C` with external justifiers computed by chasing pointers
    /// through the hidden occurrences.
    pub fn restrict_external(&self) -> Position {
        let mut new_index = vec![None; self.items.len()];
        let mut pos = Position::empty();
        for (i, occ) in self.items.iter().enumerate() {
            if occ.comp == Comp::A || occ.comp == Comp::C {
                let tag = if occ.comp == Comp::A { Tag::L } else { Tag::R };
                let mut j = occ.justifier;
                while let Some(k) = j {
                    if self.items[k].comp.hidden() {
                        j = self.items[k].justifier;
                    } else {
                        break;
                    }
                }
                let justifier = j.and_then(|k| new_index[k]);
                new_index[i] = Some(pos.len());
                pos.push(occ.mv.tagged(tag), occ.label, justifier);
            }
        }
        pos
    }

    /// Copy-cat condition on the middle game: the `B1,B2`-restriction
    /// alternates (in its own view, where both sides flip) and at every even
    /// length the two sides agree as justified sequences; odd prefixes are
    /// admitted.
    pub fn pr_condition(&self) -> bool {
        // Per side: (move, justifier local to that side's subsequence).
        let mut b1: Vec<(RankedMove, Option<usize>)> = Vec::new();
        let mut b2: Vec<(RankedMove, Option<usize>)> = Vec::new();
        let mut side_index = vec![None; self.items.len()];
        for (i, occ) in self.items.iter().enumerate() {
            match occ.comp {
                Comp::B1 => {
                    let local = occ.justifier.and_then(|j| {
                        if self.items[j].comp == Comp::B1 { side_index[j] } else { None }
                    });
                    side_index[i] = Some(b1.len());
                    b1.push((occ.mv.clone(), local));
                }
                Comp::B2 => {
                    let local = occ.justifier.and_then(|j| {
                        if self.items[j].comp == Comp::B2 { side_index[j] } else { None }
                    });
                    side_index[i] = Some(b2.len());
                    b2.push((occ.mv.clone(), local));
                }
                _ => continue,
            }
            // In the bridge's own view both global labels flip, so relative
            // alternation can be read off the stored labels directly.
            let want = if (b1.len() + b2.len()) % 2 == 1 {
                crate::arena::Polarity::P
            } else {
                crate::arena::Polarity::O
            };
            if occ.label.polarity != want {
                return false;
            }
            if (b1.len() + b2.len()) % 2 == 0 && b1 != b2 {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, Error)]
pub enum ComposeError {
    #[error("left game is not a subgame of a linear implication: {0}")]
    LeftShape(String),
    #[error("right game is not a subgame of a linear implication: {0}")]
    RightShape(String),
    #[error("middle alphabets disagree: {0}")]
    MiddleMismatch(String),
}

fn side_moves(g: &FiniteGame, tag: Tag) -> BTreeSet<RankedMove> {
    g.arena
        .labels
        .keys()
        .filter_map(|m| m.untag(tag))
        .collect()
}

fn check_imp_shape(g: &FiniteGame) -> Result<(), String> {
    for m in g.arena.labels.keys() {
        match m.head_tag() {
            Some(Tag::L) | Some(Tag::R) => {}
            _ => return Err(format!("move {m} is not tagged L or R")),
        }
    }
    for m in &g.arena.initials {
        if m.head_tag() != Some(Tag::R) {
            return Err(format!("initial move {m} is not on the codomain side"));
        }
    }
    Ok(())
}

/// Enumerates every interaction sequence (up to `max_len`) whose left
/// restriction stays in `P_J`, right restriction in `P_K`, and middle
/// restriction in the copy-cat bridge.
pub fn enumerate_interactions(j: &FiniteGame, k: &FiniteGame, max_len: usize) -> Vec<Interaction> {
    let a_moves: Vec<_> = side_moves(j, Tag::L).into_iter().collect();
    let b1_moves: Vec<_> = side_moves(j, Tag::R).into_iter().collect();
    let b2_moves: Vec<_> = side_moves(k, Tag::L).into_iter().collect();
    let c_moves: Vec<_> = side_moves(k, Tag::R).into_iter().collect();

    let label_of = |comp: Comp, mv: &RankedMove| -> Option<MoveLabel> {
        match comp {
            Comp::A => j.arena.label(&mv.tagged(Tag::L)),
            Comp::B1 => j.arena.label(&mv.tagged(Tag::R)),
            Comp::B2 => k.arena.label(&mv.tagged(Tag::L)),
            Comp::C => k.arena.label(&mv.tagged(Tag::R)),
        }
    };

    let admissible = |u: &Interaction| -> bool {
        j.positions.contains(&u.restrict_left())
            && k.positions.contains(&u.restrict_right())
            && u.pr_condition()
    };

    let mut out = vec![Interaction::default()];
    let mut frontier = vec![Interaction::default()];
    while let Some(u) = frontier.pop() {
        if u.len() >= max_len {
            continue;
        }
        let candidates: Vec<(Comp, &Vec<RankedMove>)> = vec![
            (Comp::A, &a_moves),
            (Comp::B1, &b1_moves),
            (Comp::B2, &b2_moves),
            (Comp::C, &c_moves),
        ];
        for (comp, moves) in candidates {
            for mv in moves {
                let label = match label_of(comp, mv) {
                    Some(l) => l,
                    None => continue,
                };
                // Justifier candidates: root only for C, otherwise any earlier
                // occurrence; the restriction checks weed out bad pointers.
                let mut justs: Vec<Option<usize>> = Vec::new();
                if comp == Comp::C {
                    justs.push(None);
                }
                for idx in 0..u.len() {
                    justs.push(Some(idx));
                }
                for justifier in justs {
                    let mut next = u.clone();
                    next.items.push(IOcc { comp, mv: mv.clone(), label, justifier });
                    if admissible(&next) && !out.contains(&next) {
                        out.push(next.clone());
                        frontier.push(next);
                    }
                }
            }
        }
    }
    out
}

/// Composition `J ; K` of subgames `J ⊴ A ⊸ B` and `K ⊴ B ⊸ C`: external
/// restrictions of all interactions, pruned to economical form.
pub fn compose_games(j: &FiniteGame, k: &FiniteGame) -> Result<FiniteGame, ComposeError> {
    check_imp_shape(j).map_err(ComposeError::LeftShape)?;
    check_imp_shape(k).map_err(ComposeError::RightShape)?;
    let b1 = side_moves(j, Tag::R);
    let b2 = side_moves(k, Tag::L);
    if b1.intersection(&b2).count() == 0 && !(b1.is_empty() && b2.is_empty()) {
        return Err(ComposeError::MiddleMismatch(format!(
            "left codomain has {} moves, right domain {}, none shared",
            b1.len(),
            b2.len()
        )));
    }
    let max = j.max_len() + k.max_len();
    let interactions = enumerate_interactions(j, k, max);
    let positions: BTreeSet<Position> =
        interactions.iter().map(|u| u.restrict_external()).collect();
    Ok(FiniteGame::from_positions(positions))
}

/// Relabels a restriction inside the stated component games, for tests that
/// compare against the raw definitions.
pub fn restriction_in(pos: &Position, tag: Tag, game: &FiniteGame) -> Option<Position> {
    let (raw, _) = pos.restrict_map(
        |_, occ| occ.mv.head_tag() == Some(tag),
        |m| m.untag(tag).expect("filtered"),
    );
    relabel_in(&raw, &game.arena)
}
