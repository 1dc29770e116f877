//! Arena axioms, justification and legality of positions.

use super::view::{o_view_indices, p_view_indices};
use super::{Bounds, Enabler, Kind, MoveLabel, MoveSpace, Polarity, Position, RankedMove};
use std::fmt;

/// A violation of one of the arena axioms E1-E3, as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArenaViolation {
    /// An initial move is not labeled OQ.
    E1Label(RankedMove),
    /// An initial move is also enabled by a non-root move.
    E1NonRootEnabler(RankedMove, RankedMove),
    /// An answer is enabled by another answer.
    E2AnswerByAnswer(RankedMove, RankedMove),
    /// Two moves of the same polarity enable one another.
    E3SamePolarity(RankedMove, RankedMove),
}

impl fmt::Display for ArenaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArenaViolation::E1Label(m) => write!(f, "E1: initial move {m} is not OQ"),
            ArenaViolation::E1NonRootEnabler(n, m) => {
                write!(f, "E1: initial move {m} also enabled by {n}")
            }
            ArenaViolation::E2AnswerByAnswer(m, n) => {
                write!(f, "E2: answer {n} enabled by non-question {m}")
            }
            ArenaViolation::E3SamePolarity(m, n) => {
                write!(f, "E3: {m} enables {n} but polarities agree")
            }
        }
    }
}

/// Checks E1-E3 on the enumerated fragment of a move space. Violations are
/// data, not failures.
pub fn validate_arena(space: &impl MoveSpace, bounds: &Bounds) -> Vec<ArenaViolation> {
    let moves = space.moves(bounds);
    let mut out = Vec::new();
    for m in &moves {
        let lm = match space.label(m) {
            Some(l) => l,
            None => continue,
        };
        if space.enables(Enabler::Root, m) {
            if lm != MoveLabel::OQ {
                out.push(ArenaViolation::E1Label(m.clone()));
            }
            for n in &moves {
                if space.enables(Enabler::Move(n), m) {
                    out.push(ArenaViolation::E1NonRootEnabler(n.clone(), m.clone()));
                }
            }
        }
        for n in &moves {
            if space.enables(Enabler::Move(m), n) {
                let ln = match space.label(n) {
                    Some(l) => l,
                    None => continue,
                };
                if ln.kind == Kind::A && lm.kind != Kind::Q {
                    out.push(ArenaViolation::E2AnswerByAnswer(m.clone(), n.clone()));
                }
                if lm.polarity == ln.polarity {
                    out.push(ArenaViolation::E3SamePolarity(m.clone(), n.clone()));
                }
            }
        }
    }
    out
}

/// Why a position failed a legality check; `cmd play` prints these verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LegalityFailure {
    NotInArena { index: usize, mv: RankedMove },
    LabelMismatch { index: usize, recorded: MoveLabel, arena: MoveLabel },
    MissingJustifier { index: usize },
    ForwardJustifier { index: usize, justifier: usize },
    NotEnabled { index: usize, justifier: usize },
    Alternation { index: usize },
    Visibility { index: usize, justifier: usize, side: Polarity },
}

impl fmt::Display for LegalityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LegalityFailure::NotInArena { index, mv } => {
                write!(f, "justification: move {mv} at {index} is not a move of the arena")
            }
            LegalityFailure::LabelMismatch { index, recorded, arena } => write!(
                f,
                "justification: occurrence {index} recorded as {recorded} but the arena says {arena}"
            ),
            LegalityFailure::MissingJustifier { index } => write!(
                f,
                "justification: non-initial move at {index} has no justifier"
            ),
            LegalityFailure::ForwardJustifier { index, justifier } => write!(
                f,
                "justification: occurrence {index} points at {justifier}, which is not strictly earlier"
            ),
            LegalityFailure::NotEnabled { index, justifier } => write!(
                f,
                "justification: the move at {justifier} does not enable the move at {index}"
            ),
            LegalityFailure::Alternation { index } => {
                write!(f, "alternation: occurrence {index} repeats the previous polarity")
            }
            LegalityFailure::Visibility { index, justifier, side } => {
                let v = match side {
                    Polarity::P => "P-view",
                    Polarity::O => "O-view",
                };
                write!(f, "visibility: justifier {justifier} of occurrence {index} is outside the {v}")
            }
        }
    }
}

/// Checks that `pos` is a justified sequence of the arena: moves contained,
/// labels agreeing, justifiers strictly earlier and enabling, initial
/// occurrences exactly the unjustified ones.
pub fn check_justified(space: &impl MoveSpace, pos: &Position) -> Result<(), LegalityFailure> {
    for (i, occ) in pos.items.iter().enumerate() {
        let arena_label = space
            .label(&occ.mv)
            .ok_or_else(|| LegalityFailure::NotInArena { index: i, mv: occ.mv.clone() })?;
        if arena_label != occ.label {
            return Err(LegalityFailure::LabelMismatch {
                index: i,
                recorded: occ.label,
                arena: arena_label,
            });
        }
        match occ.justifier {
            None => {
                if !space.enables(Enabler::Root, &occ.mv) {
                    return Err(LegalityFailure::MissingJustifier { index: i });
                }
            }
            Some(j) => {
                if j >= i {
                    return Err(LegalityFailure::ForwardJustifier { index: i, justifier: j });
                }
                if !space.enables(Enabler::Move(&pos.items[j].mv), &occ.mv) {
                    return Err(LegalityFailure::NotEnabled { index: i, justifier: j });
                }
            }
        }
    }
    Ok(())
}

pub fn is_justified(space: &impl MoveSpace, pos: &Position) -> bool {
    check_justified(space, pos).is_ok()
}

/// Full legality: justification, alternation and visibility.
pub fn check_legal(space: &impl MoveSpace, pos: &Position) -> Result<(), LegalityFailure> {
    check_justified(space, pos)?;
    for (i, occ) in pos.items.iter().enumerate() {
        let expect = if i % 2 == 0 { Polarity::O } else { Polarity::P };
        if occ.polarity() != expect {
            return Err(LegalityFailure::Alternation { index: i });
        }
    }
    for (i, occ) in pos.items.iter().enumerate() {
        if let Some(j) = occ.justifier {
            let before = pos.prefix(i);
            let visible = match occ.polarity() {
                Polarity::P => p_view_indices(&before),
                Polarity::O => o_view_indices(&before),
            };
            if !visible.contains(&j) {
                return Err(LegalityFailure::Visibility {
                    index: i,
                    justifier: j,
                    side: occ.polarity(),
                });
            }
        }
    }
    Ok(())
}

pub fn is_legal(space: &impl MoveSpace, pos: &Position) -> bool {
    check_legal(space, pos).is_ok()
}

/// Relaxed justification check used for views: a view may contain
/// justifier-free non-initial occurrences (their targets were elided), so only
/// containment and pointer sanity are verified.
pub fn is_view_coherent(space: &impl MoveSpace, pos: &Position) -> bool {
    pos.items.iter().enumerate().all(|(i, occ)| {
        space.label(&occ.mv) == Some(occ.label)
            && occ.justifier.map_or(true, |j| {
                j < i && space.enables(Enabler::Move(&pos.items[j].mv), &occ.mv)
            })
    })
}
