//! Explicit finite games: the brute-force oracle layer.
//!
//! Games here carry their full position sets, so every predicate and
//! construction is computed by enumeration. The semantic layers are tested
//! against this one.

use crate::arena::{
    check_legal, initial_occurrences, thread_restriction, Arena, Kind, MoveSpace, Position,
    RankedMove,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub mod compose;
pub mod cons;
pub mod strat;

pub use compose::{compose_games, enumerate_interactions, Interaction};
pub use cons::{bang, lollipop, product, tensor};
pub use strat::{
    is_complete, is_consistent, strategies_on, tree_form, union_game, ConsistencyFailure,
    StrategyTable,
};

/// An explicit arena together with an explicit, prefix-closed position set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteGame {
    pub arena: Arena,
    pub positions: BTreeSet<Position>,
}

impl FiniteGame {
    /// The terminal game: empty arena, only the empty position.
    pub fn terminal() -> FiniteGame {
        let mut positions = BTreeSet::new();
        positions.insert(Position::empty());
        FiniteGame { arena: Arena::empty(), positions }
    }

    /// The flat game on an explicit answer alphabet.
    pub fn flat<I: IntoIterator<Item = RankedMove>>(answers: I) -> FiniteGame {
        let answers: Vec<_> = answers.into_iter().collect();
        let arena = Arena::flat(answers.clone());
        let q = RankedMove::tok("q");
        let mut positions = BTreeSet::new();
        positions.insert(Position::empty());
        let ql = arena.label(&q).unwrap();
        let p_q = Position::empty().extended(q.clone(), ql, None);
        positions.insert(p_q.clone());
        for a in answers {
            let al = arena.label(&a).unwrap();
            positions.insert(p_q.extended(a, al, Some(0)));
        }
        FiniteGame { arena, positions }
    }

    /// Flat game over the numerals `0..=max`.
    pub fn flat_nat(max: u64) -> FiniteGame {
        FiniteGame::flat((0..=max).map(RankedMove::num))
    }

    /// Derives the economical game carried by a position set: moves, labels
    /// and enabling pairs are exactly the ones the positions use.
    pub fn from_positions(positions: BTreeSet<Position>) -> FiniteGame {
        let mut labels = BTreeMap::new();
        let mut initials = BTreeSet::new();
        let mut enabling = BTreeSet::new();
        for pos in &positions {
            for occ in &pos.items {
                labels.insert(occ.mv.clone(), occ.label);
                match occ.justifier {
                    None => {
                        initials.insert(occ.mv.clone());
                    }
                    Some(j) => {
                        enabling.insert((pos.items[j].mv.clone(), occ.mv.clone()));
                    }
                }
            }
        }
        FiniteGame {
            arena: Arena {
                labels,
                initials: initials.into_iter().collect(),
                enabling: enabling.into_iter().collect(),
            }
            .canonical(),
            positions,
        }
    }

    /// Drops moves and enabling pairs that no position uses.
    pub fn prune_economical(&self) -> FiniteGame {
        FiniteGame::from_positions(self.positions.clone())
    }

    pub fn max_len(&self) -> usize {
        self.positions.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn even_positions(&self) -> impl Iterator<Item = &Position> {
        self.positions.iter().filter(|p| p.len() % 2 == 0)
    }

    /// One-move extensions of `pos` inside this game.
    pub fn extensions(&self, pos: &Position) -> Vec<Position> {
        self.positions
            .iter()
            .filter(|q| q.len() == pos.len() + 1 && pos.is_prefix_of(q))
            .cloned()
            .collect()
    }

    /// Applies a move transformation to the arena and every position.
    pub fn map_moves(&self, f: impl Fn(&RankedMove) -> RankedMove + Copy) -> FiniteGame {
        FiniteGame {
            arena: self.arena.map_moves(f),
            positions: self
                .positions
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    for occ in &mut q.items {
                        occ.mv = f(&occ.mv);
                    }
                    q
                })
                .collect(),
        }
    }
}

/// Per-predicate validation report for a finite game, with failure witnesses.
#[derive(Debug, Clone, Default)]
pub struct GameReport {
    pub v1_prefix_closed: bool,
    pub v2_thread_closed: bool,
    pub all_legal: bool,
    pub economical: bool,
    pub well_opened: bool,
    pub well_founded: bool,
    pub witnesses: Vec<String>,
}

impl GameReport {
    pub fn valid_game(&self) -> bool {
        self.v1_prefix_closed && self.v2_thread_closed && self.all_legal
    }

    pub fn all(&self) -> bool {
        self.valid_game() && self.economical && self.well_opened && self.well_founded
    }
}

/// Checks V1, V2, legality, economy, well-openedness and well-foundedness.
pub fn validate_game(g: &FiniteGame) -> GameReport {
    let mut report = GameReport {
        v1_prefix_closed: true,
        v2_thread_closed: true,
        all_legal: true,
        economical: true,
        well_opened: true,
        well_founded: true,
        witnesses: Vec::new(),
    };

    if !g.positions.contains(&Position::empty()) {
        report.v1_prefix_closed = false;
        report.witnesses.push("V1: empty position missing".into());
    }
    for pos in &g.positions {
        if pos.len() > 0 && !g.positions.contains(&pos.prefix(pos.len() - 1)) {
            report.v1_prefix_closed = false;
            report.witnesses.push(format!("V1: prefix of {pos} missing"));
        }
        if let Err(e) = check_legal(&g.arena, pos) {
            report.all_legal = false;
            report.witnesses.push(format!("legality: {pos}: {e}"));
        }
        let inits = initial_occurrences(pos);
        for mask in 0..(1usize << inits.len().min(12)) {
            let subset: Vec<usize> = inits
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &i)| i)
                .collect();
            match thread_restriction(pos, &subset) {
                Ok(r) => {
                    if !g.positions.contains(&r) {
                        report.v2_thread_closed = false;
                        report
                            .witnesses
                            .push(format!("V2: {pos} restricted to {subset:?} escapes"));
                    }
                }
                Err(e) => {
                    report.v2_thread_closed = false;
                    report.witnesses.push(format!("V2: {pos}: {e}"));
                }
            }
        }
        for (i, occ) in pos.items.iter().enumerate() {
            if occ.justifier.is_none() && i > 0 {
                report.well_opened = false;
                report
                    .witnesses
                    .push(format!("well-opened: {pos} has initial occurrence at {i}"));
            }
        }
    }

    let mut used_moves = BTreeSet::new();
    let mut used_pairs = BTreeSet::new();
    for pos in &g.positions {
        for occ in &pos.items {
            used_moves.insert(occ.mv.clone());
            if let Some(j) = occ.justifier {
                used_pairs.insert((pos.items[j].mv.clone(), occ.mv.clone()));
            }
        }
    }
    for m in g.arena.labels.keys() {
        if !used_moves.contains(m) {
            report.economical = false;
            report.witnesses.push(format!("economy: move {m} never appears"));
        }
    }
    for (m, n) in &g.arena.enabling {
        if !used_pairs.contains(&(m.clone(), n.clone())) {
            report.economical = false;
            report.witnesses.push(format!("economy: enabling {m} ⊢ {n} never used"));
        }
    }

    // Well-foundedness of a finite enabling relation is acyclicity.
    let moves: Vec<_> = g.arena.labels.keys().cloned().collect();
    let index: BTreeMap<_, _> = moves.iter().cloned().zip(0..).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); moves.len()];
    for (m, n) in &g.arena.enabling {
        if let (Some(&a), Some(&b)) = (index.get(m), index.get(n)) {
            adj[a].push(b);
        }
    }
    fn cyclic(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &adj[v] {
            if state[w] == 1 || (state[w] == 0 && cyclic(w, adj, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; moves.len()];
    for v in 0..moves.len() {
        if state[v] == 0 && cyclic(v, &adj, &mut state) {
            report.well_founded = false;
            report
                .witnesses
                .push(format!("well-founded: enabling cycle through {}", moves[v]));
            break;
        }
    }

    report
}

/// Componentwise subgame check: `M_H ⊆ M_G`, labels restrict, enabling and
/// positions contained.
pub fn is_subgame(h: &FiniteGame, g: &FiniteGame) -> bool {
    h.arena.labels.iter().all(|(m, l)| g.arena.labels.get(m) == Some(l))
        && h.arena.initials.iter().all(|m| g.arena.initials.contains(m))
        && h.arena.enabling.iter().all(|p| g.arena.enabling.contains(p))
        && h.positions.is_subset(&g.positions)
}

/// Generates every legal position of `arena` (up to `max_len`) that satisfies
/// `admit` at each prefix. The workhorse behind the explicit constructions.
pub fn generate_positions(
    arena: &Arena,
    max_len: usize,
    admit: impl Fn(&Position) -> bool,
) -> BTreeSet<Position> {
    let mut out = BTreeSet::new();
    let mut frontier = vec![Position::empty()];
    out.insert(Position::empty());
    let moves: Vec<_> = arena.labels.keys().cloned().collect();
    while let Some(pos) = frontier.pop() {
        if pos.len() >= max_len {
            continue;
        }
        for mv in &moves {
            let label = arena.labels[mv];
            let mut justs: Vec<Option<usize>> = Vec::new();
            if arena.initials.contains(mv) {
                justs.push(None);
            }
            for (j, occ) in pos.items.iter().enumerate() {
                if arena.enabling.iter().any(|(a, b)| a == &occ.mv && b == mv) {
                    justs.push(Some(j));
                }
            }
            for j in justs {
                let next = pos.extended(mv.clone(), label, j);
                if check_legal(arena, &next).is_ok() && admit(&next) && !out.contains(&next) {
                    out.insert(next.clone());
                    frontier.push(next);
                }
            }
        }
    }
    out
}

/// Relabels a raw restriction inside the component's own arena; `None` when a
/// move does not belong to it.
pub fn relabel_in(pos: &Position, arena: &Arena) -> Option<Position> {
    let mut out = Position::empty();
    for occ in &pos.items {
        let label = arena.label(&occ.mv)?;
        out.push(occ.mv.clone(), label, occ.justifier);
    }
    Some(out)
}

/// Checks `s ↾ X ∈ P_X` after stripping `tag` from the kept moves.
pub fn component_position(pos: &Position, tag: crate::arena::Tag, game: &FiniteGame) -> bool {
    let (raw, _) = pos.restrict_map(
        |_, occ| occ.mv.head_tag() == Some(tag),
        |m| m.untag(tag).expect("filtered on head tag"),
    );
    match relabel_in(&raw, &game.arena) {
        Some(p) => game.positions.contains(&p),
        None => false,
    }
}

/// True when every answer in every position answers a distinct question;
/// used by tests, not an axiom.
pub fn questions_answered_once(g: &FiniteGame) -> bool {
    g.positions.iter().all(|p| {
        let mut answered = BTreeSet::new();
        p.items.iter().all(|occ| {
            if occ.label.kind == Kind::A {
                if let Some(j) = occ.justifier {
                    return answered.insert(j);
                }
            }
            true
        })
    })
}

pub mod strat2;

#[cfg(test)]
mod tests;
