//! Strategies of explicit games: tree-forms, exhaustive enumeration,
//! consistent and complete sets, unions.

use super::FiniteGame;
use crate::arena::Position;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A strategy in tree-form: its even plays together with the odd positions
/// the ambient game offers on top of them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StrategyTable {
    pub plays: BTreeSet<Position>,
}

impl StrategyTable {
    pub fn even_plays(&self) -> BTreeSet<Position> {
        self.plays.iter().filter(|p| p.len() % 2 == 0).cloned().collect()
    }

    /// The deterministic game `σ̂` carried by the tree-form, with the arena
    /// induced from the plays themselves.
    pub fn as_game(&self) -> FiniteGame {
        FiniteGame::from_positions(self.plays.clone())
    }

    /// `σ̂` with the ambient game's enabling restricted to the retained
    /// moves. Consistency of `st(G)` needs the full induced relation; the
    /// per-play pruned arena would drop shared enabling pairs.
    pub fn as_game_in(&self, ambient: &FiniteGame) -> FiniteGame {
        let induced = FiniteGame::from_positions(self.plays.clone());
        let moves: BTreeSet<&Position> = BTreeSet::new();
        let _ = moves;
        let retained: BTreeSet<_> = induced.arena.labels.keys().cloned().collect();
        let arena = crate::arena::Arena {
            labels: ambient
                .arena
                .labels
                .iter()
                .filter(|(m, _)| retained.contains(*m))
                .map(|(m, l)| (m.clone(), *l))
                .collect(),
            initials: ambient
                .arena
                .initials
                .iter()
                .filter(|m| retained.contains(*m))
                .cloned()
                .collect(),
            enabling: ambient
                .arena
                .enabling
                .iter()
                .filter(|(m, n)| retained.contains(m) && retained.contains(n))
                .cloned()
                .collect(),
        };
        FiniteGame { arena: arena.canonical(), positions: self.plays.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("S1: {0} is in the strategy but its even prefix is not")]
    NotEvenPrefixClosed(String),
    #[error("S1: strategy must contain the empty position")]
    Empty,
    #[error("S2: {0} and {1} answer the same odd position differently")]
    NotDeterministic(String, String),
    #[error("play {0} is not a position of the game")]
    NotInGame(String),
    #[error("play {0} is not of even length")]
    OddPlay(String),
}

/// Checks S1 and S2 for a set of even plays inside `g`.
pub fn check_s1_s2(plays: &BTreeSet<Position>, g: &FiniteGame) -> Result<(), StrategyError> {
    if !plays.contains(&Position::empty()) {
        return Err(StrategyError::Empty);
    }
    for p in plays {
        if p.len() % 2 != 0 {
            return Err(StrategyError::OddPlay(p.to_string()));
        }
        if !g.positions.contains(p) {
            return Err(StrategyError::NotInGame(p.to_string()));
        }
        if p.len() >= 2 && !plays.contains(&p.prefix(p.len() - 2)) {
            return Err(StrategyError::NotEvenPrefixClosed(p.to_string()));
        }
    }
    for p in plays {
        for q in plays {
            if p.len() == q.len() && p.len() >= 2 && p != q {
                let stem = p.prefix(p.len() - 1);
                if stem == q.prefix(q.len() - 1) {
                    return Err(StrategyError::NotDeterministic(p.to_string(), q.to_string()));
                }
            }
        }
    }
    Ok(())
}

/// Tree-form `σ̄ = σ ∪ { s·m ∈ P_G | s ∈ σ }`.
pub fn tree_form(plays: &BTreeSet<Position>, g: &FiniteGame) -> Result<StrategyTable, StrategyError> {
    check_s1_s2(plays, g)?;
    let mut all = plays.clone();
    for s in plays {
        for ext in g.extensions(s) {
            all.insert(ext);
        }
    }
    Ok(StrategyTable { plays: all })
}

/// Enumerates every strategy on `g`, in tree-form.
///
/// A strategy is a choice, at each reachable odd position, of either no
/// response or one legal response; the combinations multiply independently
/// down the position tree.
pub fn strategies_on(g: &FiniteGame) -> Vec<StrategyTable> {
    fn go(even: &Position, g: &FiniteGame) -> Vec<BTreeSet<Position>> {
        let mut per_odd: Vec<Vec<BTreeSet<Position>>> = Vec::new();
        for odd in g.extensions(even) {
            let mut options: Vec<BTreeSet<Position>> = vec![BTreeSet::new()];
            for resp in g.extensions(&odd) {
                for sub in go(&resp, g) {
                    let mut set = sub;
                    set.insert(resp.clone());
                    options.push(set);
                }
            }
            per_odd.push(options);
        }
        let mut acc: Vec<BTreeSet<Position>> = vec![BTreeSet::new()];
        for options in per_odd {
            let mut next = Vec::new();
            for base in &acc {
                for opt in &options {
                    let mut set = base.clone();
                    set.extend(opt.iter().cloned());
                    next.push(set);
                }
            }
            acc = next;
        }
        acc
    }

    let mut out = Vec::new();
    for mut evens in go(&Position::empty(), g) {
        evens.insert(Position::empty());
        let table = tree_form(&evens, g).expect("enumerated sets satisfy S1/S2");
        out.push(table);
    }
    out.sort();
    out.dedup();
    out
}

/// Which consistency clause a set of strategy-games violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConsistencyFailure {
    #[error("clause 1: labels of shared move disagree")]
    Labels,
    #[error("clause 2: enabling of shared moves disagrees")]
    Enabling,
    #[error("clause 3: odd-length positions disagree on a shared even play")]
    OddPositions,
}

/// Consistency of a set of strategies-as-games.
pub fn is_consistent(set: &[FiniteGame]) -> Result<(), ConsistencyFailure> {
    for s in set {
        for t in set {
            for (m, l) in &s.arena.labels {
                if let Some(l2) = t.arena.labels.get(m) {
                    if l != l2 {
                        return Err(ConsistencyFailure::Labels);
                    }
                }
            }
            for m in s.arena.labels.keys().filter(|m| t.arena.labels.contains_key(*m)) {
                let si = s.arena.initials.contains(m);
                let ti = t.arena.initials.contains(m);
                if si != ti {
                    return Err(ConsistencyFailure::Enabling);
                }
                for n in s.arena.labels.keys().filter(|n| t.arena.labels.contains_key(*n)) {
                    let se = s.arena.enabling.contains(&(m.clone(), n.clone()));
                    let te = t.arena.enabling.contains(&(m.clone(), n.clone()));
                    if se != te {
                        return Err(ConsistencyFailure::Enabling);
                    }
                }
            }
            // Clause 3: shared even plays must offer the same odd extensions.
            for p in s.positions.iter().filter(|p| p.len() % 2 == 0) {
                if !t.positions.contains(p) {
                    continue;
                }
                for ext in s.extensions(p) {
                    let in_t_moves = t.arena.labels.contains_key(&ext.last().unwrap().mv);
                    if in_t_moves && !t.positions.contains(&ext) {
                        return Err(ConsistencyFailure::OddPositions);
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnionError {
    #[error("empty set of strategies has no union game")]
    EmptySet,
    #[error("inconsistent set: {0}")]
    Inconsistent(ConsistencyFailure),
}

/// Componentwise union `⋃S` of a consistent set of strategies-as-games.
pub fn union_game(set: &[FiniteGame]) -> Result<FiniteGame, UnionError> {
    if set.is_empty() {
        return Err(UnionError::EmptySet);
    }
    is_consistent(set).map_err(UnionError::Inconsistent)?;
    let mut labels = BTreeMap::new();
    let mut initials = BTreeSet::new();
    let mut enabling = BTreeSet::new();
    let mut positions = BTreeSet::new();
    for s in set {
        labels.extend(s.arena.labels.clone());
        initials.extend(s.arena.initials.iter().cloned());
        enabling.extend(s.arena.enabling.iter().cloned());
        positions.extend(s.positions.iter().cloned());
    }
    Ok(FiniteGame {
        arena: crate::arena::Arena {
            labels,
            initials: initials.into_iter().collect(),
            enabling: enabling.into_iter().collect(),
        }
        .canonical(),
        positions,
    })
}

/// Completeness: every patchwork of plays drawn from the union is itself one
/// of the strategies in the set.
pub fn is_complete(set: &[FiniteGame]) -> bool {
    let union = match union_game(set) {
        Ok(u) => u,
        Err(_) => return false,
    };
    let as_set: BTreeSet<&FiniteGame> = set.iter().collect();
    strategies_on(&union).iter().all(|table| {
        let hat = table.as_game_in(&union);
        as_set.contains(&hat)
    })
}

/// The strategies of `g`, each as the deterministic game `σ̂` induced in `g`.
pub fn strategy_games(g: &FiniteGame) -> Vec<FiniteGame> {
    strategies_on(g).iter().map(|t| t.as_game_in(g)).collect()
}
