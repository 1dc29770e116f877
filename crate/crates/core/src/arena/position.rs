//! Justified sequences: occurrences addressed by index, justifiers stored as
//! indices into the same sequence.

use super::{MoveLabel, Polarity, RankedMove};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// One occurrence in a justified sequence.
///
/// The label is recorded at append time so that views and alternation checks
/// need no arena; the justifier is `None` exactly on initial occurrences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub mv: RankedMove,
    pub label: MoveLabel,
    pub justifier: Option<usize>,
}

impl Occurrence {
    pub fn polarity(&self) -> Polarity {
        self.label.polarity
    }
}

/// A justified sequence of move occurrences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Position {
    pub items: Vec<Occurrence>,
}

impl Position {
    pub fn empty() -> Position {
        Position::default()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn push(&mut self, mv: RankedMove, label: MoveLabel, justifier: Option<usize>) {
        debug_assert!(justifier.map_or(true, |j| j < self.items.len()));
        self.items.push(Occurrence { mv, label, justifier });
    }

    pub fn extended(&self, mv: RankedMove, label: MoveLabel, justifier: Option<usize>) -> Position {
        let mut p = self.clone();
        p.push(mv, label, justifier);
        p
    }

    pub fn last(&self) -> Option<&Occurrence> {
        self.items.last()
    }

    pub fn prefix(&self, len: usize) -> Position {
        Position { items: self.items[..len].to_vec() }
    }

    pub fn is_prefix_of(&self, other: &Position) -> bool {
        self.len() <= other.len() && self.items[..] == other.items[..self.len()]
    }

    /// All proper and improper prefixes, shortest first.
    pub fn prefixes(&self) -> impl Iterator<Item = Position> + '_ {
        (0..=self.len()).map(move |k| self.prefix(k))
    }

    /// Restriction to the occurrences selected by `keep`, re-indexing the
    /// justifiers that survive and deleting pointers whose target is elided.
    pub fn restrict(&self, keep: impl Fn(usize, &Occurrence) -> bool) -> Position {
        let mut new_index = vec![None; self.items.len()];
        let mut items = Vec::new();
        for (i, occ) in self.items.iter().enumerate() {
            if keep(i, occ) {
                let justifier = occ.justifier.and_then(|j| new_index[j]);
                new_index[i] = Some(items.len());
                items.push(Occurrence { mv: occ.mv.clone(), label: occ.label, justifier });
            }
        }
        Position { items }
    }

    /// Like [`Position::restrict`] but also transforms the kept moves and
    /// returns the index correspondence (original -> restricted).
    pub fn restrict_map(
        &self,
        keep: impl Fn(usize, &Occurrence) -> bool,
        map: impl Fn(&RankedMove) -> RankedMove,
    ) -> (Position, Vec<Option<usize>>) {
        let mut new_index = vec![None; self.items.len()];
        let mut items = Vec::new();
        for (i, occ) in self.items.iter().enumerate() {
            if keep(i, occ) {
                let justifier = occ.justifier.and_then(|j| new_index[j]);
                new_index[i] = Some(items.len());
                items.push(Occurrence { mv: map(&occ.mv), label: occ.label, justifier });
            }
        }
        (Position { items }, new_index)
    }

    /// Indices of occurrences with no justifier.
    pub fn initial_indices(&self) -> Vec<usize> {
        self.items
            .iter()
            .enumerate()
            .filter(|(_, o)| o.justifier.is_none())
            .map(|(i, _)| i)
            .collect()
    }

    /// Index of the initial occurrence that hereditarily justifies `i`.
    pub fn hereditary_root(&self, mut i: usize) -> usize {
        while let Some(j) = self.items[i].justifier {
            i = j;
        }
        i
    }

    pub fn moves(&self) -> impl Iterator<Item = &RankedMove> {
        self.items.iter().map(|o| &o.mv)
    }

    /// Strict alternation of polarities, with Opponent first.
    pub fn alternating(&self) -> bool {
        self.items.iter().enumerate().all(|(i, o)| {
            let expect = if i % 2 == 0 { Polarity::O } else { Polarity::P };
            o.polarity() == expect
        })
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for (i, occ) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, " · ")?;
            }
            write!(f, "{}", occ.mv)?;
            if let Some(j) = occ.justifier {
                write!(f, "@{j}")?;
            }
        }
        Ok(())
    }
}

/// Canonical ordering: length first, then lexicographic on
/// `(ident, rank, tag_path, justifier)` per occurrence. Enumeration results
/// are sorted with this order so runs are deterministic.
impl Ord for Position {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.items.iter().zip(&other.items) {
                let o = a
                    .mv
                    .ident
                    .cmp(&b.mv.ident)
                    .then(a.mv.rank.cmp(&b.mv.rank))
                    .then(a.mv.tag_path.cmp(&b.mv.tag_path))
                    .then(a.justifier.cmp(&b.justifier));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Position {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Wire form of one occurrence in the shared JSON trace schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OccurrenceWire {
    pub ident: super::Ident,
    pub rank: u32,
    pub tag_path: Vec<super::Tag>,
    pub justifier: Option<usize>,
}

impl Position {
    /// Serializes to the shared schema: an array of
    /// `{ident, rank, tag_path, justifier}` objects.
    pub fn to_wire(&self) -> Vec<OccurrenceWire> {
        self.items
            .iter()
            .map(|o| OccurrenceWire {
                ident: o.mv.ident.clone(),
                rank: o.mv.rank,
                tag_path: o.mv.tag_path.clone(),
                justifier: o.justifier,
            })
            .collect()
    }

    /// Rebuilds a position from wire form, recovering labels from the arena.
    pub fn from_wire(
        wire: &[OccurrenceWire],
        space: &impl super::MoveSpace,
    ) -> Result<Position, String> {
        let mut pos = Position::empty();
        for (i, w) in wire.iter().enumerate() {
            let mv = RankedMove { ident: w.ident.clone(), rank: w.rank, tag_path: w.tag_path.clone() };
            let label = space
                .label(&mv)
                .ok_or_else(|| format!("occurrence {i}: move {mv} not in arena"))?;
            if let Some(j) = w.justifier {
                if j >= i {
                    return Err(format!("occurrence {i}: justifier {j} not strictly earlier"));
                }
            }
            pos.push(mv, label, w.justifier);
        }
        Ok(pos)
    }
}
