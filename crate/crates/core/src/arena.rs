//! Moves, labels, arenas and the combinatorial substrate of plays.
//!
//! An arena fixes the moves of a game, their Opponent/Player and
//! Question/Answer labels, and the enabling relation saying which move may be
//! made for which. Everything else in the crate (positions, views, legality,
//! games, strategies) is built on top of these.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub mod legal;
pub mod position;
pub mod thread;
pub mod view;

pub use legal::{check_justified, check_legal, is_justified, is_legal, is_view_coherent, validate_arena, ArenaViolation, LegalityFailure};
pub use position::{Occurrence, Position};
pub use thread::{initial_occurrences, thread_restriction};
pub use view::{o_view, p_view};

/// Opponent / Player polarity of a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Polarity {
    O,
    P,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::O => Polarity::P,
            Polarity::P => Polarity::O,
        }
    }
}

/// Question / Answer kind of a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    Q,
    A,
}

/// The four move labels OQ, OA, PQ, PA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MoveLabel {
    pub polarity: Polarity,
    pub kind: Kind,
}

impl MoveLabel {
    pub const OQ: MoveLabel = MoveLabel { polarity: Polarity::O, kind: Kind::Q };
    pub const OA: MoveLabel = MoveLabel { polarity: Polarity::O, kind: Kind::A };
    pub const PQ: MoveLabel = MoveLabel { polarity: Polarity::P, kind: Kind::Q };
    pub const PA: MoveLabel = MoveLabel { polarity: Polarity::P, kind: Kind::A };

    pub fn flip(self) -> MoveLabel {
        MoveLabel { polarity: self.polarity.flip(), kind: self.kind }
    }

    pub fn all() -> [MoveLabel; 4] {
        [Self::OQ, Self::OA, Self::PQ, Self::PA]
    }
}

impl fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.polarity {
            Polarity::O => 'O',
            Polarity::P => 'P',
        };
        let k = match self.kind {
            Kind::Q => 'Q',
            Kind::A => 'A',
        };
        write!(f, "{p}{k}")
    }
}

/// Underlying identity of a move, before rank and tags.
///
/// `Num` covers both natural-number answers and the construction numbers that
/// stand for game names; `Tok` covers named tokens such as `q`, `tt` or
/// `tick`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ident {
    Num(u64),
    Tok(String),
}

impl Ident {
    pub fn tok(s: &str) -> Ident {
        Ident::Tok(s.to_string())
    }

    pub fn as_num(&self) -> Option<u64> {
        match self {
            Ident::Num(n) => Some(*n),
            Ident::Tok(_) => None,
        }
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ident::Num(n) => write!(f, "{n}"),
            Ident::Tok(s) => write!(f, "{s}"),
        }
    }
}

/// One segment of a disambiguation tag path.
///
/// `L`/`R` record disjoint-union provenance of binary constructions, `T`
/// numbers the threads of an exponential in order of opening, and `Ix` keeps
/// apart the successive questions of tuple-style games.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tag {
    L,
    R,
    T(u32),
    Ix(u32),
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::L => write!(f, "L"),
            Tag::R => write!(f, "R"),
            Tag::T(i) => write!(f, "t{i}"),
            Tag::Ix(i) => write!(f, "#{i}"),
        }
    }
}

pub type TagPath = Vec<Tag>;

/// A ranked move `[m]_k`, possibly tagged with disjoint-union provenance.
///
/// Mere moves have rank 0; a move of rank `k+1` is the name of a registered
/// game whose own moves have rank supremum `k`, and its `ident` is that
/// game's construction number.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RankedMove {
    pub ident: Ident,
    pub rank: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tag_path: TagPath,
}

impl RankedMove {
    pub fn mere(ident: Ident) -> RankedMove {
        RankedMove { ident, rank: 0, tag_path: Vec::new() }
    }

    pub fn num(n: u64) -> RankedMove {
        RankedMove::mere(Ident::Num(n))
    }

    pub fn tok(s: &str) -> RankedMove {
        RankedMove::mere(Ident::tok(s))
    }

    pub fn name(construction_number: u64, rank: u32) -> RankedMove {
        RankedMove { ident: Ident::Num(construction_number), rank, tag_path: Vec::new() }
    }

    /// The same move with a tag pushed at the front of its path.
    pub fn tagged(&self, t: Tag) -> RankedMove {
        let mut tag_path = Vec::with_capacity(self.tag_path.len() + 1);
        tag_path.push(t);
        tag_path.extend(self.tag_path.iter().copied());
        RankedMove { ident: self.ident.clone(), rank: self.rank, tag_path }
    }

    /// Strips `t` off the front of the tag path; `None` if it does not match.
    pub fn untag(&self, t: Tag) -> Option<RankedMove> {
        match self.tag_path.first() {
            Some(&head) if head == t => Some(RankedMove {
                ident: self.ident.clone(),
                rank: self.rank,
                tag_path: self.tag_path[1..].to_vec(),
            }),
            _ => None,
        }
    }

    pub fn head_tag(&self) -> Option<Tag> {
        self.tag_path.first().copied()
    }
}

impl fmt::Display for RankedMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tag_path {
            write!(f, "{t}.")?;
        }
        if self.rank == 0 {
            write!(f, "{}", self.ident)
        } else {
            write!(f, "[{}]{}", self.ident, self.rank)
        }
    }
}

/// The enabler of a move: either the distinguished root `⋆` or another move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enabler<'a> {
    Root,
    Move(&'a RankedMove),
}

/// Bounded enumeration parameters shared by every decision-procedure arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest numeric ident enumerated for infinite alphabets.
    pub alphabet: u64,
    /// Position-depth bound for behavioral checks.
    pub depth: usize,
    /// Unfolding budget of the natural-number eliminator.
    pub unfold: u32,
    /// Step budget of the interaction machine.
    pub steps: usize,
    /// Thread bound for explicit exponentials.
    pub threads: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { alphabet: 32, depth: 10, unfold: 64, steps: 4096, threads: 3 }
    }
}

impl Bounds {
    pub fn with_alphabet(mut self, a: u64) -> Self {
        self.alphabet = a;
        self
    }
    pub fn with_depth(mut self, d: usize) -> Self {
        self.depth = d;
        self
    }
    pub fn with_unfold(mut self, u: u32) -> Self {
        self.unfold = u;
        self
    }
    pub fn with_steps(mut self, s: usize) -> Self {
        self.steps = s;
        self
    }
}

/// A set of moves together with labels and enabling, queried rather than
/// stored: explicit arenas and semantic games both implement this.
pub trait MoveSpace {
    /// Label of `m`, or `None` when `m` is not a move of the arena.
    fn label(&self, m: &RankedMove) -> Option<MoveLabel>;

    /// Whether `from` enables `to`.
    fn enables(&self, from: Enabler<'_>, to: &RankedMove) -> bool;

    /// Bounded enumeration of the moves of the arena.
    fn moves(&self, bounds: &Bounds) -> Vec<RankedMove>;

    fn contains(&self, m: &RankedMove) -> bool {
        self.label(m).is_some()
    }

    fn is_initial(&self, m: &RankedMove) -> bool {
        self.enables(Enabler::Root, m)
    }
}

/// An explicit finite arena: the representation used by the brute-force
/// oracle layer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Arena {
    /// Moves with their labels, in canonical order.
    pub labels: BTreeMap<RankedMove, MoveLabel>,
    /// Root-enabled (initial) moves.
    pub initials: Vec<RankedMove>,
    /// Enabling pairs between moves.
    pub enabling: Vec<(RankedMove, RankedMove)>,
}

impl Arena {
    pub fn empty() -> Arena {
        Arena::default()
    }

    /// Sorts the initial and enabling lists; equality of arenas is structural
    /// on this canonical form.
    pub fn canonical(mut self) -> Arena {
        self.initials.sort();
        self.initials.dedup();
        self.enabling.sort();
        self.enabling.dedup();
        self
    }

    /// The flat arena on an answer alphabet: one initial question `q`, every
    /// answer enabled by it.
    pub fn flat<I: IntoIterator<Item = RankedMove>>(answers: I) -> Arena {
        let q = RankedMove::tok("q");
        let mut labels = BTreeMap::new();
        labels.insert(q.clone(), MoveLabel::OQ);
        let mut enabling = Vec::new();
        for a in answers {
            labels.insert(a.clone(), MoveLabel::PA);
            enabling.push((q.clone(), a));
        }
        Arena { labels, initials: vec![q], enabling }.canonical()
    }

    /// Flat arena over the numerals `0..=max`.
    pub fn flat_nat(max: u64) -> Arena {
        Arena::flat((0..=max).map(RankedMove::num))
    }

    pub fn move_count(&self) -> usize {
        self.labels.len()
    }

    /// Applies a move transformation to every component of the arena.
    pub fn map_moves(&self, f: impl Fn(&RankedMove) -> RankedMove) -> Arena {
        Arena {
            labels: self.labels.iter().map(|(m, l)| (f(m), *l)).collect(),
            initials: self.initials.iter().map(&f).collect(),
            enabling: self.enabling.iter().map(|(a, b)| (f(a), f(b))).collect(),
        }
        .canonical()
    }

    /// Flips the OP polarity of every label, keeping QA as is.
    pub fn flip_polarity(&self) -> Arena {
        Arena {
            labels: self.labels.iter().map(|(m, l)| (m.clone(), l.flip())).collect(),
            initials: self.initials.clone(),
            enabling: self.enabling.clone(),
        }
    }
}

impl MoveSpace for Arena {
    fn label(&self, m: &RankedMove) -> Option<MoveLabel> {
        self.labels.get(m).copied()
    }

    fn enables(&self, from: Enabler<'_>, to: &RankedMove) -> bool {
        match from {
            Enabler::Root => self.initials.contains(to),
            Enabler::Move(m) => self.enabling.iter().any(|(a, b)| a == m && b == to),
        }
    }

    fn moves(&self, _bounds: &Bounds) -> Vec<RankedMove> {
        self.labels.keys().cloned().collect()
    }
}

#[cfg(test)]
mod tests;
