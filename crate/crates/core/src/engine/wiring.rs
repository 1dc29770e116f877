//! Copy-cat style oracles: strategies that answer every Opponent move by
//! replaying it at a paired address, justifiers mirrored.

use super::{Oracle, Outcome, Response};
use crate::arena::{MoveLabel, Position, RankedMove, Tag};

/// A segment of a wiring pattern: a fixed tag or a thread-index variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seg {
    Fix(Tag),
    /// Matches a `T(i)` tag; the index carries over to the paired side.
    Var,
}

/// One two-way rewiring between component addresses. The tag-path suffix
/// after the matched prefix is carried verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WirePair {
    pub a: Vec<Seg>,
    pub b: Vec<Seg>,
    /// `None`: a matched Var keeps its index. `Some(base)`: indices translate
    /// through an allocation table rebuilt from the play, with fresh indices
    /// drawn from `base` upward.
    pub alloc: Option<u32>,
}

impl WirePair {
    pub fn fixed(a: Vec<Tag>, b: Vec<Tag>) -> WirePair {
        WirePair {
            a: a.into_iter().map(Seg::Fix).collect(),
            b: b.into_iter().map(Seg::Fix).collect(),
            alloc: None,
        }
    }
}

fn match_prefix(path: &[Tag], pat: &[Seg]) -> Option<(Option<u32>, Vec<Tag>)> {
    if path.len() < pat.len() {
        return None;
    }
    let mut var = None;
    for (t, s) in path.iter().zip(pat) {
        match s {
            Seg::Fix(f) => {
                if t != f {
                    return None;
                }
            }
            Seg::Var => match t {
                Tag::T(i) => var = Some(*i),
                _ => return None,
            },
        }
    }
    Some((var, path[pat.len()..].to_vec()))
}

fn build_path(pat: &[Seg], var: Option<u32>, suffix: &[Tag]) -> Vec<Tag> {
    let mut out = Vec::with_capacity(pat.len() + suffix.len());
    for s in pat {
        match s {
            Seg::Fix(t) => out.push(*t),
            Seg::Var => out.push(Tag::T(var.expect("wiring variable bound"))),
        }
    }
    out.extend_from_slice(suffix);
    out
}

/// A generalized copy-cat: each O-move at a wired address is answered by the
/// same underlying move at the paired address with flipped polarity, the
/// justifier mirrored through the pairing of earlier occurrences.
#[derive(Debug, Clone)]
pub struct Wiring {
    pub pairs: Vec<WirePair>,
}

impl Wiring {
    pub fn new(pairs: Vec<WirePair>) -> Wiring {
        Wiring { pairs }
    }

    /// Plain copy-cat on `X ⊸ X`: domain and codomain swap.
    pub fn copycat() -> Wiring {
        Wiring::new(vec![WirePair::fixed(vec![Tag::L], vec![Tag::R])])
    }

    /// Dereliction on `!X ⊸ X`: the codomain mirrors domain thread 0.
    pub fn derelict() -> Wiring {
        Wiring::new(vec![WirePair::fixed(vec![Tag::L, Tag::T(0)], vec![Tag::R])])
    }

    /// Translates `mv` to its wired counterpart, consulting (and logically
    /// extending) the thread-allocation induced by the play so far.
    fn translate(&self, pos: &Position, mv: &RankedMove) -> Option<RankedMove> {
        for (pi, pair) in self.pairs.iter().enumerate() {
            for a_to_b in [true, false] {
                let (src, dst) = if a_to_b { (&pair.a, &pair.b) } else { (&pair.b, &pair.a) };
                if let Some((var, suffix)) = match_prefix(&mv.tag_path, src) {
                    let out_var = match (pair.alloc, var) {
                        (_, None) => None,
                        (None, Some(i)) => Some(i),
                        (Some(base), Some(i)) => self.alloc_index(pos, pi, a_to_b, i, base)?,
                    };
                    let tag_path = build_path(dst, out_var, &suffix);
                    return Some(RankedMove {
                        ident: mv.ident.clone(),
                        rank: mv.rank,
                        tag_path,
                    });
                }
            }
        }
        None
    }

    /// Allocation table for indexed pairs, rebuilt from the mirror structure
    /// of the play (occurrence `2k+1` copies occurrence `2k`). Translating
    /// a-side indices allocates fresh b-side indices from `base` upward;
    /// b-side indices only ever translate back through a recorded pair.
    fn alloc_index(
        &self,
        pos: &Position,
        pair: usize,
        a_to_b: bool,
        idx: u32,
        base: u32,
    ) -> Option<Option<u32>> {
        let pat_a = &self.pairs[pair].a;
        let pat_b = &self.pairs[pair].b;
        let mut table: Vec<(u32, u32)> = Vec::new();
        let mut k = 0;
        while 2 * k + 1 < pos.len() {
            let o = &pos.items[2 * k];
            let p = &pos.items[2 * k + 1];
            for (x, y) in [(o, p), (p, o)] {
                if let (Some((Some(i), _)), Some((Some(g), _))) = (
                    match_prefix(&x.mv.tag_path, pat_a),
                    match_prefix(&y.mv.tag_path, pat_b),
                ) {
                    if !table.contains(&(i, g)) {
                        table.push((i, g));
                    }
                }
            }
            k += 1;
        }
        if a_to_b {
            if let Some(&(_, g)) = table.iter().find(|(i, _)| *i == idx) {
                Some(Some(g))
            } else {
                Some(Some(base + table.len() as u32))
            }
        } else {
            table.iter().find(|(_, g)| *g == idx).map(|&(i, _)| Some(i))
        }
    }
}

impl Oracle for Wiring {
    fn respond(&self, pos: &Position) -> Outcome {
        let last = match pos.last() {
            Some(o) => o,
            None => return Outcome::Silent,
        };
        let mv = match self.translate(pos, &last.mv) {
            Some(m) => m,
            None => return Outcome::Silent,
        };
        let label = MoveLabel { polarity: last.label.polarity.flip(), kind: last.label.kind };
        // Justifier mirroring: copies pair up as (2k, 2k+1); an unjustified
        // O-move's copy points at that O-move itself.
        let justifier = match last.justifier {
            None => Some(pos.len() - 1),
            Some(j) => Some(if j % 2 == 0 { j + 1 } else { j - 1 }),
        };
        if justifier.map_or(false, |j| j >= pos.len()) {
            return Outcome::Silent;
        }
        Outcome::Move(Response { mv, label, justifier })
    }
}
