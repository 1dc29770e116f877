//! The four explicit constructions on finite games.

use super::{component_position, generate_positions, FiniteGame};
use crate::arena::{Arena, Position, Tag};
use std::collections::BTreeMap;

fn tag_arena(a: &Arena, t: Tag) -> Arena {
    a.map_moves(|m| m.tagged(t))
}

/// Tensor product: both components in parallel, Opponent switches.
pub fn tensor(a: &FiniteGame, b: &FiniteGame) -> FiniteGame {
    let left = tag_arena(&a.arena, Tag::L);
    let right = tag_arena(&b.arena, Tag::R);
    let arena = Arena {
        labels: left.labels.into_iter().chain(right.labels).collect(),
        initials: left.initials.into_iter().chain(right.initials).collect(),
        enabling: left.enabling.into_iter().chain(right.enabling).collect(),
    }
    .canonical();
    let max = a.max_len() + b.max_len();
    let positions = generate_positions(&arena, max, |p| {
        component_position(p, Tag::L, a) && component_position(p, Tag::R, b)
    });
    FiniteGame { arena, positions }
}

/// Linear implication: the domain's polarities flip and its initial moves are
/// re-rooted under the codomain's initial moves.
pub fn lollipop(a: &FiniteGame, b: &FiniteGame) -> FiniteGame {
    let left = tag_arena(&a.arena.flip_polarity(), Tag::L);
    let right = tag_arena(&b.arena, Tag::R);
    let mut enabling: Vec<_> = left.enabling.iter().cloned().chain(right.enabling.iter().cloned()).collect();
    for bi in &right.initials {
        for ai in &left.initials {
            enabling.push((bi.clone(), ai.clone()));
        }
    }
    let arena = Arena {
        labels: left.labels.into_iter().chain(right.labels).collect(),
        initials: right.initials,
        enabling,
    }
    .canonical();
    let max = a.max_len() + b.max_len();
    let positions = generate_positions(&arena, max, |p| {
        component_position_flipped(p, Tag::L, a) && component_position(p, Tag::R, b)
    });
    FiniteGame { arena, positions }
}

/// `s ↾ X ∈ P_X` for the flipped-domain component: labels are restored from
/// the component's own arena and the pointer from a domain-initial move is
/// simply deleted by the restriction.
fn component_position_flipped(pos: &Position, tag: Tag, game: &FiniteGame) -> bool {
    let (raw, _) = pos.restrict_map(
        |_, occ| occ.mv.head_tag() == Some(tag),
        |m| m.untag(tag).expect("filtered on head tag"),
    );
    match super::relabel_in(&raw, &game.arena) {
        Some(p) => game.positions.contains(&p),
        None => false,
    }
}

/// Product: Opponent chooses the component game to play.
pub fn product(a: &FiniteGame, b: &FiniteGame) -> FiniteGame {
    let left = tag_arena(&a.arena, Tag::L);
    let right = tag_arena(&b.arena, Tag::R);
    let arena = Arena {
        labels: left.labels.into_iter().chain(right.labels).collect(),
        initials: left.initials.into_iter().chain(right.initials).collect(),
        enabling: left.enabling.into_iter().chain(right.enabling).collect(),
    }
    .canonical();
    let positions = a
        .positions
        .iter()
        .map(|p| retag_position(p, Tag::L))
        .chain(b.positions.iter().map(|p| retag_position(p, Tag::R)))
        .collect();
    FiniteGame { arena, positions }
}

fn retag_position(p: &Position, t: Tag) -> Position {
    let mut q = p.clone();
    for occ in &mut q.items {
        occ.mv = occ.mv.tagged(t);
    }
    q
}

/// Exponential, truncated to `thread_bound` threads and `len_bound` moves.
/// Threads carry explicit `T(i)` tags, numbered in order of opening.
pub fn bang(a: &FiniteGame, thread_bound: usize, len_bound: usize) -> FiniteGame {
    let mut labels = BTreeMap::new();
    let mut initials = Vec::new();
    let mut enabling = Vec::new();
    for i in 0..thread_bound {
        let t = Tag::T(i as u32);
        let ta = tag_arena(&a.arena, t);
        labels.extend(ta.labels);
        initials.extend(ta.initials);
        enabling.extend(ta.enabling);
    }
    let arena = Arena { labels, initials, enabling }.canonical();
    // Thread indices may open in any order; closure under thread restriction
    // (V2) would fail otherwise.
    let positions = generate_positions(&arena, len_bound, |p| {
        let mut seen = Vec::new();
        for occ in &p.items {
            match occ.mv.head_tag() {
                Some(Tag::T(i)) => {
                    if !seen.contains(&i) {
                        seen.push(i);
                    }
                }
                _ => return false,
            }
        }
        seen.iter().all(|&i| component_position(p, Tag::T(i), a))
    });
    FiniteGame { arena, positions }
}
