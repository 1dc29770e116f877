//! Helpers bridging strategies-as-tables and the game constructions: the
//! copy-cat table and the retaggings used by the interaction-theorem checks.

use super::strat::StrategyTable;
use super::FiniteGame;
use crate::arena::{Position, RankedMove, Tag};
use std::collections::BTreeSet;

/// The copy-cat strategy on `A`, given the ambient game `lollipop(A, A)`:
/// even prefixes agree on both sides, including justifiers.
pub fn copycat_table(ambient: &FiniteGame) -> StrategyTable {
    let evens: BTreeSet<Position> = ambient
        .positions
        .iter()
        .filter(|p| p.len() % 2 == 0)
        .filter(|p| {
            p.prefixes().all(|t| {
                if t.len() % 2 != 0 {
                    return true;
                }
                side_view(&t, Tag::L) == side_view(&t, Tag::R)
            })
        })
        .cloned()
        .collect();
    super::strat::tree_form(&evens, ambient).expect("copy-cat satisfies S1/S2")
}

/// The one-sided subsequence with justifiers re-indexed locally.
pub fn side_view(p: &Position, t: Tag) -> Vec<(RankedMove, Option<usize>)> {
    let restricted = p.restrict(|_, occ| occ.mv.head_tag() == Some(t));
    restricted
        .items
        .iter()
        .map(|o| (o.mv.untag(t).unwrap(), o.justifier))
        .collect()
}

/// Keeps occurrences whose second tag is `which`, deleting that tag: the
/// restriction from `A⊗B ⊸ C⊗D` (or `C ⊸ A&B`) to one component implication.
pub fn restrict_second_tag(p: &Position, which: Tag) -> Position {
    p.restrict_map(
        |_, occ| occ.mv.tag_path.get(1) == Some(&which),
        |m| {
            let mut n = m.clone();
            n.tag_path.remove(1);
            n
        },
    )
    .0
}

/// Moves of `(A⊸C) ⊗ (B⊸D)` rewritten into `A⊗B ⊸ C⊗D` coordinates.
pub fn retag_tensor(m: &RankedMove) -> RankedMove {
    let (outer, rest) = (m.head_tag().unwrap(), m.untag(m.head_tag().unwrap()).unwrap());
    let (inner, core) = (rest.head_tag().unwrap(), rest.untag(rest.head_tag().unwrap()).unwrap());
    match (outer, inner) {
        (Tag::L, Tag::L) => core.tagged(Tag::L).tagged(Tag::L),
        (Tag::L, Tag::R) => core.tagged(Tag::L).tagged(Tag::R),
        (Tag::R, Tag::L) => core.tagged(Tag::R).tagged(Tag::L),
        (Tag::R, Tag::R) => core.tagged(Tag::R).tagged(Tag::R),
        _ => unreachable!("tensor components are L/R tagged"),
    }
}

/// Moves of `(C⊸A) & (C⊸B)` rewritten into `C ⊸ A&B` coordinates.
pub fn retag_pairing(m: &RankedMove) -> RankedMove {
    let (outer, rest) = (m.head_tag().unwrap(), m.untag(m.head_tag().unwrap()).unwrap());
    let (inner, core) = (rest.head_tag().unwrap(), rest.untag(rest.head_tag().unwrap()).unwrap());
    match (outer, inner) {
        (Tag::L, Tag::L) => core.tagged(Tag::L),
        (Tag::L, Tag::R) => core.tagged(Tag::L).tagged(Tag::R),
        (Tag::R, Tag::L) => core.tagged(Tag::L),
        (Tag::R, Tag::R) => core.tagged(Tag::R).tagged(Tag::R),
        _ => unreachable!("product components are L/R tagged"),
    }
}

/// Rewrites a position of `!(X)` (where `X ⊴ !A ⊸ B`) into `!A ⊸ !B`
/// coordinates: codomain threads keep the bang's numbering, domain threads
/// flatten to a global opening order.
pub fn flatten_bang_of_imp(p: &Position) -> Position {
    let mut global: Vec<(u32, u32)> = Vec::new();
    let mut out = Position::empty();
    for occ in &p.items {
        let k = match occ.mv.head_tag() {
            Some(Tag::T(k)) => k,
            _ => panic!("bang moves carry a thread tag"),
        };
        let rest = occ.mv.untag(Tag::T(k)).unwrap();
        let mv = match rest.head_tag() {
            Some(Tag::R) => rest.untag(Tag::R).unwrap().tagged(Tag::T(k)).tagged(Tag::R),
            Some(Tag::L) => {
                let inner = rest.untag(Tag::L).unwrap();
                let i = match inner.head_tag() {
                    Some(Tag::T(i)) => i,
                    _ => panic!("implication domain moves carry a thread tag"),
                };
                let g = match global.iter().position(|&x| x == (k, i)) {
                    Some(g) => g,
                    None => {
                        global.push((k, i));
                        global.len() - 1
                    }
                };
                inner.untag(Tag::T(i)).unwrap().tagged(Tag::T(g as u32)).tagged(Tag::L)
            }
            _ => panic!("implication moves are L/R tagged"),
        };
        out.push(mv, occ.label, occ.justifier);
    }
    out
}

/// The per-codomain-thread restriction of a `!A ⊸ !B` position, renumbering
/// domain threads locally; used to check promoted positions thread by thread.
pub fn promoted_thread_view(p: &Position, k: u32) -> Option<Position> {
    let keep: Vec<bool> = (0..p.len())
        .map(|i| {
            let root = p.hereditary_root(i);
            matches!(
                p.items[root].mv.untag(Tag::R).and_then(|m| m.head_tag()),
                Some(Tag::T(t)) if t == k
            )
        })
        .collect();
    let (raw, _) = p.restrict_map(|i, _| keep[i], |m| m.clone());
    let mut local: Vec<u32> = Vec::new();
    let mut out = Position::empty();
    for occ in &raw.items {
        let mv = match occ.mv.head_tag() {
            Some(Tag::R) => occ.mv.untag(Tag::R)?.untag(Tag::T(k))?.tagged(Tag::R),
            Some(Tag::L) => {
                let inner = occ.mv.untag(Tag::L)?;
                let g = match inner.head_tag() {
                    Some(Tag::T(g)) => g,
                    _ => return None,
                };
                let li = match local.iter().position(|&x| x == g) {
                    Some(i) => i,
                    None => {
                        local.push(g);
                        local.len() - 1
                    }
                };
                inner.untag(Tag::T(g))?.tagged(Tag::T(li as u32)).tagged(Tag::L)
            }
            _ => return None,
        };
        out.push(mv, occ.label, occ.justifier);
    }
    Some(out)
}
