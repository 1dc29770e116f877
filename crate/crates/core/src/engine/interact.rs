//! The interaction machine: composition of strategy oracles by bouncing
//! moves across a shared middle game, promotion for the bang, and the
//! composite `•` used for morphisms.

use super::{Oracle, OracleRef, Outcome, Response};
use crate::arena::{MoveLabel, Position, RankedMove, Tag};
use serde::Serialize;
use std::rc::Rc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One event of an interaction trace, in the shared JSON schema.
#[derive(Debug, Clone, Serialize)]
pub struct TraceEntry {
    /// `A`, `B1`, `B2` or `C`.
    pub component: &'static str,
    pub mv: crate::arena::position::OccurrenceWire,
    pub hidden: bool,
}

#[derive(Default)]
struct MState {
    left: Position,
    right: Position,
    ext_of_left: Vec<Option<usize>>,
    ext_of_right: Vec<Option<usize>>,
    bridge_l2r: Vec<Option<usize>>,
    bridge_r2l: Vec<Option<usize>>,
    trace: Vec<TraceEntry>,
}

impl MState {
    fn ext_of(&self, side: Side, i: usize) -> Option<usize> {
        match side {
            Side::Left => self.ext_of_left[i],
            Side::Right => self.ext_of_right[i],
        }
    }

    fn pos(&self, side: Side) -> &Position {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    fn push(&mut self, side: Side, mv: RankedMove, label: MoveLabel, j: Option<usize>, ext: Option<usize>) -> usize {
        match side {
            Side::Left => {
                self.left.push(mv, label, j);
                self.ext_of_left.push(ext);
                self.bridge_l2r.push(None);
                self.left.len() - 1
            }
            Side::Right => {
                self.right.push(mv, label, j);
                self.ext_of_right.push(ext);
                self.bridge_r2l.push(None);
                self.right.len() - 1
            }
        }
    }

    /// External justifier of an emission: chase pointers through the hidden
    /// middle occurrences until an external one is reached.
    fn chase(&self, side: Side, j: Option<usize>) -> Option<usize> {
        let (mut s, mut i) = (side, j?);
        loop {
            if let Some(e) = self.ext_of(s, i) {
                return Some(e);
            }
            match self.pos(s).items[i].justifier {
                Some(k) => i = k,
                None => {
                    // A middle-initial on the left: hop to its bridge copy.
                    debug_assert_eq!(s, Side::Left);
                    i = self.bridge_l2r[i]?;
                    s = Side::Right;
                }
            }
        }
    }

    fn record(&mut self, component: &'static str, mv: &RankedMove, justifier: Option<usize>, hidden: bool) {
        self.trace.push(TraceEntry {
            component,
            mv: crate::arena::position::OccurrenceWire {
                ident: mv.ident.clone(),
                rank: mv.rank,
                tag_path: mv.tag_path.clone(),
                justifier,
            },
            hidden,
        });
    }
}

/// `σ ; τ` for `σ : X ⊸ Y`, `τ : Y ⊸ Z`: feed external Opponent moves to the
/// owning component, bounce middle moves between the two, emit the first
/// external move produced. The whole interaction is replayed per call, so the
/// oracle itself stays pure.
pub struct Composite {
    pub left: OracleRef,
    pub right: OracleRef,
    pub steps: usize,
}

pub fn compose(left: OracleRef, right: OracleRef, steps: usize) -> Rc<Composite> {
    Rc::new(Composite { left, right, steps })
}

/// `ψ • φ = ψ ∘ φ†`: the co-Kleisli composition of morphisms.
pub fn bullet(phi: OracleRef, psi: OracleRef, steps: usize) -> Rc<Composite> {
    Rc::new(Composite { left: Rc::new(Promotion { base: phi }), right: psi, steps })
}

enum StepResult {
    External(Response),
    Silent,
    Diverge,
}

impl Composite {
    /// Delivers one external O-move and runs the internal loop until an
    /// external response, silence or budget exhaustion.
    fn deliver(&self, st: &mut MState, mv: &RankedMove, label: MoveLabel, ext_j: Option<usize>, ext_index: &mut Vec<(Side, usize)>) -> StepResult {
        let mut owner = match mv.head_tag() {
            Some(Tag::L) => {
                let j = ext_j.map(|e| ext_index[e]).map(|(s, i)| {
                    debug_assert_eq!(s, Side::Left);
                    i
                });
                let i = st.push(Side::Left, mv.clone(), label, j, Some(ext_index.len()));
                st.record("A", mv, ext_j, false);
                ext_index.push((Side::Left, i));
                Side::Left
            }
            _ => {
                let j = ext_j.map(|e| ext_index[e]).map(|(s, i)| {
                    debug_assert_eq!(s, Side::Right);
                    i
                });
                let i = st.push(Side::Right, mv.clone(), label, j, Some(ext_index.len()));
                st.record("C", mv, ext_j, false);
                ext_index.push((Side::Right, i));
                Side::Right
            }
        };
        let mut budget = self.steps;
        loop {
            if budget == 0 {
                return StepResult::Diverge;
            }
            budget -= 1;
            let oracle: &dyn Oracle = match owner {
                Side::Left => &*self.left,
                Side::Right => &*self.right,
            };
            let out = oracle.respond(st.pos(owner));
            let r = match out {
                Outcome::Silent => return StepResult::Silent,
                Outcome::Diverge => return StepResult::Diverge,
                Outcome::Move(r) => r,
            };
            let internal = match owner {
                Side::Left => r.mv.head_tag() == Some(Tag::R),
                Side::Right => r.mv.head_tag() == Some(Tag::L),
            };
            if internal {
                // Bridge the middle move to the other component.
                let (sent, mirror_j) = match owner {
                    Side::Left => {
                        let jl = r.justifier.expect("middle emissions are justified");
                        let idx = st.push_mirrorless(Side::Left, &r);
                        st.record("B1", &r.mv, r.justifier, true);
                        let mirrored = r.mv.untag(Tag::R).expect("left middle is R-tagged").tagged(Tag::L);
                        let mj = st.bridge_l2r[jl];
                        let _ = idx;
                        (mirrored, mj)
                    }
                    Side::Right => {
                        let jr = r.justifier.expect("middle emissions are justified");
                        st.push_mirrorless(Side::Right, &r);
                        st.record("B2", &r.mv, r.justifier, true);
                        let mirrored = r.mv.untag(Tag::L).expect("right middle is L-tagged").tagged(Tag::R);
                        // A middle-initial points at the right's codomain; its
                        // left copy is initial (root-enabled) there.
                        let mj = if st.right.items[jr].mv.head_tag() == Some(Tag::R) {
                            None
                        } else {
                            st.bridge_r2l[jr]
                        };
                        (mirrored, mj)
                    }
                };
                let flipped = MoveLabel { polarity: r.label.polarity.flip(), kind: r.label.kind };
                let target = owner.other();
                let new_idx = st.push(target, sent, flipped, mirror_j, None);
                // Record the bridge pairing between the two copies.
                match owner {
                    Side::Left => {
                        let src = st.left.len() - 1;
                        st.bridge_l2r[src] = Some(new_idx);
                        st.bridge_r2l[new_idx] = Some(src);
                    }
                    Side::Right => {
                        let src = st.right.len() - 1;
                        st.bridge_r2l[src] = Some(new_idx);
                        st.bridge_l2r[new_idx] = Some(src);
                    }
                }
                owner = target;
                continue;
            }
            // External emission: chase the justifier through hidden moves.
            let ext_j = st.chase(owner, r.justifier);
            let side_idx = st.push_mirrorless(owner, &r);
            st.record(if owner == Side::Left { "A" } else { "C" }, &r.mv, r.justifier, false);
            match owner {
                Side::Left => st.ext_of_left[side_idx] = Some(ext_index.len()),
                Side::Right => st.ext_of_right[side_idx] = Some(ext_index.len()),
            }
            ext_index.push((owner, side_idx));
            return StepResult::External(Response { mv: r.mv, label: r.label, justifier: ext_j });
        }
    }

    /// Replays `pos` (odd) through the machine and returns the outcome at the
    /// last O-move, optionally together with the full interaction trace.
    pub fn run(&self, pos: &Position) -> (Outcome, Vec<TraceEntry>) {
        let mut st = MState::default();
        let mut ext_index: Vec<(Side, usize)> = Vec::new();
        let mut k = 0;
        while k < pos.len() {
            let occ = &pos.items[k];
            let step = self.deliver(&mut st, &occ.mv, occ.label, occ.justifier, &mut ext_index);
            let last = k + 1 == pos.len();
            match step {
                StepResult::External(r) => {
                    if last {
                        return (Outcome::Move(r), st.trace);
                    }
                    // The replayed response must match the recorded one.
                    let rec = &pos.items[k + 1];
                    if rec.mv != r.mv || rec.justifier != r.justifier {
                        return (Outcome::Silent, st.trace);
                    }
                    k += 2;
                }
                StepResult::Silent => return (Outcome::Silent, st.trace),
                StepResult::Diverge => return (Outcome::Diverge, st.trace),
            }
        }
        (Outcome::Silent, st.trace)
    }
}

impl MState {
    /// Appends an own-side emission (no bridge slot used yet).
    fn push_mirrorless(&mut self, side: Side, r: &Response) -> usize {
        self.push(side, r.mv.clone(), r.label, r.justifier, None)
    }
}

impl Oracle for Composite {
    fn respond(&self, pos: &Position) -> Outcome {
        self.run(pos).0
    }
}

/// `σ†` on `!X ⊸ !Y` from `σ : !X ⊸ Y`: every codomain thread is an
/// independent copy of `σ`, routed by hereditary justification.
pub struct Promotion {
    pub base: OracleRef,
}

impl Promotion {
    /// Restricts `pos` to the thread of the `k`-th codomain initial in `σ`'s
    /// own coordinates, returning the original indices of kept occurrences.
    fn thread_view(pos: &Position, k: u32) -> Option<(Position, Vec<usize>, Vec<u32>)> {
        let keep: Vec<bool> = (0..pos.len())
            .map(|i| {
                let root = pos.hereditary_root(i);
                matches!(
                    pos.items[root].mv.untag(Tag::R).and_then(|m| m.head_tag()),
                    Some(Tag::T(t)) if t == k
                )
            })
            .collect();
        let mut kept = Vec::new();
        let mut local_threads: Vec<u32> = Vec::new();
        let mut view = Position::empty();
        let mut new_index = vec![None; pos.len()];
        for (i, occ) in pos.items.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            let mv = match occ.mv.head_tag() {
                Some(Tag::R) => occ.mv.untag(Tag::R)?.untag(Tag::T(k))?.tagged(Tag::R),
                Some(Tag::L) => {
                    let inner = occ.mv.untag(Tag::L)?;
                    let g = match inner.head_tag() {
                        Some(Tag::T(g)) => g,
                        _ => return None,
                    };
                    let li = match local_threads.iter().position(|&x| x == g) {
                        Some(i) => i as u32,
                        None => {
                            local_threads.push(g);
                            (local_threads.len() - 1) as u32
                        }
                    };
                    inner.untag(Tag::T(g))?.tagged(Tag::T(li)).tagged(Tag::L)
                }
                _ => return None,
            };
            let j = occ.justifier.and_then(|j| new_index[j]);
            new_index[i] = Some(view.len());
            view.push(mv, occ.label, j);
            kept.push(i);
        }
        Some((view, kept, local_threads))
    }
}

impl Oracle for Promotion {
    fn respond(&self, pos: &Position) -> Outcome {
        let last = match pos.last() {
            Some(o) => o,
            None => return Outcome::Silent,
        };
        let root = pos.hereditary_root(pos.len() - 1);
        let k = match pos.items[root].mv.untag(Tag::R).and_then(|m| m.head_tag()) {
            Some(Tag::T(k)) => k,
            _ => return Outcome::Silent,
        };
        let _ = last;
        let (view, kept, local_threads) = match Promotion::thread_view(pos, k) {
            Some(v) => v,
            None => return Outcome::Silent,
        };
        match self.base.respond(&view) {
            Outcome::Silent => Outcome::Silent,
            Outcome::Diverge => Outcome::Diverge,
            Outcome::Move(r) => {
                let mv = match r.mv.head_tag() {
                    Some(Tag::R) => match r.mv.untag(Tag::R) {
                        Some(b) => b.tagged(Tag::T(k)).tagged(Tag::R),
                        None => return Outcome::Silent,
                    },
                    Some(Tag::L) => {
                        let inner = match r.mv.untag(Tag::L) {
                            Some(i) => i,
                            None => return Outcome::Silent,
                        };
                        let local = match inner.head_tag() {
                            Some(Tag::T(l)) => l,
                            _ => return Outcome::Silent,
                        };
                        let global = if (local as usize) < local_threads.len() {
                            local_threads[local as usize]
                        } else {
                            // A fresh domain thread: next unused global index.
                            let mut used: Vec<u32> = pos
                                .items
                                .iter()
                                .filter_map(|o| o.mv.untag(Tag::L))
                                .filter_map(|m| match m.head_tag() {
                                    Some(Tag::T(g)) => Some(g),
                                    _ => None,
                                })
                                .collect();
                            used.sort();
                            used.dedup();
                            used.len() as u32
                        };
                        match inner.untag(Tag::T(local)) {
                            Some(x) => x.tagged(Tag::T(global)).tagged(Tag::L),
                            None => return Outcome::Silent,
                        }
                    }
                    _ => return Outcome::Silent,
                };
                let justifier = r.justifier.map(|j| kept[j]);
                Outcome::Move(Response { mv, label: r.label, justifier })
            }
        }
    }
}
