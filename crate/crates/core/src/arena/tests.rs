use super::legal::{check_legal, is_justified, is_legal, validate_arena, LegalityFailure};
use super::thread::{initial_occurrences, thread_restriction};
use super::view::{o_view, p_view};
use super::*;

fn q() -> RankedMove {
    RankedMove::tok("q")
}

/// `q · n0 · q · n1 ... q · nk` in the flat arena, each answer justified by
/// the question on its immediate left.
fn flat_run(answers: &[u64]) -> Position {
    let mut pos = Position::empty();
    for &n in answers {
        let at = pos.len();
        pos.push(q(), MoveLabel::OQ, None);
        pos.push(RankedMove::num(n), MoveLabel::PA, Some(at));
    }
    pos
}

#[test]
fn flat_arena_satisfies_axioms() {
    let a = Arena::flat_nat(6);
    assert!(validate_arena(&a, &Bounds::default()).is_empty());
}

#[test]
fn empty_arena_satisfies_axioms() {
    assert!(validate_arena(&Arena::empty(), &Bounds::default()).is_empty());
}

#[test]
fn initial_move_with_extra_enabler_violates_e1() {
    let mut a = Arena::flat_nat(2);
    a.enabling.push((q(), q()));
    let violations = validate_arena(&a, &Bounds::default());
    assert!(violations
        .iter()
        .any(|v| matches!(v, super::legal::ArenaViolation::E1NonRootEnabler(_, _))));
}

#[test]
fn flat_runs_are_justified_and_legal() {
    let a = Arena::flat_nat(9);
    for k in 0..4 {
        let answers: Vec<u64> = (0..=k).collect();
        let pos = flat_run(&answers);
        assert!(is_justified(&a, &pos));
        assert!(is_legal(&a, &pos));
    }
    assert!(is_legal(&a, &Position::empty()));
}

#[test]
fn missing_justifier_is_rejected() {
    let a = Arena::flat_nat(3);
    let mut pos = Position::empty();
    pos.push(q(), MoveLabel::OQ, None);
    pos.push(RankedMove::num(0), MoveLabel::PA, None);
    assert!(!is_justified(&a, &pos));
    assert!(matches!(
        check_legal(&a, &pos),
        Err(LegalityFailure::MissingJustifier { index: 1 })
    ));
}

#[test]
fn foreign_move_is_diagnosed() {
    let a = Arena::flat_nat(3);
    let mut pos = Position::empty();
    pos.push(RankedMove::tok("zap"), MoveLabel::OQ, None);
    assert!(matches!(
        check_legal(&a, &pos),
        Err(LegalityFailure::NotInArena { index: 0, .. })
    ));
}

#[test]
fn p_view_keeps_last_thread_o_view_keeps_all() {
    // s = q.n0.q.n1 ... q.nk: ⌈s⌉ = q.n_k and ⌊s⌋ = s.
    let s = flat_run(&[0, 1, 2, 3]);
    let pv = p_view(&s);
    assert_eq!(pv.len(), 2);
    assert_eq!(pv.items[0].mv, q());
    assert_eq!(pv.items[1].mv, RankedMove::num(3));
    assert_eq!(pv.items[1].justifier, Some(0));
    assert_eq!(o_view(&s), s);
    // ⌈s.q⌉ = q and ⌊s.q⌋ = s.q.
    let sq = s.extended(q(), MoveLabel::OQ, None);
    let pv2 = p_view(&sq);
    assert_eq!(pv2.len(), 1);
    assert_eq!(pv2.items[0].mv, q());
    assert_eq!(o_view(&sq), sq);
}

#[test]
fn views_of_empty_are_empty() {
    assert_eq!(p_view(&Position::empty()), Position::empty());
    assert_eq!(o_view(&Position::empty()), Position::empty());
}

#[test]
fn alternation_violation_is_rejected() {
    let a = Arena::flat_nat(3);
    let mut pos = Position::empty();
    pos.push(q(), MoveLabel::OQ, None);
    // A second question right after the first: two O-moves adjacent.
    let bad = pos.extended(q(), MoveLabel::OQ, None);
    assert!(matches!(
        check_legal(&a, &bad),
        Err(LegalityFailure::Alternation { index: 1 })
    ));
}

/// The lollipop arena `flat(0..max) ⊸ flat(0..max)` built by hand: domain
/// polarities flipped, domain initials enabled by the codomain question.
fn lollipop_arena(max: u64) -> Arena {
    let dom = Arena::flat_nat(max).flip_polarity().map_moves(|m| m.tagged(Tag::L));
    let cod = Arena::flat_nat(max).map_moves(|m| m.tagged(Tag::R));
    let mut enabling: Vec<_> =
        dom.enabling.iter().cloned().chain(cod.enabling.iter().cloned()).collect();
    for bi in &cod.initials {
        for ai in &dom.initials {
            enabling.push((bi.clone(), ai.clone()));
        }
    }
    Arena {
        labels: dom.labels.into_iter().chain(cod.labels).collect(),
        initials: cod.initials,
        enabling,
    }
}

/// Generates justified, alternating (but not necessarily visible) sequences.
fn justified_alternating(arena: &Arena, max_len: usize) -> Vec<Position> {
    let mut out = vec![Position::empty()];
    let mut frontier = vec![Position::empty()];
    let moves: Vec<_> = arena.labels.keys().cloned().collect();
    while let Some(pos) = frontier.pop() {
        if pos.len() >= max_len {
            continue;
        }
        let want = if pos.len() % 2 == 0 { Polarity::O } else { Polarity::P };
        for mv in &moves {
            let label = arena.labels[mv];
            if label.polarity != want {
                continue;
            }
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
                if is_justified(arena, &next) {
                    out.push(next.clone());
                    frontier.push(next);
                }
            }
        }
    }
    out
}

#[test]
fn brute_force_finds_visibility_violation_in_lollipop() {
    let arena = lollipop_arena(1);
    let candidates = justified_alternating(&arena, 7);
    let violations: Vec<&Position> = candidates
        .iter()
        .filter(|p| {
            matches!(check_legal(&arena, p), Err(LegalityFailure::Visibility { side: Polarity::P, .. }))
        })
        .collect();
    assert!(!violations.is_empty(), "expected some justified alternating sequence to break visibility");
    let minimal = violations.iter().map(|p| p.len()).min().unwrap();
    // Frozen by this oracle run: the least P-visibility violation in
    // flat ⊸ flat takes four moves (q · q@0 · q · n@0), and violations of
    // every length up to 7 exist.
    assert_eq!(minimal, 4);
    assert!(violations.iter().any(|p| p.len() == 7));
    for v in violations {
        assert!(!is_legal(&arena, v));
    }
}

#[test]
fn thread_restriction_matches_examples() {
    // s = q0.n0.q1.n1, I = {q1} gives the thread q1.n1.
    let s = flat_run(&[5, 7]);
    let inits = initial_occurrences(&s);
    assert_eq!(inits, vec![0, 2]);
    let t = thread_restriction(&s, &[2]).unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(t.items[1].mv, RankedMove::num(7));
    assert_eq!(t.items[1].justifier, Some(0));
    // Restriction to all initial occurrences is the identity.
    assert_eq!(thread_restriction(&s, &inits).unwrap(), s);
    // The empty restriction is the empty position.
    assert_eq!(thread_restriction(&s, &[]).unwrap(), Position::empty());
    // A non-initial index is an error.
    assert!(thread_restriction(&s, &[1]).is_err());
}

#[test]
fn position_wire_roundtrip() {
    let a = Arena::flat_nat(4);
    let s = flat_run(&[2, 4]);
    let wire = s.to_wire();
    let json = serde_json::to_string(&wire).unwrap();
    assert!(json.contains("\"justifier\""));
    let parsed: Vec<position::OccurrenceWire> = serde_json::from_str(&json).unwrap();
    let back = Position::from_wire(&parsed, &a).unwrap();
    assert_eq!(back, s);
}

#[test]
fn views_of_legal_positions_are_legal_in_lollipop() {
    let arena = lollipop_arena(1);
    for pos in justified_alternating(&arena, 6) {
        if is_legal(&arena, &pos) {
            let pv = p_view(&pos);
            let ov = o_view(&pos);
            assert!(legal::is_view_coherent(&arena, &pv), "p-view of {pos} incoherent");
            assert!(legal::is_view_coherent(&arena, &ov), "o-view of {pos} incoherent");
            // Idempotence of the P-view.
            assert_eq!(p_view(&pv), pv, "p-view not idempotent on {pos}");
        }
    }
}

#[test]
fn legality_is_prefix_closed() {
    let arena = lollipop_arena(1);
    for pos in justified_alternating(&arena, 6) {
        if is_legal(&arena, &pos) {
            for pre in pos.prefixes() {
                assert!(is_legal(&arena, &pre));
            }
        }
    }
}

#[test]
fn threads_of_legal_positions_are_legal() {
    let a = Arena::flat_nat(3);
    for pos in justified_alternating(&a, 6) {
        if is_legal(&a, &pos) {
            for &root in &initial_occurrences(&pos) {
                let t = thread_restriction(&pos, &[root]).unwrap();
                assert!(is_legal(&a, &t), "thread of {pos} at {root} illegal");
            }
        }
    }
}
