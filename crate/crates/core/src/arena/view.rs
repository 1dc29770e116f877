//! Player and Opponent views of a justified sequence.

use super::{Polarity, Position};

/// Indices of the occurrences surviving in the view of `pos` for `side`.
///
/// Walking backward from the last occurrence: a move of polarity `side`
/// extends the view of the sequence before it; a move of the other polarity
/// brings its justifier along and the walk continues before the justifier;
/// an occurrence without justifier stops the walk.
fn view_indices(pos: &Position, side: Polarity) -> Vec<usize> {
    let mut keep = Vec::new();
    if pos.is_empty() {
        return keep;
    }
    let mut i = pos.len() - 1;
    loop {
        keep.push(i);
        let occ = &pos.items[i];
        if occ.polarity() == side {
            if i == 0 {
                break;
            }
            i -= 1;
        } else {
            match occ.justifier {
                None => break,
                Some(j) => {
                    keep.push(j);
                    if j == 0 {
                        break;
                    }
                    i = j - 1;
                }
            }
        }
    }
    keep.reverse();
    keep
}

fn view(pos: &Position, side: Polarity) -> Position {
    let keep = view_indices(pos, side);
    let mut mask = vec![false; pos.len()];
    for &i in &keep {
        mask[i] = true;
    }
    // restrict drops justifiers whose targets are elided, exactly as views do.
    pos.restrict(|i, _| mask[i])
}

/// The Player view `⌈s⌉`.
pub fn p_view(pos: &Position) -> Position {
    view(pos, Polarity::P)
}

/// The Opponent view `⌊s⌋`.
pub fn o_view(pos: &Position) -> Position {
    view(pos, Polarity::O)
}

/// Indices surviving in the P-view; used by visibility checks.
pub fn p_view_indices(pos: &Position) -> Vec<usize> {
    view_indices(pos, Polarity::P)
}

/// Indices surviving in the O-view; used by visibility checks.
pub fn o_view_indices(pos: &Position) -> Vec<usize> {
    view_indices(pos, Polarity::O)
}
