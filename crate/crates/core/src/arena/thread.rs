//! Threads: chains of justifiers grouped by their initial occurrence.

use super::Position;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThreadError {
    #[error("index {0} is out of range")]
    OutOfRange(usize),
    #[error("occurrence {0} is not initial")]
    NotInitial(usize),
}

/// Indices of the initial occurrences of `pos`.
pub fn initial_occurrences(pos: &Position) -> Vec<usize> {
    pos.initial_indices()
}

/// The restriction `s ↾ I`: the subsequence of occurrences hereditarily
/// justified by a member of `I`, with justifiers re-indexed.
pub fn thread_restriction(pos: &Position, initials: &[usize]) -> Result<Position, ThreadError> {
    for &i in initials {
        if i >= pos.len() {
            return Err(ThreadError::OutOfRange(i));
        }
        if pos.items[i].justifier.is_some() {
            return Err(ThreadError::NotInitial(i));
        }
    }
    Ok(pos.restrict(|i, _| initials.contains(&pos.hereditary_root(i))))
}

/// The thread of the single initial occurrence `root`.
pub fn thread_of(pos: &Position, root: usize) -> Result<Position, ThreadError> {
    thread_restriction(pos, &[root])
}
