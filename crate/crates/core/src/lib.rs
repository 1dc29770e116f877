//! Game-semantic interpreter for a small dependent type theory.
//!
//! The crate is organized in layers:
//!
//! * [`arena`] — moves, justified sequences, views, legality, threads;
//! * [`finite`] — explicit finite games and the brute-force oracle layer;
//! * [`engine`] — strategies as next-move oracles and the interaction machine;
//! * [`sem`] — the registry of ranked games, universes and construction numbers;
//! * [`cwf`] — dependent games, semantic type formers and the law suites;
//! * [`syntax`] — the surface language, typechecker and elaborator.

pub mod arena;
// pub mod cwf;
// pub mod engine;
pub mod finite;
// pub mod sem;
// pub mod syntax;

pub use arena::{Arena, Bounds, Ident, MoveLabel, MoveSpace, Polarity, Position, RankedMove, Tag};
