//! Core algorithms for the Containment game.
//!
//! Cops sit on edges and move to adjacent edges; the robber sits on a vertex
//! and may not cross an edge that holds a cop. The cops win once every edge
//! incident with the robber's vertex is occupied.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the experiment
//! harness and the command line live in the `containment` crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod domination;
pub mod game;
pub mod graph;
pub mod matching;
pub mod multiset;
pub mod neighborhood;
pub mod numbers;
pub mod oracle;
pub mod rng;
pub mod solver;
pub mod strategies;
pub mod typical;

pub use game::{play, CopMove, GameState, Outcome, Phase, PlayError, StrategyTrace};
pub use graph::{gen_gnp, EdgeId, GnpParams, Graph, GraphError, Vertex};
pub use solver::{SolveError, SolveResult, Value, Variant};
