//! The shipped graph6 corpora of small graphs.
//!
//! `data/graphs-1-7.g6` holds every graph on 1 to 7 vertices and
//! `data/connected-1-8.g6` every connected graph on 1 to 8 vertices, one
//! per isomorphism class. Both were produced by `containment enumerate` and
//! are checked against the enumerator by the test suite.

use containment_core::Graph;

use crate::formats::{parse_graph6_list, FormatError};

pub const ALL_MAX_N: usize = 7;
pub const CONNECTED_MAX_N: usize = 8;

const ALL: &str = include_str!("../data/graphs-1-7.g6");
const CONNECTED: &str = include_str!("../data/connected-1-8.g6");

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("the shipped corpus only reaches n = {max}, asked for {asked}")]
    TooLarge { asked: usize, max: usize },
    #[error("corrupt shipped corpus: {0}")]
    Corrupt(#[from] FormatError),
}

fn load(text: &str, n_max: usize, max: usize) -> Result<Vec<Graph>, CorpusError> {
    if n_max > max {
        return Err(CorpusError::TooLarge { asked: n_max, max });
    }
    Ok(parse_graph6_list(text)?.into_iter().filter(|g| g.n() <= n_max).collect())
}

/// Every graph with `1..=n_max` vertices.
pub fn all_graphs_up_to(n_max: usize) -> Result<Vec<Graph>, CorpusError> {
    load(ALL, n_max, ALL_MAX_N)
}

/// Every connected graph with `1..=n_max` vertices.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<Graph>, CorpusError> {
    load(CONNECTED, n_max, CONNECTED_MAX_N)
}

pub fn raw_all() -> &'static str {
    ALL
}

pub fn raw_connected() -> &'static str {
    CONNECTED
}
