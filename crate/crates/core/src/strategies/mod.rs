//! Cop and robber strategies that play through the [`crate::game`] referee.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::neighborhood::UNREACHED;

pub mod baseline;
pub mod density;
pub mod evasion;
pub mod matching;
pub mod spec;

pub use baseline::{ChasingCops, EverywhereCops, GreedyRobber, SittingRobber, StartRule};
pub use density::{DensityCopConfig, DensityCops, DensityMode, TrapReport, TrapStatus};
pub use evasion::{DangerProfile, EvasionConfig, EvasionParams, EvasionRobber, EvasionRound, Regime};
pub use matching::MatchingCops;
pub use spec::{CopSpec, Cops, Robber, RobberSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("graph has neither a perfect nor a near-perfect matching")]
    NoPerfectMatching,
    #[error("invalid strategy configuration: {0}")]
    Config(String),
}

/// Distance of every vertex to the nearest endpoint of an occupied edge.
pub fn distance_to_cops(g: &Graph, cops: &[EdgeId]) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::new();
    for &c in cops {
        for v in g.edge(c) {
            if dist[v] == UNREACHED {
                dist[v] = 0;
                queue.push_back(v);
            }
        }
    }
    while let Some(u) = queue.pop_front() {
        for &(w, _) in g.adj(u) {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Breadth-first search from a set of roots that remembers parents, for
/// walking cops along shortest paths. Buffers are reused between runs.
#[derive(Debug, Clone)]
pub struct Router {
    dist: Vec<u32>,
    parent: Vec<Vertex>,
    touched: Vec<Vertex>,
    queue: VecDeque<Vertex>,
}

impl Router {
    pub fn new(n: usize) -> Self {
        Router { dist: vec![UNREACHED; n], parent: vec![usize::MAX; n], touched: Vec::new(), queue: VecDeque::new() }
    }

    /// BFS from `roots` up to `max_depth` (neighbours scanned in ascending
    /// order, so parents are the earliest-discovered predecessors).
    pub fn run(&mut self, g: &Graph, roots: &[Vertex], max_depth: u32) {
        for &t in &self.touched {
            self.dist[t] = UNREACHED;
            self.parent[t] = usize::MAX;
        }
        self.touched.clear();
        self.queue.clear();
        for &r in roots {
            if self.dist[r] == UNREACHED {
                self.dist[r] = 0;
                self.touched.push(r);
                self.queue.push_back(r);
            }
        }
        while let Some(u) = self.queue.pop_front() {
            if self.dist[u] >= max_depth {
                continue;
            }
            for &(w, _) in g.adj(u) {
                if self.dist[w] == UNREACHED {
                    self.dist[w] = self.dist[u] + 1;
                    self.parent[w] = u;
                    self.touched.push(w);
                    self.queue.push_back(w);
                }
            }
        }
    }

    pub fn dist(&self, v: Vertex) -> u32 {
        self.dist[v]
    }

    /// Vertices reached by the last run.
    pub fn reached(&self) -> &[Vertex] {
        &self.touched
    }

    /// Edge sequence taking a cop from `from` onto an edge incident to one
    /// of the roots of the last run. Empty if `from` already touches a root.
    /// `None` if neither endpoint was reached.
    pub fn route_to_roots(&self, g: &Graph, from: EdgeId) -> Option<Vec<EdgeId>> {
        let [a, b] = g.edge(from);
        let (da, db) = (self.dist[a], self.dist[b]);
        if da == UNREACHED && db == UNREACHED {
            return None;
        }
        let mut w = if da <= db { a } else { b };
        let mut route = Vec::new();
        while self.dist[w] > 0 {
            let p = self.parent[w];
            route.push(g.edge_between(w, p).expect("BFS parent is a neighbour"));
            w = p;
        }
        Some(route)
    }

    /// Route from edge `from` onto edge `target`, where the last run was
    /// rooted at both endpoints of `target`.
    pub fn route_to_edge(&self, g: &Graph, from: EdgeId, target: EdgeId) -> Option<Vec<EdgeId>> {
        if from == target {
            return Some(Vec::new());
        }
        let mut route = self.route_to_roots(g, from)?;
        if route.last().copied().unwrap_or(from) != target {
            route.push(target);
        }
        Some(route)
    }
}
