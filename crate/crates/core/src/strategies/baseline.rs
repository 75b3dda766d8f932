//! Simple reference strategies used as baselines and test opponents.

use alloc::vec::Vec;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::game::{CopMove, CopStrategy, GameState, RobberStrategy};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::neighborhood::{BoundedBfs, UNREACHED};
use crate::rng::{self, Stream};
use crate::strategies::distance_to_cops;

/// How the cops are placed before they start chasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    /// Independent uniform edges.
    Random,
    /// Cop `i` on edge `floor(i * m / k)`.
    Spread,
}

/// Cops that place by a fixed rule and then walk greedily towards the robber.
///
/// Each round, surplus cops on the robber's edges spread to free ones and
/// every other cop takes one step along a shortest path, ending on an edge
/// at the robber once adjacent.
#[derive(Debug, Clone)]
pub struct ChasingCops {
    placement: Placement,
    rng: Stream,
    bfs: BoundedBfs,
}

impl ChasingCops {
    pub fn random(seed: u64) -> Self {
        ChasingCops { placement: Placement::Random, rng: rng::stream(seed), bfs: BoundedBfs::new(0) }
    }

    pub fn spread() -> Self {
        ChasingCops { placement: Placement::Spread, rng: rng::stream(0), bfs: BoundedBfs::new(0) }
    }
}

impl CopStrategy for ChasingCops {
    fn place(&mut self, g: &Graph, k: usize) -> Vec<EdgeId> {
        let m = g.m();
        match self.placement {
            Placement::Random => (0..k).map(|_| self.rng.gen_range(0..m)).collect(),
            Placement::Spread => (0..k).map(|i| i * m / k).collect(),
        }
    }

    fn respond(&mut self, g: &Graph, state: &GameState) -> CopMove {
        if self.bfs.dist().len() != g.n() {
            self.bfs = BoundedBfs::new(g.n());
        }
        let r = state.robber.expect("robber placed");
        let dist = self.bfs.run(g, r, &[], u32::MAX);
        chase_step(g, &state.cops, r, dist)
    }
}

/// One greedy chasing round for the sorted cop multiset `cops`.
pub fn chase_step(g: &Graph, cops: &[EdgeId], r: Vertex, dist: &[u32]) -> CopMove {
    let at_robber: Vec<EdgeId> = g.adj(r).iter().map(|&(_, e)| e).collect();
    let mut free: Vec<EdgeId> = at_robber.iter().copied().filter(|e| cops.binary_search(e).is_err()).collect();
    free.reverse();
    let mut moves = Vec::new();
    let mut i = 0;
    while i < cops.len() {
        let e = cops[i];
        let mut j = i + 1;
        while j < cops.len() && cops[j] == e {
            j += 1;
        }
        if at_robber.contains(&e) {
            // One cop holds the edge, the rest spread out.
            for _ in i + 1..j {
                if let Some(f) = free.pop() {
                    moves.push((e, f));
                }
            }
        } else {
            let [a, b] = g.edge(e);
            let (da, db) = (dist[a], dist[b]);
            if da != UNREACHED || db != UNREACHED {
                let w = if da <= db { a } else { b };
                let p = g
                    .adj(w)
                    .iter()
                    .find(|&&(x, _)| dist[x] + 1 == dist[w])
                    .map(|&(_, f)| f)
                    .expect("shortest path continues");
                for _ in i..j {
                    moves.push((e, p));
                }
            }
        }
        i = j;
    }
    CopMove { moves }
}

/// One cop on every edge. Wins at placement whenever `k >= m`.
#[derive(Debug, Clone, Copy, Default)]
pub struct EverywhereCops;

impl CopStrategy for EverywhereCops {
    fn place(&mut self, g: &Graph, k: usize) -> Vec<EdgeId> {
        (0..k).map(|i| i % g.m()).collect()
    }

    fn respond(&mut self, _g: &Graph, _state: &GameState) -> CopMove {
        CopMove::pass()
    }
}

/// Where a robber starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartRule {
    /// The vertex farthest from every cop, smallest id on ties.
    #[default]
    Farthest,
    /// A uniformly random vertex drawn from the robber's seed.
    Random,
    Vertex(Vertex),
}

fn farthest(g: &Graph, cops: &[EdgeId]) -> Vertex {
    let dist = distance_to_cops(g, cops);
    let mut best = 0;
    for v in 1..g.n() {
        if dist[v] > dist[best] {
            best = v;
        }
    }
    best
}

fn start(rule: StartRule, g: &Graph, cops: &[EdgeId], rng: &mut Stream) -> Vertex {
    match rule {
        StartRule::Farthest => farthest(g, cops),
        StartRule::Random => rng.gen_range(0..g.n()),
        StartRule::Vertex(v) => v,
    }
}

/// Moves to the free neighbour farthest from the cops, staying put unless
/// that strictly increases the distance.
#[derive(Debug, Clone)]
pub struct GreedyRobber {
    start: StartRule,
    rng: Stream,
}

impl GreedyRobber {
    pub fn new(start: StartRule, seed: u64) -> Self {
        GreedyRobber { start, rng: rng::stream(seed) }
    }
}

impl RobberStrategy for GreedyRobber {
    fn place(&mut self, g: &Graph, cops: &[EdgeId]) -> Vertex {
        start(self.start, g, cops, &mut self.rng)
    }

    fn respond(&mut self, g: &Graph, state: &GameState) -> Vertex {
        let r = state.robber.expect("robber placed");
        let dist = distance_to_cops(g, &state.cops);
        let mut best = r;
        for &(w, e) in g.adj(r) {
            if !state.is_occupied(e) && dist[w] > dist[best] {
                best = w;
            }
        }
        best
    }
}

/// Never moves.
#[derive(Debug, Clone)]
pub struct SittingRobber {
    start: StartRule,
    rng: Stream,
}

impl SittingRobber {
    pub fn new(start: StartRule, seed: u64) -> Self {
        SittingRobber { start, rng: rng::stream(seed) }
    }
}

impl RobberStrategy for SittingRobber {
    fn place(&mut self, g: &Graph, cops: &[EdgeId]) -> Vertex {
        start(self.start, g, cops, &mut self.rng)
    }

    fn respond(&mut self, _g: &Graph, state: &GameState) -> Vertex {
        state.robber.expect("robber placed")
    }
}
