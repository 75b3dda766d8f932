//! Two cops on every edge of a (near-)perfect matching, one per vertex.
//!
//! The cop belonging to `u` always stands on an edge at `u`. When the robber
//! is at `v`, the cop of each neighbour `u` steps onto `uv`, which closes
//! every edge at `v` in a single move.

use alloc::vec::Vec;

use crate::game::{CopMove, CopStrategy, GameState};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::matching::{max_matching, Matching, MatchingKind};
use crate::strategies::StrategyError;

#[derive(Debug, Clone)]
pub struct MatchingCops {
    matching: Matching,
    /// Current edge of the cop belonging to each vertex, if it has one.
    pos: Vec<Option<EdgeId>>,
}

impl MatchingCops {
    pub fn new(g: &Graph) -> Result<Self, StrategyError> {
        let matching = max_matching(g);
        if matching.kind == MatchingKind::Neither {
            return Err(StrategyError::NoPerfectMatching);
        }
        let pos = (0..g.n())
            .map(|u| match matching.mate[u] {
                Some(w) => g.edge_between(u, w),
                None => g.adj(u).first().map(|&(_, e)| e),
            })
            .collect();
        Ok(MatchingCops { matching, pos })
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn cop_count(&self) -> usize {
        self.pos.iter().flatten().count()
    }

    fn placement(&self) -> Vec<EdgeId> {
        self.pos.iter().flatten().copied().collect()
    }

    /// The vertex a cop on edge `e` belongs to, for reporting.
    pub fn owner_of(&self, e: EdgeId) -> Vec<Vertex> {
        (0..self.pos.len()).filter(|&u| self.pos[u] == Some(e)).collect()
    }
}

impl CopStrategy for MatchingCops {
    fn preferred_cops(&self) -> Option<usize> {
        Some(self.cop_count())
    }

    fn place(&mut self, _g: &Graph, _k: usize) -> Vec<EdgeId> {
        self.placement()
    }

    fn respond(&mut self, g: &Graph, state: &GameState) -> CopMove {
        let v = match state.robber {
            Some(v) => v,
            None => return CopMove::pass(),
        };
        let mut moves = Vec::new();
        for &(u, e) in g.adj(v) {
            if let Some(cur) = self.pos[u] {
                if cur != e {
                    moves.push((cur, e));
                    self.pos[u] = Some(e);
                }
            }
        }
        CopMove { moves }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play, Outcome};
    use crate::strategies::baseline::{GreedyRobber, StartRule};

    fn run(g: &Graph, start: Vertex) -> (usize, crate::game::StrategyTrace) {
        let mut cops = MatchingCops::new(g).unwrap();
        let k = cops.cop_count();
        let mut robber = GreedyRobber::new(StartRule::Vertex(start), 0);
        (k, play(g, k, &mut cops, &mut robber, 5).unwrap())
    }

    #[test]
    fn cycle_of_four_in_one_round() {
        let (k, t) = run(&Graph::cycle(4), 0);
        assert_eq!(k, 4);
        assert_eq!(t.outcome, Outcome::CopWin);
        assert_eq!(t.rounds, 1);
    }

    #[test]
    fn odd_orders_and_every_start() {
        for g in [Graph::cycle(5), Graph::petersen(), Graph::complete(7), Graph::path(7)] {
            for v in 0..g.n() {
                let (k, t) = run(&g, v);
                assert!(k <= g.n());
                assert_eq!(t.outcome, Outcome::CopWin);
                assert!(t.rounds <= 1);
            }
        }
    }

    #[test]
    fn isolated_unmatched_vertex_needs_no_cop() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let cops = MatchingCops::new(&g).unwrap();
        assert_eq!(cops.cop_count(), 2);
    }

    #[test]
    fn star_has_no_near_perfect_matching() {
        assert_eq!(MatchingCops::new(&Graph::star(3)).unwrap_err(), StrategyError::NoPerfectMatching);
    }
}
