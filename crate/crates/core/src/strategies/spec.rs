//! Serializable strategy descriptions and the objects they build.
//!
//! On the wire a strategy looks like
//! `{"strategy": "density", "params": {"r": 1, "c": 20.0}, "seed": 7}`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::game::{CopMove, CopStrategy, GameState, RobberStrategy};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::rng;
use crate::strategies::baseline::{ChasingCops, EverywhereCops, GreedyRobber, SittingRobber, StartRule};
use crate::strategies::density::{DensityCopConfig, DensityCops};
use crate::strategies::evasion::{EvasionConfig, EvasionRobber};
use crate::strategies::matching::MatchingCops;
use crate::strategies::StrategyError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "strategy", content = "params", rename_all = "snake_case")]
pub enum CopSpec {
    Matching {},
    Density(DensityCopConfig),
    RandomCops {},
    GreedyCops {},
    Everywhere {},
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "strategy", content = "params", rename_all = "snake_case")]
pub enum RobberSpec {
    Evasion(EvasionConfig),
    GreedyRobber {
        #[serde(default)]
        start: StartRule,
    },
    SittingRobber {
        #[serde(default)]
        start: StartRule,
    },
}

impl CopSpec {
    pub fn name(&self) -> &'static str {
        match self {
            CopSpec::Matching {} => "matching",
            CopSpec::Density(_) => "density",
            CopSpec::RandomCops {} => "random_cops",
            CopSpec::GreedyCops {} => "greedy_cops",
            CopSpec::Everywhere {} => "everywhere",
        }
    }

    /// Builds the strategy for `g`. Randomness comes from `seed` alone.
    pub fn build(&self, g: &Graph, seed: u64) -> Result<Cops, StrategyError> {
        Ok(match self {
            CopSpec::Matching {} => Cops::Matching(MatchingCops::new(g)?),
            CopSpec::Density(cfg) => Cops::Density(Box::new(DensityCops::new(g, cfg.clone(), seed)?)),
            CopSpec::RandomCops {} => Cops::Chasing(Box::new(ChasingCops::random(rng::substream(seed, 1)))),
            CopSpec::GreedyCops {} => Cops::Chasing(Box::new(ChasingCops::spread())),
            CopSpec::Everywhere {} => Cops::Everywhere(EverywhereCops),
        })
    }
}

impl RobberSpec {
    pub fn name(&self) -> &'static str {
        match self {
            RobberSpec::Evasion(_) => "evasion",
            RobberSpec::GreedyRobber { .. } => "greedy_robber",
            RobberSpec::SittingRobber { .. } => "sitting_robber",
        }
    }

    pub fn build(&self, g: &Graph, seed: u64) -> Result<Robber, StrategyError> {
        let seed = rng::substream(seed, 2);
        Ok(match self {
            RobberSpec::Evasion(cfg) => Robber::Evasion(Box::new(EvasionRobber::new(g, cfg)?)),
            RobberSpec::GreedyRobber { start } => Robber::Greedy(GreedyRobber::new(*start, seed)),
            RobberSpec::SittingRobber { start } => Robber::Sitting(SittingRobber::new(*start, seed)),
        })
    }
}

/// A built cop strategy, keeping access to strategy-specific reports.
#[derive(Debug, Clone)]
pub enum Cops {
    Matching(MatchingCops),
    Density(Box<DensityCops>),
    Chasing(Box<ChasingCops>),
    Everywhere(EverywhereCops),
}

impl Cops {
    pub fn as_density(&self) -> Option<&DensityCops> {
        match self {
            Cops::Density(d) => Some(d),
            _ => None,
        }
    }

    fn inner(&mut self) -> &mut dyn CopStrategy {
        match self {
            Cops::Matching(s) => s,
            Cops::Density(s) => s.as_mut(),
            Cops::Chasing(s) => s.as_mut(),
            Cops::Everywhere(s) => s,
        }
    }
}

impl CopStrategy for Cops {
    fn preferred_cops(&self) -> Option<usize> {
        match self {
            Cops::Matching(s) => s.preferred_cops(),
            Cops::Density(s) => s.preferred_cops(),
            Cops::Chasing(s) => s.preferred_cops(),
            Cops::Everywhere(s) => s.preferred_cops(),
        }
    }

    fn place(&mut self, g: &Graph, k: usize) -> Vec<EdgeId> {
        self.inner().place(g, k)
    }

    fn respond(&mut self, g: &Graph, state: &GameState) -> CopMove {
        self.inner().respond(g, state)
    }
}

#[derive(Debug, Clone)]
pub enum Robber {
    Evasion(Box<EvasionRobber>),
    Greedy(GreedyRobber),
    Sitting(SittingRobber),
}

impl Robber {
    pub fn as_evasion(&self) -> Option<&EvasionRobber> {
        match self {
            Robber::Evasion(r) => Some(r),
            _ => None,
        }
    }

    fn inner(&mut self) -> &mut dyn RobberStrategy {
        match self {
            Robber::Evasion(s) => s.as_mut(),
            Robber::Greedy(s) => s,
            Robber::Sitting(s) => s,
        }
    }
}

impl RobberStrategy for Robber {
    fn place(&mut self, g: &Graph, cops: &[EdgeId]) -> Vertex {
        self.inner().place(g, cops)
    }

    fn respond(&mut self, g: &Graph, state: &GameState) -> Vertex {
        self.inner().respond(g, state)
    }
}
