//! Robber that keeps to "safe" vertices by counting cops in edge balls.
//!
//! `C^{S}_r(y)` is the number of cops on edges at edge-distance `r` from `y`
//! (`E_1` = edges at `y`) in `G` minus the vertices `S`. A neighbour `y` of
//! the robber's vertex `v` is `r`-dangerous when `vy` is occupied (`r = 0`) or
//! when `C^{v,x}_r(y) >= t^i / 3` for `r in {2i - 1, 2i}`, where `x` is the
//! vertex the robber came from and `t = d / (30 c (2j + 1))`.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::game::{GameState, RobberStrategy};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::neighborhood::{BoundedBfs, UNREACHED};
use crate::strategies::{distance_to_cops, StrategyError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EvasionConfig {
    pub j: usize,
    /// Exponent with `d = n^alpha`; measured as `ln d / ln n` when absent.
    pub alpha: Option<f64>,
    /// Average degree; measured as `2m/n` when absent.
    pub d: Option<f64>,
    /// Keep a per-round log with danger profiles and cop snapshots.
    pub log: bool,
}

impl Default for EvasionConfig {
    fn default() -> Self {
        EvasionConfig { j: 1, alpha: None, d: None, log: false }
    }
}

/// Which constant applies for the given `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `alpha < 1/(2j)`: `c = 3 / (1 - 2j alpha)`.
    PowerOfDegree,
    /// `1/(2j) <= alpha < 1/(2j - 1)`: `c = 6 / (1 - (2j - 1) alpha)`.
    ScaledOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvasionParams {
    pub j: usize,
    pub alpha: f64,
    pub d: f64,
    pub c_bar: f64,
    pub regime: Regime,
    /// `t = d / (30 c (2j + 1))`.
    pub t: f64,
}

impl EvasionParams {
    pub fn resolve(g: &Graph, cfg: &EvasionConfig) -> Result<Self, StrategyError> {
        if cfg.j == 0 {
            return Err(StrategyError::Config("j must be at least 1".into()));
        }
        let n = g.n() as f64;
        let d = cfg.d.unwrap_or(if g.n() == 0 { 0.0 } else { 2.0 * g.m() as f64 / n });
        if !(d.is_finite() && d > 0.0) {
            return Err(StrategyError::Config("average degree must be positive".into()));
        }
        let alpha = match cfg.alpha {
            Some(a) => a,
            None if g.n() > 1 => libm::log(d) / libm::log(n),
            None => return Err(StrategyError::Config("alpha needs n > 1".into())),
        };
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(StrategyError::Config("alpha must lie in (0, 1)".into()));
        }
        let j = cfg.j as f64;
        let (regime, c_bar) = if alpha < 1.0 / (2.0 * j) {
            (Regime::PowerOfDegree, 3.0 / (1.0 - 2.0 * j * alpha))
        } else if alpha < 1.0 / (2.0 * j - 1.0) {
            (Regime::ScaledOrder, 6.0 / (1.0 - (2.0 * j - 1.0) * alpha))
        } else {
            return Err(StrategyError::Config("alpha too large for this j".into()));
        };
        let t = d / (30.0 * c_bar * (2.0 * j + 1.0));
        Ok(EvasionParams { j: cfg.j, alpha, d, c_bar, regime, t })
    }

    /// Limit for `r`-danger, `t^ceil(r/2) / 3`, for `r >= 1`.
    pub fn danger_limit(&self, r: usize) -> f64 {
        libm::pow(self.t, r.div_ceil(2) as f64) / 3.0
    }

    /// `t^{j+1}`: the team size below which the robber should escape.
    pub fn team_bound(&self) -> f64 {
        libm::pow(self.t, (self.j + 1) as f64)
    }

    /// Safety of a vertex from its counts `C^x_1 .. C^x_{2j-1}`.
    pub fn is_safe(&self, counts: &[u32]) -> bool {
        if counts.first().is_some_and(|&c| c as f64 > self.t) {
            return false;
        }
        (1..self.j).all(|i| {
            let cap = libm::pow(self.t, (i + 1) as f64);
            counts.get(2 * i - 1).is_none_or(|&c| c as f64 <= cap) && counts.get(2 * i).is_none_or(|&c| c as f64 <= cap)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DangerProfile {
    pub y: Vertex,
    pub edge_occupied: bool,
    /// `counts[r - 1] = C^{v,x}_r(y)` for `r = 1..=2j`.
    pub counts: Vec<u32>,
    /// Every `r` in `0..=2j` for which `y` is `r`-dangerous.
    pub dangerous: Vec<usize>,
    /// The deadly neighbour lies within distance `2j` of `y` in `G - v`.
    pub near_deadly: bool,
}

impl DangerProfile {
    pub fn is_candidate(&self) -> bool {
        self.dangerous.is_empty() && !self.near_deadly
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvasionRound {
    pub round: u32,
    pub at: Vertex,
    pub deadly: Option<Vertex>,
    pub safe: bool,
    pub profiles: Vec<DangerProfile>,
    pub chosen: Option<Vertex>,
    /// Cops when the decision was made.
    pub cops: Vec<EdgeId>,
}

/// Counts cops per edge-ball index `1..=len` around the source of `dist`,
/// ignoring edges with an endpoint in `removed`.
pub fn ball_counts(g: &Graph, cops: &[EdgeId], dist: &[u32], removed: &[Vertex], len: usize) -> Vec<u32> {
    let mut counts = alloc::vec![0u32; len];
    for &c in cops {
        let [a, b] = g.edge(c);
        if removed.contains(&a) || removed.contains(&b) {
            continue;
        }
        let m = dist[a].min(dist[b]);
        if m != UNREACHED && (m as usize) < len {
            counts[m as usize] += 1;
        }
    }
    counts
}

#[derive(Debug, Clone)]
pub struct EvasionRobber {
    params: EvasionParams,
    log_enabled: bool,
    deadly: Option<Vertex>,
    bfs: BoundedBfs,
    safety_lost: u32,
    unsafe_rounds: u32,
    log: Vec<EvasionRound>,
}

impl EvasionRobber {
    pub fn new(g: &Graph, cfg: &EvasionConfig) -> Result<Self, StrategyError> {
        let params = EvasionParams::resolve(g, cfg)?;
        Ok(EvasionRobber {
            params,
            log_enabled: cfg.log,
            deadly: None,
            bfs: BoundedBfs::new(g.n()),
            safety_lost: 0,
            unsafe_rounds: 0,
            log: Vec::new(),
        })
    }

    pub fn params(&self) -> &EvasionParams {
        &self.params
    }

    /// Rounds in which no candidate neighbour existed.
    pub fn safety_lost(&self) -> u32 {
        self.safety_lost
    }

    /// Rounds that began on a vertex failing the safety predicate.
    pub fn unsafe_rounds(&self) -> u32 {
        self.unsafe_rounds
    }

    pub fn log(&self) -> &[EvasionRound] {
        &self.log
    }

    /// Danger profile of neighbour `y` of `v` with deadly neighbour `x`.
    pub fn profile(&mut self, g: &Graph, state: &GameState, v: Vertex, y: Vertex) -> DangerProfile {
        let two_j = 2 * self.params.j;
        let x = self.deadly;
        let edge_occupied = g.edge_between(v, y).is_some_and(|e| state.is_occupied(e));
        let near_deadly = match x {
            Some(x) => self.bfs.run(g, y, &[v], two_j as u32)[x] != UNREACHED,
            None => false,
        };
        let removed: Vec<Vertex> = core::iter::once(v).chain(x).collect();
        let dist = self.bfs.run(g, y, &removed, two_j as u32 - 1);
        let counts = ball_counts(g, &state.cops, dist, &removed, two_j);
        let mut dangerous = Vec::new();
        if edge_occupied {
            dangerous.push(0);
        }
        for r in 1..=two_j {
            if counts[r - 1] as f64 >= self.params.danger_limit(r) {
                dangerous.push(r);
            }
        }
        DangerProfile { y, edge_occupied, counts, dangerous, near_deadly }
    }

    /// Whether `v` is safe with respect to the current deadly neighbour.
    pub fn safe_at(&mut self, g: &Graph, cops: &[EdgeId], v: Vertex) -> bool {
        let len = 2 * self.params.j - 1;
        let removed: Vec<Vertex> = self.deadly.into_iter().collect();
        let dist = self.bfs.run(g, v, &removed, len.saturating_sub(1) as u32);
        let counts = ball_counts(g, cops, dist, &removed, len);
        self.params.is_safe(&counts)
    }
}

impl RobberStrategy for EvasionRobber {
    fn place(&mut self, g: &Graph, cops: &[EdgeId]) -> Vertex {
        let dist = distance_to_cops(g, cops);
        let mut best = 0;
        for v in 1..g.n() {
            if dist[v] > dist[best] {
                best = v;
            }
        }
        self.deadly = None;
        best
    }

    fn respond(&mut self, g: &Graph, state: &GameState) -> Vertex {
        let v = state.robber.expect("robber placed");
        let safe = self.safe_at(g, &state.cops, v);
        if !safe {
            self.unsafe_rounds += 1;
        }
        let neighbours: Vec<Vertex> = g.neighbors(v).collect();
        let profiles: Vec<DangerProfile> = neighbours.iter().map(|&y| self.profile(g, state, v, y)).collect();
        let chosen = profiles.iter().find(|p| p.is_candidate()).map(|p| p.y);
        if chosen.is_none() {
            self.safety_lost += 1;
        }
        if self.log_enabled {
            self.log.push(EvasionRound {
                round: state.round,
                at: v,
                deadly: self.deadly,
                safe,
                profiles,
                chosen,
                cops: state.cops.clone(),
            });
        }
        match chosen {
            Some(y) => {
                self.deadly = Some(v);
                y
            }
            None => v,
        }
    }
}
