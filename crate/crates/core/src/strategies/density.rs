//! Random-density cops that trap the robber in a ball and then fill it.
//!
//! Every edge independently receives a cop with probability `q`. When the
//! robber appears at `v`, the cops compute the boundary `X` between layers
//! `rho` and `rho + 1` around `v`, assign one distinct cop to every edge of
//! `X` through a bipartite matching (each boundary vertex `u` is cloned once
//! per edge of `X` at `u`), and walk the assigned cops there in at most
//! `rho + 1` moves. The robber can then not leave `N_rho[v]`, and a separate
//! pool of auxiliary cops walks onto every edge inside the ball.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::game::{CopMove, CopStrategy, GameState};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::matching::bipartite_matching;
use crate::rng;
use crate::strategies::{Router, StrategyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityMode {
    /// `q = C d^r / n`, boundary between `N_r` and `N_{r+1}`.
    Sparse,
    /// `q = C ln n / d^r`, boundary between `N_{r-1}` and `N_r`.
    Dense,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DensityCopConfig {
    pub r: usize,
    pub c: f64,
    pub mode: DensityMode,
    /// Average degree; measured as `2m/n` when absent.
    pub d: Option<f64>,
    /// Fixed team size drawn as a prefix of a seeded edge permutation,
    /// instead of independent coin flips per edge.
    pub team: Option<usize>,
    /// Auxiliary pool size; defaults to `2 d^{r+1}` capped at `m`.
    pub aux: Option<usize>,
    /// Demand per boundary vertex that the analysis allows for.
    pub demand_cap: usize,
}

impl Default for DensityCopConfig {
    fn default() -> Self {
        DensityCopConfig { r: 1, c: 20.0, mode: DensityMode::Sparse, d: None, team: None, aux: None, demand_cap: 250 }
    }
}

impl DensityCopConfig {
    pub fn validate(&self) -> Result<(), StrategyError> {
        if self.r == 0 {
            return Err(StrategyError::Config("r must be at least 1".into()));
        }
        if !(self.c.is_finite() && self.c >= 1.0) {
            return Err(StrategyError::Config("C must be a finite number >= 1".into()));
        }
        if let Some(d) = self.d {
            if !(d.is_finite() && d > 0.0) {
                return Err(StrategyError::Config("d must be positive".into()));
            }
        }
        Ok(())
    }

    /// Radius of the trapping ball.
    pub fn rho(&self) -> usize {
        match self.mode {
            DensityMode::Sparse => self.r,
            DensityMode::Dense => self.r - 1,
        }
    }

    pub fn degree(&self, g: &Graph) -> f64 {
        self.d.unwrap_or(if g.n() == 0 { 0.0 } else { 2.0 * g.m() as f64 / g.n() as f64 })
    }

    /// Occupation probability before capping.
    pub fn raw_q(&self, g: &Graph) -> f64 {
        let n = g.n() as f64;
        let d = self.degree(g);
        let dr = libm::pow(d, self.r as f64);
        match self.mode {
            DensityMode::Sparse => self.c * dr / n,
            DensityMode::Dense => self.c * libm::log(n) / dr,
        }
    }

    pub fn aux_count(&self, g: &Graph) -> usize {
        match self.aux {
            Some(a) => a,
            None => {
                let a = 2.0 * libm::pow(self.degree(g), (self.r + 1) as f64);
                (libm::ceil(a) as usize).min(g.m())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrapStatus {
    /// The robber has not been seen yet.
    Waiting,
    /// Boundary assigned; cops are closing in.
    Trapping,
    /// The demand matching did not saturate. All cops pass.
    TrapFailed,
    /// The auxiliary pool cannot fill the ball. All cops pass.
    AuxiliaryShort,
}

/// What the cops planned when the robber appeared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrapReport {
    pub center: Vertex,
    pub rho: usize,
    /// Boundary edges, ascending.
    pub boundary: Vec<EdgeId>,
    /// `(cop, boundary edge)` for every assigned cop.
    pub assignment: Vec<(usize, EdgeId)>,
    pub longest_route: usize,
    pub max_demand: usize,
    pub demand_cap_exceeded: bool,
    /// Edges with both endpoints in `N_rho[v]`.
    pub interior: Vec<EdgeId>,
    pub aux_routes_longest: usize,
    /// Unmatched boundary edges when the matching fails.
    pub unsaturated: usize,
}

#[derive(Debug, Clone)]
pub struct DensityCops {
    cfg: DensityCopConfig,
    q: f64,
    q_capped: bool,
    team: usize,
    aux: usize,
    /// Current edge of every cop; team first, auxiliaries after.
    pos: Vec<EdgeId>,
    routes: Vec<Vec<EdgeId>>,
    step: usize,
    status: TrapStatus,
    report: Option<TrapReport>,
}

impl DensityCops {
    pub fn new(g: &Graph, cfg: DensityCopConfig, seed: u64) -> Result<Self, StrategyError> {
        cfg.validate()?;
        if g.m() == 0 {
            return Err(StrategyError::Config("graph has no edges".into()));
        }
        let raw = cfg.raw_q(g);
        let q = raw.clamp(0.0, 1.0);
        let mut stream = rng::stream(rng::substream(seed, 0));
        let mut pos: Vec<EdgeId> = match cfg.team {
            None => (0..g.m()).filter(|_| stream.gen::<f64>() < q).collect(),
            Some(k) => {
                let mut perm: Vec<EdgeId> = (0..g.m()).collect();
                perm.shuffle(&mut stream);
                (0..k).map(|i| perm[i % perm.len()]).collect()
            }
        };
        let team = pos.len();
        let aux = cfg.aux_count(g);
        pos.extend((0..aux).map(|i| i % g.m()));
        let routes = vec![Vec::new(); pos.len()];
        Ok(DensityCops {
            cfg,
            q,
            q_capped: raw > 1.0,
            team,
            aux,
            pos,
            routes,
            step: 0,
            status: TrapStatus::Waiting,
            report: None,
        })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Whether the configured probability exceeded 1 and was capped.
    pub fn q_capped(&self) -> bool {
        self.q_capped
    }

    pub fn team_size(&self) -> usize {
        self.team
    }

    pub fn aux_size(&self) -> usize {
        self.aux
    }

    pub fn total(&self) -> usize {
        self.pos.len()
    }

    pub fn status(&self) -> TrapStatus {
        self.status
    }

    pub fn report(&self) -> Option<&TrapReport> {
        self.report.as_ref()
    }

    pub fn config(&self) -> &DensityCopConfig {
        &self.cfg
    }

    fn plan(&mut self, g: &Graph, v: Vertex) {
        let rho = self.cfg.rho();
        let mut ball = Router::new(g.n());
        ball.run(g, &[v], rho as u32 + 1);
        let inside = |w: Vertex| ball.dist(w) <= rho as u32;

        let mut boundary = Vec::new();
        let mut interior = Vec::new();
        for &w in ball.reached() {
            if !inside(w) {
                continue;
            }
            for &(x, e) in g.adj(w) {
                if inside(x) {
                    if w < x {
                        interior.push(e);
                    }
                } else if ball.dist(x) == rho as u32 + 1 {
                    boundary.push((x, e));
                }
            }
        }
        boundary.sort_unstable();
        interior.sort_unstable();

        let mut cops_at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (cop, &e) in self.pos[..self.team].iter().enumerate() {
            for w in g.edge(e) {
                cops_at[w].push(cop);
            }
        }

        let mut work = Router::new(g.n());
        let mut left: Vec<Vec<usize>> = Vec::with_capacity(boundary.len());
        let mut max_demand = 0;
        let mut i = 0;
        while i < boundary.len() {
            let u = boundary[i].0;
            let mut j = i;
            while j < boundary.len() && boundary[j].0 == u {
                j += 1;
            }
            max_demand = max_demand.max(j - i);
            work.run(g, &[u], rho as u32);
            let mut near: Vec<usize> = work.reached().iter().flat_map(|&w| cops_at[w].iter().copied()).collect();
            near.sort_unstable();
            near.dedup();
            for _ in i..j {
                left.push(near.clone());
            }
            i = j;
        }
        let matched = bipartite_matching(&left, self.team);

        let mut report = TrapReport {
            center: v,
            rho,
            boundary: boundary.iter().map(|&(_, e)| e).collect(),
            assignment: Vec::new(),
            longest_route: 0,
            max_demand,
            demand_cap_exceeded: max_demand > self.cfg.demand_cap,
            interior: interior.clone(),
            aux_routes_longest: 0,
            unsaturated: matched.iter().filter(|m| m.is_none()).count(),
        };
        report.boundary.sort_unstable();
        if report.unsaturated > 0 {
            self.status = TrapStatus::TrapFailed;
            self.report = Some(report);
            return;
        }

        // Auxiliaries first: if they cannot fill the ball, nobody moves.
        let mut aux_routes = Vec::new();
        if interior.len() > self.aux {
            self.status = TrapStatus::AuxiliaryShort;
            self.report = Some(report);
            return;
        }
        for (a, &target) in interior.iter().enumerate() {
            let cop = self.team + a;
            work.run(g, &g.edge(target), u32::MAX);
            match work.route_to_edge(g, self.pos[cop], target) {
                Some(route) => aux_routes.push((cop, route)),
                None => {
                    self.status = TrapStatus::AuxiliaryShort;
                    self.report = Some(report);
                    return;
                }
            }
        }

        for (slot, cop) in matched.iter().enumerate() {
            let cop = cop.expect("saturated");
            let target = boundary[slot].1;
            work.run(g, &g.edge(target), rho as u32 + 1);
            let route = work.route_to_edge(g, self.pos[cop], target).expect("cop within reach");
            report.longest_route = report.longest_route.max(route.len());
            report.assignment.push((cop, target));
            self.routes[cop] = route;
        }
        for (cop, route) in aux_routes {
            report.aux_routes_longest = report.aux_routes_longest.max(route.len());
            self.routes[cop] = route;
        }
        self.status = TrapStatus::Trapping;
        self.report = Some(report);
    }
}

impl CopStrategy for DensityCops {
    fn preferred_cops(&self) -> Option<usize> {
        Some(self.pos.len())
    }

    fn place(&mut self, _g: &Graph, _k: usize) -> Vec<EdgeId> {
        self.pos.clone()
    }

    fn respond(&mut self, g: &Graph, state: &GameState) -> CopMove {
        if self.status == TrapStatus::Waiting {
            match state.robber {
                Some(v) => self.plan(g, v),
                None => return CopMove::pass(),
            }
        }
        if self.status != TrapStatus::Trapping {
            return CopMove::pass();
        }
        let mut moves = Vec::new();
        for cop in 0..self.pos.len() {
            if let Some(&next) = self.routes[cop].get(self.step) {
                moves.push((self.pos[cop], next));
                self.pos[cop] = next;
            }
        }
        self.step += 1;
        CopMove { moves }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play, Outcome};
    use crate::graph::{gen_gnp, GnpParams};
    use crate::strategies::baseline::{GreedyRobber, SittingRobber, StartRule};

    #[test]
    fn huge_constant_occupies_everything() {
        let g = Graph::petersen();
        let cfg = DensityCopConfig { c: 1e9, aux: Some(0), ..Default::default() };
        let mut cops = DensityCops::new(&g, cfg, 1).unwrap();
        assert!(cops.q_capped());
        assert_eq!(cops.team_size(), g.m());
        let mut robber = GreedyRobber::new(StartRule::Farthest, 0);
        let t = play(&g, cops.total(), &mut cops, &mut robber, 5).unwrap();
        assert_eq!(t.outcome, Outcome::CopWin);
        assert_eq!(t.rounds, 0);
    }

    #[test]
    fn traps_on_a_cycle() {
        let g = Graph::cycle(12);
        let mut trapped = 0;
        for seed in 0..20 {
            let cfg = DensityCopConfig { team: Some(8), aux: Some(4), ..Default::default() };
            let mut cops = DensityCops::new(&g, cfg, seed).unwrap();
            let mut robber = SittingRobber::new(StartRule::Farthest, 0);
            let t = play(&g, cops.total(), &mut cops, &mut robber, 30).unwrap();
            if cops.status() != TrapStatus::Trapping {
                continue;
            }
            trapped += 1;
            let rep = cops.report().unwrap();
            assert_eq!(rep.boundary.len(), 2);
            assert_eq!(rep.interior.len(), 2);
            assert!(rep.longest_route <= 2);
            assert_eq!(t.outcome, Outcome::CopWin);
        }
        assert!(trapped > 0);
    }

    #[test]
    fn failed_trap_passes() {
        let g = Graph::cycle(12);
        let cfg = DensityCopConfig { team: Some(1), aux: Some(0), ..Default::default() };
        let mut cops = DensityCops::new(&g, cfg, 5).unwrap();
        let mut robber = GreedyRobber::new(StartRule::Farthest, 0);
        let t = play(&g, cops.total(), &mut cops, &mut robber, 10).unwrap();
        assert_eq!(cops.status(), TrapStatus::TrapFailed);
        assert_eq!(t.outcome, Outcome::RobberSurvived);
        assert!(t.moves.iter().all(|m| match m {
            crate::game::TraceMove::Cops(v) => v.is_empty(),
            _ => true,
        }));
    }

    #[test]
    fn expected_team_size() {
        let g = gen_gnp(&GnpParams::new(400, 0.02, 9).unwrap());
        let cfg = DensityCopConfig { c: 3.0, ..Default::default() };
        let d = cfg.degree(&g);
        let mean =
            (0..100).map(|s| DensityCops::new(&g, cfg.clone(), s).unwrap().team_size() as f64).sum::<f64>() / 100.0;
        let expected = cfg.c * d * d / 2.0;
        assert!((mean - expected).abs() <= 0.1 * expected, "{mean} vs {expected}");
    }

    #[test]
    fn config_errors() {
        let g = Graph::path(3);
        let bad = DensityCopConfig { r: 0, ..Default::default() };
        assert!(DensityCops::new(&g, bad, 0).is_err());
        let bad = DensityCopConfig { c: 0.5, ..Default::default() };
        assert!(DensityCops::new(&g, bad, 0).is_err());
        assert!(DensityCops::new(&Graph::empty(3), DensityCopConfig::default(), 0).is_err());
    }
}
