//! Rules of Containment and a referee that plays strategies against each other.
//!
//! Turn 0: the cops place (several cops may share an edge), then the robber
//! places knowing where the cops are. Every later round is a cop move
//! followed by a robber move. Capture is checked after the placements and
//! after every cop move; a robber move can never produce a capture because
//! the robber arrives along a free edge.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phase {
    CopPlacement,
    RobberPlacement,
    Cops,
    Robber,
}

/// A position. `cops` is a sorted multiset of edge ids, so states that
/// differ only by which cop is where compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameState {
    pub cops: Vec<EdgeId>,
    pub robber: Option<Vertex>,
    pub to_move: Phase,
    pub round: u32,
}

impl GameState {
    pub fn new(mut cops: Vec<EdgeId>, robber: Option<Vertex>, to_move: Phase) -> Self {
        cops.sort_unstable();
        GameState { cops, robber, to_move, round: 0 }
    }

    pub fn is_occupied(&self, e: EdgeId) -> bool {
        self.cops.binary_search(&e).is_ok()
    }

    /// Number of cops on edge `e`.
    pub fn cops_on(&self, e: EdgeId) -> usize {
        let lo = self.cops.partition_point(|&c| c < e);
        let hi = self.cops.partition_point(|&c| c <= e);
        hi - lo
    }

    /// Occupancy counts indexed by edge id.
    pub fn occupancy(&self, m: usize) -> Vec<u32> {
        let mut occ = alloc::vec![0u32; m];
        for &c in &self.cops {
            occ[c] += 1;
        }
        occ
    }

    /// Checks the structural invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), GameError> {
        if self.cops.iter().any(|&c| c >= g.m()) {
            return Err(GameError::Invalid("cop on a non-existent edge"));
        }
        if !self.cops.windows(2).all(|w| w[0] <= w[1]) {
            return Err(GameError::Invalid("cop multiset not sorted"));
        }
        match (self.to_move, self.robber) {
            (Phase::Cops | Phase::Robber, None) => Err(GameError::RobberUnplaced),
            (_, Some(r)) if r >= g.n() => Err(GameError::Invalid("robber on a non-existent vertex")),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("the robber has not been placed")]
    RobberUnplaced,
    #[error("expected phase {expected:?}, found {found:?}")]
    WrongPhase { expected: Phase, found: Phase },
    #[error("invalid state: {0}")]
    Invalid(&'static str),
}

/// Movements of individual cops as `(from, to)` pairs. Cops not listed stay
/// where they are. A cop may only move to an edge sharing an endpoint with
/// its current edge.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CopMove {
    pub moves: Vec<(EdgeId, EdgeId)>,
}

impl CopMove {
    pub fn pass() -> Self {
        CopMove::default()
    }

    /// Applies the move to the sorted multiset `cops`.
    pub fn apply(&self, g: &Graph, cops: &[EdgeId]) -> Result<Vec<EdgeId>, String> {
        let mut from: Vec<EdgeId> = Vec::with_capacity(self.moves.len());
        for &(a, b) in &self.moves {
            if a >= g.m() || b >= g.m() {
                return Err(alloc::format!("edge id out of range in {a}->{b}"));
            }
            if a != b && !g.edges_share_endpoint(a, b) {
                return Err(alloc::format!("edge {a} is not adjacent to edge {b}"));
            }
            from.push(a);
        }
        from.sort_unstable();
        let mut out = Vec::with_capacity(cops.len());
        let mut j = 0;
        for &c in cops {
            if j < from.len() && from[j] == c {
                j += 1;
            } else {
                out.push(c);
            }
        }
        if j < from.len() {
            return Err(alloc::format!("no cop available on edge {}", from[j]));
        }
        out.extend(self.moves.iter().map(|&(_, b)| b));
        out.sort_unstable();
        Ok(out)
    }

    /// The pairs that actually change edge.
    pub fn moving(&self) -> Vec<(EdgeId, EdgeId)> {
        self.moves.iter().copied().filter(|(a, b)| a != b).collect()
    }
}

/// Whether every edge at `robber` carries a cop (vacuously true at an
/// isolated vertex). `cops` must be sorted.
pub fn capture_holds(g: &Graph, cops: &[EdgeId], robber: Vertex) -> bool {
    g.adj(robber).iter().all(|&(_, e)| cops.binary_search(&e).is_ok())
}

pub fn is_capture(g: &Graph, s: &GameState) -> Result<bool, GameError> {
    let r = s.robber.ok_or(GameError::RobberUnplaced)?;
    Ok(capture_holds(g, &s.cops, r))
}

fn expect_phase(s: &GameState, expected: Phase) -> Result<(), GameError> {
    if s.to_move == expected {
        Ok(())
    } else {
        Err(GameError::WrongPhase { expected, found: s.to_move })
    }
}

/// All distinct cop multisets reachable in one cop move, each with one
/// assignment that reaches it, ordered by the resulting multiset. Includes
/// the all-pass move. Exponential in the number of cops; meant for small
/// teams.
pub fn legal_cop_moves(g: &Graph, s: &GameState) -> Result<Vec<(CopMove, Vec<EdgeId>)>, GameError> {
    expect_phase(s, Phase::Cops)?;
    let options: Vec<Vec<EdgeId>> = s
        .cops
        .iter()
        .map(|&c| {
            let mut o = g.adjacent_edges(c);
            o.push(c);
            o.sort_unstable();
            o
        })
        .collect();
    let mut found: Vec<(Vec<EdgeId>, CopMove)> = Vec::new();
    let mut pick = alloc::vec![0usize; s.cops.len()];
    fn rec(
        i: usize,
        cops: &[EdgeId],
        options: &[Vec<EdgeId>],
        pick: &mut [usize],
        found: &mut Vec<(Vec<EdgeId>, CopMove)>,
    ) {
        if i == cops.len() {
            let moves: Vec<_> =
                (0..cops.len()).map(|j| (cops[j], options[j][pick[j]])).filter(|(a, b)| a != b).collect();
            let mut target: Vec<EdgeId> = (0..cops.len()).map(|j| options[j][pick[j]]).collect();
            target.sort_unstable();
            found.push((target, CopMove { moves }));
            return;
        }
        // Cops sharing an edge are interchangeable: pick non-decreasing options.
        let start = if i > 0 && cops[i] == cops[i - 1] { pick[i - 1] } else { 0 };
        for o in start..options[i].len() {
            pick[i] = o;
            rec(i + 1, cops, options, pick, found);
        }
    }
    rec(0, &s.cops, &options, &mut pick, &mut found);
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    Ok(found.into_iter().map(|(t, m)| (m, t)).collect())
}

/// Pass plus every neighbour reachable over a cop-free edge, ascending.
pub fn legal_robber_moves(g: &Graph, s: &GameState) -> Result<Vec<Vertex>, GameError> {
    expect_phase(s, Phase::Robber)?;
    let r = s.robber.ok_or(GameError::RobberUnplaced)?;
    let mut out: Vec<Vertex> = g.adj(r).iter().filter(|&&(_, e)| !s.is_occupied(e)).map(|&(w, _)| w).collect();
    out.push(r);
    out.sort_unstable();
    Ok(out)
}

/// A cop strategy. Strategies may keep per-game state; one object plays one
/// game.
pub trait CopStrategy {
    /// Cop team size this strategy wants, when it decides that itself.
    fn preferred_cops(&self) -> Option<usize> {
        None
    }
    /// Initial edges for `k` cops.
    fn place(&mut self, g: &Graph, k: usize) -> Vec<EdgeId>;
    /// Next cop move; `state.to_move` is `Phase::Cops`.
    fn respond(&mut self, g: &Graph, state: &GameState) -> CopMove;
}

pub trait RobberStrategy {
    /// Start vertex, chosen after seeing the cops.
    fn place(&mut self, g: &Graph, cops: &[EdgeId]) -> Vertex;
    /// Next vertex (equal to the current one to pass).
    fn respond(&mut self, g: &Graph, state: &GameState) -> Vertex;
}

impl<T: CopStrategy + ?Sized> CopStrategy for alloc::boxed::Box<T> {
    fn preferred_cops(&self) -> Option<usize> {
        (**self).preferred_cops()
    }
    fn place(&mut self, g: &Graph, k: usize) -> Vec<EdgeId> {
        (**self).place(g, k)
    }
    fn respond(&mut self, g: &Graph, state: &GameState) -> CopMove {
        (**self).respond(g, state)
    }
}

impl<T: RobberStrategy + ?Sized> RobberStrategy for alloc::boxed::Box<T> {
    fn place(&mut self, g: &Graph, cops: &[EdgeId]) -> Vertex {
        (**self).place(g, cops)
    }
    fn respond(&mut self, g: &Graph, state: &GameState) -> Vertex {
        (**self).respond(g, state)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    CopWin,
    RobberSurvived,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::CopWin => "CopWin",
            Outcome::RobberSurvived => "RobberSurvived",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "side", content = "detail", rename_all = "lowercase")]
pub enum TraceMove {
    /// Cops that changed edge, as `[from, to]`.
    Cops(Vec<(EdgeId, EdgeId)>),
    Robber {
        from: Vertex,
        to: Vertex,
    },
}

/// Transcript of a finished game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyTrace {
    pub placement: Vec<EdgeId>,
    pub robber_start: Vertex,
    pub moves: Vec<TraceMove>,
    pub outcome: Outcome,
    pub rounds: u32,
}

impl StrategyTrace {
    /// Replays the transcript, yielding the state after placement and after
    /// every recorded move.
    pub fn replay(&self, g: &Graph) -> Result<Vec<GameState>, String> {
        let mut s = GameState::new(self.placement.clone(), Some(self.robber_start), Phase::Cops);
        let mut out = alloc::vec![s.clone()];
        for m in &self.moves {
            match m {
                TraceMove::Cops(pairs) => {
                    s.cops = CopMove { moves: pairs.clone() }.apply(g, &s.cops)?;
                    s.round += 1;
                    s.to_move = Phase::Robber;
                }
                TraceMove::Robber { from, to } => {
                    if s.robber != Some(*from) {
                        return Err(alloc::format!("robber not at {from}"));
                    }
                    if from != to {
                        match g.edge_between(*from, *to) {
                            Some(e) if !s.is_occupied(e) => {}
                            _ => return Err(alloc::format!("illegal robber step {from}->{to}")),
                        }
                    }
                    s.robber = Some(*to);
                    s.to_move = Phase::Cops;
                }
            }
            out.push(s.clone());
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlayError {
    #[error("at least one cop is required")]
    NoCops,
    #[error("cops need at least one edge to stand on")]
    NoEdges,
    #[error("cop strategy placed {got} cops, expected {expected}")]
    WrongCopCount { expected: usize, got: usize },
    #[error("cop strategy placed a cop on non-existent edge {0}")]
    IllegalPlacement(EdgeId),
    #[error("robber strategy placed on non-existent vertex {0}")]
    IllegalRobberPlacement(Vertex),
    #[error("illegal cop move in round {round}: {reason} (state {state:?})")]
    IllegalCopMove { round: u32, reason: String, state: GameState },
    #[error("illegal robber move {from}->{to} in round {round} (state {state:?})")]
    IllegalRobberMove { round: u32, from: Vertex, to: Vertex, state: GameState },
}

/// Plays `cops` (with `k` cops) against `robber` for at most `max_rounds`
/// rounds.
pub fn play(
    g: &Graph,
    k: usize,
    cops: &mut dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    max_rounds: u32,
) -> Result<StrategyTrace, PlayError> {
    if k == 0 {
        return Err(PlayError::NoCops);
    }
    if g.m() == 0 {
        return Err(PlayError::NoEdges);
    }
    let placement = cops.place(g, k);
    if placement.len() != k {
        return Err(PlayError::WrongCopCount { expected: k, got: placement.len() });
    }
    if let Some(&bad) = placement.iter().find(|&&e| e >= g.m()) {
        return Err(PlayError::IllegalPlacement(bad));
    }
    let mut state = GameState::new(placement, None, Phase::RobberPlacement);
    let start = robber.place(g, &state.cops);
    if start >= g.n() {
        return Err(PlayError::IllegalRobberPlacement(start));
    }
    state.robber = Some(start);
    state.to_move = Phase::Cops;
    let mut trace = StrategyTrace {
        placement: state.cops.clone(),
        robber_start: start,
        moves: Vec::new(),
        outcome: Outcome::RobberSurvived,
        rounds: 0,
    };
    if capture_holds(g, &state.cops, start) {
        trace.outcome = Outcome::CopWin;
        return Ok(trace);
    }
    for round in 1..=max_rounds {
        let mv = cops.respond(g, &state);
        let next = mv.apply(g, &state.cops).map_err(|reason| PlayError::IllegalCopMove {
            round,
            reason,
            state: state.clone(),
        })?;
        state.cops = next;
        state.round = round;
        state.to_move = Phase::Robber;
        trace.moves.push(TraceMove::Cops(mv.moving()));
        let r = state.robber.expect("robber placed");
        if capture_holds(g, &state.cops, r) {
            trace.outcome = Outcome::CopWin;
            trace.rounds = round;
            return Ok(trace);
        }
        let to = robber.respond(g, &state);
        let legal = to == r || (to < g.n() && g.edge_between(r, to).is_some_and(|e| !state.is_occupied(e)));
        if !legal {
            return Err(PlayError::IllegalRobberMove { round, from: r, to, state });
        }
        trace.moves.push(TraceMove::Robber { from: r, to });
        state.robber = Some(to);
        state.to_move = Phase::Cops;
    }
    trace.rounds = max_rounds;
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(cops: &[EdgeId], r: Vertex, phase: Phase) -> GameState {
        GameState::new(cops.to_vec(), Some(r), phase)
    }

    #[test]
    fn capture_examples() {
        let k2 = Graph::path(2);
        assert!(is_capture(&k2, &st(&[0], 0, Phase::Cops)).unwrap());
        assert!(is_capture(&k2, &st(&[0], 1, Phase::Cops)).unwrap());
        let star = Graph::star(3);
        assert!(!is_capture(&star, &st(&[0, 1], 0, Phase::Cops)).unwrap());
        let iso = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(is_capture(&iso, &st(&[0], 2, Phase::Cops)).unwrap());
        let unplaced = GameState::new(vec![0], None, Phase::RobberPlacement);
        assert_eq!(is_capture(&k2, &unplaced), Err(GameError::RobberUnplaced));
    }

    #[test]
    fn cop_move_examples() {
        let p3 = Graph::path(3);
        let succ: Vec<_> =
            legal_cop_moves(&p3, &st(&[0], 0, Phase::Cops)).unwrap().into_iter().map(|(_, t)| t).collect();
        assert_eq!(succ, vec![vec![0], vec![1]]);

        // Two cops on one edge of K_3: each picks from 3 options; as
        // multisets that is C(3+1, 2) = 6 outcomes.
        let k3 = Graph::complete(3);
        let succ = legal_cop_moves(&k3, &st(&[0, 0], 0, Phase::Cops)).unwrap();
        assert_eq!(succ.len(), 6);

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let succ = legal_cop_moves(&two, &st(&[1], 0, Phase::Cops)).unwrap();
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].1, vec![1]);

        let wrong = st(&[0], 0, Phase::Robber);
        assert!(matches!(legal_cop_moves(&k3, &wrong), Err(GameError::WrongPhase { .. })));
    }

    #[test]
    fn cop_moves_match_brute_force_product() {
        // Enumerate per-cop products without symmetry reduction.
        let g = Graph::petersen();
        for cops in [vec![0, 0, 3], vec![1, 5, 9], vec![2, 2, 2]] {
            let s = st(&cops, 0, Phase::Cops);
            let mut all = Vec::new();
            let opts: Vec<Vec<EdgeId>> = cops
                .iter()
                .map(|&c| (0..g.m()).filter(|&f| f == c || g.edges_share_endpoint(c, f)).collect())
                .collect();
            for &a in &opts[0] {
                for &b in &opts[1] {
                    for &c in &opts[2] {
                        let mut t = vec![a, b, c];
                        t.sort_unstable();
                        all.push(t);
                    }
                }
            }
            all.sort();
            all.dedup();
            let got: Vec<_> = legal_cop_moves(&g, &s).unwrap().into_iter().map(|(_, t)| t).collect();
            assert_eq!(got, all);
            for (mv, t) in legal_cop_moves(&g, &s).unwrap() {
                assert_eq!(mv.apply(&g, &s.cops).unwrap(), t);
            }
        }
    }

    #[test]
    fn robber_move_examples() {
        let star = Graph::star(3);
        let s = st(&[0], 0, Phase::Robber);
        assert_eq!(legal_robber_moves(&star, &s).unwrap(), vec![0, 2, 3]);
        let c4 = Graph::cycle(4);
        let s = GameState::new(vec![], Some(0), Phase::Robber);
        assert_eq!(legal_robber_moves(&c4, &s).unwrap().len(), 3);
        let s = st(&[0, 1, 2], 0, Phase::Robber);
        assert_eq!(legal_robber_moves(&star, &s).unwrap(), vec![0]);
    }

    #[test]
    fn apply_rejects_bad_moves() {
        let p4 = Graph::path(4);
        let bad = CopMove { moves: vec![(0, 2)] };
        assert!(bad.apply(&p4, &[0]).is_err());
        let missing = CopMove { moves: vec![(1, 2)] };
        assert!(missing.apply(&p4, &[0]).is_err());
        let ok = CopMove { moves: vec![(0, 1), (0, 0)] };
        assert_eq!(ok.apply(&p4, &[0, 0]).unwrap(), vec![0, 1]);
    }

    struct Fixed(Vec<EdgeId>);
    impl CopStrategy for Fixed {
        fn place(&mut self, _: &Graph, _: usize) -> Vec<EdgeId> {
            self.0.clone()
        }
        fn respond(&mut self, _: &Graph, _: &GameState) -> CopMove {
            CopMove::pass()
        }
    }
    struct Sit(Vertex);
    impl RobberStrategy for Sit {
        fn place(&mut self, _: &Graph, _: &[EdgeId]) -> Vertex {
            self.0
        }
        fn respond(&mut self, _: &Graph, s: &GameState) -> Vertex {
            s.robber.unwrap()
        }
    }

    #[test]
    fn play_examples() {
        let k2 = Graph::path(2);
        let t = play(&k2, 1, &mut Fixed(vec![0]), &mut Sit(0), 10).unwrap();
        assert_eq!((t.outcome, t.rounds), (Outcome::CopWin, 0));
        let star = Graph::star(3);
        let t = play(&star, 3, &mut Fixed(vec![0, 1, 2]), &mut Sit(0), 10).unwrap();
        assert_eq!((t.outcome, t.rounds), (Outcome::CopWin, 0));
        let t = play(&star, 2, &mut Fixed(vec![0, 1]), &mut Sit(0), 50).unwrap();
        assert_eq!((t.outcome, t.rounds), (Outcome::RobberSurvived, 50));
        assert_eq!(t.replay(&star).unwrap().len(), 101);
    }

    #[test]
    fn play_errors() {
        let star = Graph::star(3);
        assert_eq!(
            play(&star, 2, &mut Fixed(vec![0]), &mut Sit(0), 5),
            Err(PlayError::WrongCopCount { expected: 2, got: 1 })
        );
        assert_eq!(play(&star, 0, &mut Fixed(vec![]), &mut Sit(0), 5), Err(PlayError::NoCops));
        assert_eq!(play(&Graph::empty(3), 1, &mut Fixed(vec![0]), &mut Sit(0), 5), Err(PlayError::NoEdges));

        struct Jumper;
        impl CopStrategy for Jumper {
            fn place(&mut self, _: &Graph, _: usize) -> Vec<EdgeId> {
                vec![0]
            }
            fn respond(&mut self, _: &Graph, _: &GameState) -> CopMove {
                CopMove { moves: vec![(0, 2)] }
            }
        }
        let p4 = Graph::path(4);
        let err = play(&p4, 1, &mut Jumper, &mut Sit(3), 5).unwrap_err();
        assert!(matches!(err, PlayError::IllegalCopMove { round: 1, .. }));

        struct Crosser;
        impl RobberStrategy for Crosser {
            fn place(&mut self, _: &Graph, _: &[EdgeId]) -> Vertex {
                1
            }
            fn respond(&mut self, _: &Graph, _: &GameState) -> Vertex {
                0
            }
        }
        let err = play(&p4, 1, &mut Fixed(vec![0]), &mut Crosser, 5).unwrap_err();
        assert!(matches!(err, PlayError::IllegalRobberMove { from: 1, to: 0, .. }));
    }

    #[test]
    fn trace_json_field_names() {
        let t = StrategyTrace {
            placement: vec![0],
            robber_start: 1,
            moves: vec![TraceMove::Cops(vec![(0, 1)]), TraceMove::Robber { from: 1, to: 2 }],
            outcome: Outcome::RobberSurvived,
            rounds: 1,
        };
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(
            j,
            r#"{"placement":[0],"robber_start":1,"moves":[{"side":"cops","detail":[[0,1]]},{"side":"robber","detail":{"from":1,"to":2}}],"outcome":"CopWin","rounds":1}"#
                .replace("CopWin", "RobberSurvived")
        );
        let back: StrategyTrace = serde_json::from_str(&j).unwrap();
        assert_eq!(back, t);
    }
}
