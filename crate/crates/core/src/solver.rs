//! Exact solver for cop games by retrograde analysis.
//!
//! A position is (cop multiset, robber vertex, side to move). Cop positions
//! are ranked densely with [`MultisetIndex`], so the whole game graph lives in
//! flat arrays. Starting from captured positions, winning positions for the
//! cops are propagated backwards in breadth-first order:
//!
//! * a cop-to-move position wins if some cop move reaches a winning
//!   robber-to-move position;
//! * a robber-to-move position wins once every robber move (pass included)
//!   reaches a winning cop-to-move position, tracked with a countdown of
//!   unresolved moves.
//!
//! Both move relations are symmetric (a cop can step back along the edge it
//! came from, and the robber can return over the same free edge), so
//! predecessors are enumerated with the forward move generators.
//!
//! Positions never reached by propagation are robber wins: this is the least
//! fixed point, so a cycle of passes never counts as progress for the cops.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{CopMove, CopStrategy, GameState, RobberStrategy};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::multiset::{multiset_count, MultisetIndex};

/// Default cap on the number of positions a single solve may allocate.
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

const UNKNOWN: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Cops on edges; capture when all edges at the robber are occupied.
    Containment,
    /// Cops and robber on vertices; capture by sharing a vertex.
    Classic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Value {
    CopWin,
    RobberWin,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("state space of {states} positions exceeds the budget of {budget}")]
    BudgetExceeded { states: u64, budget: u64 },
    #[error("at least one cop is required")]
    NoCops,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub k: usize,
    pub value: Value,
    pub states_total: u64,
    pub states_winning: u64,
    /// Number of propagation waves (one more than the longest forced win).
    pub iterations: u32,
    /// A winning placement (edge ids for containment, vertices for classic).
    pub witness: Option<Vec<usize>>,
}

/// The board a variant is played on.
pub(crate) struct Arena<'a> {
    g: &'a Graph,
    variant: Variant,
    /// Options of a cop on each position, including staying.
    options: Vec<Vec<usize>>,
}

impl<'a> Arena<'a> {
    pub(crate) fn new(g: &'a Graph, variant: Variant) -> Self {
        let options = match variant {
            Variant::Containment => (0..g.m())
                .map(|e| {
                    let mut o = g.adjacent_edges(e);
                    o.push(e);
                    o.sort_unstable();
                    o
                })
                .collect(),
            Variant::Classic => (0..g.n())
                .map(|v| {
                    let mut o: Vec<usize> = g.neighbors(v).collect();
                    o.push(v);
                    o.sort_unstable();
                    o
                })
                .collect(),
        };
        Arena { g, variant, options }
    }

    fn positions(&self) -> usize {
        self.options.len()
    }

    fn capture(&self, cops: &[usize], r: Vertex) -> bool {
        match self.variant {
            Variant::Containment => crate::game::capture_holds(self.g, cops, r),
            Variant::Classic => cops.binary_search(&r).is_ok(),
        }
    }

    /// Robber moves from `r` (pass first, then neighbours ascending).
    fn robber_moves(&self, cops: &[usize], r: Vertex, out: &mut Vec<Vertex>) {
        out.clear();
        out.push(r);
        for &(w, e) in self.g.adj(r) {
            let blocked = match self.variant {
                Variant::Containment => cops.binary_search(&e).is_ok(),
                Variant::Classic => false,
            };
            if !blocked {
                out.push(w);
            }
        }
    }
}

/// Enumerates the cop multisets one joint move away from a given one.
///
/// Cops sharing a position move as a group (a multiset of choices), and the
/// partial results are deduplicated after every group by generation stamps,
/// which avoids the full product of per-cop choices.
struct Expander {
    /// `ladder[j]` ranks multisets of size `j`.
    ladder: Vec<MultisetIndex>,
    stamp: Vec<Vec<u32>>,
    generation: u32,
    cur: Vec<usize>,
    next: Vec<usize>,
    group: Vec<usize>,
    merged: Vec<usize>,
}

impl Expander {
    fn new(positions: usize, k: usize) -> Self {
        Expander {
            ladder: (0..=k).map(|j| MultisetIndex::new(positions, j)).collect(),
            stamp: vec![Vec::new(); k + 1],
            generation: 0,
            cur: Vec::new(),
            next: Vec::new(),
            group: Vec::new(),
            merged: vec![0; k],
        }
    }

    /// Ranks of all multisets one move from `cops` (including `cops`).
    fn successors(&mut self, arena: &Arena<'_>, cops: &[usize], out: &mut Vec<usize>) {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| s.fill(0));
            self.generation = 1;
        }
        let k = cops.len();
        out.clear();
        self.cur.clear();
        let mut size = 0;
        let mut i = 0;
        while i < k {
            let e = cops[i];
            let mut t = 1;
            while i + t < k && cops[i + t] == e {
                t += 1;
            }
            let opts = &arena.options[e];
            let target = size + t;
            if self.stamp[target].is_empty() {
                self.stamp[target] = vec![0; self.ladder[target].len()];
            }
            self.next.clear();
            let parts = self.cur.len().checked_div(size).unwrap_or(1);
            // Odometer over non-decreasing choice indices for the group.
            let mut pick = vec![0usize; t];
            loop {
                self.group.clear();
                self.group.extend(pick.iter().map(|&x| opts[x]));
                for pi in 0..parts {
                    let part = &self.cur[pi * size..(pi + 1) * size];
                    let (mut a, mut b, mut w) = (0, 0, 0);
                    while a < size || b < t {
                        if b == t || (a < size && part[a] <= self.group[b]) {
                            self.merged[w] = part[a];
                            a += 1;
                        } else {
                            self.merged[w] = self.group[b];
                            b += 1;
                        }
                        w += 1;
                    }
                    let rank = self.ladder[target].rank(&self.merged[..target]);
                    if self.stamp[target][rank] != self.generation {
                        self.stamp[target][rank] = self.generation;
                        if target == k {
                            out.push(rank);
                        } else {
                            self.next.extend_from_slice(&self.merged[..target]);
                        }
                    }
                }
                let mut j = t;
                let done = loop {
                    if j == 0 {
                        break true;
                    }
                    j -= 1;
                    pick[j] += 1;
                    if pick[j] < opts.len() {
                        for x in j + 1..t {
                            pick[x] = pick[j];
                        }
                        break false;
                    }
                };
                if done {
                    break;
                }
            }
            core::mem::swap(&mut self.cur, &mut self.next);
            size = target;
            i += t;
        }
    }
}

/// Dilates a whole set of robber-to-move positions by one joint cop move.
///
/// Cops are moved one at a time, smallest unmoved position first, over
/// pairs (moved multiset, unmoved multiset); every pair carries a bitmask of
/// robber vertices. The work is proportional to the number of such pairs,
/// independent of how many positions the set contains.
struct Dilation {
    ladder: Vec<MultisetIndex>,
    k: usize,
    words: usize,
    cur: Vec<u64>,
    next: Vec<u64>,
    /// Estimated work of one dilation.
    cost: f64,
}

impl Dilation {
    /// Largest intermediate table, in 64-bit words, that is allowed.
    const MAX_WORDS: u64 = 1 << 26;

    fn new(arena: &Arena<'_>, k: usize, n: usize) -> Option<Self> {
        let p = arena.positions();
        let words = n.div_ceil(64).max(1);
        let sizes: Vec<u64> = (0..=k).map(|j| multiset_count(p, j).saturating_mul(multiset_count(p, k - j))).collect();
        if sizes.iter().any(|&s| s.saturating_mul(words as u64) > Self::MAX_WORDS) {
            return None;
        }
        let opts = arena.options.iter().map(Vec::len).sum::<usize>() as f64 / p.max(1) as f64;
        let cost = sizes.iter().map(|&s| s as f64).sum::<f64>() * (1.0 + opts);
        Some(Dilation {
            ladder: (0..=k).map(|j| MultisetIndex::new(p, j)).collect(),
            k,
            words,
            cur: Vec::new(),
            next: Vec::new(),
            cost,
        })
    }

    /// Calls `hit(c, r)` for every cop multiset `c` one joint move from some
    /// `(c', r)` in `level` (positions encoded as `c' * n + r`).
    fn run(&mut self, arena: &Arena<'_>, level: &[usize], n: usize, mut hit: impl FnMut(usize, usize)) {
        let (k, w) = (self.k, self.words);
        self.cur.clear();
        self.cur.resize(self.ladder[k].len() * w, 0);
        for &s in level {
            let (c, r) = (s / n, s % n);
            self.cur[c * w + r / 64] |= 1 << (r % 64);
        }
        let mut moved = vec![0usize; k];
        let mut rest = vec![0usize; k];
        let mut grown = vec![0usize; k];
        for j in 0..k {
            let (count_a, count_b) = (self.ladder[j].len(), self.ladder[k - j].len());
            let count_b2 = self.ladder[k - j - 1].len();
            self.next.clear();
            self.next.resize(self.ladder[j + 1].len() * count_b2 * w, 0);
            for rb in 0..count_b {
                self.ladder[k - j].unrank_into(rb, &mut rest[..k - j]);
                let x = rest[0];
                let rb2 = self.ladder[k - j - 1].rank(&rest[1..k - j]);
                for ra in 0..count_a {
                    let src = (ra * count_b + rb) * w;
                    if self.cur[src..src + w].iter().all(|&m| m == 0) {
                        continue;
                    }
                    self.ladder[j].unrank_into(ra, &mut moved[..j]);
                    for &y in &arena.options[x] {
                        let at = moved[..j].partition_point(|&z| z <= y);
                        grown[..at].copy_from_slice(&moved[..at]);
                        grown[at] = y;
                        grown[at + 1..=j].copy_from_slice(&moved[at..j]);
                        let ra2 = self.ladder[j + 1].rank(&grown[..=j]);
                        let dst = (ra2 * count_b2 + rb2) * w;
                        for t in 0..w {
                            self.next[dst + t] |= self.cur[src + t];
                        }
                    }
                }
            }
            core::mem::swap(&mut self.cur, &mut self.next);
        }
        for c in 0..self.ladder[k].len() {
            for t in 0..w {
                let mut m = self.cur[c * w + t];
                while m != 0 {
                    let b = m.trailing_zeros() as usize;
                    m &= m - 1;
                    hit(c, t * 64 + b);
                }
            }
        }
    }
}

/// A solved game: the value of every position for a fixed cop count.
pub struct SolvedGame<'a> {
    arena: Arena<'a>,
    index: MultisetIndex,
    n: usize,
    /// Cop moves needed to force capture with cops to move; `UNKNOWN` = robber wins.
    cop_depth: Vec<u32>,
    /// Same, with the robber to move.
    robber_depth: Vec<u32>,
    pub result: SolveResult,
}

/// Number of positions `solve` allocates for `k` cops.
pub fn state_count(g: &Graph, variant: Variant, k: usize) -> u64 {
    let p = match variant {
        Variant::Containment => g.m(),
        Variant::Classic => g.n(),
    };
    multiset_count(p, k).saturating_mul(g.n() as u64).saturating_mul(2)
}

/// Solves the game on `g` as given (every component at once).
pub fn solve<'a>(g: &'a Graph, variant: Variant, k: usize, budget: u64) -> Result<SolvedGame<'a>, SolveError> {
    solve_with(g, variant, k, budget, Expansion::Auto)
}

/// How cop-move predecessors are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Expansion {
    Auto,
    #[cfg(test)]
    PerMultiset,
    #[cfg(test)]
    Bulk,
}

fn solve_with<'a>(
    g: &'a Graph,
    variant: Variant,
    k: usize,
    budget: u64,
    expansion: Expansion,
) -> Result<SolvedGame<'a>, SolveError> {
    if k == 0 {
        return Err(SolveError::NoCops);
    }
    let states = state_count(g, variant, k);
    if states > budget {
        return Err(SolveError::BudgetExceeded { states, budget });
    }
    let arena = Arena::new(g, variant);
    let n = g.n();
    let index = MultisetIndex::new(arena.positions(), k);
    let total = index.len() * n;
    let mut cop_depth = vec![UNKNOWN; total];
    let mut robber_depth = vec![UNKNOWN; total];
    let mut pending = vec![0u32; total];
    // Positions are resolved level by level: `cop_level` holds cop-to-move
    // wins in `d` cop moves, `robber_level` robber-to-move wins in `d`.
    let mut cop_level: Vec<usize> = Vec::new();
    let mut robber_level: Vec<usize> = Vec::new();
    let mut cops = vec![0usize; k];
    let mut moves = Vec::new();
    for c in 0..index.len() {
        index.unrank_into(c, &mut cops);
        for r in 0..n {
            let s = c * n + r;
            if arena.capture(&cops, r) {
                cop_depth[s] = 0;
                robber_depth[s] = 0;
                cop_level.push(s);
                robber_level.push(s);
            } else {
                arena.robber_moves(&cops, r, &mut moves);
                pending[s] = moves.len() as u32;
            }
        }
    }

    let mut expander = Expander::new(arena.positions(), k);
    let mut dilation = Dilation::new(&arena, k, n);
    // Running estimate of the work per multiset expansion.
    let (mut calls, mut produced) = (0.0f64, 0.0f64);
    let mut succ_estimate = index.len() as f64;
    let mut succ = Vec::new();
    let mut max_depth = 0;
    let mut d = 0u32;
    while !cop_level.is_empty() || !robber_level.is_empty() {
        // Robber-to-move predecessors (c, r') with r' -> r a legal move.
        for &s in &cop_level {
            let (c, r) = (s / n, s % n);
            index.unrank_into(c, &mut cops);
            arena.robber_moves(&cops, r, &mut moves);
            for &r2 in &moves {
                let t = c * n + r2;
                if robber_depth[t] != UNKNOWN {
                    continue;
                }
                pending[t] -= 1;
                if pending[t] == 0 {
                    robber_depth[t] = d;
                    robber_level.push(t);
                }
            }
        }
        // Cop-to-move predecessors (c', r) with c' one cop move from c:
        // per cop multiset for small levels, in bulk for large ones.
        robber_level.sort_unstable();
        let mut next = Vec::new();
        let distinct = robber_level.windows(2).filter(|w| w[0] / n != w[1] / n).count() + 1;
        let bulk = match (&dilation, expansion) {
            (None, _) => false,
            (Some(dl), Expansion::Auto) => !robber_level.is_empty() && distinct as f64 * succ_estimate > dl.cost,
            #[cfg(test)]
            (Some(_), Expansion::PerMultiset) => false,
            #[cfg(test)]
            (Some(_), Expansion::Bulk) => !robber_level.is_empty(),
        };
        if bulk {
            let dl = dilation.as_mut().expect("checked above");
            dl.run(&arena, &robber_level, n, |c2, r| {
                let t = c2 * n + r;
                if cop_depth[t] == UNKNOWN {
                    cop_depth[t] = d + 1;
                    next.push(t);
                }
            });
            if !next.is_empty() {
                max_depth = d + 1;
            }
        } else {
            let mut i = 0;
            while i < robber_level.len() {
                let c = robber_level[i] / n;
                let mut j = i;
                while j < robber_level.len() && robber_level[j] / n == c {
                    j += 1;
                }
                index.unrank_into(c, &mut cops);
                expander.successors(&arena, &cops, &mut succ);
                calls += 1.0;
                produced += succ.len() as f64;
                succ_estimate = 2.0 * produced / calls;
                for &c2 in &succ {
                    for &s in &robber_level[i..j] {
                        let t = c2 * n + s % n;
                        if cop_depth[t] == UNKNOWN {
                            cop_depth[t] = d + 1;
                            max_depth = max_depth.max(d + 1);
                            next.push(t);
                        }
                    }
                }
                i = j;
            }
        }
        robber_level.clear();
        cop_level = next;
        d += 1;
    }

    let winning = cop_depth.iter().chain(&robber_depth).filter(|&&d| d != UNKNOWN).count();
    let witness = (0..index.len()).find(|&c| (0..n).all(|r| cop_depth[c * n + r] != UNKNOWN)).map(|c| index.unrank(c));
    let result = SolveResult {
        k,
        value: if witness.is_some() { crate::solver::Value::CopWin } else { Value::RobberWin },
        states_total: (total * 2) as u64,
        states_winning: winning as u64,
        iterations: max_depth + 1,
        witness,
    };
    Ok(SolvedGame { arena, index, n, cop_depth, robber_depth, result })
}

impl SolvedGame<'_> {
    pub fn k(&self) -> usize {
        self.result.k
    }

    /// Forced-capture distance with cops to move, if the cops win from here.
    pub fn cop_to_move_depth(&self, cops: &[usize], r: Vertex) -> Option<u32> {
        let d = self.cop_depth[self.index.rank(cops) * self.n + r];
        (d != UNKNOWN).then_some(d)
    }

    pub fn robber_to_move_depth(&self, cops: &[usize], r: Vertex) -> Option<u32> {
        let d = self.robber_depth[self.index.rank(cops) * self.n + r];
        (d != UNKNOWN).then_some(d)
    }

    /// The cop move towards the fastest forced capture, as one assignment of
    /// individual cops. `None` if the cops do not win from here.
    pub fn best_cop_move(&self, cops: &[usize], r: Vertex) -> Option<(CopMove, Vec<usize>)> {
        self.cop_to_move_depth(cops, r)?;
        let k = cops.len();
        let opts: Vec<&Vec<usize>> = cops.iter().map(|&c| &self.arena.options[c]).collect();
        let mut pick = vec![0usize; k];
        let mut best: Option<(u32, Vec<usize>, Vec<usize>)> = None;
        loop {
            let mut target: Vec<usize> = (0..k).map(|j| opts[j][pick[j]]).collect();
            target.sort_unstable();
            let d = self.robber_depth[self.index.rank(&target) * self.n + r];
            if d != UNKNOWN && best.as_ref().is_none_or(|(bd, bt, _)| (d, &target) < (*bd, bt)) {
                best = Some((d, target, pick.clone()));
            }
            let mut j = k;
            loop {
                if j == 0 {
                    let (_, target, pick) = best?;
                    let moves = (0..k).map(|j| (cops[j], opts[j][pick[j]])).filter(|(a, b)| a != b).collect();
                    return Some((CopMove { moves }, target));
                }
                j -= 1;
                pick[j] += 1;
                if pick[j] < opts[j].len() {
                    break;
                }
                pick[j] = 0;
            }
        }
    }

    /// The robber move that delays capture longest (or escapes for good).
    pub fn best_robber_move(&self, cops: &[usize], r: Vertex) -> Vertex {
        let mut moves = Vec::new();
        self.arena.robber_moves(cops, r, &mut moves);
        let c = self.index.rank(cops);
        moves.sort_unstable();
        *moves
            .iter()
            .max_by_key(|&&w| {
                let d = self.cop_depth[c * self.n + w];
                (if d == UNKNOWN { u64::MAX } else { u64::from(d) }, core::cmp::Reverse(w))
            })
            .expect("pass is always available")
    }

    /// Best robber start against a fixed placement.
    pub fn best_robber_start(&self, cops: &[usize]) -> Vertex {
        let c = self.index.rank(cops);
        (0..self.n)
            .max_by_key(|&w| {
                let d = self.cop_depth[c * self.n + w];
                (if d == UNKNOWN { u64::MAX } else { u64::from(d) }, core::cmp::Reverse(w))
            })
            .expect("graph has vertices")
    }
}

/// Cops replaying a containment solution: start on the witness placement and
/// always take the move with the shortest forced capture.
pub struct TableCops<'s, 'g> {
    game: &'s SolvedGame<'g>,
}

impl<'s, 'g> TableCops<'s, 'g> {
    pub fn new(game: &'s SolvedGame<'g>) -> Self {
        assert_eq!(game.arena.variant, Variant::Containment);
        TableCops { game }
    }
}

impl CopStrategy for TableCops<'_, '_> {
    fn preferred_cops(&self) -> Option<usize> {
        Some(self.game.k())
    }
    fn place(&mut self, _g: &Graph, _k: usize) -> Vec<EdgeId> {
        self.game.result.witness.clone().unwrap_or_default()
    }
    fn respond(&mut self, _g: &Graph, state: &GameState) -> CopMove {
        let r = state.robber.expect("robber placed");
        self.game.best_cop_move(&state.cops, r).map(|(m, _)| m).unwrap_or_default()
    }
}

/// Robber replaying a containment solution, delaying capture as long as
/// possible.
pub struct TableRobber<'s, 'g> {
    game: &'s SolvedGame<'g>,
}

impl<'s, 'g> TableRobber<'s, 'g> {
    pub fn new(game: &'s SolvedGame<'g>) -> Self {
        assert_eq!(game.arena.variant, Variant::Containment);
        TableRobber { game }
    }
}

impl RobberStrategy for TableRobber<'_, '_> {
    fn place(&mut self, _g: &Graph, cops: &[EdgeId]) -> Vertex {
        self.game.best_robber_start(cops)
    }
    fn respond(&mut self, _g: &Graph, state: &GameState) -> Vertex {
        self.game.best_robber_move(&state.cops, state.robber.expect("robber placed"))
    }
}

/// Components that matter for `variant`: containment ignores isolated
/// vertices (capture there is vacuous), the classic game does not.
fn relevant_components(g: &Graph, variant: Variant) -> Vec<Vec<Vertex>> {
    g.components().into_iter().filter(|c| variant == Variant::Classic || c.len() > 1).collect()
}

fn solve_value(g: &Graph, variant: Variant, k: usize, budget: u64) -> Result<SolveResult, SolveError> {
    let comps = relevant_components(g, variant);
    if comps.len() <= 1 && !(variant == Variant::Containment && comps.is_empty()) {
        return solve(g, variant, k, budget).map(|s| s.result);
    }
    if k == 0 {
        return Err(SolveError::NoCops);
    }
    // Several components: the robber commits to one of them, so the cops
    // need k to suffice on each; no single placement witnesses this.
    let mut total =
        SolveResult { k, value: Value::CopWin, states_total: 0, states_winning: 0, iterations: 0, witness: None };
    for comp in comps {
        let (h, _) = g.induced(&comp);
        let r = solve(&h, variant, k, budget)?.result;
        total.states_total += r.states_total;
        total.states_winning += r.states_winning;
        total.iterations = total.iterations.max(r.iterations);
        if r.value == Value::RobberWin {
            total.value = Value::RobberWin;
        }
    }
    Ok(total)
}

/// Do `k` cops win Containment on `g`?
///
/// On a graph with several components containing edges, the value is taken
/// per component (the robber commits to a component) and the result has no
/// witness. An edgeless graph is a vacuous cop win.
pub fn cops_win_containment(g: &Graph, k: usize, budget: u64) -> Result<SolveResult, SolveError> {
    solve_value(g, Variant::Containment, k, budget)
}

/// Do `k` cops win the classic vertex game on `g`?
pub fn cops_win_classic(g: &Graph, k: usize, budget: u64) -> Result<SolveResult, SolveError> {
    solve_value(g, Variant::Classic, k, budget)
}

fn smallest_winning(g: &Graph, variant: Variant, budget: u64) -> Result<(usize, Option<SolveResult>), SolveError> {
    let comps = relevant_components(g, variant);
    let mut best = 0;
    let mut last = None;
    for comp in &comps {
        let (h, _) = g.induced(comp);
        let mut k = 1;
        loop {
            let r = solve(&h, variant, k, budget)?.result;
            if r.value == Value::CopWin {
                if k > best {
                    best = k;
                }
                if comps.len() == 1 {
                    last = Some(r);
                }
                break;
            }
            k += 1;
        }
    }
    Ok((best, last))
}

/// `xi(G)`: the least number of cops winning Containment. Taken as the
/// maximum over components with at least one edge; 0 for edgeless graphs.
pub fn containability_number(g: &Graph, budget: u64) -> Result<usize, SolveError> {
    smallest_winning(g, Variant::Containment, budget).map(|(k, _)| k)
}

/// `c(G)`: the classic cop number, as the maximum over components.
pub fn cop_number(g: &Graph, budget: u64) -> Result<usize, SolveError> {
    smallest_winning(g, Variant::Classic, budget).map(|(k, _)| k)
}

/// The least `k` for `variant` together with the winning solve on a connected
/// graph.
pub fn least_winning(g: &Graph, variant: Variant, budget: u64) -> Result<(usize, Option<SolveResult>), SolveError> {
    smallest_winning(g, variant, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::play;
    use crate::game::Outcome;

    const B: u64 = DEFAULT_STATE_BUDGET;

    fn value(g: &Graph, k: usize) -> Value {
        cops_win_containment(g, k, B).unwrap().value
    }

    #[test]
    fn expansion_modes_agree() {
        use rand::Rng;
        let mut rng = crate::rng::stream(5);
        for trial in 0..40 {
            let n = rng.gen_range(2..7);
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            for variant in [Variant::Containment, Variant::Classic] {
                if variant == Variant::Containment && g.m() == 0 {
                    continue;
                }
                for k in 1..=3 {
                    let a = solve_with(&g, variant, k, B, Expansion::PerMultiset).unwrap();
                    let b = solve_with(&g, variant, k, B, Expansion::Bulk).unwrap();
                    assert_eq!(a.cop_depth, b.cop_depth, "trial {trial} k {k} {variant:?}");
                    assert_eq!(a.robber_depth, b.robber_depth);
                    assert_eq!(a.result, b.result);
                }
            }
        }
    }

    #[test]
    fn containment_examples() {
        assert_eq!(value(&Graph::path(2), 1), Value::CopWin);
        let star = Graph::star(3);
        assert_eq!(value(&star, 2), Value::RobberWin);
        assert_eq!(value(&star, 3), Value::CopWin);
        let p3 = Graph::path(3);
        assert_eq!(value(&p3, 1), Value::RobberWin);
        assert_eq!(value(&p3, 2), Value::CopWin);
    }

    #[test]
    fn numbers_examples() {
        assert_eq!(containability_number(&Graph::path(2), B).unwrap(), 1);
        for s in 1..=4 {
            assert_eq!(containability_number(&Graph::star(s), B).unwrap(), s);
        }
        assert_eq!(cop_number(&Graph::path(5), B).unwrap(), 1);
        assert_eq!(cop_number(&Graph::cycle(4), B).unwrap(), 2);
        assert_eq!(cop_number(&Graph::complete(5), B).unwrap(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::complete(6);
        let err = cops_win_containment(&g, 3, 1000).unwrap_err();
        assert_eq!(err, SolveError::BudgetExceeded { states: 680 * 6 * 2, budget: 1000 });
    }

    #[test]
    fn edgeless_and_disconnected() {
        assert_eq!(containability_number(&Graph::empty(4), B).unwrap(), 0);
        assert_eq!(value(&Graph::empty(4), 1), Value::CopWin);
        // Isolated vertex next to a star: only the star matters.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(containability_number(&g, B).unwrap(), 3);
        let r = cops_win_containment(&g, 3, B).unwrap();
        assert!(r.witness.is_some());
        // Two disjoint paths P_3: each needs two cops.
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(containability_number(&two, B).unwrap(), 2);
        let r = cops_win_containment(&two, 2, B).unwrap();
        assert_eq!((r.value, r.witness), (Value::CopWin, None));
        assert_eq!(cop_number(&Graph::empty(3), B).unwrap(), 1);
    }

    #[test]
    fn result_is_deterministic() {
        let g = Graph::cycle(5);
        let a = cops_win_containment(&g, 3, B).unwrap();
        let b = cops_win_containment(&g, 3, B).unwrap();
        assert_eq!(a, b);
        assert!(a.states_winning <= a.states_total);
    }

    #[test]
    fn witness_replays_to_capture() {
        for g in [Graph::cycle(4), Graph::cycle(5), Graph::petersen(), Graph::star(3)] {
            let xi = containability_number(&g, B).unwrap();
            let solved = solve(&g, Variant::Containment, xi, B).unwrap();
            let mut cops = TableCops::new(&solved);
            let mut robber = TableRobber::new(&solved);
            let cap = solved.result.states_total as u32;
            let t = play(&g, xi, &mut cops, &mut robber, cap).unwrap();
            assert_eq!(t.outcome, Outcome::CopWin);
        }
    }
}
