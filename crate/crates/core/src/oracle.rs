//! Independent cross-check for the retrograde solver.
//!
//! Depth-bounded minimax over the game tree with memoised subgames: `W(s, t)`
//! says the cops, to move in position `s`, force capture within `t` cop
//! moves. The bound is raised one step at a time until either some placement
//! wins against every robber start or the set of winning positions stops
//! growing, at which point no bound will ever help and the robber wins.
//!
//! Bounding the depth instead of cutting off repeated positions keeps memoised
//! answers independent of the path that reached them. Move generation here
//! is deliberately naive (full per-cop products, edge-list scans) so it shares
//! no code with the solver.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Graph;
use crate::solver::{Value, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_n: 7, max_k: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for the oracle (n = {n}, k = {k})")]
    TooLarge { n: usize, k: usize },
    #[error("at least one cop is required")]
    NoCops,
}

struct Tree {
    n: usize,
    variant: Variant,
    edges: Vec<[usize; 2]>,
    /// Every cop multiset, sorted lexicographically.
    teams: Vec<Vec<usize>>,
    /// Successor team ids (deduplicated) per team.
    succ: Vec<Vec<usize>>,
    memo: BTreeMap<(usize, usize, u32), bool>,
}

impl Tree {
    fn capture(&self, team: usize, r: usize) -> bool {
        let cops = &self.teams[team];
        match self.variant {
            Variant::Classic => cops.contains(&r),
            Variant::Containment => {
                self.edges.iter().enumerate().filter(|(_, e)| e[0] == r || e[1] == r).all(|(i, _)| cops.contains(&i))
            }
        }
    }

    fn robber_options(&self, team: usize, r: usize) -> Vec<usize> {
        let cops = &self.teams[team];
        let mut out = vec![r];
        for (i, e) in self.edges.iter().enumerate() {
            if e[0] != r && e[1] != r {
                continue;
            }
            let other = e[0] + e[1] - r;
            if self.variant == Variant::Classic || !cops.contains(&i) {
                out.push(other);
            }
        }
        out
    }

    fn wins(&mut self, team: usize, r: usize, t: u32) -> bool {
        if self.capture(team, r) {
            return true;
        }
        if t == 0 {
            return false;
        }
        if let Some(&v) = self.memo.get(&(team, r, t)) {
            return v;
        }
        let mut result = false;
        for i in 0..self.succ[team].len() {
            let next = self.succ[team][i];
            if self.capture(next, r) {
                result = true;
                break;
            }
            let escapes = self.robber_options(next, r);
            if escapes.iter().all(|&w| self.wins(next, w, t - 1)) {
                result = true;
                break;
            }
        }
        self.memo.insert((team, r, t), result);
        result
    }
}

fn all_teams(p: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(p: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in from..p {
            cur.push(x);
            rec(p, k, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Game value of `k` cops on `g` for `variant`, computed by bounded minimax.
pub fn minimax_oracle(g: &Graph, k: usize, variant: Variant, limits: OracleLimits) -> Result<Value, OracleError> {
    if k == 0 {
        return Err(OracleError::NoCops);
    }
    if g.n() > limits.max_n || k > limits.max_k {
        return Err(OracleError::TooLarge { n: g.n(), k });
    }
    let n = g.n();
    let edges: Vec<[usize; 2]> = g.edges().to_vec();
    if variant == Variant::Containment && edges.is_empty() {
        return Ok(Value::CopWin);
    }
    let p = match variant {
        Variant::Containment => edges.len(),
        Variant::Classic => n,
    };
    // Single-step options per position, found by scanning.
    let step: Vec<Vec<usize>> = (0..p)
        .map(|x| {
            (0..p)
                .filter(|&y| {
                    y == x
                        || match variant {
                            Variant::Containment => {
                                let (a, b) = (edges[x], edges[y]);
                                a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]
                            }
                            Variant::Classic => {
                                edges.iter().any(|e| (e[0] == x && e[1] == y) || (e[0] == y && e[1] == x))
                            }
                        }
                })
                .collect()
        })
        .collect();
    let teams = all_teams(p, k);
    let id: BTreeMap<Vec<usize>, usize> = teams.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let succ = teams
        .iter()
        .map(|team| {
            let mut found = BTreeSet::new();
            let mut pick = vec![0usize; k];
            'outer: loop {
                let mut t: Vec<usize> = (0..k).map(|j| step[team[j]][pick[j]]).collect();
                t.sort_unstable();
                found.insert(id[&t]);
                let mut j = k;
                loop {
                    if j == 0 {
                        break 'outer;
                    }
                    j -= 1;
                    pick[j] += 1;
                    if pick[j] < step[team[j]].len() {
                        break;
                    }
                    pick[j] = 0;
                }
            }
            found.into_iter().collect()
        })
        .collect();
    let mut tree = Tree { n, variant, edges, teams, succ, memo: BTreeMap::new() };

    let count_winning = |tree: &mut Tree, t: u32| -> usize {
        let mut c = 0;
        for team in 0..tree.teams.len() {
            for r in 0..tree.n {
                if tree.wins(team, r, t) {
                    c += 1;
                }
            }
        }
        c
    };
    let mut previous = count_winning(&mut tree, 0);
    let mut t = 0;
    loop {
        let placement_wins = (0..tree.teams.len()).any(|team| (0..tree.n).all(|r| tree.wins(team, r, t)));
        if placement_wins {
            return Ok(Value::CopWin);
        }
        t += 1;
        let now = count_winning(&mut tree, t);
        if now == previous {
            return Ok(Value::RobberWin);
        }
        previous = now;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(g: &Graph, k: usize, var: Variant) -> Value {
        minimax_oracle(g, k, var, OracleLimits::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(v(&Graph::path(2), 1, Variant::Containment), Value::CopWin);
        assert_eq!(v(&Graph::path(3), 1, Variant::Containment), Value::RobberWin);
        assert_eq!(v(&Graph::path(3), 2, Variant::Containment), Value::CopWin);
        assert_eq!(v(&Graph::cycle(4), 1, Variant::Classic), Value::RobberWin);
        assert_eq!(v(&Graph::cycle(4), 2, Variant::Classic), Value::CopWin);
        assert_eq!(v(&Graph::star(3), 2, Variant::Containment), Value::RobberWin);
        assert_eq!(v(&Graph::star(3), 3, Variant::Containment), Value::CopWin);
        assert_eq!(v(&Graph::path(5), 1, Variant::Classic), Value::CopWin);
    }

    #[test]
    fn limits() {
        let g = Graph::complete(8);
        assert!(matches!(
            minimax_oracle(&g, 1, Variant::Classic, OracleLimits::default()),
            Err(OracleError::TooLarge { .. })
        ));
    }
}
