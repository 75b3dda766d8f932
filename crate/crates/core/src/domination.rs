//! Domination number: exact search on small graphs, greedy bound otherwise.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

/// Largest order for which [`domination_number`] searches exactly.
pub const EXACT_MAX_N: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominationMode {
    Exact,
    /// Greedy upper bound; the true value may be smaller.
    GreedyBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domination {
    pub value: usize,
    /// A dominating set of size `value`, sorted.
    pub witness: Vec<Vertex>,
    pub mode: DominationMode,
}

/// Closed neighbourhoods as bitmasks (only meaningful for `n <= 64`).
fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).fold(1u64 << v, |m, w| m | (1u64 << w))).collect()
}

/// Is there a set of at most `budget` vertices covering the complement of
/// `covered`? Branches on the closed neighbourhood of the lowest uncovered
/// vertex, one of which must be chosen.
fn search(masks: &[u64], full: u64, covered: u64, budget: usize, chosen: &mut Vec<Vertex>) -> bool {
    if covered == full {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let first = (!covered & full).trailing_zeros() as usize;
    let mut cand = masks[first];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        chosen.push(v);
        if search(masks, full, covered | masks[v], budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `gamma(G)` with a witness. Exact for `n <= EXACT_MAX_N`, otherwise a
/// flagged greedy bound.
pub fn domination_number(g: &Graph) -> Domination {
    let n = g.n();
    if n == 0 {
        return Domination { value: 0, witness: Vec::new(), mode: DominationMode::Exact };
    }
    if n > EXACT_MAX_N {
        return greedy_domination(g);
    }
    let masks = closed_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 1..=n {
        let mut chosen = Vec::with_capacity(size);
        if search(&masks, full, 0, size, &mut chosen) {
            chosen.sort_unstable();
            return Domination { value: size, witness: chosen, mode: DominationMode::Exact };
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// Repeatedly takes the vertex that dominates the most uncovered vertices
/// (lowest id on ties).
pub fn greedy_domination(g: &Graph) -> Domination {
    let n = g.n();
    let mut covered = alloc::vec![false; n];
    let mut left = n;
    let mut witness = Vec::new();
    while left > 0 {
        let gain = |v: Vertex| usize::from(!covered[v]) + g.neighbors(v).filter(|&w| !covered[w]).count();
        let best = (0..n).max_by_key(|&v| (gain(v), core::cmp::Reverse(v))).expect("n > 0");
        witness.push(best);
        for w in core::iter::once(best).chain(g.neighbors(best)) {
            if !covered[w] {
                covered[w] = true;
                left -= 1;
            }
        }
    }
    witness.sort_unstable();
    Domination { value: witness.len(), witness, mode: DominationMode::GreedyBound }
}

pub fn is_dominating(g: &Graph, set: &[Vertex]) -> bool {
    let mut covered = alloc::vec![false; g.n()];
    for &v in set {
        covered[v] = true;
        for w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.iter().all(|&c| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_gnp, GnpParams};

    /// Smallest dominating set by enumerating all subsets.
    fn brute_force(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| {
                let set: Vec<_> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                is_dominating(g, &set)
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        for n in 1..7 {
            assert_eq!(domination_number(&Graph::complete(n)).value, 1);
        }
        assert_eq!(brute_force(&Graph::cycle(5)), 2);
        assert_eq!(domination_number(&Graph::cycle(5)).value, 2);
        assert_eq!(brute_force(&Graph::path(6)), 2);
        assert_eq!(domination_number(&Graph::path(6)).value, 2);
        assert_eq!(domination_number(&Graph::petersen()).value, 3);
    }

    #[test]
    fn witness_and_minimality_against_brute_force() {
        for seed in 0..150 {
            let n = 1 + seed as usize % 12;
            let g = gen_gnp(&GnpParams::new(n, 0.3, seed).unwrap());
            let d = domination_number(&g);
            assert_eq!(d.mode, DominationMode::Exact);
            assert!(is_dominating(&g, &d.witness));
            assert_eq!(d.witness.len(), d.value);
            assert_eq!(d.value, brute_force(&g), "seed {seed}");
        }
    }

    #[test]
    fn large_graph_uses_greedy() {
        let g = Graph::path(40);
        let d = domination_number(&g);
        assert_eq!(d.mode, DominationMode::GreedyBound);
        assert!(is_dominating(&g, &d.witness));
        assert!(d.value >= 14);
    }
}
