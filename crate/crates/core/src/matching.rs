//! Maximum matchings: Edmonds' blossom algorithm for general graphs and an
//! augmenting-path matcher for bipartite graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph, Vertex};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatchingKind {
    /// Every vertex is matched.
    Perfect,
    /// Exactly one vertex is unmatched.
    NearPerfect,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Matched edge ids, sorted.
    pub edges: Vec<EdgeId>,
    /// `mate[v]` is the partner of `v`, if any.
    pub mate: Vec<Option<Vertex>>,
    pub kind: MatchingKind,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn unmatched(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.mate.iter().enumerate().filter(|(_, m)| m.is_none()).map(|(v, _)| v)
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in self.g.adj(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom = vec![false; n];
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// A maximum-cardinality matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // Greedy start, then augment from every free vertex.
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(&(w, _)) = g.adj(v).iter().find(|&&(w, _)| b.mate[w] == NONE) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    let mut edges: Vec<EdgeId> = (0..n)
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| g.edge_between(v, b.mate[v]).expect("mates are adjacent"))
        .collect();
    edges.sort_unstable();
    let unmatched = n - 2 * edges.len();
    let kind = match unmatched {
        0 => MatchingKind::Perfect,
        1 => MatchingKind::NearPerfect,
        _ => MatchingKind::Neither,
    };
    let mate = b.mate.iter().map(|&m| (m != NONE).then_some(m)).collect();
    Matching { edges, mate, kind }
}

/// Maximum bipartite matching by repeated augmenting-path search.
///
/// `adj[l]` lists the right vertices (in `0..n_right`) acceptable to left
/// vertex `l`, in preference order. Returns `match_left[l]`.
pub fn bipartite_matching(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let n_left = adj.len();
    let mut match_left = vec![NONE; n_left];
    let mut match_right = vec![NONE; n_right];
    let mut visited = vec![0u32; n_right];
    let mut stamp = 0u32;

    // Greedy pass.
    for l in 0..n_left {
        if let Some(&r) = adj[l].iter().find(|&&r| match_right[r] == NONE) {
            match_left[l] = r;
            match_right[r] = l;
        }
    }
    for l in 0..n_left {
        if match_left[l] != NONE {
            continue;
        }
        stamp += 1;
        // Iterative DFS over alternating paths.
        let mut stack: Vec<(usize, usize)> = vec![(l, 0)];
        let mut path_right: Vec<usize> = Vec::new();
        let mut found = false;
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if *idx >= adj[u].len() {
                stack.pop();
                path_right.pop();
                continue;
            }
            let r = adj[u][*idx];
            *idx += 1;
            if visited[r] == stamp {
                continue;
            }
            visited[r] = stamp;
            path_right.push(r);
            if match_right[r] == NONE {
                found = true;
                break;
            }
            stack.push((match_right[r], 0));
        }
        if found {
            // stack[i].0 is matched to path_right[i].
            for (i, &(u, _)) in stack.iter().enumerate() {
                let r = path_right[i];
                match_left[u] = r;
                match_right[r] = u;
            }
        }
    }
    match_left.into_iter().map(|r| (r != NONE).then_some(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_max(g: &Graph) -> usize {
        fn go(g: &Graph, e: usize, used: &mut [bool]) -> usize {
            if e == g.m() {
                return 0;
            }
            let skip = go(g, e + 1, used);
            let [a, b] = g.edge(e);
            if !used[a] && !used[b] {
                used[a] = true;
                used[b] = true;
                let take = 1 + go(g, e + 1, used);
                used[a] = false;
                used[b] = false;
                skip.max(take)
            } else {
                skip
            }
        }
        go(g, 0, &mut vec![false; g.n()])
    }

    fn assert_valid(g: &Graph, m: &Matching) {
        let mut used = vec![false; g.n()];
        for &e in &m.edges {
            for v in g.edge(e) {
                assert!(!used[v]);
                used[v] = true;
            }
        }
    }

    #[test]
    fn examples() {
        let p4 = max_matching(&Graph::path(4));
        assert_eq!((p4.size(), p4.kind), (2, MatchingKind::Perfect));
        let c5 = max_matching(&Graph::cycle(5));
        assert_eq!((c5.size(), c5.kind), (2, MatchingKind::NearPerfect));
        let pet = Graph::petersen();
        assert_eq!(brute_force_max(&pet), 5);
        let m = max_matching(&pet);
        assert_valid(&pet, &m);
        assert_eq!((m.size(), m.kind), (5, MatchingKind::Perfect));
        let star = max_matching(&Graph::star(4));
        assert_eq!((star.size(), star.kind), (1, MatchingKind::Neither));
    }

    #[test]
    fn blossom_needed() {
        // Triangle 0-1-2 with pendant 3 on 2 and pendant 4 on 0, plus 5 on 1.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)]).unwrap();
        let m = max_matching(&g);
        assert_valid(&g, &m);
        assert_eq!(m.size(), 3);
    }

    #[test]
    fn random_graphs_match_brute_force() {
        use crate::graph::{gen_gnp, GnpParams};
        for seed in 0..300 {
            let n = 2 + (seed as usize % 9);
            let p = [0.2, 0.4, 0.6][seed as usize % 3];
            let g = gen_gnp(&GnpParams::new(n, p, seed).unwrap());
            let m = max_matching(&g);
            assert_valid(&g, &m);
            assert_eq!(m.size(), brute_force_max(&g), "seed {seed}");
        }
    }

    #[test]
    fn bipartite_basic() {
        // Left 0 likes {0, 1}, left 1 likes {0}: both can be matched.
        let m = bipartite_matching(&[vec![0, 1], vec![0]], 2);
        assert_eq!(m, vec![Some(1), Some(0)]);
        // Two left vertices competing for one right vertex.
        let m = bipartite_matching(&[vec![0], vec![0]], 1);
        assert_eq!(m.iter().filter(|x| x.is_some()).count(), 1);
    }

    #[test]
    fn bipartite_needs_long_augmenting_path() {
        // Greedy picks l0-r0, l1-r1, l2-r2, leaving l3 stuck unless it walks the chain.
        let adj = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0]];
        let m = bipartite_matching(&adj, 4);
        assert!(m.iter().all(Option::is_some));
        let mut rights: Vec<_> = m.iter().flatten().copied().collect();
        rights.sort_unstable();
        rights.dedup();
        assert_eq!(rights.len(), 4);
    }
}
