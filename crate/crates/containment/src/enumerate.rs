//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are obtained from those on `n - 1` by adding a
//! vertex with every possible neighbourhood, then deduplicated by a
//! canonical form. The canonical form is the largest adjacency code over
//! the leaves of an individualisation-refinement search.

use std::collections::BTreeSet;

use containment_core::Graph;

pub const MAX_N: usize = 15;

/// Adjacency bitmasks of a graph on at most [`MAX_N`] vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Small {
    n: usize,
    adj: [u16; MAX_N],
}

impl Small {
    pub fn from_graph(g: &Graph) -> Self {
        assert!(g.n() <= MAX_N, "graph too large for the enumerator");
        let mut adj = [0u16; MAX_N];
        for &[u, v] in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Small { n: g.n(), adj }
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 1..self.n {
            for u in 0..v {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("valid small graph")
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Upper triangle in graph6 order under the vertex order `order`.
    fn code(&self, order: &[usize]) -> u128 {
        let mut c = 0u128;
        for j in 1..self.n {
            for i in 0..j {
                c = (c << 1) | self.has(order[i], order[j]) as u128;
            }
        }
        c
    }
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every cell until stable.
fn refine(g: &Small, mut p: Partition) -> Partition {
    loop {
        let cell_masks: Vec<u16> = p.iter().map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v)).collect();
        let mut next: Partition = Vec::with_capacity(p.len());
        for cell in &p {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (cell_masks.iter().map(|m| (g.adj[v] & m).count_ones()).collect(), v)).collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i;
                let mut sub = Vec::new();
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    sub.push(keyed[j].1);
                    j += 1;
                }
                next.push(sub);
                i = j;
            }
        }
        if next.len() == p.len() {
            return next;
        }
        p = next;
    }
}

fn search(g: &Small, p: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let p = refine(g, p);
    let Some(ci) = p.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
        let code = g.code(&order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &p[ci] {
        let mut q: Partition = Vec::with_capacity(p.len() + 1);
        q.extend_from_slice(&p[..ci]);
        q.push(vec![v]);
        q.push(p[ci].iter().copied().filter(|&w| w != v).collect());
        q.extend_from_slice(&p[ci + 1..]);
        search(g, q, best);
    }
}

/// Canonical relabelling: isomorphic graphs map to identical values.
pub fn canonical(g: &Small) -> Small {
    if g.n == 0 {
        return *g;
    }
    let mut best = None;
    search(g, vec![(0..g.n).collect()], &mut best);
    let (_, order) = best.expect("at least one leaf");
    let mut pos = [0usize; MAX_N];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj = [0u16; MAX_N];
    for u in 0..g.n {
        for v in 0..g.n {
            if g.has(u, v) {
                adj[pos[u]] |= 1 << pos[v];
            }
        }
    }
    Small { n: g.n, adj }
}

/// Canonical code of a graph; equal codes exactly for isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u128 {
    let c = canonical(&Small::from_graph(g));
    c.code(&(0..c.n).collect::<Vec<_>>())
}

/// All graphs on exactly `n` vertices, one per isomorphism class, sorted
/// by edge count and then by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_N);
    let mut level: BTreeSet<Small> = BTreeSet::new();
    level.insert(Small { n: 0, adj: [0; MAX_N] });
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for g in &level {
            for s in 0u32..(1 << (k - 1)) {
                let mut h = *g;
                h.n = k;
                h.adj[k - 1] = s as u16;
                for u in 0..k - 1 {
                    if s >> u & 1 == 1 {
                        h.adj[u] |= 1 << (k - 1);
                    }
                }
                next.insert(canonical(&h));
            }
        }
        level = next;
    }
    let mut out: Vec<(usize, u128, Graph)> = level
        .into_iter()
        .map(|s| {
            let g = s.to_graph();
            (g.m(), s.code(&(0..s.n).collect::<Vec<_>>()), g)
        })
        .collect();
    out.sort_by_key(|a| (a.0, a.1));
    out.into_iter().map(|(_, _, g)| g).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Canonical code by trying every permutation.
    fn brute_code(g: &Small) -> u128 {
        fn rec(g: &Small, order: &mut Vec<usize>, used: &mut [bool], best: &mut u128) {
            if order.len() == g.n {
                *best = (*best).max(g.code(order));
                return;
            }
            for v in 0..g.n {
                if !used[v] {
                    used[v] = true;
                    order.push(v);
                    rec(g, order, used, best);
                    order.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = 0;
        rec(g, &mut Vec::new(), &mut [false; MAX_N], &mut best);
        best
    }

    #[test]
    fn counts_match_brute_force_up_to_five() {
        for n in 1..=5 {
            let pairs = n * (n - 1) / 2;
            let mut classes = BTreeSet::new();
            for mask in 0u32..(1 << pairs) {
                let mut edges = Vec::new();
                let mut bit = 0;
                for j in 1..n {
                    for i in 0..j {
                        if mask >> bit & 1 == 1 {
                            edges.push((i, j));
                        }
                        bit += 1;
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                classes.insert(brute_code(&Small::from_graph(&g)));
            }
            assert_eq!(all_graphs(n).len(), classes.len(), "n = {n}");
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let p = Graph::petersen();
        let relabelled: Vec<(usize, usize)> = p.edges().iter().map(|&[u, v]| ((u * 3) % 10, (v * 3) % 10)).collect();
        let q = Graph::from_edges(10, &relabelled).unwrap();
        assert_eq!(canonical_code(&p), canonical_code(&q));
        assert_ne!(canonical_code(&Graph::cycle(6)), canonical_code(&Graph::path(6)));
    }
}
