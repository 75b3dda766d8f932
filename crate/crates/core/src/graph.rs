//! Simple undirected graphs with stable vertex and edge ids.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    Duplicate(Vertex, Vertex),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("{0}")]
    Invalid(&'static str),
}

/// An immutable simple undirected graph.
///
/// Edges keep the ids they were inserted with. Each adjacency row is sorted
/// by neighbour and carries the id of the connecting edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoints are normalised so that
    /// `edge(e)[0] < edge(e)[1]`; loops and repeated pairs are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut norm = Vec::with_capacity(edges.len());
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        for (id, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            norm.push([u, v]);
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for (u, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                let v = w[0].0;
                return Err(GraphError::Duplicate(u.min(v), u.max(v)));
            }
        }
        Ok(Graph { n, edges: norm, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Self::from_edges(n, &e).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &e).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs three vertices");
        let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        e.push((0, n - 1));
        Self::from_edges(n, &e).expect("cycle is simple")
    }

    /// The star `K_{1,s}` with centre 0.
    pub fn star(s: usize) -> Self {
        let e: Vec<_> = (1..=s).map(|v| (0, v)).collect();
        Self::from_edges(s + 1, &e).expect("star is simple")
    }

    pub fn petersen() -> Self {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &e).expect("Petersen graph is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> [Vertex; 2] {
        self.edges[e]
    }

    pub fn edges(&self) -> &[[Vertex; 2]] {
        &self.edges
    }

    /// Neighbours of `v` with the connecting edge ids, sorted by neighbour.
    #[inline]
    pub fn adj(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let row = &self.adj[u];
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges sharing an endpoint with `e`, excluding `e`, sorted by id.
    pub fn adjacent_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let [a, b] = self.edges[e];
        let mut out: Vec<EdgeId> =
            self.adj[a].iter().chain(self.adj[b].iter()).map(|&(_, f)| f).filter(|&f| f != e).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn edges_share_endpoint(&self, e: EdgeId, f: EdgeId) -> bool {
        let [a, b] = self.edges[e];
        let [c, d] = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// The subgraph induced on `vertices` (relabelled `0..len` in the given
    /// order), together with the map from new edge ids to old ones.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<EdgeId>) {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if new_id[a] != usize::MAX && new_id[b] != usize::MAX {
                edges.push((new_id[a], new_id[b]));
                origin.push(e);
            }
        }
        let g = Graph::from_edges(vertices.len(), &edges).expect("induced subgraph is simple");
        (g, origin)
    }

    /// Degree histogram: entry `i` counts vertices of degree `i`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.max_degree() + 1];
        for row in &self.adj {
            h[row.len()] += 1;
        }
        h
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            n: self.n,
            m: self.m(),
            max_degree: self.max_degree(),
            connected: self.is_connected(),
            degree_histogram: self.degree_histogram(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub degree_histogram: Vec<usize>,
}

/// Parameters of the binomial random graph `G(n, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GnpParams {
    n: usize,
    p: f64,
    seed: u64,
}

impl GnpParams {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(GraphError::BadProbability(p));
        }
        Ok(GnpParams { n, p, seed })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Samples `G(n, p)`.
///
/// Pairs `(u, v)` with `u < v` are visited in lexicographic order and each is
/// kept independently with probability `p`. Gaps between kept pairs are drawn
/// from the geometric distribution `floor(ln U / ln(1 - p))`, which is the same
/// law as flipping one coin per pair but costs `O(n + m)` draws. Edge ids
/// follow the visiting order.
pub fn gen_gnp(params: &GnpParams) -> Graph {
    let n = params.n;
    let p = params.p;
    let mut edges = Vec::new();
    if p >= 1.0 {
        return Graph::complete(n);
    }
    if p > 0.0 && n >= 2 {
        let mut rng = rng::stream(params.seed);
        let log_q = libm::log1p(-p);
        let (mut u, mut v) = (0usize, 0usize);
        loop {
            let x: f64 = rng.gen();
            let skip = libm::floor(libm::log(1.0 - x) / log_q);
            // Clamp huge skips; anything past the last pair ends the walk.
            let skip = if skip >= (n * n) as f64 { n * n } else { skip as usize };
            v += skip + 1;
            while v >= n && u < n - 1 {
                let over = v - n;
                u += 1;
                v = u + 1 + over;
            }
            if u >= n - 1 {
                break;
            }
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("G(n,p) sample is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(GraphError::Duplicate(0, 1)));
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })));
    }

    #[test]
    fn adjacency_consistent() {
        let g = Graph::petersen();
        assert_eq!(g.m(), 15);
        let mut seen = vec![0; g.m()];
        for v in 0..g.n() {
            assert_eq!(g.degree(v), 3);
            for &(w, e) in g.adj(v) {
                seen[e] += 1;
                assert!(g.edge(e).contains(&v) && g.edge(e).contains(&w));
            }
        }
        assert!(seen.iter().all(|&c| c == 2));
    }

    #[test]
    fn gnp_bad_params() {
        assert!(GnpParams::new(5, 1.5, 0).is_err());
        assert!(GnpParams::new(5, -0.1, 0).is_err());
        assert!(GnpParams::new(0, 0.5, 0).is_err());
    }

    #[test]
    fn gnp_extremes() {
        let g = gen_gnp(&GnpParams::new(5, 0.0, 1).unwrap());
        assert_eq!(g.m(), 0);
        let g = gen_gnp(&GnpParams::new(5, 1.0, 1).unwrap());
        assert_eq!(g.m(), 10);
        let g = gen_gnp(&GnpParams::new(1, 0.5, 1).unwrap());
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn gnp_edge_count_within_four_sigma() {
        // Bin(499500, 0.01): mean 4995, sigma ~ 70.3.
        let g = gen_gnp(&GnpParams::new(1000, 0.01, 42).unwrap());
        let m = g.m() as i64;
        assert!((m - 4995).abs() <= 282, "m = {m}");
    }

    #[test]
    fn gnp_edges_lexicographic() {
        let g = gen_gnp(&GnpParams::new(60, 0.3, 9).unwrap());
        assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gnp_pair_frequencies_match_p() {
        // Each pair of a 6-vertex graph should appear with frequency ~p.
        let trials = 4000;
        let mut hits = [[0u32; 6]; 6];
        for s in 0..trials {
            let g = gen_gnp(&GnpParams::new(6, 0.3, s).unwrap());
            for &[a, b] in g.edges() {
                hits[a][b] += 1;
            }
        }
        // sigma = sqrt(4000 * 0.21) ~ 29; allow 5 sigma.
        for (a, row) in hits.iter().enumerate() {
            for (b, &h) in row.iter().enumerate().skip(a + 1) {
                let h = h as f64;
                assert!((h - 1200.0).abs() < 145.0, "pair {a}{b}: {h}");
            }
        }
    }

    #[test]
    fn stats_examples() {
        let s = Graph::star(3).stats();
        assert_eq!(s.max_degree, 3);
        assert!(s.connected);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.stats().connected);
        assert_eq!(two.components().len(), 2);
    }
}
