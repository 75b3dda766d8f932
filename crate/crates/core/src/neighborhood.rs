//! Distance layers, edge balls and path counts around a vertex.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

pub const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NeighborhoodError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge-ball index must be at least 1")]
    ZeroIndex,
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<(), NeighborhoodError> {
    if v >= g.n() {
        Err(NeighborhoodError::VertexOutOfRange { vertex: v, n: g.n() })
    } else {
        Ok(())
    }
}

/// Breadth-first distances from `sources`, ignoring vertices flagged in
/// `removed` and stopping at depth `max_depth`. Unreached vertices get
/// [`UNREACHED`].
pub fn bfs_distances(g: &Graph, sources: &[Vertex], removed: &[Vertex], max_depth: u32) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut blocked = vec![false; g.n()];
    for &x in removed {
        blocked[x] = true;
    }
    let mut queue = VecDeque::new();
    for &s in sources {
        if !blocked[s] && dist[s] == UNREACHED {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        if du >= max_depth {
            continue;
        }
        for &(w, _) in g.adj(u) {
            if !blocked[w] && dist[w] == UNREACHED {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `N_0(v), N_1(v), ...`: the vertices at each exact distance from `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub source: Vertex,
    pub layers: Vec<Vec<Vertex>>,
}

impl LayerDecomposition {
    /// Size of the closed ball `N_i[v]`.
    pub fn ball_size(&self, i: usize) -> usize {
        self.layers.iter().take(i + 1).map(Vec::len).sum()
    }

    /// The closed ball `N_i[v]`, sorted.
    pub fn ball(&self, i: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.layers.iter().take(i + 1).flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn layer(&self, i: usize) -> &[Vertex] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }
}

/// Breadth-first layers around `v` up to depth `r_max`. Empty trailing
/// layers are dropped.
pub fn layers(g: &Graph, v: Vertex, r_max: usize) -> Result<LayerDecomposition, NeighborhoodError> {
    check_vertex(g, v)?;
    let dist = bfs_distances(g, &[v], &[], r_max as u32);
    let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); r_max + 1];
    for (w, &d) in dist.iter().enumerate() {
        if d != UNREACHED {
            out[d as usize].push(w);
        }
    }
    while out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    Ok(LayerDecomposition { source: v, layers: out })
}

/// `E_i(v)`: edges joining `N_{i-1}(v)` to `N_i(v)` together with the edges
/// inside `N_{i-1}(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBall {
    pub source: Vertex,
    pub index: usize,
    pub edges: Vec<EdgeId>,
}

/// Index of the edge ball that contains `e`, given distances from the centre:
/// an edge whose nearer endpoint sits at distance `a` lies in `E_{a+1}`.
#[inline]
pub fn edge_ball_index(dist: &[u32], g: &Graph, e: EdgeId) -> Option<u32> {
    let [a, b] = g.edge(e);
    let d = dist[a].min(dist[b]);
    (d != UNREACHED).then(|| d + 1)
}

pub fn edge_ball(g: &Graph, v: Vertex, i: usize) -> Result<EdgeBall, NeighborhoodError> {
    check_vertex(g, v)?;
    if i == 0 {
        return Err(NeighborhoodError::ZeroIndex);
    }
    let dist = bfs_distances(g, &[v], &[], i as u32);
    let edges = (0..g.m()).filter(|&e| edge_ball_index(&dist, g, e) == Some(i as u32)).collect();
    Ok(EdgeBall { source: v, index: i, edges })
}

/// Number of simple paths with exactly `len` edges from `v` to `w`.
pub fn count_paths(g: &Graph, v: Vertex, w: Vertex, len: usize) -> u64 {
    fn walk(g: &Graph, u: Vertex, target: Vertex, left: usize, on_path: &mut [bool]) -> u64 {
        if left == 0 {
            return u64::from(u == target);
        }
        if u == target {
            return 0;
        }
        let mut total = 0;
        for &(x, _) in g.adj(u) {
            if !on_path[x] {
                on_path[x] = true;
                total += walk(g, x, target, left - 1, on_path);
                on_path[x] = false;
            }
        }
        total
    }
    if v == w || len == 0 {
        return 0;
    }
    let mut on_path = vec![false; g.n()];
    on_path[v] = true;
    walk(g, v, w, len, &mut on_path)
}

/// Simple-path counts of length `len` from `v` to every reachable endpoint.
pub fn path_counts_from(g: &Graph, v: Vertex, len: usize) -> BTreeMap<Vertex, u64> {
    fn walk(g: &Graph, u: Vertex, left: usize, on_path: &mut [bool], out: &mut BTreeMap<Vertex, u64>) {
        if left == 0 {
            *out.entry(u).or_insert(0) += 1;
            return;
        }
        for &(x, _) in g.adj(u) {
            if !on_path[x] {
                on_path[x] = true;
                walk(g, x, left - 1, on_path, out);
                on_path[x] = false;
            }
        }
    }
    let mut out = BTreeMap::new();
    if len == 0 {
        return out;
    }
    let mut on_path = vec![false; g.n()];
    on_path[v] = true;
    walk(g, v, len, &mut on_path, &mut out);
    out
}

/// Reusable bounded BFS that avoids reallocating per call.
#[derive(Debug, Clone)]
pub struct BoundedBfs {
    dist: Vec<u32>,
    touched: Vec<Vertex>,
    queue: VecDeque<Vertex>,
}

impl BoundedBfs {
    pub fn new(n: usize) -> Self {
        BoundedBfs { dist: vec![UNREACHED; n], touched: Vec::new(), queue: VecDeque::new() }
    }

    /// Runs from `source` in `g` minus `removed`, to depth `max_depth`.
    /// Distances stay valid until the next call.
    pub fn run(&mut self, g: &Graph, source: Vertex, removed: &[Vertex], max_depth: u32) -> &[u32] {
        for &t in &self.touched {
            self.dist[t] = UNREACHED;
        }
        self.touched.clear();
        self.queue.clear();
        if removed.contains(&source) {
            return &self.dist;
        }
        self.dist[source] = 0;
        self.touched.push(source);
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            let du = self.dist[u];
            if du >= max_depth {
                continue;
            }
            for &(w, _) in g.adj(u) {
                if self.dist[w] == UNREACHED && !removed.contains(&w) {
                    self.dist[w] = du + 1;
                    self.touched.push(w);
                    self.queue.push_back(w);
                }
            }
        }
        &self.dist
    }

    pub fn dist(&self) -> &[u32] {
        &self.dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layer_examples() {
        let c4 = Graph::cycle(4);
        let l = layers(&c4, 0, 2).unwrap();
        let sizes: Vec<_> = l.layers.iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 2, 1]);
        let l = layers(&Graph::petersen(), 3, 0).unwrap();
        assert_eq!(l.layers, vec![vec![3]]);
        let l = layers(&Graph::star(3), 0, 2).unwrap();
        let sizes: Vec<_> = l.layers.iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 3]);
        assert!(layers(&c4, 4, 1).is_err());
    }

    #[test]
    fn edge_ball_examples() {
        let g = Graph::petersen();
        for v in 0..g.n() {
            let mut inc: Vec<_> = g.adj(v).iter().map(|&(_, e)| e).collect();
            inc.sort_unstable();
            assert_eq!(edge_ball(&g, v, 1).unwrap().edges, inc);
        }
        let k3 = Graph::complete(3);
        let ab = k3.edge_between(1, 2).unwrap();
        assert_eq!(edge_ball(&k3, 0, 2).unwrap().edges, vec![ab]);
        let c4 = Graph::cycle(4);
        let e2 = edge_ball(&c4, 0, 2).unwrap().edges;
        let mut want = vec![c4.edge_between(1, 2).unwrap(), c4.edge_between(2, 3).unwrap()];
        want.sort_unstable();
        assert_eq!(e2, want);
        assert_eq!(edge_ball(&c4, 0, 0), Err(NeighborhoodError::ZeroIndex));
    }

    #[test]
    fn path_count_examples() {
        let g = Graph::path(2);
        assert_eq!(count_paths(&g, 0, 1, 1), 1);
        let c4 = Graph::cycle(4);
        assert_eq!(count_paths(&c4, 0, 2, 2), 2);
        let k4 = Graph::complete(4);
        assert_eq!(count_paths(&k4, 0, 1, 2), 2);
        // 0-a-b-1 with a, b the two other vertices, in both orders.
        assert_eq!(count_paths(&k4, 0, 1, 3), 2);
    }

    #[test]
    fn path_counts_from_agrees_with_pairwise() {
        let g = Graph::petersen();
        for len in 1..=4 {
            let all = path_counts_from(&g, 0, len);
            for w in 1..g.n() {
                assert_eq!(all.get(&w).copied().unwrap_or(0), count_paths(&g, 0, w, len));
            }
        }
    }

    #[test]
    fn bounded_bfs_respects_removed() {
        let c4 = Graph::cycle(4);
        let mut bfs = BoundedBfs::new(4);
        let d = bfs.run(&c4, 0, &[1], 5).to_vec();
        assert_eq!(d, vec![0, UNREACHED, 2, 1]);
        let d = bfs.run(&c4, 2, &[], 1).to_vec();
        assert_eq!(d, vec![UNREACHED, 1, 0, 1]);
    }
}
