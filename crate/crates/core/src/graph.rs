//! Immutable simple undirected graph with BFS hop-distance machinery.
//!
//! Vertices are `0..n-1`. Neighbor lists are kept sorted so that every
//! iteration order downstream (greedy tie-breaks, witness selection) is
//! deterministic. Distances are hop counts; vertices unreachable from a
//! BFS source carry the [`UNREACHABLE`] sentinel, which must never enter
//! arithmetic — operations that need finite distances check connectivity
//! first and error with `Disconnected`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Sentinel distance for unreachable vertices.
pub const UNREACHABLE: u32 = u32::MAX;

/// Minimum vertex count accepted anywhere. The metric-dimension bounds
/// 1 <= beta <= n-1 need n >= 2.
pub const MIN_VERTICES: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        if n < MIN_VERTICES {
            return Err(Error::NTooSmall {
                n,
                min: MIN_VERTICES,
            });
        }
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        debug_assert!(m % 2 == 0);
        Ok(Graph { n, adj, m: m / 2 })
    }

    /// Constructor for generators that already produce sorted, deduplicated,
    /// symmetric adjacency with no self-loops.
    pub(crate) fn from_sorted_adjacency(n: usize, adj: Vec<Vec<Vertex>>, m: usize) -> Graph {
        debug_assert!(n >= MIN_VERTICES);
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        debug_assert_eq!(adj.iter().map(Vec::len).sum::<usize>(), 2 * m);
        Graph { n, adj, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n as Vertex {
            for &v in &self.adj[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Hop distances from `source`, with [`UNREACHABLE`] where no path exists.
    pub fn bfs_distances(&self, source: Vertex) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source as usize] = 0;
        let mut queue = VecDeque::with_capacity(self.n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == UNREACHABLE {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(DistanceRow { source, dist })
    }

    /// All-pairs hop distances, row `v` equal to `bfs_distances(v)`.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let mut data = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n as Vertex {
            let row = self.bfs_distances(v).expect("vertex in range");
            data.extend_from_slice(&row.dist);
        }
        DistanceMatrix { n: self.n, data }
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let row = self.bfs_distances(0).expect("n >= 2");
        row.dist.iter().all(|&d| d != UNREACHABLE)
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Maximum hop distance over all pairs. Errors on disconnected input.
    pub fn diameter(&self) -> Result<u32> {
        self.ensure_connected()?;
        let mut diam = 0;
        for v in 0..self.n as Vertex {
            let row = self.bfs_distances(v)?;
            let ecc = row.dist.iter().copied().max().expect("n >= 2");
            diam = diam.max(ecc);
        }
        Ok(diam)
    }
}

/// One BFS row: hop distances from a fixed source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: Vertex,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: Vertex) -> u32 {
        self.dist[v as usize]
    }

    pub fn is_reachable(&self, v: Vertex) -> bool {
        self.dist[v as usize] != UNREACHABLE
    }
}

/// Dense n-by-n hop-distance matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, v: Vertex) -> &[u32] {
        let v = v as usize;
        &self.data[v * self.n..(v + 1) * self.n]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.data[u as usize * self.n + v as usize]
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn build_p3() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn build_dedups_reversed_duplicates() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn build_rejects_self_loop() {
        match Graph::build(2, &[(0, 0)]) {
            Err(Error::SelfLoop(0)) => {}
            other => panic!("expected SelfLoop(0), got {other:?}"),
        }
    }

    #[test]
    fn build_rejects_small_n_and_bad_vertex() {
        assert!(matches!(
            Graph::build(1, &[]),
            Err(Error::NTooSmall { n: 1, .. })
        ));
        assert!(matches!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn bfs_on_path_and_cycle() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.bfs_distances(0).unwrap().dist, vec![0, 1, 2]);
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.bfs_distances(0).unwrap().dist, vec![0, 1, 2, 1]);
    }

    #[test]
    fn bfs_unreachable_sentinel() {
        let g = Graph::build(2, &[]).unwrap();
        let row = g.bfs_distances(0).unwrap();
        assert_eq!(row.dist, vec![0, UNREACHABLE]);
        assert!(!row.is_reachable(1));
    }

    #[test]
    fn apsp_small_families() {
        let k3 = complete(3).unwrap();
        let dm = k3.all_pairs_distances();
        for u in 0..3 {
            for v in 0..3 {
                let want = if u == v { 0 } else { 1 };
                assert_eq!(dm.get(u, v), want);
            }
        }
        assert_eq!(path(3).unwrap().all_pairs_distances().max_entry(), 2);
        assert_eq!(cycle(5).unwrap().all_pairs_distances().max_entry(), 2);
    }

    #[test]
    fn connectivity() {
        assert!(path(5).unwrap().is_connected());
        assert!(complete(2).unwrap().is_connected());
        let two_edges = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn diameters() {
        assert_eq!(complete(6).unwrap().diameter().unwrap(), 1);
        assert_eq!(path(7).unwrap().diameter().unwrap(), 6);
        assert_eq!(cycle(8).unwrap().diameter().unwrap(), 4);
        let disc = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(disc.diameter(), Err(Error::Disconnected)));
    }
}
