//! Simple undirected graphs with bitset adjacency and exact triangle-degree
//! kernels.
//!
//! Vertices are dense integer labels `0..n`. Adjacency is one `u64` per
//! vertex, so triangle counting reduces to `popcount(N(a) & N(v))` per
//! neighbor. Graphs are plain values: clone freely, share immutably across
//! threads, and mutate only a privately owned copy.

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("the distinguished sets overlap on {0}")]
    OverlappingSets(VertexSet),
    #[error("anchor vertex {0} lies inside a distinguished set")]
    AnchorInSet(usize),
}

/// A simple undirected graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// An edgeless graph on `n` vertices. Panics if `n > 64`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex capacity is {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        g
    }

    /// Builds a graph from an edge list. Panics on out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The set `{0, ..., n-1}`.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    fn check_vertex(&self, v: usize) {
        assert!(
            v < self.n,
            "vertex {v} out of range for a graph on {} vertices",
            self.n
        );
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.check_vertex(u);
        self.check_vertex(v);
        self.adj[u].contains(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.check_vertex(u);
        self.check_vertex(v);
        assert!(u != v, "self-loop at vertex {u} is not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.check_vertex(u);
        self.check_vertex(v);
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Neighborhood `N(v)` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.check_vertex(v);
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// Number of triangles through `v`: unordered adjacent pairs inside `N(v)`.
    pub fn triangle_degree(&self, v: usize) -> usize {
        let nv = self.neighbors(v);
        let mut twice = 0usize;
        for a in nv.iter() {
            twice += (self.adj[a] & nv).len();
        }
        twice / 2
    }

    /// Minimum of [`Graph::triangle_degree`] over all vertices; 0 for the
    /// empty graph.
    pub fn min_triangle_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.triangle_degree(v))
            .min()
            .unwrap_or(0)
    }

    /// Total number of triangles in the graph.
    pub fn triangle_count(&self) -> usize {
        let sum: usize = (0..self.n).map(|v| self.triangle_degree(v)).sum();
        sum / 3
    }

    /// Classifies the triangles through `v` by how many of their two
    /// non-anchor vertices lie in `p` and in `q`.
    ///
    /// `p` and `q` must be disjoint and must not contain `v`.
    pub fn triangle_breakdown(
        &self,
        v: usize,
        p: VertexSet,
        q: VertexSet,
    ) -> Result<TriangleBreakdown, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        let all = self.vertex_set();
        if !p.is_subset(all) {
            let bad = (p - all).min_vertex().unwrap();
            return Err(GraphError::VertexOutOfRange(bad, self.n));
        }
        if !q.is_subset(all) {
            let bad = (q - all).min_vertex().unwrap();
            return Err(GraphError::VertexOutOfRange(bad, self.n));
        }
        if !p.is_disjoint(q) {
            return Err(GraphError::OverlappingSets(p & q));
        }
        if p.contains(v) || q.contains(v) {
            return Err(GraphError::AnchorInSet(v));
        }

        let nv = self.neighbors(v);
        let mut counts = [[0u64; 3]; 3];
        for a in nv.iter() {
            let common = self.adj[a] & nv;
            for b in common.iter() {
                if b <= a {
                    continue;
                }
                let i = p.contains(a) as usize + p.contains(b) as usize;
                let j = q.contains(a) as usize + q.contains(b) as usize;
                counts[i][j] += 1;
            }
        }
        Ok(TriangleBreakdown { counts })
    }

    /// `N(S) = union of N(u) over u in S`. May intersect `S` itself.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for u in s.iter() {
            self.check_vertex(u);
            out |= self.adj[u];
        }
        out
    }

    /// Whether every pair inside `s` is adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        for v in s.iter() {
            self.check_vertex(v);
            if !s.without(v).is_subset(self.adj[v]) {
                return false;
            }
        }
        true
    }

    /// All vertex sets of the given size whose induced subgraph is complete,
    /// ordered lexicographically by sorted vertex list.
    pub fn find_cliques(&self, size: usize) -> Vec<VertexSet> {
        assert!(size >= 1, "clique size must be at least 1");
        let mut out = Vec::new();
        if size > self.n {
            return out;
        }
        // Candidates are always above the last chosen vertex, so the DFS
        // emits sets in lexicographic order of their sorted vertex lists.
        fn rec(
            g: &Graph,
            current: VertexSet,
            depth: usize,
            size: usize,
            candidates: VertexSet,
            out: &mut Vec<VertexSet>,
        ) {
            if depth == size {
                out.push(current);
                return;
            }
            // Not enough candidates left to finish the clique.
            if candidates.len() + depth < size {
                return;
            }
            for v in candidates.iter() {
                let above = VertexSet::from_bits(!((1u64 << v) | ((1u64 << v) - 1)));
                rec(
                    g,
                    current.with(v),
                    depth + 1,
                    size,
                    candidates & g.adj[v] & above,
                    out,
                );
            }
        }
        rec(
            self,
            VertexSet::empty(),
            0,
            size,
            self.vertex_set(),
            &mut out,
        );
        out
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty();
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            loop {
                let grown = comp | self.neighborhood_of_set(comp);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Connected components that are exactly complete graphs on `size`
    /// vertices.
    pub fn isolated_clique_components(&self, size: usize) -> Vec<VertexSet> {
        assert!(size >= 1, "clique size must be at least 1");
        self.components()
            .into_iter()
            .filter(|&c| c.len() == size && self.is_clique(c))
            .collect()
    }

    /// A copy with one extra vertex `n`, adjacent to `neighbors`.
    pub fn with_appended_vertex(&self, neighbors: VertexSet) -> Graph {
        assert!(self.n < MAX_VERTICES, "vertex capacity is {MAX_VERTICES}");
        assert!(
            neighbors.is_subset(self.vertex_set()),
            "neighbors must be existing vertices"
        );
        let w = self.n;
        let mut adj = self.adj.clone();
        adj.push(neighbors);
        for v in neighbors.iter() {
            adj[v].insert(w);
        }
        Graph { n: self.n + 1, adj }
    }

    /// The subgraph induced on `s`, relabeled to `0..|s|`, plus the map from
    /// new labels back to the original ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = s.iter().collect();
        for &v in &labels {
            self.check_vertex(v);
        }
        let mut g = Graph::new(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, labels)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Triangle counts through one anchor vertex, indexed by how many of the two
/// non-anchor vertices lie in each of two disjoint distinguished sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleBreakdown {
    /// `counts[i][j]` = triangles with `i` vertices in the first set and `j`
    /// in the second. Only entries with `i + j <= 2` can be nonzero.
    pub counts: [[u64; 3]; 3],
}

impl TriangleBreakdown {
    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i][j]
    }
}
