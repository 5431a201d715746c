//! Isomorphism testing and isomorph-free collections for small graphs.
//!
//! Dedup works in two stages: a cheap invariant key (order, size, sorted
//! degree/triangle profiles) buckets the candidates, and an exact
//! backtracking isomorphism test settles collisions inside the bucket. For
//! the sparse graphs this crate searches, both stages are fast; soundness
//! never depends on the invariant being complete.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::bitset::VertexSet;
use crate::graph::Graph;

fn profiles(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.vertex_count())
        .map(|v| (g.degree(v), g.triangle_degree(v)))
        .collect()
}

/// Hash of an isomorphism invariant: vertex count, edge count, and the
/// sorted multiset of (degree, triangle degree, sorted neighbor degrees).
pub fn invariant_key(g: &Graph) -> u64 {
    let mut rows: Vec<(usize, usize, Vec<usize>)> = (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), g.triangle_degree(v), nd)
        })
        .collect();
    rows.sort();
    let mut h = DefaultHasher::new();
    g.vertex_count().hash(&mut h);
    g.edge_count().hash(&mut h);
    rows.hash(&mut h);
    h.finish()
}

/// Exact isomorphism test by profile-guided backtracking.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }

    // Map rare profiles first; this keeps the branching factor low.
    let mut freq: HashMap<(usize, usize), usize> = HashMap::new();
    for p in &pa {
        *freq.entry(*p).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (freq[&pa[v]], std::cmp::Reverse(pa[v].0), v));

    let mut image = vec![usize::MAX; n];
    let mut used = VertexSet::empty();

    fn rec(
        a: &Graph,
        b: &Graph,
        pa: &[(usize, usize)],
        pb: &[(usize, usize)],
        order: &[usize],
        pos: usize,
        image: &mut [usize],
        used: &mut VertexSet,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        'cand: for v in 0..b.vertex_count() {
            if used.contains(v) || pb[v] != pa[u] {
                continue;
            }
            for &w in &order[..pos] {
                if a.has_edge(u, w) != b.has_edge(v, image[w]) {
                    continue 'cand;
                }
            }
            image[u] = v;
            used.insert(v);
            if rec(a, b, pa, pb, order, pos + 1, image, used) {
                return true;
            }
            used.remove(v);
            image[u] = usize::MAX;
        }
        false
    }

    rec(a, b, &pa, &pb, &order, 0, &mut image, &mut used)
}

/// A set of graphs closed under isomorphism: inserting a graph isomorphic to
/// a stored one is a no-op.
#[derive(Debug, Default)]
pub struct IsoClassSet {
    store: Vec<Graph>,
    buckets: HashMap<u64, Vec<usize>>,
}

impl IsoClassSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns true when the graph's class was not present yet.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = invariant_key(&g);
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if are_isomorphic(&self.store[i], &g) {
                return false;
            }
        }
        bucket.push(self.store.len());
        self.store.push(g);
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let key = invariant_key(g);
        match self.buckets.get(&key) {
            None => false,
            Some(bucket) => bucket.iter().any(|&i| are_isomorphic(&self.store[i], g)),
        }
    }

    pub fn len(&self) -> usize {
        self.store.len()
    }

    pub fn is_empty(&self) -> bool {
        self.store.is_empty()
    }

    /// Stored representatives, in insertion order.
    pub fn graphs(&self) -> &[Graph] {
        &self.store
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.store
    }

    pub fn clear(&mut self) {
        self.store.clear();
        self.buckets.clear();
    }
}
