//! Feasible constructions: disjoint clique covers, matched cliques (the
//! non-integer counterexample block), merged-clique blocks, and the
//! block-partition upper bound used to seed the search.

use super::{
    format_rational, is_feasible, rational_choose2, require_t_at_least_two, Rational, SearchError,
};
use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// `n/(t+1)` disjoint copies of `K_{t+1}`; requires `(t+1) | n`.
pub fn disjoint_cliques(n: usize, t: usize) -> Result<Graph, SearchError> {
    if n > MAX_VERTICES {
        return Err(SearchError::TooManyVertices(n));
    }
    let block = t + 1;
    if n % block != 0 {
        return Err(SearchError::Divisibility(block, n));
    }
    let mut g = Graph::new(n);
    for b in 0..(n / block) {
        for i in 0..block {
            for j in (i + 1)..block {
                g.add_edge(b * block + i, b * block + j);
            }
        }
    }
    Ok(g)
}

/// `K_{m+2}` minus a perfect matching, for even `m >= 2`: an `m`-regular
/// graph in which every vertex lies in exactly `C(m,2) - m/2` triangles.
pub fn matched_clique(m: usize) -> Result<Graph, SearchError> {
    if m < 2 || m % 2 != 0 {
        return Err(SearchError::OddDegree(m));
    }
    let n = m + 2;
    if n > MAX_VERTICES {
        return Err(SearchError::TooManyVertices(n));
    }
    let mut g = Graph::complete(n);
    for i in 0..n / 2 {
        g.remove_edge(i, i + n / 2);
    }
    Ok(g)
}

/// Report of the non-integer counterexample check: whether
/// `C(t,2) <= C(ceil(t),2) - ceil(t)/2` holds, and if so whether the matched
/// clique block is feasible for `t` with no complete component on
/// `ceil(t)+1` vertices.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CounterexampleReport {
    pub t: String,
    /// `C(t,2)` as a rational string.
    pub threshold: String,
    /// `C(ceil(t),2) - ceil(t)/2`, the block's per-vertex triangle count.
    pub block_triangles: String,
    /// Whether the counterexample condition holds.
    pub holds: bool,
    /// graph6 of the block when the condition holds.
    pub block: Option<String>,
    pub block_feasible: bool,
    /// No connected component of the block is a `K_{ceil(t)+1}`.
    pub no_clique_component: bool,
    /// Edges per vertex of the block: `ceil(t)/2`.
    pub block_edges_per_vertex: String,
    /// Edges per vertex of a disjoint `K_{t+1}` cover at integer t (`t/2`),
    /// for comparison when t is an integer.
    pub clique_cover_edges_per_vertex: Option<String>,
}

/// Evaluates the counterexample condition for real (rational) `t >= 2` with
/// even `ceil(t)`.
pub fn counterexample_check(t: Rational) -> Result<CounterexampleReport, SearchError> {
    require_t_at_least_two(t)?;
    let m = t.ceil().to_integer();
    if m % 2 != 0 {
        return Err(SearchError::OddCeiling(m));
    }
    let m_us = m as usize;
    let threshold = rational_choose2(t);
    let block_triangles = Rational::from_integer(m * (m - 1) / 2) - Rational::new(m, 2);
    let holds = threshold <= block_triangles;

    let mut report = CounterexampleReport {
        t: format_rational(t),
        threshold: format_rational(threshold),
        block_triangles: format_rational(block_triangles),
        holds,
        block: None,
        block_feasible: false,
        no_clique_component: false,
        block_edges_per_vertex: format_rational(Rational::new(m, 2)),
        clique_cover_edges_per_vertex: if t.is_integer() {
            Some(format_rational(t / Rational::from_integer(2)))
        } else {
            None
        },
    };
    if holds {
        let g = matched_clique(m_us)?;
        report.block_feasible = is_feasible(&g, t);
        report.no_clique_component = g.isolated_clique_components(m_us + 1).is_empty();
        report.block = Some(to_graph6(&g));
    }
    Ok(report)
}

/// Cheapest feasible block on exactly `p` vertices from the block library:
/// the complete graph, two `ceil(t)+1` cliques merged on a shared set, and
/// the matched clique. Returns the edge count and the block.
fn best_block(p: usize, t: Rational) -> Option<(usize, Graph)> {
    let mut best: Option<(usize, Graph)> = None;
    let mut consider = |g: Graph| {
        if g.vertex_count() == p && is_feasible(&g, t) {
            let e = g.edge_count();
            if best.as_ref().is_none_or(|(be, _)| e < *be) {
                best = Some((e, g));
            }
        }
    };

    let k = t.ceil().to_integer() as usize + 1;
    if p <= MAX_VERTICES {
        consider(Graph::complete(p));
        // Two K_k sharing s vertices: p = 2k - s.
        if p < 2 * k && 2 * k - p < k {
            let s = 2 * k - p;
            let mut g = Graph::new(p);
            // Shared vertices 0..s, then the two private parts.
            for i in 0..k {
                for j in (i + 1)..k {
                    g.add_edge(i, j);
                }
            }
            let second: Vec<usize> = (0..s).chain(k..p).collect();
            for a in 0..second.len() {
                for b in (a + 1)..second.len() {
                    if !g.has_edge(second[a], second[b]) {
                        g.add_edge(second[a], second[b]);
                    }
                }
            }
            consider(g);
        }
        if p >= 4 && (p - 2) % 2 == 0 {
            if let Ok(g) = matched_clique(p - 2) {
                consider(g);
            }
        }
    }
    best
}

/// Upper bound on the optimum by partitioning the vertices into feasible
/// blocks (dynamic program over block sizes). Returns the witness graph.
pub fn construction_upper_bound(n: usize, t: Rational) -> Option<(usize, Graph)> {
    if n == 0 || n > MAX_VERTICES {
        return None;
    }
    let min_block = (t.ceil().to_integer() as usize) + 1;
    let max_block = n.min(2 * min_block + 2);
    let mut blocks: Vec<(usize, usize, Graph)> = Vec::new();
    for p in min_block..=max_block {
        if let Some((e, g)) = best_block(p, t) {
            blocks.push((p, e, g));
        }
    }
    if blocks.is_empty() {
        return None;
    }
    let inf = usize::MAX / 2;
    let mut dp = vec![inf; n + 1];
    let mut pick = vec![usize::MAX; n + 1];
    dp[0] = 0;
    for v in 1..=n {
        for (idx, &(p, e, _)) in blocks.iter().enumerate() {
            if p <= v && dp[v - p] + e < dp[v] {
                dp[v] = dp[v - p] + e;
                pick[v] = idx;
            }
        }
    }
    if dp[n] >= inf {
        return None;
    }
    let mut g = Graph::new(n);
    let mut v = n;
    let mut base = 0usize;
    while v > 0 {
        let (p, _, block) = &blocks[pick[v]];
        for (a, b) in block.edges() {
            g.add_edge(base + a, base + b);
        }
        base += p;
        v -= p;
    }
    debug_assert!(is_feasible(&g, t));
    debug_assert_eq!(g.edge_count(), dp[n]);
    Some((dp[n], g))
}
