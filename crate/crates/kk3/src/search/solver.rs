//! Exact search by vertex augmentation: branch over the new vertex's
//! adjacency block (the next run of edge slots in colexicographic order),
//! prune with degree and triangle feasibility bounds against the incumbent,
//! and reject isomorphic partial graphs level by level.
//!
//! Levels are processed breadth-first. Parents are extended in parallel over
//! disjoint subtrees; the only shared mutable state is the incumbent best
//! value, which is updated with atomic read-modify-write semantics between
//! levels (never mid-level), so node counts and results are independent of
//! scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::construct::construction_upper_bound;
use super::iso::IsoClassSet;
use super::{Certification, SearchProblem, SearchResult, WITNESS_CAP};

struct Bounds {
    n: usize,
    /// Minimum degree every vertex must end with.
    dlb: usize,
    /// Minimum triangle degree every vertex must end with.
    tc: usize,
}

/// Candidate extensions of one parent, plus how many masks were examined in
/// depth.
fn extend(parent: &Graph, bounds: &Bounds, incumbent: usize) -> (Vec<Graph>, u64) {
    let k = parent.vertex_count();
    let n = bounds.n;
    let future = n - (k + 1);
    let e = parent.edge_count();

    let deg: Vec<usize> = (0..k).map(|v| parent.degree(v)).collect();
    // Complete graphs elsewhere must still absorb (n-1)*dlb degree, so no
    // vertex may exceed this cap without blowing the incumbent.
    let cap_deg = (2 * incumbent)
        .saturating_sub((n - 1) * bounds.dlb)
        .min(n - 1);

    let mut mandatory = VertexSet::empty();
    for v in 0..k {
        let deficit = bounds.dlb.saturating_sub(deg[v]);
        if deficit > future + 1 {
            return (Vec::new(), 0); // dead: v can never reach its degree
        }
        if deficit == future + 1 {
            mandatory.insert(v);
        }
    }
    let min_size = bounds.dlb.saturating_sub(future);
    let max_size = k.min(cap_deg);
    if min_size > max_size {
        return (Vec::new(), 0);
    }

    let mut out = Vec::new();
    let mut examined = 0u64;
    for mask_bits in 0u64..(1u64 << k) {
        let size = mask_bits.count_ones() as usize;
        if size < min_size || size > max_size {
            continue;
        }
        if mask_bits & mandatory.bits() != mandatory.bits() {
            continue;
        }
        examined += 1;

        let mask = VertexSet::from_bits(mask_bits);
        let e_child = e + size;
        let mut deficit_sum = bounds.dlb.saturating_sub(size);
        let mut degree_ok = true;
        for v in 0..k {
            let d = deg[v] + mask.contains(v) as usize;
            if d > cap_deg {
                degree_ok = false;
                break;
            }
            let deficit = bounds.dlb.saturating_sub(d);
            if deficit > future {
                degree_ok = false;
                break;
            }
            deficit_sum += deficit;
        }
        if !degree_ok {
            continue;
        }
        let future_min = (deficit_sum + future * bounds.dlb).div_ceil(2);
        if e_child + future_min > incumbent {
            continue;
        }

        let child = parent.with_appended_vertex(mask);
        // Triangle feasibility: a vertex can only gain triangles through
        // future neighbors, so cap its final count by its degree headroom.
        let choose2 = |d: usize| d * d.saturating_sub(1) / 2;
        let mut triangles_ok = true;
        for v in 0..=k {
            let d = child.degree(v);
            let dmax = (d + future).min(cap_deg).min(n - 1);
            let optimistic = child.triangle_degree(v) + choose2(dmax) - choose2(d);
            if optimistic < bounds.tc {
                triangles_ok = false;
                break;
            }
        }
        if !triangles_ok {
            continue;
        }
        out.push(child);
    }
    (out, examined)
}

/// Exact minimum-edge search with witnesses.
///
/// The incumbent starts at the block-partition construction bound. Every
/// isomorphism class of feasible optimal graphs survives the pruning, so the
/// witness list at the optimum is complete up to the global cap. A result
/// whose node budget ran out is flagged [`Certification::BudgetExhausted`]
/// and reports the best construction found, not an optimum.
pub fn min_edges_exact(problem: &SearchProblem, node_budget: u64) -> SearchResult {
    let n = problem.n;
    let infeasible = |nodes| SearchResult {
        problem: *problem,
        min_edges: None,
        witnesses: Vec::new(),
        witnesses_complete: true,
        explored_nodes: nodes,
        certification: Certification::Exact,
    };
    // Adding edges only grows triangle degrees: an infeasible complete graph
    // certifies infeasibility. This also covers n < t + 1 and n = 0.
    if n == 0 || !super::is_feasible(&Graph::complete(n), problem.t) {
        return infeasible(0);
    }

    let bounds = Bounds {
        n,
        dlb: problem.degree_requirement(),
        tc: problem.triangle_requirement(),
    };
    // Feasibility of K_n implies n >= t + 1, so the complete-graph block
    // always gives the partition DP something to return.
    let (construction_edges, construction) =
        construction_upper_bound(n, problem.t).expect("feasible problems have a block cover");

    let incumbent = AtomicUsize::new(construction_edges);
    let mut nodes = 0u64;
    let mut level: Vec<Graph> = vec![Graph::new(1)];
    let mut best: Option<usize> = None;
    let mut witnesses = IsoClassSet::new();
    let mut truncated = false;
    let mut exhausted = false;

    // Parents are processed in fixed-size chunks so the budget can cut a
    // level at a deterministic boundary.
    const CHUNK: usize = 1024;

    'levels: for k in 1..n {
        let frozen_incumbent = incumbent.load(Ordering::SeqCst);
        let mut next = IsoClassSet::new();
        for chunk in level.chunks(CHUNK) {
            let batches: Vec<(Vec<Graph>, u64)> = chunk
                .par_iter()
                .map(|parent| extend(parent, &bounds, frozen_incumbent))
                .collect();
            nodes += batches.iter().map(|(_, c)| c).sum::<u64>();

            if k + 1 < n {
                for (children, _) in batches {
                    for child in children {
                        next.insert(child);
                    }
                }
            } else {
                // Final level: children are exactly the feasible graphs
                // within the incumbent (the pruning bounds are tight when no
                // vertices remain).
                for (children, _) in batches {
                    for child in children {
                        debug_assert!(super::is_feasible(&child, problem.t));
                        let e = child.edge_count();
                        match best {
                            Some(b) if e > b => {}
                            Some(b) if e == b => {
                                if witnesses.len() < WITNESS_CAP {
                                    witnesses.insert(child);
                                } else if !witnesses.contains(&child) {
                                    truncated = true;
                                }
                            }
                            _ => {
                                best = Some(e);
                                witnesses.clear();
                                witnesses.insert(child);
                                truncated = false;
                                incumbent.fetch_min(e, Ordering::SeqCst);
                            }
                        }
                    }
                }
            }

            if nodes > node_budget {
                exhausted = true;
                break 'levels;
            }
        }
        level = next.into_graphs();
    }

    if exhausted {
        let min_edges = best.or(Some(construction_edges));
        let mut ws = witnesses.into_graphs();
        if ws.is_empty() {
            ws.push(construction);
        }
        return SearchResult {
            problem: *problem,
            min_edges,
            witnesses: ws,
            witnesses_complete: false,
            explored_nodes: nodes,
            certification: Certification::BudgetExhausted,
        };
    }

    let best = best.expect("the construction witness survives the search");
    SearchResult {
        problem: *problem,
        min_edges: Some(best),
        witnesses: witnesses.into_graphs(),
        witnesses_complete: !truncated,
        explored_nodes: nodes,
        certification: Certification::Exact,
    }
}
