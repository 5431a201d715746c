//! Exhaustive edge-subset oracle for orders up to 8.
//!
//! Edge subsets are enumerated by ascending size, so the first size that
//! yields a feasible graph is the optimum, and every feasible graph of that
//! size is seen: the witness list is complete up to isomorphism (subject to
//! the global cap).

use super::iso::IsoClassSet;
use super::{Certification, SearchError, SearchProblem, SearchResult, WITNESS_CAP};
use crate::graph::Graph;

const ORACLE_MAX_N: usize = 8;

/// Next bitmask with the same popcount (Gosper's hack).
#[inline]
fn next_same_popcount(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// Solves the problem by exhaustive enumeration of all edge subsets.
pub fn brute_force_oracle(problem: &SearchProblem) -> Result<SearchResult, SearchError> {
    let n = problem.n;
    if n > ORACLE_MAX_N {
        return Err(SearchError::OracleTooLarge(n));
    }

    let result_stub = |min_edges, witnesses, nodes| SearchResult {
        problem: *problem,
        min_edges,
        witnesses,
        witnesses_complete: true,
        explored_nodes: nodes,
        certification: Certification::OracleConfirmed,
    };

    // Adding edges only grows triangle degrees, so an infeasible complete
    // graph certifies infeasibility outright.
    if !super::is_feasible(&Graph::complete(n), problem.t) {
        return Ok(result_stub(None, Vec::new(), 0));
    }

    let slots: Vec<(usize, usize)> = {
        let mut s = Vec::new();
        for j in 1..n {
            for i in 0..j {
                s.push((i, j));
            }
        }
        s
    };
    let slot_count = slots.len();
    let dlb = problem.degree_requirement();
    let tc = problem.triangle_requirement();
    let mut nodes = 0u64;

    // The degree bound forces at least one edge for any feasible n >= 1, so
    // the size loop starts at a positive m.
    for m in problem.edge_lower_bound().max(1)..=slot_count {
        let mut witnesses = IsoClassSet::new();
        let mut truncated = false;
        let mut seen_feasible = false;
        let mut mask: u64 = (1 << m) - 1;
        let limit: u64 = 1 << slot_count;
        while mask < limit {
            nodes += 1;
            let mut adj = [0u64; ORACLE_MAX_N];
            let mut bits = mask;
            while bits != 0 {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (i, j) = slots[s];
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            let degrees_ok = (0..n).all(|v| (adj[v].count_ones() as usize) >= dlb);
            if degrees_ok {
                let feasible = (0..n).all(|v| {
                    let nv = adj[v];
                    let mut twice = 0usize;
                    let mut b = nv;
                    while b != 0 {
                        let a = b.trailing_zeros() as usize;
                        b &= b - 1;
                        twice += (adj[a] & nv).count_ones() as usize;
                    }
                    twice / 2 >= tc
                });
                if feasible {
                    seen_feasible = true;
                    let mut g = Graph::new(n);
                    let mut bits = mask;
                    while bits != 0 {
                        let s = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        let (i, j) = slots[s];
                        g.add_edge(i, j);
                    }
                    if witnesses.len() < WITNESS_CAP {
                        witnesses.insert(g);
                    } else if !witnesses.contains(&g) {
                        truncated = true;
                    }
                }
            }
            if mask == limit - 1 && m == slot_count {
                break;
            }
            let next = next_same_popcount(mask);
            if next >= limit {
                break;
            }
            mask = next;
        }
        if seen_feasible {
            let mut result = result_stub(Some(m), witnesses.into_graphs(), nodes);
            result.witnesses_complete = !truncated;
            return Ok(result);
        }
    }
    // Unreachable in practice: the complete graph was feasible above.
    Ok(result_stub(None, Vec::new(), nodes))
}
