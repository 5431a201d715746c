//! The clique regularization rewrite, the iterative clique-peeling
//! procedure, the greedy independent-set construction, and the two
//! edge-saving rewrites built from them, each paired with a checker.
//!
//! All operations are pure functions of their inputs. Traces are immutable
//! once returned, and every real-valued comparison uses an absolute
//! tolerance of 1e-9; combinatorial quantities are compared exactly.

mod bounds;
mod peel;
mod regularize;
mod rewrite;

pub use bounds::{
    ceil_alpha, ceil_two_alpha, clique_count_bounds, decay_bound, greedy_target,
    plateau_length_bound, theta, threshold_constant, BoundsParams, CliqueCountBounds, ALPHA,
};
pub use peel::{greedy_independent_set, peel, IndependentSelection, PeelingStep, PeelingTrace};
pub use regularize::{regularize, verify_regularization, PropertyCheck, RegularizationReport};
pub use rewrite::{
    apex_configuration, apex_redirection, clique_substitution, ApexConfiguration, ApexRedirection,
    CliqueSubstitution,
};

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum TransformError {
    #[error("{0} does not induce a complete graph of the required size")]
    NotAClique(VertexSet),
    #[error("cliques overlap on {0}")]
    OverlappingCliques(VertexSet),
    #[error("edge between distinct cliques: ({0}, {1})")]
    CrossCliqueEdge(usize, usize),
    #[error("clique {0} has no neighbor outside the family")]
    NoExternalNeighbor(VertexSet),
    #[error("clique family is empty")]
    EmptyFamily,
    #[error("ordered clique contains a repeated vertex {0}")]
    RepeatedVertex(usize),
    #[error("iteration index {index} out of range 1..={xi}")]
    StepOutOfRange { index: usize, xi: usize },
    #[error("set is not independent: edge ({0}, {1})")]
    NotIndependent(usize, usize),
    #[error("set intersects the clique family on {0}")]
    IntersectsFamily(VertexSet),
    #[error("vertex {0} is not in the boundary of the clique family")]
    NotInBoundary(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
}

/// An ordered list of pairwise disjoint cliques on `t+1` vertices each,
/// validated against a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueFamily {
    t: usize,
    cliques: Vec<VertexSet>,
}

impl CliqueFamily {
    /// Validates that each member induces a `K_{t+1}` in `g` and that the
    /// members are pairwise disjoint.
    pub fn new(g: &Graph, t: usize, cliques: Vec<VertexSet>) -> Result<Self, TransformError> {
        let mut seen = VertexSet::empty();
        for &c in &cliques {
            if let Some(v) = (c - g.vertex_set()).min_vertex() {
                return Err(TransformError::VertexOutOfRange(v, g.vertex_count()));
            }
            if c.len() != t + 1 || !g.is_clique(c) {
                return Err(TransformError::NotAClique(c));
            }
            if !seen.is_disjoint(c) {
                return Err(TransformError::OverlappingCliques(seen & c));
            }
            seen |= c;
        }
        Ok(CliqueFamily { t, cliques })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// Union of all member cliques.
    pub fn support(&self) -> VertexSet {
        self.cliques
            .iter()
            .fold(VertexSet::empty(), |acc, &c| acc | c)
    }

    /// External boundary: neighbors of the support outside the support.
    pub fn boundary(&self, g: &Graph) -> VertexSet {
        let s = self.support();
        g.neighborhood_of_set(s) - s
    }

    /// Checks the peeling preconditions: no edge joins two distinct members,
    /// and every member has a neighbor outside the family.
    pub fn check_peelable(&self, g: &Graph) -> Result<(), TransformError> {
        let support = self.support();
        for &c in &self.cliques {
            let external = g.neighborhood_of_set(c) - c;
            if let Some(u) = (external & (support - c)).min_vertex() {
                let v = c
                    .iter()
                    .find(|&v| g.neighbors(v).contains(u))
                    .expect("witness endpoint exists");
                return Err(TransformError::CrossCliqueEdge(v, u));
            }
            if external.is_empty() {
                return Err(TransformError::NoExternalNeighbor(c));
            }
        }
        Ok(())
    }
}

/// Greedily extracts a peelable clique family from a graph: enumerate all
/// `K_{t+1}` sets, keep those whose total excess degree is below the theta
/// threshold, then pick them in order subject to disjointness, absence of
/// cross edges, and having an external neighbor.
///
/// Returns `None` when no clique survives the filters. At small `t` the
/// threshold `theta(t)` is below 1, so any clique with an external edge
/// carries too much excess and the filtered extraction is empty;
/// [`extract_clique_family_unfiltered`] drops the excess filter for those
/// regimes.
pub fn extract_clique_family(g: &Graph, t: usize) -> Option<CliqueFamily> {
    extract_family_impl(g, t, true)
}

/// Like [`extract_clique_family`] but without the excess-degree filter.
pub fn extract_clique_family_unfiltered(g: &Graph, t: usize) -> Option<CliqueFamily> {
    extract_family_impl(g, t, false)
}

fn extract_family_impl(g: &Graph, t: usize, excess_filter: bool) -> Option<CliqueFamily> {
    let th = theta(t as f64);
    let mut chosen: Vec<VertexSet> = Vec::new();
    let mut support = VertexSet::empty();
    for c in g.find_cliques(t + 1) {
        if excess_filter {
            let excess: i64 = c.iter().map(|v| g.degree(v) as i64 - t as i64).sum();
            if (excess as f64) >= th {
                continue;
            }
        }
        if !support.is_disjoint(c) {
            continue;
        }
        // No edges towards already-chosen cliques in either direction.
        let external = g.neighborhood_of_set(c) - c;
        if !(external & support).is_empty() {
            continue;
        }
        if external.is_empty() {
            continue;
        }
        let mut crosses_new = false;
        for &d in &chosen {
            if !(g.neighborhood_of_set(d) & c).is_empty() {
                crosses_new = true;
                break;
            }
        }
        if crosses_new {
            continue;
        }
        support |= c;
        chosen.push(c);
    }
    if chosen.is_empty() {
        None
    } else {
        Some(CliqueFamily { t, cliques: chosen })
    }
}
