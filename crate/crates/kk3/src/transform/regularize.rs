//! The clique regularization rewrite and its four-property checker.
//!
//! Given two (not necessarily distinct) cliques of the same order, the
//! rewrite concentrates each boundary vertex's neighborhood inside the
//! cliques onto an initial segment of the first clique's vertex ordering,
//! removes the edges between the two clique differences, and leaves
//! everything outside untouched.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::TransformError;

fn ordered_clique_set(g: &Graph, ordered: &[usize]) -> Result<VertexSet, TransformError> {
    let mut set = VertexSet::empty();
    for &v in ordered {
        if v >= g.vertex_count() {
            return Err(TransformError::VertexOutOfRange(v, g.vertex_count()));
        }
        if set.contains(v) {
            return Err(TransformError::RepeatedVertex(v));
        }
        set.insert(v);
    }
    if !g.is_clique(set) || set.is_empty() {
        return Err(TransformError::NotAClique(set));
    }
    Ok(set)
}

/// Rewrites `g` with respect to the ordered clique `a1` and the clique `a2`
/// (both on `t+1` vertices; `a1` may equal `a2` as a set).
///
/// In the result both cliques stay complete, the edges between `a1 \ a2` and
/// `a2 \ a1` are gone, the graph outside `a1 | a2` is untouched, and every
/// boundary vertex `u` is adjacent exactly to the first
/// `min(|N(u) & (a1|a2)|, t+1)` vertices of `a1` in the given order.
pub fn regularize(g: &Graph, a1: &[usize], a2: VertexSet) -> Result<Graph, TransformError> {
    let a1_set = ordered_clique_set(g, a1)?;
    if let Some(v) = (a2 - g.vertex_set()).min_vertex() {
        return Err(TransformError::VertexOutOfRange(v, g.vertex_count()));
    }
    if a2.len() != a1.len() || !g.is_clique(a2) {
        return Err(TransformError::NotAClique(a2));
    }
    let union = a1_set | a2;
    let boundary = g.neighborhood_of_set(union) - union;

    // Segment lengths are computed against the original graph before any
    // edits.
    let cap = a1.len();
    let seg_len: Vec<(usize, usize)> = boundary
        .iter()
        .map(|u| (u, (g.neighbors(u) & union).len().min(cap)))
        .collect();

    let mut out = g.clone();
    // Drop every edge incident to the clique union, then rebuild: the two
    // cliques themselves plus the boundary segments.
    for v in union.iter() {
        for w in out.neighbors(v).iter() {
            out.remove_edge(v, w);
        }
    }
    for (i, &u) in a1.iter().enumerate() {
        for &w in &a1[i + 1..] {
            out.add_edge(u, w);
        }
    }
    let a2v: Vec<usize> = a2.to_vec();
    for (i, &u) in a2v.iter().enumerate() {
        for &w in &a2v[i + 1..] {
            out.add_edge(u, w);
        }
    }
    for &(u, m) in &seg_len {
        for &v in &a1[..m] {
            out.add_edge(u, v);
        }
    }
    Ok(out)
}

/// One verified property of the rewrite.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Report of the four rewrite properties, with witnesses on failure.
#[derive(Debug, Clone)]
pub struct RegularizationReport {
    pub properties: Vec<PropertyCheck>,
}

impl RegularizationReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

/// Verifies the four properties of the rewrite on a concrete pair
/// `(g, gp = regularize(g, a1, a2))`:
///
/// 1. edge non-increase;
/// 2. edge confinement: both cliques complete in `gp`, and every edge meeting
///    `a2 \ a1` stays inside `a2`;
/// 3. clique shifting: for every `K_{t+1}` of `g`, the shifted set (outside
///    part plus the initial segment of matching length) is a `K_{t+1}` of
///    `gp`;
/// 4. triangle maintenance: `min_triangle_degree(gp)` is at least
///    `min(C(t,2), min_triangle_degree(g))`.
pub fn verify_regularization(
    g: &Graph,
    gp: &Graph,
    a1: &[usize],
    a2: VertexSet,
) -> Result<RegularizationReport, TransformError> {
    let a1_set = ordered_clique_set(g, a1)?;
    if let Some(v) = (a2 - g.vertex_set()).min_vertex() {
        return Err(TransformError::VertexOutOfRange(v, g.vertex_count()));
    }
    if a2.len() != a1.len() || !g.is_clique(a2) {
        return Err(TransformError::NotAClique(a2));
    }
    let t = a1.len() - 1;
    let union = a1_set | a2;
    let mut properties = Vec::with_capacity(4);

    let (e0, e1) = (g.edge_count(), gp.edge_count());
    properties.push(PropertyCheck {
        name: "edge-non-increase",
        passed: e1 <= e0,
        detail: format!("|E(G')| = {e1}, |E(G)| = {e0}"),
    });

    let mut confined = gp.is_clique(a1_set) && gp.is_clique(a2);
    let mut confinement_witness = String::new();
    if confined {
        for v in (a2 - a1_set).iter() {
            let escaped = gp.neighbors(v) - a2;
            if let Some(u) = escaped.min_vertex() {
                confined = false;
                confinement_witness = format!("edge ({v}, {u}) leaves a2");
                break;
            }
        }
    } else {
        confinement_witness = "a clique is no longer complete".into();
    }
    properties.push(PropertyCheck {
        name: "edge-confinement",
        passed: confined,
        detail: if confined {
            "both cliques complete; a2-difference edges confined".into()
        } else {
            confinement_witness
        },
    });

    let mut shifting = true;
    let mut shift_witness = String::new();
    for a3 in g.find_cliques(t + 1) {
        let m = (a3 & union).len();
        let mut a4 = a3 - union;
        for &v in &a1[..m] {
            a4.insert(v);
        }
        if !gp.is_clique(a4) {
            shifting = false;
            shift_witness = format!("clique {a3} shifts to non-clique {a4}");
            break;
        }
    }
    properties.push(PropertyCheck {
        name: "clique-shifting",
        passed: shifting,
        detail: if shifting {
            "every source clique shifts to a clique".into()
        } else {
            shift_witness
        },
    });

    let need = (t * (t - 1) / 2).min(g.min_triangle_degree());
    let got = gp.min_triangle_degree();
    properties.push(PropertyCheck {
        name: "triangle-maintenance",
        passed: got >= need,
        detail: format!("min triangle degree {got}, required {need}"),
    });

    Ok(RegularizationReport { properties })
}
