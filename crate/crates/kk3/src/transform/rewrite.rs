//! The two edge-saving rewrites: turning a boundary independent set into a
//! clique while redistributing the boundary adjacencies, and redirecting
//! apex-attached satellite sets in the degree-1 configuration.
//!
//! Both rewrites validate their structural preconditions and report the
//! failing condition instead of producing a graph from an invalid shape.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::{CliqueFamily, TransformError};

/// Output of [`clique_substitution`].
#[derive(Debug, Clone)]
pub struct CliqueSubstitution {
    pub graph: Graph,
    /// `|E(result)| - |E(input)|`.
    pub edge_delta: i64,
    /// The guaranteed upper bound `C(x,2) - sum of f_1(y)` over the kept set.
    pub delta_bound: i64,
    /// The subset of the independent set that was turned into a clique.
    pub kept: VertexSet,
    /// Whether every shifted boundary vertex kept its degree into the target
    /// window (false only if a vertex ran out of room, which cannot happen
    /// under the intended hypotheses).
    pub degrees_preserved: bool,
}

/// Rewrites `g` by turning the independent boundary set `x0` into a clique,
/// detaching it from the clique family, isolating every family member except
/// the first, and re-concentrating each remaining boundary vertex's
/// adjacency onto an initial segment of `X union D_1` (ascending labels, X
/// first).
///
/// `lambda` is the initial maximizer degree of the peeling run that produced
/// `x0`; when it equals 2 the largest vertex of `x0` is dropped before the
/// clique is formed.
pub fn clique_substitution(
    g: &Graph,
    x0: VertexSet,
    family: &CliqueFamily,
    lambda: usize,
) -> Result<CliqueSubstitution, TransformError> {
    // Revalidate the family against this graph.
    let family = CliqueFamily::new(g, family.t(), family.cliques().to_vec())?;
    let support = family.support();
    if !x0.is_disjoint(support) {
        return Err(TransformError::IntersectsFamily(x0 & support));
    }
    let boundary = g.neighborhood_of_set(support) - support;
    for v in x0.iter() {
        if !boundary.contains(v) {
            return Err(TransformError::NotInBoundary(v));
        }
        if let Some(u) = (g.neighbors(v) & x0).min_vertex() {
            return Err(TransformError::NotIndependent(v, u));
        }
    }
    if x0.is_empty() {
        return Err(TransformError::InvalidConfiguration(
            "independent set is empty".into(),
        ));
    }

    let kept = if lambda == 2 {
        x0.without(x0.max_vertex().unwrap())
    } else {
        x0
    };
    let x = kept.len();

    // Target window: kept vertices first, then the first clique, each in
    // ascending label order.
    let d1 = family.cliques()[0];
    let mut window_order: Vec<usize> = kept.to_vec();
    window_order.extend(d1.iter());
    let window: VertexSet = window_order.iter().copied().collect();

    // Boundary degrees into the family, measured on the input graph.
    let f1 = |v: usize| (g.neighbors(v) & support).len();

    let mut out = g.clone();

    // (i) The kept set becomes a clique and loses its family edges.
    for y in kept.iter() {
        for d in (out.neighbors(y) & support).iter() {
            out.remove_edge(y, d);
        }
    }
    let kept_vec: Vec<usize> = kept.to_vec();
    for (i, &u) in kept_vec.iter().enumerate() {
        for &v in &kept_vec[i + 1..] {
            out.add_edge(u, v);
        }
    }

    // (ii) Every family member except the first becomes isolated.
    for &dj in &family.cliques()[1..] {
        for v in dj.iter() {
            for w in (out.neighbors(v) - dj).iter() {
                out.remove_edge(v, w);
            }
        }
    }

    // (iii) Each remaining boundary vertex keeps its old neighbors inside the
    // kept set and fills up with the smallest available window vertices until
    // its family degree is restored.
    let mut degrees_preserved = true;
    for v in (boundary - kept).iter() {
        let keep = g.neighbors(v) & kept;
        for w in (out.neighbors(v) & window).iter() {
            out.remove_edge(v, w);
        }
        for w in keep.iter() {
            out.add_edge(v, w);
        }
        let mut need = f1(v);
        for &w in &window_order {
            if need == 0 {
                break;
            }
            if keep.contains(w) {
                continue;
            }
            out.add_edge(v, w);
            need -= 1;
        }
        if need > 0 {
            degrees_preserved = false;
        }
    }

    let edge_delta = out.edge_count() as i64 - g.edge_count() as i64;
    let fsum: i64 = kept.iter().map(|y| f1(y) as i64).sum();
    let delta_bound = (x * x.saturating_sub(1) / 2) as i64 - fsum;

    Ok(CliqueSubstitution {
        graph: out,
        edge_delta,
        delta_bound,
        kept,
        degrees_preserved,
    })
}

/// The degree-1 boundary configuration: per clique, its apex, its satellite
/// set, and the satellite sets' internal edge counts.
#[derive(Debug, Clone)]
pub struct ApexConfiguration {
    pub apexes: Vec<usize>,
    pub satellites: Vec<VertexSet>,
    /// Edges inside each satellite set.
    pub internal_edges: Vec<usize>,
}

/// Detects the degree-1 configuration of a clique family: every boundary
/// vertex has exactly one neighbor inside the support, every clique routes
/// all its external edges through a single apex vertex. Returns `None` when
/// the shape does not hold.
pub fn apex_configuration(g: &Graph, family: &CliqueFamily) -> Option<ApexConfiguration> {
    let support = family.support();
    let boundary = g.neighborhood_of_set(support) - support;
    for u in boundary.iter() {
        if (g.neighbors(u) & support).len() != 1 {
            return None;
        }
    }
    let mut apexes = Vec::with_capacity(family.len());
    let mut satellites = Vec::with_capacity(family.len());
    let mut internal_edges = Vec::with_capacity(family.len());
    for &d in family.cliques() {
        let mut apex = None;
        for v in d.iter() {
            if !(g.neighbors(v) - d).is_empty() {
                if apex.is_some() {
                    return None;
                }
                apex = Some(v);
            }
        }
        let apex = apex?;
        let w = g.neighbors(apex) - d;
        let e = w.iter().map(|u| (g.neighbors(u) & w).len()).sum::<usize>() / 2;
        apexes.push(apex);
        satellites.push(w);
        internal_edges.push(e);
    }
    Some(ApexConfiguration {
        apexes,
        satellites,
        internal_edges,
    })
}

/// Output of [`apex_redirection`].
#[derive(Debug, Clone)]
pub struct ApexRedirection {
    pub graph: Graph,
    /// `|E(result)| - |E(input)|`.
    pub edge_delta: i64,
    /// The guaranteed value `-1 - |N(pivot) & last satellite set|`.
    pub expected_delta: i64,
    /// The cliques derived from the apexes, first one kept attached.
    pub cliques: Vec<VertexSet>,
}

/// Rewrites the degree-1 configuration: drops the pivot's apex edge,
/// isolates every clique except the first, completes the pivot onto the last
/// satellite set, and re-attaches each intermediate satellite set to either
/// its paired pivot-class vertex or the first apex.
///
/// `satellites[i]` and `apexes[i]` describe the i-th clique's attachment;
/// `pivot` must lie in `satellites[0]` and `a` must equal `|satellites[0]|`.
/// The pair `(satellites[0], satellites[d-1])` must satisfy the swap
/// condition: no more internal edges in the first than in the last, and the
/// pivot has at most one neighbor in the last.
pub fn apex_redirection(
    l: &Graph,
    satellites: &[VertexSet],
    apexes: &[usize],
    pivot: usize,
    a: usize,
) -> Result<ApexRedirection, TransformError> {
    let bad = |msg: String| Err(TransformError::InvalidConfiguration(msg));
    let d = satellites.len();
    if d != apexes.len() {
        return bad(format!("{d} satellite sets but {} apexes", apexes.len()));
    }
    if d < 2 {
        return bad("need at least two cliques".into());
    }

    // Derive each clique from its apex: the apex plus its neighbors outside
    // the satellite set.
    let mut cliques = Vec::with_capacity(d);
    for (i, (&z, &w)) in apexes.iter().zip(satellites).enumerate() {
        if z >= l.vertex_count() {
            return bad(format!("apex {z} out of range"));
        }
        let dset = (l.neighbors(z) - w).with(z);
        if !l.is_clique(dset) {
            return bad(format!("apex {z} does not close a clique (got {dset})"));
        }
        if l.neighbors(z) - dset != w {
            return bad(format!(
                "satellite set {i} does not match the apex {z}'s external neighborhood"
            ));
        }
        for v in (dset.without(z)).iter() {
            if !(l.neighbors(v) - dset).is_empty() {
                return bad(format!(
                    "clique vertex {v} has external neighbors besides the apex {z}"
                ));
            }
        }
        cliques.push(dset);
    }
    let size = cliques[0].len();
    let mut support = VertexSet::empty();
    for (i, &c) in cliques.iter().enumerate() {
        if c.len() != size {
            return bad(format!("clique {i} has size {} != {size}", c.len()));
        }
        if !support.is_disjoint(c) {
            return bad(format!("clique {i} overlaps an earlier clique"));
        }
        support |= c;
    }
    let mut sat_union = VertexSet::empty();
    for (i, &w) in satellites.iter().enumerate() {
        if let Some(v) = (w - l.vertex_set()).min_vertex() {
            return bad(format!("satellite vertex {v} out of range in set {i}"));
        }
        if !sat_union.is_disjoint(w) {
            return bad(format!("satellite set {i} overlaps an earlier one"));
        }
        if !w.is_disjoint(support) {
            return bad(format!("satellite set {i} intersects the cliques"));
        }
        sat_union |= w;
        for u in w.iter() {
            let inside = l.neighbors(u) & support;
            if inside != VertexSet::singleton(apexes[i]) {
                return bad(format!(
                    "satellite vertex {u} is not attached exactly to its apex"
                ));
            }
        }
    }

    let w1 = satellites[0];
    let wd = satellites[d - 1];
    if !w1.contains(pivot) {
        return bad(format!("pivot {pivot} is not in the first satellite set"));
    }
    if a != w1.len() {
        return bad(format!(
            "a = {a} but the first satellite set has {} vertices",
            w1.len()
        ));
    }
    let internal = |w: VertexSet| w.iter().map(|u| (l.neighbors(u) & w).len()).sum::<usize>() / 2;
    let (e1, ed) = (internal(w1), internal(wd));
    if e1 > ed {
        return bad(format!(
            "first satellite set has {e1} internal edges > last's {ed}"
        ));
    }
    let pivot_in_last = (l.neighbors(pivot) & wd).len();
    if pivot_in_last > 1 {
        return bad(format!(
            "pivot has {pivot_in_last} neighbors in the last satellite set"
        ));
    }

    let z1 = apexes[0];
    let mut out = l.clone();

    // Deletions: the pivot's apex edge, then every external edge of the
    // cliques after the first.
    out.remove_edge(pivot, z1);
    for &c in &cliques[1..] {
        for v in c.iter() {
            for w in (out.neighbors(v) - c).iter() {
                out.remove_edge(v, w);
            }
        }
    }

    // Additions: complete the pivot onto the last satellite set.
    for u in wd.iter() {
        out.add_edge(pivot, u);
    }
    // Pair each intermediate satellite set with a first-set member while
    // they last, otherwise re-route it to the first apex. Member order: the
    // pivot first, then ascending labels.
    let mut members: Vec<usize> = vec![pivot];
    members.extend(w1.without(pivot).iter());
    for i in 1..d - 1 {
        let wi = satellites[i];
        let paired = members.get(i).copied();
        match paired {
            Some(wm) if (l.neighbors(wm) & wi).is_empty() => {
                for u in wi.iter() {
                    out.add_edge(u, wm);
                }
            }
            _ => {
                for u in wi.iter() {
                    out.add_edge(u, z1);
                }
            }
        }
    }

    let edge_delta = out.edge_count() as i64 - l.edge_count() as i64;
    let expected_delta = -1 - pivot_in_last as i64;
    Ok(ApexRedirection {
        graph: out,
        edge_delta,
        expected_delta,
        cliques,
    })
}
