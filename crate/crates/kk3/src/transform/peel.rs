//! The iterative clique-peeling procedure and the greedy independent-set
//! construction over its boundary classes.
//!
//! Each iteration picks the boundary vertex with the most neighbors inside
//! the surviving cliques (ties break toward the smallest label), groups the
//! boundary vertices sharing its exact neighborhood into a class, and
//! discards every clique the pivot touches. The full run is recorded as an
//! immutable trace.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::bounds::ceil_two_alpha;
use super::{CliqueFamily, TransformError};

/// One iteration of the peeling procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingStep {
    /// 1-based iteration index.
    pub index: usize,
    /// The chosen maximizer vertex.
    pub pivot: usize,
    /// Its number of neighbors inside the surviving clique support.
    pub pivot_degree: usize,
    /// All boundary vertices with the pivot's exact support neighborhood.
    pub class: VertexSet,
    /// The boundary at the start of this iteration.
    pub boundary: VertexSet,
    /// The cliques still alive at the start of this iteration.
    pub active_cliques: Vec<VertexSet>,
    /// How many cliques this pivot knocked out.
    pub removed_cliques: usize,
}

/// Full record of one peeling run, plus the derived window partition used by
/// the greedy independent-set construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingTrace {
    pub steps: Vec<PeelingStep>,
    /// The first pivot degree.
    pub lambda: usize,
    /// Plateau length of the first iteration; the window `1..=window` feeds
    /// the independent-set construction.
    pub window: usize,
    /// Vertices of the window classes whose class-union neighbors stay inside
    /// their own class.
    pub insular: VertexSet,
    /// 1-based indices of window classes that contain an insular vertex.
    pub anchored_classes: Vec<usize>,
    /// 1-based indices of the remaining window classes.
    pub open_classes: Vec<usize>,
}

impl PeelingTrace {
    /// Number of iterations performed.
    pub fn xi(&self) -> usize {
        self.steps.len()
    }

    pub fn step(&self, index: usize) -> Result<&PeelingStep, TransformError> {
        if index < 1 || index > self.steps.len() {
            return Err(TransformError::StepOutOfRange {
                index,
                xi: self.steps.len(),
            });
        }
        Ok(&self.steps[index - 1])
    }

    /// Union of the classes inside the window `1..=window`.
    pub fn window_vertices(&self) -> VertexSet {
        self.steps[..self.window]
            .iter()
            .fold(VertexSet::empty(), |acc, s| acc | s.class)
    }

    /// Largest run length `b` such that the pivot degree at `i + b - 1`
    /// still clears the decay threshold of the degree at `i`: at least
    /// `ceil(2 alpha f_i)/2 + 1` when `f_i >= 3`, and at least `f_i` itself
    /// when `f_i` is 1 or 2.
    pub fn plateau_length(&self, index: usize) -> Result<usize, TransformError> {
        let f = self.step(index)?.pivot_degree;
        let holds = |fj: usize| -> bool {
            if f >= 3 {
                2 * fj >= ceil_two_alpha(f) + 2
            } else {
                fj >= f
            }
        };
        let mut b = 0;
        for step in &self.steps[index - 1..] {
            if holds(step.pivot_degree) {
                b += 1;
            } else {
                break;
            }
        }
        Ok(b)
    }

    /// One line per iteration: index, pivot, pivot degree, class size,
    /// surviving family size.
    pub fn text_report(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!(
                "i={} u={} f={} |U|={} |D|={}\n",
                s.index,
                s.pivot,
                s.pivot_degree,
                s.class.len(),
                s.active_cliques.len()
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }
}

/// Runs the peeling procedure on a validated clique family.
///
/// Preconditions (checked): the family is nonempty, no edge joins two
/// distinct cliques, and every clique has an external neighbor. Under these
/// the boundary stays nonempty until the family empties, every iteration
/// removes at least one clique, and the run takes at most `|family|`
/// iterations.
pub fn peel(g: &Graph, family: &CliqueFamily) -> Result<PeelingTrace, TransformError> {
    if family.is_empty() {
        return Err(TransformError::EmptyFamily);
    }
    family.check_peelable(g)?;

    let mut active: Vec<VertexSet> = family.cliques().to_vec();
    let mut steps: Vec<PeelingStep> = Vec::new();
    while !active.is_empty() {
        let support = active.iter().fold(VertexSet::empty(), |acc, &c| acc | c);
        let boundary = g.neighborhood_of_set(support) - support;
        if boundary.is_empty() {
            break;
        }
        // Maximizer with ties broken toward the smallest label: ascending
        // iteration with a strict comparison.
        let mut pivot = usize::MAX;
        let mut best = 0usize;
        for u in boundary.iter() {
            let f = (g.neighbors(u) & support).len();
            if f > best {
                best = f;
                pivot = u;
            }
        }
        debug_assert!(best >= 1, "boundary vertices touch the support");
        let pivot_nbhd = g.neighbors(pivot) & support;
        let class: VertexSet = boundary
            .iter()
            .filter(|&v| g.neighbors(v) & support == pivot_nbhd)
            .collect();
        let survivors: Vec<VertexSet> = active
            .iter()
            .copied()
            .filter(|&d| d.is_disjoint(g.neighbors(pivot)))
            .collect();
        let removed = active.len() - survivors.len();
        debug_assert!(removed >= 1);
        if let Some(prev) = steps.last() {
            debug_assert!(best <= prev.pivot_degree, "maximizer degrees decay");
        }
        steps.push(PeelingStep {
            index: steps.len() + 1,
            pivot,
            pivot_degree: best,
            class,
            boundary,
            active_cliques: active,
            removed_cliques: removed,
        });
        active = survivors;
    }

    let lambda = steps[0].pivot_degree;
    let mut trace = PeelingTrace {
        steps,
        lambda,
        window: 0,
        insular: VertexSet::empty(),
        anchored_classes: Vec::new(),
        open_classes: Vec::new(),
    };
    trace.window = trace.plateau_length(1)?;

    let window_union = trace.window_vertices();
    for step in &trace.steps[..trace.window] {
        for u in step.class.iter() {
            if (g.neighbors(u) & window_union).is_subset(step.class) {
                trace.insular.insert(u);
            }
        }
    }
    for step in &trace.steps[..trace.window] {
        if step.class.is_disjoint(trace.insular) {
            trace.open_classes.push(step.index);
        } else {
            trace.anchored_classes.push(step.index);
        }
    }
    Ok(trace)
}

/// Result of the greedy independent-set construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSelection {
    /// The constructed independent set, a subset of the window classes.
    pub vertices: VertexSet,
    /// Vertices in pick order.
    pub picks: Vec<usize>,
    pub target: usize,
    /// Whether the target size was reached.
    pub met: bool,
}

/// Builds an independent set inside the window classes: first one insular
/// representative per anchored class, then a greedy sweep over the open
/// classes in order of non-decreasing class size, removing each picked
/// vertex's class and neighborhood.
///
/// Falling short of `target` is reported, not an error: feasibility is only
/// guaranteed under hypotheses that small instances need not satisfy.
pub fn greedy_independent_set(
    g: &Graph,
    trace: &PeelingTrace,
    target: usize,
) -> IndependentSelection {
    let mut picks: Vec<usize> = Vec::new();

    for &i in &trace.anchored_classes {
        if picks.len() == target {
            break;
        }
        let class = trace.steps[i - 1].class;
        let rep = (class & trace.insular)
            .min_vertex()
            .expect("anchored classes contain an insular vertex");
        picks.push(rep);
    }

    if picks.len() < target {
        // Open classes ordered by non-decreasing size, ties by index.
        let mut order: Vec<usize> = trace.open_classes.clone();
        order.sort_by_key(|&i| (trace.steps[i - 1].class.len(), i));

        let mut remaining = trace.window_vertices();
        for &i in &trace.anchored_classes {
            remaining -= trace.steps[i - 1].class;
        }

        while picks.len() < target && !remaining.is_empty() {
            let Some(&cls) = order
                .iter()
                .find(|&&i| !(trace.steps[i - 1].class & remaining).is_empty())
            else {
                break;
            };
            let class = trace.steps[cls - 1].class;
            let v = (class & remaining).min_vertex().unwrap();
            picks.push(v);
            remaining -= class;
            remaining -= g.neighbors(v);
        }
    }

    let vertices: VertexSet = picks.iter().copied().collect();
    IndependentSelection {
        met: picks.len() >= target,
        vertices,
        picks,
        target,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disjoint_triangles(k: usize, extra: usize) -> Graph {
        let mut g = Graph::new(3 * k + extra);
        for b in 0..k {
            g.add_edge(3 * b, 3 * b + 1);
            g.add_edge(3 * b, 3 * b + 2);
            g.add_edge(3 * b + 1, 3 * b + 2);
        }
        g
    }

    fn family_of_triangles(g: &Graph, k: usize) -> CliqueFamily {
        let cliques = (0..k)
            .map(|b| VertexSet::from_slice(&[3 * b, 3 * b + 1, 3 * b + 2]))
            .collect();
        CliqueFamily::new(g, 2, cliques).unwrap()
    }

    #[test]
    fn single_boundary_vertex_touching_both_cliques() {
        let mut g = disjoint_triangles(2, 1);
        g.add_edge(6, 0);
        g.add_edge(6, 3);
        let fam = family_of_triangles(&g, 2);
        let trace = peel(&g, &fam).unwrap();
        assert_eq!(trace.xi(), 1);
        assert_eq!(trace.lambda, 2);
        assert_eq!(trace.steps[0].pivot, 6);
        assert_eq!(trace.steps[0].class, VertexSet::singleton(6));
        assert_eq!(trace.steps[0].removed_cliques, 2);
    }

    #[test]
    fn private_boundary_vertices_one_per_clique() {
        let k = 4;
        let mut g = disjoint_triangles(k, k);
        for b in 0..k {
            g.add_edge(3 * k + b, 3 * b);
        }
        let fam = family_of_triangles(&g, k);
        let trace = peel(&g, &fam).unwrap();
        assert_eq!(trace.xi(), k);
        for s in &trace.steps {
            assert_eq!(s.pivot_degree, 1);
            assert_eq!(s.removed_cliques, 1);
        }
        let removed_total: usize = trace.steps.iter().map(|s| s.removed_cliques).sum();
        assert_eq!(removed_total, k);
    }

    #[test]
    fn two_class_three_clique_shape() {
        // Two boundary classes over three cliques: u touches cliques 0 and 1,
        // v touches cliques 1 and 2.
        let mut g = disjoint_triangles(3, 2);
        let (u, v) = (9, 10);
        g.add_edge(u, 0);
        g.add_edge(u, 3);
        g.add_edge(v, 4);
        g.add_edge(v, 6);
        let fam = family_of_triangles(&g, 3);
        let trace = peel(&g, &fam).unwrap();

        // Manual simulation: iteration 1 picks u (tie on f=2, smaller label),
        // removing cliques 0 and 1; iteration 2 sees v with f=1 against the
        // last clique.
        assert_eq!(trace.xi(), 2);
        assert_eq!(trace.steps[0].pivot, u);
        assert_eq!(trace.steps[0].pivot_degree, 2);
        assert_eq!(trace.steps[0].class, VertexSet::singleton(u));
        assert_eq!(trace.steps[0].removed_cliques, 2);
        assert_eq!(trace.steps[0].boundary, VertexSet::from_slice(&[u, v]));
        assert_eq!(trace.steps[1].pivot, v);
        assert_eq!(trace.steps[1].pivot_degree, 1);
        assert_eq!(
            trace.steps[1].active_cliques,
            vec![VertexSet::from_slice(&[6, 7, 8])]
        );
        let removed_total: usize = trace.steps.iter().map(|s| s.removed_cliques).sum();
        assert_eq!(removed_total, fam.len());
    }

    #[test]
    fn peel_rejects_bad_families() {
        let g = disjoint_triangles(2, 0);
        let fam = family_of_triangles(&g, 2);
        assert!(matches!(
            peel(&g, &fam),
            Err(TransformError::NoExternalNeighbor(_))
        ));

        let mut crossed = disjoint_triangles(2, 1);
        crossed.add_edge(6, 0);
        crossed.add_edge(2, 3);
        let fam = family_of_triangles(&crossed, 2);
        assert!(matches!(
            peel(&crossed, &fam),
            Err(TransformError::CrossCliqueEdge(_, _))
        ));
    }

    #[test]
    fn plateau_thresholds() {
        // f-sequence (3,3,3,3,3,2): threshold for f=3 is ceil(24/7)/2 + 1 = 3,
        // so the plateau from index 1 has length 5.
        let f_seq = [3, 3, 3, 3, 3, 2];
        let trace = synthetic_trace(&f_seq);
        assert_eq!(trace.plateau_length(1).unwrap(), 5);

        // f = 1: the plateau counts the trailing run of ones.
        let trace = synthetic_trace(&[1, 1, 1]);
        assert_eq!(trace.plateau_length(1).unwrap(), 3);
        assert_eq!(trace.plateau_length(2).unwrap(), 2);

        // f-sequence (2,2,1): threshold 2, plateau 2.
        let trace = synthetic_trace(&[2, 2, 1]);
        assert_eq!(trace.plateau_length(1).unwrap(), 2);
        assert!(trace.plateau_length(4).is_err());
        assert!(trace.plateau_length(0).is_err());
    }

    /// Builds a trace with the given pivot-degree sequence and empty
    /// structural fields, for exercising the plateau arithmetic alone.
    fn synthetic_trace(f_seq: &[usize]) -> PeelingTrace {
        let steps = f_seq
            .iter()
            .enumerate()
            .map(|(i, &f)| PeelingStep {
                index: i + 1,
                pivot: i,
                pivot_degree: f,
                class: VertexSet::singleton(i),
                boundary: VertexSet::singleton(i),
                active_cliques: Vec::new(),
                removed_cliques: 1,
            })
            .collect();
        PeelingTrace {
            steps,
            lambda: f_seq[0],
            window: 0,
            insular: VertexSet::empty(),
            anchored_classes: Vec::new(),
            open_classes: Vec::new(),
        }
    }

    #[test]
    fn greedy_takes_insular_representatives_first() {
        // Four cliques, each with one private boundary vertex; all classes
        // are insular singletons, so the greedy set is the first `target`
        // representatives.
        let k = 4;
        let mut g = disjoint_triangles(k, k);
        for b in 0..k {
            g.add_edge(3 * k + b, 3 * b);
        }
        let fam = family_of_triangles(&g, k);
        let trace = peel(&g, &fam).unwrap();
        assert_eq!(trace.window, k);
        assert_eq!(trace.anchored_classes.len(), k);
        let sel = greedy_independent_set(&g, &trace, 3);
        assert!(sel.met);
        assert_eq!(sel.picks, vec![12, 13, 14]);
        for (i, &u) in sel.picks.iter().enumerate() {
            for &v in &sel.picks[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn greedy_avoids_neighbors_across_open_classes() {
        // Three cliques with doubleton classes; one cross edge between
        // members of different classes turns them open, and the greedy sweep
        // must avoid picking both endpoints.
        let k = 3;
        let mut g = disjoint_triangles(k, 6);
        for b in 0..k {
            let (x, y) = (9 + 2 * b, 9 + 2 * b + 1);
            g.add_edge(x, 3 * b);
            g.add_edge(y, 3 * b);
        }
        // Cross edges between class 0 and class 1, and class 0 and class 2,
        // so all three classes are open.
        g.add_edge(9, 11);
        g.add_edge(10, 13);
        g.add_edge(9, 14);
        g.add_edge(10, 12);
        let fam = family_of_triangles(&g, k);
        let trace = peel(&g, &fam).unwrap();
        assert_eq!(trace.window, 3);
        assert_eq!(trace.anchored_classes, Vec::<usize>::new());
        let sel = greedy_independent_set(&g, &trace, 3);
        let picked: Vec<usize> = sel.picks.clone();
        for (i, &u) in picked.iter().enumerate() {
            for &v in &picked[i + 1..] {
                assert!(!g.has_edge(u, v), "picked adjacent pair ({u},{v})");
            }
        }
        // At most one vertex per class.
        for step in &trace.steps[..trace.window] {
            assert!((step.class & sel.vertices).len() <= 1);
        }
    }

    #[test]
    fn greedy_reports_shortfall() {
        let mut g = disjoint_triangles(1, 1);
        g.add_edge(3, 0);
        let fam = family_of_triangles(&g, 1);
        let trace = peel(&g, &fam).unwrap();
        let sel = greedy_independent_set(&g, &trace, 5);
        assert!(!sel.met);
        assert_eq!(sel.vertices.len(), 1);
    }

    #[test]
    fn trace_serialization_is_stable() {
        let mut g = disjoint_triangles(2, 1);
        g.add_edge(6, 0);
        g.add_edge(6, 3);
        let fam = family_of_triangles(&g, 2);
        let trace = peel(&g, &fam).unwrap();
        let a = trace.to_json();
        let b = peel(&g, &fam).unwrap().to_json();
        assert_eq!(a, b);
        let back: PeelingTrace = serde_json::from_str(&a).unwrap();
        assert_eq!(back, trace);
        assert!(trace.text_report().starts_with("i=1 u=6 f=2 |U|=1 |D|=2"));
    }
}
