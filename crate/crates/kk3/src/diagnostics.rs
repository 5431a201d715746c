//! Machine checks of the structural inequalities on concrete graphs.
//!
//! Every check is a pure function returning a report entry; none of them
//! mutates the graph, and re-running yields an identical report. Failures on
//! arbitrary graphs are data, not errors: most of the inequalities are only
//! guaranteed on edge-minimal graphs, so a violation on a hand-built
//! instance is expected output. Vacuous passes (the hypothesis never fired)
//! are distinguished from substantive ones.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::search::format_rational;
use crate::search::Rational;
use crate::shadow::BOUND_TOLERANCE;
use crate::transform::{
    apex_configuration, ceil_alpha, extract_clique_family_unfiltered, greedy_independent_set,
    greedy_target, peel, theta, CliqueFamily, PeelingTrace,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The inequality's hypothesis never fired on this input.
    Vacuous,
    /// The input is not in the configuration the check speaks about.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckEntry {
    fn new(name: &str, status: CheckStatus, detail: String) -> Self {
        CheckEntry {
            name: name.to_string(),
            status,
            detail,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// A report over one graph: every registered check appears exactly once.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagnosticsReport {
    pub graph: String,
    pub t: String,
    pub checks: Vec<CheckEntry>,
}

impl DiagnosticsReport {
    pub fn new(g: &Graph, t: Rational) -> Self {
        DiagnosticsReport {
            graph: to_graph6(g),
            t: format_rational(t),
            checks: Vec::new(),
        }
    }

    pub fn add(&mut self, entry: CheckEntry) {
        assert!(
            self.checks.iter().all(|c| c.name != entry.name),
            "check {} registered twice",
            entry.name
        );
        self.checks.push(entry);
    }

    pub fn no_failures(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Split of the vertex set by degree: exactly `t` versus everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreePartition {
    pub exact: VertexSet,
    pub rest: VertexSet,
}

pub fn degree_partition(g: &Graph, t: usize) -> DegreePartition {
    let mut exact = VertexSet::empty();
    for v in g.vertices() {
        if g.degree(v) == t {
            exact.insert(v);
        }
    }
    DegreePartition {
        exact,
        rest: g.vertex_set() - exact,
    }
}

/// Excess-degree bound: `sum over v of (deg(v) - t) <= (t+1)^2 / 4`, checked
/// exactly (both sides times 4).
pub fn check_excess_degree(g: &Graph, t: usize) -> CheckEntry {
    let sum: i64 = g.vertices().map(|v| g.degree(v) as i64 - t as i64).sum();
    let bound4 = ((t + 1) * (t + 1)) as i64;
    let passed = 4 * sum <= bound4;
    CheckEntry::new(
        "excess-degree",
        if passed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        format!("excess sum {sum}, bound {bound4}/4"),
    )
}

/// Clique-family structure: among all `K_{t+1}` vertex sets, at most one
/// intersecting pair, and no edge joins the differences of any two of them.
pub fn check_clique_family(g: &Graph, t: usize) -> CheckEntry {
    let cliques = g.find_cliques(t + 1);
    if cliques.is_empty() {
        return CheckEntry::new(
            "clique-family",
            CheckStatus::Vacuous,
            "no cliques of the required order".into(),
        );
    }
    let mut intersecting = 0usize;
    let mut cross_edges = 0usize;
    for (i, &a) in cliques.iter().enumerate() {
        for &b in &cliques[i + 1..] {
            if !a.is_disjoint(b) {
                intersecting += 1;
            }
            for u in (a - b).iter() {
                cross_edges += (g.neighbors(u) & (b - a)).len();
            }
        }
    }
    let passed = intersecting <= 1 && cross_edges == 0;
    CheckEntry::new(
        "clique-family",
        if passed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        format!(
            "{} cliques, {intersecting} intersecting pair(s), {cross_edges} cross edge(s)",
            cliques.len()
        ),
    )
}

/// Splits the `K_{t+1}` family by the excess-degree cutoff `theta(t)`: the
/// low-excess cliques first, the rest second.
pub fn partition_by_excess(g: &Graph, t: usize) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let cutoff = theta(t as f64);
    let mut low = Vec::new();
    let mut high = Vec::new();
    for c in g.find_cliques(t + 1) {
        let excess: i64 = c.iter().map(|v| g.degree(v) as i64 - t as i64).sum();
        if (excess as f64) < cutoff {
            low.push(c);
        } else {
            high.push(c);
        }
    }
    (low, high)
}

fn family_degree(g: &Graph, support: VertexSet, v: usize) -> usize {
    (g.neighbors(v) & support).len()
}

/// Neighbor nesting inequalities over the peeling classes:
///
/// - for `u` in a class and `u'` in the boundary outside it,
///   `min(f(u) - 1, f(u')) >= |N(u) & N(u') & support|`;
/// - for `u`, `u'` in distinct window classes the right side gains a
///   `ceil(alpha * lambda)` margin.
pub fn check_neighbor_nesting(
    g: &Graph,
    family: &CliqueFamily,
    trace: &PeelingTrace,
) -> CheckEntry {
    let support = family.support();
    let boundary = family.boundary(g);
    let margin = ceil_alpha(trace.lambda);
    let mut applicable = 0usize;

    for step in &trace.steps {
        for u in step.class.iter() {
            let fu = family_degree(g, support, u);
            for up in (boundary - step.class).iter() {
                applicable += 1;
                let fup = family_degree(g, support, up);
                let common = (g.neighbors(u) & g.neighbors(up) & support).len();
                let lhs = (fu as i64 - 1).min(fup as i64);
                if lhs < common as i64 {
                    return CheckEntry::new(
                        "neighbor-nesting",
                        CheckStatus::Fail,
                        format!(
                            "same-class side violated at (u={u}, u'={up}): min({}, {fup}) < {common}",
                            fu as i64 - 1
                        ),
                    );
                }
            }
        }
    }

    let window = &trace.steps[..trace.window];
    for (i, si) in window.iter().enumerate() {
        for sj in &window[i + 1..] {
            for u in si.class.iter() {
                for up in sj.class.iter() {
                    applicable += 1;
                    let fu = family_degree(g, support, u);
                    let fup = family_degree(g, support, up);
                    let common = (g.neighbors(u) & g.neighbors(up) & support).len();
                    if fu.min(fup) < common + margin {
                        return CheckEntry::new(
                            "neighbor-nesting",
                            CheckStatus::Fail,
                            format!(
                                "distinct-class side violated at (u={u}, u'={up}): min({fu},{fup}) < {common} + {margin}"
                            ),
                        );
                    }
                }
            }
        }
    }

    if applicable == 0 {
        CheckEntry::new(
            "neighbor-nesting",
            CheckStatus::Vacuous,
            "no applicable vertex pairs".into(),
        )
    } else {
        CheckEntry::new(
            "neighbor-nesting",
            CheckStatus::Pass,
            format!("{applicable} pair inequalities hold"),
        )
    }
}

/// Cross-degree bound for open window classes: every member has at most
/// `(lambda + a_i - 2) / (ceil(alpha lambda) - 1)` neighbors in the other
/// window classes. Needs `lambda >= 2`.
pub fn check_cross_degree(g: &Graph, trace: &PeelingTrace) -> CheckEntry {
    let lambda = trace.lambda;
    if lambda < 2 {
        return CheckEntry::new(
            "cross-degree",
            CheckStatus::NotApplicable,
            "lambda < 2".into(),
        );
    }
    let denom = (ceil_alpha(lambda) - 1) as i64;
    let union = trace.window_vertices();
    let mut applicable = 0usize;
    for &i in &trace.open_classes {
        let class = trace.steps[i - 1].class;
        let a_i = class.len() as i64;
        for u in class.iter() {
            applicable += 1;
            let cross = (g.neighbors(u) & (union - class)).len() as i64;
            // cross <= (lambda + a_i - 2) / denom, compared exactly.
            if cross * denom > lambda as i64 + a_i - 2 {
                return CheckEntry::new(
                    "cross-degree",
                    CheckStatus::Fail,
                    format!(
                        "vertex {u} in class {i}: {cross} cross neighbors > ({lambda} + {a_i} - 2)/{denom}"
                    ),
                );
            }
        }
    }
    if applicable == 0 {
        CheckEntry::new(
            "cross-degree",
            CheckStatus::Vacuous,
            "no open window classes".into(),
        )
    } else {
        CheckEntry::new(
            "cross-degree",
            CheckStatus::Pass,
            format!("{applicable} vertices within the bound"),
        )
    }
}

/// Shift-sum bound: for every boundary vertex `v` and every subset size
/// `zeta` of the independent set, the `zeta` largest common-neighborhood
/// contributions sum to at most `zeta (lambda - ceil(alpha lambda)) +
/// lambda`.
pub fn check_shift_sum(
    g: &Graph,
    family: &CliqueFamily,
    x0: VertexSet,
    trace: &PeelingTrace,
) -> CheckEntry {
    let support = family.support();
    let boundary = family.boundary(g);
    let lambda = trace.lambda as i64;
    let slack = lambda - ceil_alpha(trace.lambda) as i64;
    if x0.is_empty() {
        return CheckEntry::new(
            "shift-sum",
            CheckStatus::Pass,
            format!("empty set: 0 <= {lambda}"),
        );
    }
    let mut checked = 0usize;
    for v in boundary.iter() {
        let mut contributions: Vec<i64> = x0
            .iter()
            .map(|x| (g.neighbors(v) & g.neighbors(x) & support).len() as i64)
            .collect();
        contributions.sort_unstable_by(|a, b| b.cmp(a));
        let mut acc = 0i64;
        for (idx, c) in contributions.iter().enumerate() {
            let zeta = (idx + 1) as i64;
            acc += c;
            checked += 1;
            if acc > zeta * slack + lambda {
                return CheckEntry::new(
                    "shift-sum",
                    CheckStatus::Fail,
                    format!("vertex {v}, zeta={zeta}: sum {acc} > {zeta}*{slack} + {lambda}"),
                );
            }
        }
    }
    CheckEntry::new(
        "shift-sum",
        CheckStatus::Pass,
        format!("{checked} (vertex, zeta) inequalities hold"),
    )
}

/// Structure of the degree-1 configuration: every satellite set has at
/// least two vertices and is not independent; also reports whether a swap
/// pair (two sets with ordered internal edge counts and a low-overlap
/// vertex) exists.
pub fn check_apex_satellites(l: &Graph, family: &CliqueFamily) -> CheckEntry {
    let Some(config) = apex_configuration(l, family) else {
        return CheckEntry::new(
            "apex-satellites",
            CheckStatus::NotApplicable,
            "not a degree-1 configuration".into(),
        );
    };
    for (i, w) in config.satellites.iter().enumerate() {
        if w.len() < 2 {
            return CheckEntry::new(
                "apex-satellites",
                CheckStatus::Fail,
                format!("satellite set {i} has {} vertex", w.len()),
            );
        }
        if config.internal_edges[i] == 0 {
            return CheckEntry::new(
                "apex-satellites",
                CheckStatus::Fail,
                format!("satellite set {i} is independent"),
            );
        }
    }
    let d = config.satellites.len();
    let mut pair = None;
    'outer: for i in 0..d {
        for j in 0..d {
            if i == j || config.internal_edges[i] > config.internal_edges[j] {
                continue;
            }
            for w in config.satellites[i].iter() {
                if (l.neighbors(w) & config.satellites[j]).len() <= 1 {
                    pair = Some((i, j, w));
                    break 'outer;
                }
            }
        }
    }
    let pair_note = match (d, pair) {
        (1, _) => "swap-pair search vacuous (single clique)".to_string(),
        (_, Some((i, j, w))) => format!("swap pair found: sets ({i}, {j}), vertex {w}"),
        (_, None) => "no swap pair exists".to_string(),
    };
    CheckEntry::new(
        "apex-satellites",
        CheckStatus::Pass,
        format!("{d} satellite set(s) well-formed; {pair_note}"),
    )
}

/// Contact bound: a boundary vertex with at least `sqrt(2 theta) + 3`
/// support neighbors touches at most 3 cliques, and with at least
/// `sqrt(3 theta) + 5` at most 2.
pub fn check_contact_bound(g: &Graph, family: &CliqueFamily, t: usize) -> CheckEntry {
    let th = theta(t as f64);
    let thr_three = (2.0 * th).sqrt() + 3.0;
    let thr_two = (3.0 * th).sqrt() + 5.0;
    let support = family.support();
    let boundary = family.boundary(g);
    let mut applicable = 0usize;
    for u in boundary.iter() {
        let mu = (g.neighbors(u) & support).len() as f64;
        let contacts = family
            .cliques()
            .iter()
            .filter(|&&d| !(g.neighbors(u) & d).is_empty())
            .count();
        if mu >= thr_three - BOUND_TOLERANCE {
            applicable += 1;
            if contacts > 3 {
                return CheckEntry::new(
                    "contact-bound",
                    CheckStatus::Fail,
                    format!("vertex {u}: mu={mu} >= {thr_three:.4} but touches {contacts} cliques"),
                );
            }
        }
        if mu >= thr_two - BOUND_TOLERANCE {
            applicable += 1;
            if contacts > 2 {
                return CheckEntry::new(
                    "contact-bound",
                    CheckStatus::Fail,
                    format!("vertex {u}: mu={mu} >= {thr_two:.4} but touches {contacts} cliques"),
                );
            }
        }
    }
    if applicable == 0 {
        CheckEntry::new(
            "contact-bound",
            CheckStatus::Vacuous,
            "no boundary vertex met either hypothesis".into(),
        )
    } else {
        CheckEntry::new(
            "contact-bound",
            CheckStatus::Pass,
            format!("{applicable} hypothesis instance(s) hold"),
        )
    }
}

/// Runs every applicable check on one graph at integer `t`, deriving a
/// clique family and peeling trace when possible.
pub fn run_all(g: &Graph, t: usize) -> DiagnosticsReport {
    let mut report = DiagnosticsReport::new(g, Rational::from_integer(t as i64));
    report.add(check_excess_degree(g, t));
    report.add(check_clique_family(g, t));

    let family = extract_clique_family_unfiltered(g, t);
    match family {
        None => {
            for name in [
                "apex-satellites",
                "contact-bound",
                "neighbor-nesting",
                "cross-degree",
                "shift-sum",
            ] {
                report.add(CheckEntry::new(
                    name,
                    CheckStatus::NotApplicable,
                    "no peelable clique family".into(),
                ));
            }
        }
        Some(family) => {
            report.add(check_apex_satellites(g, &family));
            report.add(check_contact_bound(g, &family, t));
            match peel(g, &family) {
                Err(err) => {
                    for name in ["neighbor-nesting", "cross-degree", "shift-sum"] {
                        report.add(CheckEntry::new(
                            name,
                            CheckStatus::NotApplicable,
                            format!("peeling failed: {err}"),
                        ));
                    }
                }
                Ok(trace) => {
                    report.add(check_neighbor_nesting(g, &family, &trace));
                    report.add(check_cross_degree(g, &trace));
                    let target = greedy_target(trace.lambda);
                    let selection = greedy_independent_set(g, &trace, target);
                    report.add(check_shift_sum(g, &family, selection.vertices, &trace));
                }
            }
        }
    }
    report
}
