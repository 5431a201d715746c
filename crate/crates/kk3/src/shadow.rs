//! k-uniform set families, shadows, and the Lovász form of the
//! Kruskal-Katona lower bound.
//!
//! A family is stored deduplicated and sorted in colexicographic order, so
//! equality of families is structural equality. All bound comparisons are
//! float-based with an absolute tolerance of 1e-9; family sizes stay exact.

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::Graph;

/// Absolute tolerance for real-valued bound comparisons.
pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum ShadowError {
    #[error("member {member} has {got} elements, expected {expected}")]
    WrongUniformity {
        member: usize,
        got: usize,
        expected: usize,
    },
    #[error("member {0} is not contained in the universe 0..{1}")]
    OutsideUniverse(VertexSet, usize),
    #[error("shadow order {ell} must satisfy 1 <= ell <= {k}")]
    BadShadowOrder { ell: usize, k: usize },
    #[error("generalized binomial requires x >= k, got x={x}, k={k}")]
    BinomialDomain { x: f64, k: usize },
    #[error("binomial inverse requires m >= 1, got {0}")]
    InverseDomain(f64),
    #[error("operation requires a 3-uniform family, got k={0}")]
    NotThreeUniform(usize),
    #[error("malformed family text: {0}")]
    BadFamilyText(String),
}

/// A k-uniform family of subsets of `{0, ..., universe-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFamily {
    k: usize,
    universe: usize,
    sets: Vec<VertexSet>,
}

impl KFamily {
    /// Builds a family, deduplicating and sorting members into colex order.
    pub fn new<I>(k: usize, universe: usize, members: I) -> Result<Self, ShadowError>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        assert!(
            universe <= MAX_VERTICES,
            "universe capacity is {MAX_VERTICES}"
        );
        let full = VertexSet::full(universe);
        let mut sets: Vec<VertexSet> = Vec::new();
        for (i, s) in members.into_iter().enumerate() {
            if s.len() != k {
                return Err(ShadowError::WrongUniformity {
                    member: i,
                    got: s.len(),
                    expected: k,
                });
            }
            if !s.is_subset(full) {
                return Err(ShadowError::OutsideUniverse(s, universe));
            }
            sets.push(s);
        }
        sets.sort();
        sets.dedup();
        Ok(KFamily { k, universe, sets })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// Number of members containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.sets.iter().filter(|s| s.contains(v)).count()
    }

    /// Minimum vertex degree over the universe.
    pub fn min_degree(&self) -> usize {
        (0..self.universe)
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    pub fn is_subfamily_of(&self, other: &KFamily) -> bool {
        self.sets.iter().all(|s| other.contains(*s))
    }

    /// The `ell`-shadow: every `ell`-subset contained in some member.
    pub fn shadow(&self, ell: usize) -> Result<KFamily, ShadowError> {
        if ell < 1 || ell > self.k {
            return Err(ShadowError::BadShadowOrder { ell, k: self.k });
        }
        let mut out: Vec<VertexSet> = Vec::new();
        for &s in &self.sets {
            let elems: Vec<usize> = s.iter().collect();
            push_subsets(&elems, ell, &mut out);
        }
        out.sort();
        out.dedup();
        Ok(KFamily {
            k: ell,
            universe: self.universe,
            sets: out,
        })
    }

    /// Text form: header `k n`, then one member per line as comma-separated
    /// labels.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.k, self.universe);
        for s in &self.sets {
            let labels: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ShadowError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| ShadowError::BadFamilyText("missing header".into()))?;
        let mut it = header.split_whitespace();
        let (k, n) = match (it.next(), it.next(), it.next()) {
            (Some(k), Some(n), None) => (k, n),
            _ => {
                return Err(ShadowError::BadFamilyText(format!(
                    "expected header `k n`, got {header:?}"
                )))
            }
        };
        let k: usize = k
            .parse()
            .map_err(|_| ShadowError::BadFamilyText(format!("bad k {k:?}")))?;
        let n: usize = n
            .parse()
            .map_err(|_| ShadowError::BadFamilyText(format!("bad n {n:?}")))?;
        if n > MAX_VERTICES {
            return Err(ShadowError::BadFamilyText(format!(
                "universe {n} exceeds capacity {MAX_VERTICES}"
            )));
        }
        let mut members = Vec::new();
        for line in lines {
            let s = VertexSet::parse(line).map_err(ShadowError::BadFamilyText)?;
            members.push(s);
        }
        KFamily::new(k, n, members)
    }
}

fn push_subsets(elems: &[usize], ell: usize, out: &mut Vec<VertexSet>) {
    fn rec(elems: &[usize], start: usize, left: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=elems.len() - left {
            rec(elems, i + 1, left - 1, acc.with(elems[i]), out);
        }
    }
    rec(elems, 0, ell, VertexSet::empty(), out);
}

/// A checked generalized binomial coefficient `C(x, k)` for real `x >= k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinomialValue {
    pub x: f64,
    pub k: usize,
    pub value: f64,
}

impl BinomialValue {
    pub fn new(x: f64, k: usize) -> Result<Self, ShadowError> {
        Ok(BinomialValue {
            x,
            k,
            value: gen_binomial(x, k)?,
        })
    }
}

/// `C(x, k) = x (x-1) ... (x-k+1) / k!` for real `x >= k >= 0`.
///
/// Arguments with `x < k` are rejected rather than extended polynomially.
pub fn gen_binomial(x: f64, k: usize) -> Result<f64, ShadowError> {
    if !x.is_finite() || x + BOUND_TOLERANCE < k as f64 {
        return Err(ShadowError::BinomialDomain { x, k });
    }
    let mut value = 1.0;
    for i in 0..k {
        value *= (x - i as f64) / (i + 1) as f64;
    }
    Ok(value.max(0.0))
}

/// The unique `x >= k` with `gen_binomial(x, k) = m`, found by bisection on
/// the monotone branch to an absolute tolerance of 1e-12.
pub fn binomial_inverse(m: f64, k: usize) -> Result<f64, ShadowError> {
    if m.is_nan() || m < 1.0 {
        return Err(ShadowError::InverseDomain(m));
    }
    assert!(k >= 1, "binomial inverse requires k >= 1");
    let target = m;
    let mut lo = k as f64;
    let mut hi = k as f64 + 1.0;
    while gen_binomial(hi, k).expect("hi >= k") < target {
        hi = k as f64 + 2.0 * (hi - k as f64);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if gen_binomial(mid, k).expect("mid >= k") < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Lovász-form Kruskal-Katona lower bound: every k-uniform family of size `m`
/// has an `ell`-shadow of size at least `C(x, ell)` where `C(x, k) = m`.
pub fn lovasz_shadow_bound(m: usize, k: usize, ell: usize) -> Result<f64, ShadowError> {
    if ell < 1 || ell > k {
        return Err(ShadowError::BadShadowOrder { ell, k });
    }
    if m == 0 {
        return Ok(0.0);
    }
    let x = binomial_inverse(m as f64, k)?;
    gen_binomial(x, ell)
}

/// The first `m` k-subsets of the natural numbers in colexicographic order.
pub fn colex_segment(m: usize, k: usize) -> KFamily {
    assert!(k >= 1, "colex segments need k >= 1");
    let mut sets = Vec::with_capacity(m);
    if m > 0 {
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            sets.push(VertexSet::from_slice(&current));
            if sets.len() == m {
                break;
            }
            // Colex successor: bump the first element that has room below its
            // right neighbor, resetting everything before it.
            let mut i = 0;
            while i + 1 < k && current[i] + 1 == current[i + 1] {
                i += 1;
            }
            current[i] += 1;
            for j in 0..i {
                current[j] = j;
            }
            assert!(
                current[k - 1] < MAX_VERTICES,
                "colex segment of size {m} exceeds the vertex capacity"
            );
        }
    }
    let universe = sets
        .iter()
        .filter_map(|s| s.max_vertex())
        .max()
        .map_or(0, |v| v + 1);
    KFamily::new(k, universe, sets).expect("colex members are k-sets by construction")
}

/// The graph whose edges are the 2-shadow of a 3-uniform family, together
/// with per-vertex triangle counts of that graph.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub graph: Graph,
    /// Triangles of `graph` through each vertex.
    pub triangle_counts: Vec<usize>,
    /// Number of family members containing each vertex.
    pub family_degrees: Vec<usize>,
    /// Whether `family_degrees[v] <= triangle_counts[v]` held for every
    /// vertex (the easy direction of the shadow/clique correspondence).
    pub degrees_dominated: bool,
}

/// Builds the 2-shadow graph of a 3-uniform family and checks that each
/// vertex lies in at least as many triangles as family members.
pub fn family_to_link_graph(f: &KFamily) -> Result<LinkGraph, ShadowError> {
    if f.k() != 3 {
        return Err(ShadowError::NotThreeUniform(f.k()));
    }
    let n = f.universe();
    let mut graph = Graph::new(n);
    for &pair in f.shadow(2)?.members() {
        let mut it = pair.iter();
        let (u, v) = (it.next().unwrap(), it.next().unwrap());
        graph.add_edge(u, v);
    }
    let triangle_counts: Vec<usize> = (0..n).map(|v| graph.triangle_degree(v)).collect();
    let family_degrees: Vec<usize> = (0..n).map(|v| f.degree(v)).collect();
    let degrees_dominated = family_degrees
        .iter()
        .zip(&triangle_counts)
        .all(|(d, t)| d <= t);
    Ok(LinkGraph {
        graph,
        triangle_counts,
        family_degrees,
        degrees_dominated,
    })
}
