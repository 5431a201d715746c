//! Exact minimum-edge computation under the per-vertex triangle constraint,
//! with witness extraction, construction generators, and a brute-force
//! oracle.
//!
//! The requirement is: every vertex lies in at least `C(t,2)` triangles,
//! where `t >= 2` may be any rational. Thresholds are kept as exact
//! rationals, so feasibility never goes through floating point.

mod cache;
mod construct;
mod iso;
mod oracle;
mod solver;

pub use cache::{append_record, format_rational, load_record, CacheRecord};
pub use construct::{
    construction_upper_bound, counterexample_check, disjoint_cliques, matched_clique,
    CounterexampleReport,
};
pub use iso::{are_isomorphic, invariant_key, IsoClassSet};
pub use oracle::brute_force_oracle;
pub use solver::min_edges_exact;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

/// Default node budget for the exact search.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// At most this many witnesses are retained per problem.
pub const WITNESS_CAP: usize = 100;

#[derive(Debug, Error, PartialEq)]
pub enum SearchError {
    #[error("t must be at least 2, got {0}")]
    SmallT(String),
    #[error("n = {0} exceeds the vertex capacity {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("the brute-force oracle supports n <= 8, got {0}")]
    OracleTooLarge(usize),
    #[error("t + 1 = {0} must divide n = {1}")]
    Divisibility(usize, usize),
    #[error("matched-clique degree must be even and positive, got {0}")]
    OddDegree(usize),
    #[error("ceil(t) must be even, got {0}")]
    OddCeiling(i64),
    #[error("cannot parse {0:?} as a rational")]
    BadRational(String),
}

/// One instance: minimize edges over graphs on `n` vertices in which every
/// vertex lies in at least `C(t,2)` triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchProblem {
    pub n: usize,
    pub t: Rational,
}

impl SearchProblem {
    pub fn new(n: usize, t: Rational) -> Result<Self, SearchError> {
        if n > MAX_VERTICES {
            return Err(SearchError::TooManyVertices(n));
        }
        if t < Rational::from_integer(2) {
            return Err(SearchError::SmallT(format_rational(t)));
        }
        Ok(SearchProblem { n, t })
    }

    /// The exact triangle-degree requirement `C(t,2) = t(t-1)/2`.
    pub fn threshold(&self) -> Rational {
        self.t * (self.t - Rational::from_integer(1)) / Rational::from_integer(2)
    }

    /// Smallest integer triangle degree that satisfies the threshold.
    pub fn triangle_requirement(&self) -> usize {
        self.threshold().ceil().to_integer() as usize
    }

    /// Degree lower bound: each vertex's link must carry at least the
    /// integer triangle requirement, so by the shadow bound its degree is at
    /// least `t` (hence at least `ceil(t)`), and also at least the smallest
    /// `d` with `C(d,2)` meeting the requirement.
    pub fn degree_requirement(&self) -> usize {
        let from_t = self.t.ceil().to_integer() as usize;
        let tc = self.triangle_requirement();
        let mut d = 2usize;
        while d * (d - 1) / 2 < tc {
            d += 1;
        }
        from_t.max(d)
    }

    /// `ceil(n * degree_requirement / 2)`, the edge lower bound.
    pub fn edge_lower_bound(&self) -> usize {
        (self.n * self.degree_requirement()).div_ceil(2)
    }
}

/// Whether every vertex of `g` lies in at least `C(t,2)` triangles, compared
/// as exact rationals.
pub fn is_feasible(g: &Graph, t: Rational) -> bool {
    if g.vertex_count() == 0 {
        return false;
    }
    let threshold = t * (t - Rational::from_integer(1)) / Rational::from_integer(2);
    Rational::from_integer(g.min_triangle_degree() as i64) >= threshold
}

/// How the reported optimum is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    /// The search space was exhausted.
    Exact,
    /// Produced by the exhaustive brute-force oracle.
    OracleConfirmed,
    /// The node budget ran out; the result is a best-found, not an optimum.
    BudgetExhausted,
}

/// Outcome of a solved (or budget-cut) problem.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub problem: SearchProblem,
    /// `None` means infeasible.
    pub min_edges: Option<usize>,
    /// Feasible graphs achieving `min_edges`, deduplicated up to
    /// isomorphism, at most [`WITNESS_CAP`].
    pub witnesses: Vec<Graph>,
    /// False when the witness list was truncated at the cap.
    pub witnesses_complete: bool,
    pub explored_nodes: u64,
    pub certification: Certification,
}

impl SearchResult {
    pub fn certified(&self) -> bool {
        !matches!(self.certification, Certification::BudgetExhausted)
    }
}

/// Parses `"3"`, `"3.2"`, or `"16/5"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, SearchError> {
    let s = text.trim();
    let bad = || SearchError::BadRational(text.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.trim_start().starts_with('-');
        let int: i64 = if int_part.is_empty() || int_part == "-" {
            0
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let digits = frac_part.len() as u32;
        let den = 10i64.checked_pow(digits).ok_or_else(bad)?;
        let frac: i64 = frac_part.parse().map_err(|_| bad())?;
        let magnitude = Rational::new(int.abs() * den + frac, den);
        return Ok(if negative || int < 0 {
            -magnitude
        } else {
            magnitude
        });
    }
    let int: i64 = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(int))
}

/// Evaluates a rational to f64 (for reports only; never for feasibility).
pub fn rational_to_f64(r: Rational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap())
}

/// `C(t,2)` for rational `t`, exact.
pub fn rational_choose2(t: Rational) -> Rational {
    t * (t - Rational::from_integer(1)) / Rational::from_integer(2)
}

/// Guard used by constructions that need `t >= 2`.
pub(crate) fn require_t_at_least_two(t: Rational) -> Result<(), SearchError> {
    if t < Rational::from_integer(2) || t.is_negative() {
        return Err(SearchError::SmallT(format_rational(t)));
    }
    Ok(())
}
