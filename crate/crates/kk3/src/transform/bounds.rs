//! Closed-form constants and decay bounds for the peeling analysis.

/// The decay ratio, exactly 4/7.
pub const ALPHA: f64 = 4.0 / 7.0;

/// `ceil(alpha * lam)` with alpha = 4/7, in exact integer arithmetic.
#[inline]
pub fn ceil_alpha(lam: usize) -> usize {
    (4 * lam).div_ceil(7)
}

/// `ceil(2 * alpha * lam)` with alpha = 4/7.
#[inline]
pub fn ceil_two_alpha(lam: usize) -> usize {
    (8 * lam).div_ceil(7)
}

/// Target size of the greedy independent set: `ceil(2*alpha*lam) + 2`.
#[inline]
pub fn greedy_target(lam: usize) -> usize {
    ceil_two_alpha(lam) + 2
}

/// The excess-degree cutoff `theta(t) = (sqrt(33) / (2 sqrt(928))) (t+1)`.
pub fn theta(t: f64) -> f64 {
    (33f64.sqrt() / (2.0 * 928f64.sqrt())) * (t + 1.0)
}

/// The threshold coefficient `c = 1 + sqrt(928/33)`.
pub fn threshold_constant() -> f64 {
    1.0 + (928.0f64 / 33.0).sqrt()
}

/// Geometric decay envelope for the maximizer degrees: `alpha^(j-1) * start + 3`.
pub fn decay_bound(j: usize, start: f64) -> f64 {
    assert!(j >= 1, "decay index is 1-based");
    ALPHA.powi(j as i32 - 1) * start + 3.0
}

/// Upper bound on the plateau length for a run starting at maximizer degree
/// `f`:
///
/// - `f = 1`: `(3/4) t`;
/// - `2 <= f <= 7`: `6 alpha f + 7`;
/// - `f >= 8`: the sharper `4 alpha f + 5`.
pub fn plateau_length_bound(f: usize, t: f64) -> f64 {
    assert!(f >= 1, "maximizer degree must be at least 1");
    match f {
        1 => 0.75 * t,
        2..=7 => 6.0 * ALPHA * f as f64 + 7.0,
        _ => 4.0 * ALPHA * f as f64 + 5.0,
    }
}

/// The constant bundle used across the peeling analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsParams {
    pub t: f64,
    pub alpha: f64,
    pub theta: f64,
    pub lambda: usize,
    pub c: f64,
}

impl BoundsParams {
    pub fn new(t: f64, lambda: usize) -> Self {
        assert!(t >= 2.0, "t must be at least 2");
        BoundsParams {
            t,
            alpha: ALPHA,
            theta: theta(t),
            lambda,
            c: threshold_constant(),
        }
    }
}

/// Leading terms of the upper and lower bounds on the size of the disjoint
/// clique family, with the asymptotic remainders dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliqueCountBounds {
    pub upper: f64,
    pub lower: f64,
    pub theta: f64,
    pub c: f64,
}

/// Evaluates both leading terms. The upper route is
/// `(32/3) lambda + (224/33) theta + (3/4) t` at `lambda = 2 theta`; the
/// lower route is `(sqrt(928) / (2 sqrt(33))) (t+1) + (3/4) t`. Algebraically
/// the two coincide at `(928/33) theta + (3/4) t`.
pub fn clique_count_bounds(t: f64) -> CliqueCountBounds {
    assert!(t >= 2.0, "t must be at least 2");
    let th = theta(t);
    let lambda = 2.0 * th;
    let upper = (32.0 / 3.0) * lambda + (224.0 / 33.0) * th + 0.75 * t;
    let lower = (928f64.sqrt() / (2.0 * 33f64.sqrt())) * (t + 1.0) + 0.75 * t;
    CliqueCountBounds {
        upper,
        lower,
        theta: th,
        c: threshold_constant(),
    }
}
