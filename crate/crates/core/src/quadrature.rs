//! Adaptive Gauss–Legendre integration on `(0, ∞)` for integrands with
//! eventual exponential decay, and the orthogonality integrals built on it.
//!
//! The interval is cut at a finite point `Y`. `(0, Y]` is covered by panels,
//! each integrated with a 30-point and a 15-point Gauss–Legendre rule; the
//! panel with the largest disagreement is bisected until the total estimate
//! meets the tolerance. The tail is then added in doubling pieces
//! `[Y, 2Y], [2Y, 4Y], …` until a piece falls below the tolerance. Gauss
//! nodes are interior, so the integrand is never evaluated at `y = 0`.

use std::sync::OnceLock;

use crate::cdh::{evaluate_recurrence, weight, CdhParams};
use crate::error::{Error, Result};

/// Evaluation budget for one call to [`integrate_semi_infinite`].
pub const MAX_EVALUATIONS: usize = 100_000;

/// Default truncation point for the body of the integral.
pub const DEFAULT_CUTOFF: f64 = 30.0;

const MIN_TOL: f64 = 1e-12;
const MAX_TOL: f64 = 1e-4;
const MAX_TAIL_DOUBLINGS: usize = 24;
const HIGH_ORDER: usize = 30;
const LOW_ORDER: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    /// Legendre roots by Newton iteration from the Chebyshev-like guess.
    fn legendre(order: usize) -> Self {
        let n = order as f64;
        let mut nodes = Vec::with_capacity(order);
        let mut weights = Vec::with_capacity(order);
        for i in 0..order {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut derivative = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=order {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                derivative = n * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / derivative;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * derivative * derivative));
        }
        Self { nodes, weights }
    }
}

fn rules() -> &'static (GaussRule, GaussRule) {
    static RULES: OnceLock<(GaussRule, GaussRule)> = OnceLock::new();
    RULES.get_or_init(|| (GaussRule::legendre(HIGH_ORDER), GaussRule::legendre(LOW_ORDER)))
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

struct Integrator<F> {
    f: F,
    evaluations: usize,
}

impl<F: FnMut(f64) -> Result<f64>> Integrator<F> {
    fn panel(&mut self, lo: f64, hi: f64) -> Result<Panel> {
        // A panel too narrow to bisect is as exhausted as the budget.
        let exhausted = !(0.5 * (lo + hi) > lo && 0.5 * (lo + hi) < hi);
        if exhausted || self.evaluations + HIGH_ORDER + LOW_ORDER > MAX_EVALUATIONS {
            return Err(Error::NoConvergence {
                what: "integrate_semi_infinite",
                evaluations: self.evaluations,
            });
        }
        let (high, low) = rules();
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        let mut apply = |rule: &GaussRule| -> Result<(f64, f64)> {
            let mut sum = 0.0;
            let mut magnitude = 0.0;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let v = w * (self.f)(mid + half * x)?;
                sum += v;
                magnitude += v.abs();
            }
            Ok((sum * half, magnitude * half))
        };
        let (value, magnitude) = apply(high)?;
        let (coarse, _) = apply(low)?;
        self.evaluations += HIGH_ORDER + LOW_ORDER;
        if !value.is_finite() {
            return Err(Error::domain(format!("integrand not finite on [{lo}, {hi}]")));
        }
        let error = (value - coarse).abs() + 50.0 * f64::EPSILON * magnitude;
        Ok(Panel { lo, hi, value, error })
    }

    /// Adapts panels on `[lo, hi]` until the summed error estimate meets
    /// `max(tol·|value|, tol)·share`.
    fn interval(&mut self, lo: f64, hi: f64, tol: f64, share: f64) -> Result<(f64, f64)> {
        let initial = (((hi - lo) / 2.0).ceil() as usize).clamp(1, 16);
        let step = (hi - lo) / initial as f64;
        let mut panels = Vec::with_capacity(initial);
        for i in 0..initial {
            let a = lo + step * i as f64;
            let b = if i + 1 == initial { hi } else { a + step };
            panels.push(self.panel(a, b)?);
        }
        loop {
            let value: f64 = panels.iter().map(|p| p.value).sum();
            let error: f64 = panels.iter().map(|p| p.error).sum();
            if error <= share * tol * value.abs().max(1.0) {
                break;
            }
            let worst = panels
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
                .map(|(i, _)| i)
                .expect("at least one panel");
            let Panel { lo: a, hi: b, .. } = panels.swap_remove(worst);
            let m = 0.5 * (a + b);
            panels.push(self.panel(a, m)?);
            panels.push(self.panel(m, b)?);
        }
        // Summation order fixed by position, not by refinement history.
        panels.sort_by(|x, y| x.lo.total_cmp(&y.lo));
        Ok((
            panels.iter().map(|p| p.value).sum(),
            panels.iter().map(|p| p.error).sum(),
        ))
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if (MIN_TOL..=MAX_TOL).contains(&tol) {
        Ok(())
    } else {
        Err(Error::domain(format!("tolerance must lie in [{MIN_TOL}, {MAX_TOL}], got {tol}")))
    }
}

/// `∫₀^∞ f(y) dy` to within `max(tol·|value|, tol)` for integrands that
/// decay exponentially, `tol ∈ [1e-12, 1e-4]`.
pub fn integrate_semi_infinite(mut f: impl FnMut(f64) -> f64, tol: f64) -> Result<IntegrationResult> {
    try_integrate_semi_infinite(|y| Ok(f(y)), tol, DEFAULT_CUTOFF)
}

/// Fallible-integrand version of [`integrate_semi_infinite`] with an
/// explicit body cutoff `Y`.
pub fn try_integrate_semi_infinite(
    f: impl FnMut(f64) -> Result<f64>,
    tol: f64,
    cutoff: f64,
) -> Result<IntegrationResult> {
    check_tol(tol)?;
    if !(cutoff > 0.0 && cutoff.is_finite()) {
        return Err(Error::domain(format!("cutoff must be positive, got {cutoff}")));
    }
    let mut integrator = Integrator { f, evaluations: 0 };
    let (mut value, mut error) = integrator.interval(0.0, cutoff, tol, 0.5)?;
    let mut y = cutoff;
    for _ in 0..MAX_TAIL_DOUBLINGS {
        let (piece, piece_error) = integrator.interval(y, 2.0 * y, tol, 0.1)?;
        value += piece;
        error += piece_error;
        if piece.abs() <= 0.1 * tol * value.abs().max(1.0) {
            // What lies beyond decays faster than this piece.
            error += piece.abs();
            return Ok(IntegrationResult {
                value,
                error_estimate: error,
                evaluations: integrator.evaluations,
            });
        }
        y *= 2.0;
    }
    Err(Error::NoConvergence {
        what: "integrate_semi_infinite tail",
        evaluations: integrator.evaluations,
    })
}

/// Body cutoff used for the product of two polynomials of degrees `m`, `n`
/// against the weight.
pub fn polynomial_pair_cutoff(m: u64, n: u64) -> f64 {
    DEFAULT_CUTOFF.max(10.0 + 3.0 * (m + n) as f64)
}

/// Total mass `∫₀^∞ ρ(y) dy` of the weight.
pub fn weight_mass(params: &CdhParams, tol: f64) -> Result<IntegrationResult> {
    params.require_strict("weight_mass")?;
    try_integrate_semi_infinite(|y| weight(params, y), tol, DEFAULT_CUTOFF)
}

/// `∫₀^∞ S̃ₘ(y²) S̃ₙ(y²) ρ(y) dy` for `m, n ≤ 20`.
///
/// Off the diagonal this vanishes; on it, it is the squared norm
/// [`crate::cdh::norm_squared`].
pub fn orthogonality_check(params: &CdhParams, m: u64, n: u64, tol: f64) -> Result<IntegrationResult> {
    params.require_strict("orthogonality_check")?;
    if m > 20 || n > 20 {
        return Err(Error::domain(format!("orthogonality check limited to degree 20, got ({m}, {n})")));
    }
    let top = m.max(n);
    let integrand = |y: f64| -> Result<f64> {
        let s = evaluate_recurrence(params, top, y)?;
        Ok(s[m as usize] * s[n as usize] * weight(params, y)?)
    };
    try_integrate_semi_infinite(integrand, tol, polynomial_pair_cutoff(m, n))
}
