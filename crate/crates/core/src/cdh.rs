//! The continuous dual Hahn polynomial
//!
//! ```text
//! S̃ₙ(y²; μ, a, b) = (μ+a)ₙ (μ+b)ₙ / (n! (a+b)ₙ) · ₃F₂(−n, μ+iy, μ−iy; μ+a, μ+b; 1)
//! ```
//!
//! with its three-term recurrence, orthogonality weight, norms and
//! generating function
//!
//! ```text
//! Σₙ S̃ₙ tⁿ = (1−t)^{−μ+iy} ₂F₁(a+iy, b+iy; a+b; t).
//! ```

use std::f64::consts::PI;

use crate::complex_math::{log_gamma, ComplexValue};
use crate::double_double::DoubleDouble;
use crate::error::{Error, Result};
use crate::hypergeometric::{hyp2f1_series_with, Hyp2F1Args, SeriesControl};

/// Number of coefficients summed by [`generating_function_check`].
pub const GENERATING_CHECK_DEGREE: u64 = 200;

/// Largest `|t|` accepted by [`generating_function_check`].
pub const GENERATING_CHECK_MAX_T: f64 = 0.6;

/// The real parameter triple `(μ, a, b)`.
///
/// Two levels of admissibility exist. Every constructor requires the pairwise
/// sums `μ+a`, `μ+b`, `a+b` to be positive, which keeps the polynomial, its
/// generating function and the asymptotic constants finite. The weight is a
/// normalized orthogonality density only when all three parameters are
/// positive; [`CdhParams::new`] enforces that, [`CdhParams::relaxed`] does not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdhParams {
    mu: f64,
    a: f64,
    b: f64,
}

impl CdhParams {
    /// Strict parameters: `μ, a, b > 0`.
    pub fn new(mu: f64, a: f64, b: f64) -> Result<Self> {
        let p = Self::relaxed(mu, a, b)?;
        if !p.is_strict() {
            return Err(Error::domain(format!(
                "parameters must be positive, got mu = {mu}, a = {a}, b = {b}"
            )));
        }
        Ok(p)
    }

    /// Relaxed parameters: only `μ+a`, `μ+b`, `a+b > 0`. One parameter may be
    /// negative, which is the regime with bound states.
    pub fn relaxed(mu: f64, a: f64, b: f64) -> Result<Self> {
        if !(mu.is_finite() && a.is_finite() && b.is_finite()) {
            return Err(Error::domain("parameters must be finite"));
        }
        if !(mu + a > 0.0 && mu + b > 0.0 && a + b > 0.0) {
            return Err(Error::domain(format!(
                "pairwise sums must be positive, got mu+a = {}, mu+b = {}, a+b = {}",
                mu + a,
                mu + b,
                a + b
            )));
        }
        Ok(Self { mu, a, b })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn is_strict(&self) -> bool {
        self.mu > 0.0 && self.a > 0.0 && self.b > 0.0
    }

    pub(crate) fn require_strict(&self, what: &str) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{what} needs mu, a, b > 0, got ({}, {}, {})",
                self.mu, self.a, self.b
            )))
        }
    }
}

/// A degree and a spectral point; the energy is `y²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub n: u64,
    pub y: f64,
}

impl EvalPoint {
    pub fn new(n: u64, y: f64) -> Result<Self> {
        if !(y >= 0.0 && y.is_finite()) {
            return Err(Error::domain(format!("y must be finite and non-negative, got {y}")));
        }
        Ok(Self { n, y })
    }

    pub fn energy(&self) -> f64 {
        self.y * self.y
    }
}

fn check_y(y: f64) -> Result<()> {
    if y.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("y must be finite, got {y}")))
    }
}

fn check_positive_y(y: f64) -> Result<()> {
    if y > 0.0 && y.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("y must be positive (Γ(2iy) has a pole at 0), got {y}")))
    }
}

/// S̃ₙ(y²) from its defining finite sum.
///
/// Conjugate Pochhammers are paired, `(μ+iy)ₖ(μ−iy)ₖ = Πⱼ((μ+j)² + y²)`, so
/// the whole computation is real. The sum alternates with terms up to about
/// `2ⁿ` times the result, so it is accumulated in double-double arithmetic;
/// that keeps the result at full double precision up to `n ≈ 70` and usable
/// to `n ≈ 85`. Use [`evaluate_recurrence`] beyond that.
pub fn evaluate_direct(params: &CdhParams, n: u64, y: f64) -> Result<f64> {
    check_y(y)?;
    let mu = DoubleDouble::from(params.mu);
    let mu_a = mu + params.a;
    let mu_b = mu + params.b;
    let a_b = DoubleDouble::from(params.a) + params.b;
    let y2 = DoubleDouble::from(y) * y;
    let nf = n as f64;

    let mut prefactor = DoubleDouble::ONE;
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    for k in 0..n {
        let kf = k as f64;
        let shifted = mu + kf;
        let numerator = (shifted * shifted + y2) * (kf - nf);
        let denominator = (mu_a + kf) * (mu_b + kf) * (kf + 1.0);
        term = term * numerator / denominator;
        sum += term;
        prefactor = prefactor * (mu_a + kf) * (mu_b + kf) / ((a_b + kf) * (kf + 1.0));
    }
    let value = (prefactor * sum).to_f64();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow("evaluate_direct"))
    }
}

/// S̃₀ … S̃ₙ by forward recurrence in the degree:
///
/// ```text
/// (n+1)(n+a+b) S̃ₙ₊₁ = [(n+μ+a)(n+μ+b) + n(n+a+b−1) − μ² − y²] S̃ₙ
///                     − (n−1+μ+a)(n−1+μ+b) S̃ₙ₋₁,   S̃₋₁ = 0, S̃₀ = 1.
/// ```
///
/// For real `y` both solutions of the recurrence grow at the same rate, so
/// forward evaluation is stable for any degree.
pub fn evaluate_recurrence(params: &CdhParams, n_max: u64, y: f64) -> Result<Vec<f64>> {
    check_y(y)?;
    let CdhParams { mu, a, b } = *params;
    let shift = mu * mu + y * y;
    let len = usize::try_from(n_max).map_err(|_| Error::domain("degree too large"))? + 1;
    let mut values = Vec::with_capacity(len);
    values.push(1.0);
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n_max {
        let kf = k as f64;
        let up = (kf + mu + a) * (kf + mu + b);
        let down = kf * (kf + a + b - 1.0);
        let back = (kf - 1.0 + mu + a) * (kf - 1.0 + mu + b);
        let next = ((up + down - shift) * cur - back * prev) / ((kf + 1.0) * (kf + a + b));
        prev = cur;
        cur = next;
        values.push(cur);
    }
    if values.iter().all(|v| v.is_finite()) {
        Ok(values)
    } else {
        Err(Error::Overflow("evaluate_recurrence"))
    }
}

/// Logarithm of the weight's normalizing constant Γ(μ+a)Γ(μ+b)Γ(a+b).
fn log_normalizer(params: &CdhParams) -> Result<f64> {
    let CdhParams { mu, a, b } = *params;
    Ok(log_gamma((mu + a).into())?.re + log_gamma((mu + b).into())?.re + log_gamma((a + b).into())?.re)
}

/// Orthogonality weight on `(0, ∞)`,
///
/// ```text
/// ρ(y) = |Γ(μ+iy)Γ(a+iy)Γ(b+iy) / Γ(2iy)|² / (2π Γ(μ+a)Γ(μ+b)Γ(a+b)),
/// ```
///
/// normalized to unit mass. Needs strict parameters and `y > 0`.
pub fn weight(params: &CdhParams, y: f64) -> Result<f64> {
    params.require_strict("weight")?;
    check_positive_y(y)?;
    let CdhParams { mu, a, b } = *params;
    let im = |x: f64| ComplexValue::new(x, y);
    let log_modulus = log_gamma(im(mu))?.re + log_gamma(im(a))?.re + log_gamma(im(b))?.re
        - log_gamma(im(0.0) * 2.0)?.re;
    Ok((2.0 * log_modulus - (2.0 * PI).ln() - log_normalizer(params)?).exp())
}

/// Squared norm `hₙ = ∫₀^∞ S̃ₙ² ρ dy = (μ+a)ₙ (μ+b)ₙ / (n! (a+b)ₙ)`.
pub fn norm_squared(params: &CdhParams, n: u64) -> Result<f64> {
    params.require_strict("norm_squared")?;
    let CdhParams { mu, a, b } = *params;
    let mut h = 1.0;
    for j in 0..n {
        let jf = j as f64;
        h *= (mu + a + jf) * (mu + b + jf) / ((jf + 1.0) * (a + b + jf));
    }
    if h.is_finite() {
        Ok(h)
    } else {
        Err(Error::Overflow("norm_squared"))
    }
}

/// Closed form of the generating function, `(1−t)^{−μ+iy} ₂F₁(a+iy, b+iy; a+b; t)`.
///
/// The ₂F₁ factor is summed as a series for every `|t| < 1`; beyond
/// `|t| = 0.95` the term budget is raised (see [`SeriesControl::near_unit`]).
pub fn generating_function_rhs(params: &CdhParams, y: f64, t: ComplexValue) -> Result<ComplexValue> {
    check_y(y)?;
    if !(t.norm() < 1.0) {
        return Err(Error::domain(format!("generating function needs |t| < 1, got {}", t.norm())));
    }
    let CdhParams { mu, a, b } = *params;
    let control = if t.norm() <= SeriesControl::default().max_abs_t {
        SeriesControl::default()
    } else {
        SeriesControl::near_unit()
    };
    let args = Hyp2F1Args::new(ComplexValue::new(a, y), ComplexValue::new(b, y), (a + b).into(), t);
    let prefactor = (ComplexValue::new(-mu, y) * (1.0 - t).ln()).exp();
    Ok(prefactor * hyp2f1_series_with(&args, &control)?)
}

/// Largest mismatch between [`generating_function_rhs`] and the partial sum
/// `Σₙ₌₀²⁰⁰ S̃ₙ tⁿ` over the sample points (each `|t| ≤ 0.6`).
pub fn generating_function_check(params: &CdhParams, y: f64, t_samples: &[f64]) -> Result<f64> {
    if let Some(t) = t_samples.iter().find(|t| !(t.abs() <= GENERATING_CHECK_MAX_T)) {
        return Err(Error::domain(format!(
            "generating-function check needs |t| <= {GENERATING_CHECK_MAX_T}, got {t}"
        )));
    }
    let coefficients = evaluate_recurrence(params, GENERATING_CHECK_DEGREE, y)?;
    let mut worst: f64 = 0.0;
    for &t in t_samples {
        let partial = coefficients.iter().rev().fold(0.0, |acc, &s| acc * t + s);
        let rhs = generating_function_rhs(params, y, t.into())?;
        worst = worst.max((rhs - partial).norm());
    }
    Ok(worst)
}
