//! Gauss ₂F₁ series, terminating ₃F₂ at unit argument, and the Gauss sum.
//!
//! The series routines never transform their argument. Evaluating near
//! `t = 1` is done explicitly by the caller, through [`euler_transform_rhs`]
//! and [`gauss_sum`], or by raising the limits in [`SeriesControl`].

use crate::complex_math::{log_gamma, nonpositive_integer, ComplexValue};
use crate::error::{Error, Result};

/// Relative size of a term at which summation stops (needed twice in a row).
const TRUNCATION: f64 = 1e-15;

/// Largest `m` for which a numerator parameter `−m` counts as terminating.
const MAX_TERMINATING_DEGREE: u64 = 1_000_000;

/// Parameters and argument of ₂F₁(a, b; c; t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Args {
    pub a: ComplexValue,
    pub b: ComplexValue,
    pub c: ComplexValue,
    pub t: ComplexValue,
}

impl Hyp2F1Args {
    pub fn new(a: ComplexValue, b: ComplexValue, c: ComplexValue, t: ComplexValue) -> Self {
        Self { a, b, c, t }
    }

    /// Real-parameter shorthand.
    pub fn real(a: f64, b: f64, c: f64, t: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), t.into())
    }
}

/// Limits for [`hyp2f1_series_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Largest admissible `|t|`; must stay below 1.
    pub max_abs_t: f64,
    /// Term budget before giving up with [`Error::NoConvergence`].
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            max_abs_t: 0.95,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesControl {
    /// Budget for arguments up to `1 − 1e-9`, where the series still
    /// converges but needs tens of millions of terms.
    pub fn near_unit() -> Self {
        Self {
            max_abs_t: 1.0 - 1e-9,
            max_terms: 200_000_000,
        }
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Default, Clone, Copy)]
struct CompensatedSum {
    sum: ComplexValue,
    carry: ComplexValue,
}

impl CompensatedSum {
    fn add(&mut self, x: ComplexValue) {
        fn step(sum: &mut f64, carry: &mut f64, x: f64) {
            let t = *sum + x;
            *carry += if sum.abs() >= x.abs() {
                (*sum - t) + x
            } else {
                (x - t) + *sum
            };
            *sum = t;
        }
        step(&mut self.sum.re, &mut self.carry.re, x.re);
        step(&mut self.sum.im, &mut self.carry.im, x.im);
    }

    fn value(&self) -> ComplexValue {
        self.sum + self.carry
    }
}

fn terminating_degree(p: ComplexValue) -> Option<u64> {
    nonpositive_integer(p).filter(|&m| m <= MAX_TERMINATING_DEGREE)
}

/// Gauss hypergeometric series ₂F₁(a, b; c; t) for `|t| ≤ 0.95`.
pub fn hyp2f1_series(args: &Hyp2F1Args) -> Result<ComplexValue> {
    hyp2f1_series_with(args, &SeriesControl::default())
}

/// Gauss series with explicit limits on `|t|` and on the number of terms.
pub fn hyp2f1_series_with(args: &Hyp2F1Args, control: &SeriesControl) -> Result<ComplexValue> {
    let Hyp2F1Args { a, b, c, t } = *args;
    if control.max_abs_t >= 1.0 {
        return Err(Error::domain("series control must keep |t| below 1"));
    }
    if !(t.norm() <= control.max_abs_t) {
        return Err(Error::domain(format!(
            "|t| = {} exceeds the series limit {}",
            t.norm(),
            control.max_abs_t
        )));
    }
    let stop = match (terminating_degree(a), terminating_degree(b)) {
        (Some(m), Some(k)) => Some(m.min(k)),
        (m, k) => m.or(k),
    };
    if let Some(pole) = nonpositive_integer(c) {
        // (c)_k first vanishes at k = pole + 1; the numerator must stop first.
        if !matches!(stop, Some(m) if m <= pole) {
            return Err(Error::domain(format!(
                "c = {c} is a non-positive integer not cancelled by a terminating numerator"
            )));
        }
    }

    let mut term = ComplexValue::new(1.0, 0.0);
    let mut acc = CompensatedSum::default();
    acc.add(term);
    if t == ComplexValue::new(0.0, 0.0) {
        return Ok(acc.value());
    }

    if let Some(m) = stop {
        for k in 0..m {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * t;
            acc.add(term);
        }
        return Ok(acc.value());
    }

    let mut small_in_a_row = 0;
    for k in 0..control.max_terms {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * t;
        acc.add(term);
        if term.norm() <= TRUNCATION * acc.value().norm() {
            small_in_a_row += 1;
            if small_in_a_row == 2 {
                return Ok(acc.value());
            }
        } else {
            small_in_a_row = 0;
        }
    }
    Err(Error::NoConvergence {
        what: "hyp2f1_series",
        evaluations: control.max_terms,
    })
}

/// Right-hand side of the Euler transformation,
/// `(1−t)^{c−a−b} ₂F₁(c−a, c−b; c; t)`, which equals ₂F₁(a, b; c; t).
pub fn euler_transform_rhs(args: &Hyp2F1Args, control: &SeriesControl) -> Result<ComplexValue> {
    let Hyp2F1Args { a, b, c, t } = *args;
    let transformed = Hyp2F1Args::new(c - a, c - b, c, t);
    let prefactor = ((c - a - b) * (1.0 - t).ln()).exp();
    Ok(prefactor * hyp2f1_series_with(&transformed, control)?)
}

/// Residual of the contiguous relation
///
/// ```text
/// (a+b−c) F(a,b;c;t) − a(1−t) F(a+1,b;c;t) + (c−b) F(a,b−1;c;t) = 0
/// ```
///
/// returned with the magnitude of its largest term, so callers can judge it
/// relatively.
pub fn contiguous_relation_residual(args: &Hyp2F1Args) -> Result<(ComplexValue, f64)> {
    let Hyp2F1Args { a, b, c, t } = *args;
    let terms = [
        (a + b - c) * hyp2f1_series(args)?,
        -a * (1.0 - t) * hyp2f1_series(&Hyp2F1Args::new(a + 1.0, b, c, t))?,
        (c - b) * hyp2f1_series(&Hyp2F1Args::new(a, b - 1.0, c, t))?,
    ];
    let scale = terms.iter().map(|v| v.norm()).fold(0.0, f64::max);
    Ok((terms.iter().sum(), scale))
}

/// Terminating ₃F₂(−n, p1, p2; q1, q2; 1) as an exact sum of `n + 1` terms.
///
/// When `p2 = conj(p1)` and `q1`, `q2` are real the product `(p1+k)(p2+k)`
/// is formed first, so every term, and the result, is exactly real.
pub fn hyp3f2_terminating(
    n: u64,
    p1: ComplexValue,
    p2: ComplexValue,
    q1: ComplexValue,
    q2: ComplexValue,
) -> Result<ComplexValue> {
    for q in [q1, q2] {
        if let Some(m) = nonpositive_integer(q) {
            if m < n {
                return Err(Error::domain(format!(
                    "denominator parameter {q} vanishes inside the {}-term sum",
                    n + 1
                )));
            }
        }
    }
    let nf = n as f64;
    let mut term = ComplexValue::new(1.0, 0.0);
    let mut acc = CompensatedSum::default();
    acc.add(term);
    for k in 0..n {
        let kf = k as f64;
        let numerator = (p1 + kf) * (p2 + kf) * (kf - nf);
        term *= numerator / ((q1 + kf) * (q2 + kf) * (kf + 1.0));
        acc.add(term);
    }
    Ok(acc.value())
}

/// Closed form ₂F₁(a, b; c; 1) = Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b)),
/// valid for `Re(c−a−b) > 0`.
///
/// A pole of Γ(c−a) or Γ(c−b) makes the value zero.
pub fn gauss_sum(a: ComplexValue, b: ComplexValue, c: ComplexValue) -> Result<ComplexValue> {
    let excess = c - a - b;
    if excess.re <= 0.0 {
        return Err(Error::domain(format!(
            "Gauss sum needs Re(c − a − b) > 0, got {}",
            excess.re
        )));
    }
    if nonpositive_integer(c - a).is_some() || nonpositive_integer(c - b).is_some() {
        return Ok(ComplexValue::new(0.0, 0.0));
    }
    let log = log_gamma(c)? + log_gamma(excess)? - log_gamma(c - a)? - log_gamma(c - b)?;
    Ok(log.exp())
}
