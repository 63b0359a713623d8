use cdhahn::asymptotics::{amplitude, bound_state_spectrum, convergence_report, phase_gamma};
use cdhahn::cdh::{evaluate_recurrence, generating_function_rhs, norm_squared, CdhParams, GENERATING_CHECK_DEGREE};
use cdhahn::quadrature::orthogonality_check;
use cdhahn::Result;

use crate::report::{Cell, Report};

/// Bound column for off-diagonal orthogonality integrals, relative to
/// `sqrt(hₘ hₙ)`.
const ORTHOGONALITY_BOUND: f64 = 1e-7;

pub fn eval(p: &CdhParams, degrees: &[u64], ys: &[f64]) -> Result<Report> {
    let top = *degrees.last().expect("non-empty grid");
    let values = ys
        .iter()
        .map(|&y| evaluate_recurrence(p, top, y))
        .collect::<Result<Vec<_>>>()?;
    let mut r = Report::new(&["n", "y", "energy", "value"]);
    for &n in degrees {
        for (&y, column) in ys.iter().zip(&values) {
            r.push(vec![Cell::Int(n), Cell::Real(y), Cell::Real(y * y), Cell::Real(column[n as usize])]);
        }
    }
    Ok(r)
}

pub fn table(p: &CdhParams, top: u64, ys: &[f64]) -> Result<Report> {
    let mut r = Report::new(&["n", "y", "energy", "value"]);
    for &y in ys {
        for (n, value) in evaluate_recurrence(p, top, y)?.into_iter().enumerate() {
            r.push(vec![Cell::Int(n as u64), Cell::Real(y), Cell::Real(y * y), Cell::Real(value)]);
        }
    }
    Ok(r)
}

pub fn asym(p: &CdhParams, degrees: &[u64], ys: &[f64]) -> Result<Report> {
    let mut r = Report::new(&["n", "y", "energy", "amplitude", "phase", "asymptotic"]);
    for &n in degrees {
        for &y in ys {
            let amp = amplitude(p, y, n)?;
            let phase = phase_gamma(p, y)?;
            let value = amp * (y * (n as f64).ln() + phase).cos();
            r.push(vec![
                Cell::Int(n),
                Cell::Real(y),
                Cell::Real(y * y),
                Cell::Real(amp),
                Cell::Real(phase),
                Cell::Real(value),
            ]);
        }
    }
    Ok(r)
}

pub fn converge(p: &CdhParams, y: f64, degrees: &[u64]) -> Result<Report> {
    let report = convergence_report(p, y, degrees)?;
    let mut r = Report::new(&["n", "exact", "asymptotic", "amplitude", "phase", "env_error"]);
    for row in report.rows {
        r.push(vec![
            Cell::Int(row.n),
            Cell::Real(row.exact),
            Cell::Real(row.asymptotic),
            Cell::Real(row.amplitude),
            Cell::Real(row.phase),
            Cell::Real(row.env_error),
        ]);
    }
    Ok(r)
}

/// Diagonal rows carry the closed-form norm hₙ as `bound`; off-diagonal
/// rows carry the tolerance `1e-7·sqrt(hₘhₙ)` the integral should respect.
pub fn ortho(p: &CdhParams, degrees: &[u64], tol: f64) -> Result<Report> {
    let mut r = Report::new(&["m", "n", "integral", "bound"]);
    for (i, &m) in degrees.iter().enumerate() {
        for &n in &degrees[i..] {
            let integral = orthogonality_check(p, m, n, tol)?.value;
            let bound = if m == n {
                norm_squared(p, n)?
            } else {
                ORTHOGONALITY_BOUND * (norm_squared(p, m)? * norm_squared(p, n)?).sqrt()
            };
            r.push(vec![Cell::Int(m), Cell::Int(n), Cell::Real(integral), Cell::Real(bound)]);
        }
    }
    Ok(r)
}

pub fn spectrum(p: &CdhParams) -> Report {
    let mut r = Report::new(&["channel", "level", "energy"]);
    for entry in bound_state_spectrum(p) {
        r.push(vec![
            Cell::Text(entry.channel.name().into()),
            Cell::Int(entry.level),
            Cell::Real(entry.energy),
        ]);
    }
    r
}

pub fn genfun_check(p: &CdhParams, ys: &[f64], ts: &[f64]) -> Result<Report> {
    let mut r = Report::new(&["y", "t", "rhs", "partial_sum", "abs_diff"]);
    for &y in ys {
        let coefficients = evaluate_recurrence(p, GENERATING_CHECK_DEGREE, y)?;
        for &t in ts {
            let partial = coefficients.iter().rev().fold(0.0, |acc, &s| acc * t + s);
            let rhs = generating_function_rhs(p, y, t.into())?;
            r.push(vec![
                Cell::Real(y),
                Cell::Real(t),
                Cell::Real(rhs.re),
                Cell::Real(partial),
                Cell::Real((rhs - partial).norm()),
            ]);
        }
    }
    Ok(r)
}
