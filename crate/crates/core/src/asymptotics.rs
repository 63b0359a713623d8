//! Large-degree behaviour of S̃ₙ(y²) by Darboux's method.
//!
//! Near its singularity `t = 1` the generating function behaves like the
//! comparison function
//!
//! ```text
//! (1−t)^{−μ−iy} G + (1−t)^{−μ+iy} Ḡ,   G = Γ(a+b)Γ(2iy) / (Γ(a+iy)Γ(b+iy)),
//! ```
//!
//! whose Taylor coefficients are known in closed form. Matching them gives
//!
//! ```text
//! S̃ₙ(y²) ≈ A cos(y ln n + γ),
//! A = 2Γ(a+b)|Γ(2iy)| n^{μ−1} / |Γ(μ+iy)Γ(a+iy)Γ(b+iy)|,
//! γ = arg Γ(2iy) − arg Γ(μ+iy) − arg Γ(a+iy) − arg Γ(b+iy),
//! ```
//!
//! with a remainder one power of `n` smaller than `A`. Read as a scattering
//! problem, `γ` is the phase shift at energy `y²` and `A` the amplitude; `A`
//! vanishes where one of Γ(μ+iy), Γ(a+iy), Γ(b+iy) has a pole, which gives
//! the bound states `y² = −(k+p)²` for a negative parameter `p`.

use std::f64::consts::PI;
use std::fmt;

use crate::cdh::{evaluate_recurrence, CdhParams};
use crate::complex_math::{log_gamma, ComplexValue};
use crate::error::{Error, Result};

/// Envelope, phase and energy of the asymptotic cosine at one `(y, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringData {
    pub energy: f64,
    pub amplitude: f64,
    pub phase: f64,
    pub n: u64,
}

/// Which gamma factor of the amplitude produces a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Channel {
    Mu,
    A,
    B,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Mu, Channel::A, Channel::B];

    pub fn name(self) -> &'static str {
        match self {
            Channel::Mu => "mu",
            Channel::A => "a",
            Channel::B => "b",
        }
    }

    pub fn parameter(self, params: &CdhParams) -> f64 {
        match self {
            Channel::Mu => params.mu(),
            Channel::A => params.a(),
            Channel::B => params.b(),
        }
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One bound state, `energy = −(level + p)²` for the channel parameter `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub channel: Channel,
    pub level: u64,
    pub energy: f64,
}

/// Exact and asymptotic values at one degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: u64,
    pub exact: f64,
    pub asymptotic: f64,
    pub amplitude: f64,
    pub phase: f64,
    /// `|exact − asymptotic| / amplitude`.
    pub env_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub y: f64,
    pub rows: Vec<ConvergenceRow>,
    /// Least-squares slope of `ln env_error` against `ln n`; `None` with
    /// fewer than two usable rows.
    pub decay_exponent: Option<f64>,
}

fn check_y(y: f64) -> Result<()> {
    if y > 0.0 && y.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("asymptotic quantities need y > 0, got {y}")))
    }
}

fn check_degree(n: u64) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::domain("asymptotic quantities need n >= 1"))
    }
}

/// ln Γ at `x + iy` for each of μ, a, b.
fn channel_log_gammas(params: &CdhParams, y: f64) -> Result<[ComplexValue; 3]> {
    Ok([
        log_gamma(ComplexValue::new(params.mu(), y))?,
        log_gamma(ComplexValue::new(params.a(), y))?,
        log_gamma(ComplexValue::new(params.b(), y))?,
    ])
}

/// Phase shift `γ(y)`, assembled from four continuous-branch arguments so it
/// has no 2π jumps in `y`.
pub fn phase_gamma(params: &CdhParams, y: f64) -> Result<f64> {
    check_y(y)?;
    let [m, a, b] = channel_log_gammas(params, y)?;
    Ok(log_gamma(ComplexValue::new(0.0, 2.0 * y))?.im - m.im - a.im - b.im)
}

/// Envelope `A` of the asymptotic cosine at degree `n`.
pub fn amplitude(params: &CdhParams, y: f64, n: u64) -> Result<f64> {
    check_y(y)?;
    check_degree(n)?;
    let [m, a, b] = channel_log_gammas(params, y)?;
    let log = 2f64.ln()
        + log_gamma((params.a() + params.b()).into())?.re
        + log_gamma(ComplexValue::new(0.0, 2.0 * y))?.re
        + (params.mu() - 1.0) * (n as f64).ln()
        - m.re
        - a.re
        - b.re;
    let v = log.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("amplitude"))
    }
}

/// `amplitude² · weight`, which does not depend on `y`:
/// `(2/π) Γ(a+b) n^{2μ−2} / (Γ(μ+a)Γ(μ+b))`.
pub fn reciprocity_constant(params: &CdhParams, n: u64) -> Result<f64> {
    check_degree(n)?;
    let (mu, a, b) = (params.mu(), params.a(), params.b());
    let log = (2.0 / PI).ln() + log_gamma((a + b).into())?.re + (2.0 * mu - 2.0) * (n as f64).ln()
        - log_gamma((mu + a).into())?.re
        - log_gamma((mu + b).into())?.re;
    Ok(log.exp())
}

/// Leading-order approximation `A cos(y ln n + γ)` of S̃ₙ(y²).
pub fn asymptotic_value(params: &CdhParams, n: u64, y: f64) -> Result<f64> {
    let data = scattering_data(params, y, n)?;
    Ok(data.amplitude * (y * (n as f64).ln() + data.phase).cos())
}

pub fn scattering_data(params: &CdhParams, y: f64, n: u64) -> Result<ScatteringData> {
    Ok(ScatteringData {
        energy: y * y,
        amplitude: amplitude(params, y, n)?,
        phase: phase_gamma(params, y)?,
        n,
    })
}

/// The two-term comparison function carrying the singular part of the
/// generating function at `t = 1`. Real for real `t`.
pub fn comparison_function(params: &CdhParams, y: f64, t: ComplexValue) -> Result<ComplexValue> {
    check_y(y)?;
    if !(t.norm() < 1.0) {
        return Err(Error::domain(format!("comparison function needs |t| < 1, got {}", t.norm())));
    }
    let (mu, a, b) = (params.mu(), params.a(), params.b());
    let g = (log_gamma((a + b).into())? + log_gamma(ComplexValue::new(0.0, 2.0 * y))?
        - log_gamma(ComplexValue::new(a, y))?
        - log_gamma(ComplexValue::new(b, y))?)
    .exp();
    let log_one_minus_t = (1.0 - t).ln();
    let singular = (ComplexValue::new(-mu, -y) * log_one_minus_t).exp() * g;
    let mirrored = (ComplexValue::new(-mu, y) * log_one_minus_t).exp() * g.conj();
    Ok(singular + mirrored)
}

/// Bound-state energies: for every channel parameter `p < 0` and every
/// `k ≥ 0` with `k + p < 0`, the energy `−(k + p)²`. Sorted by energy,
/// most bound first; channels are never merged.
pub fn bound_state_spectrum(params: &CdhParams) -> Vec<SpectrumEntry> {
    let mut entries = Vec::new();
    for channel in Channel::ALL {
        let p = channel.parameter(params);
        let mut level = 0u64;
        while level as f64 + p < 0.0 {
            let offset = level as f64 + p;
            entries.push(SpectrumEntry {
                channel,
                level,
                energy: -(offset * offset),
            });
            level += 1;
        }
    }
    entries.sort_by(|x, y| x.energy.total_cmp(&y.energy));
    entries
}

/// Least-squares slope of `ln e` against `ln n` over points with `e > 0`.
pub fn fit_decay_exponent(points: &[(u64, f64)]) -> Option<f64> {
    fit_common_decay_exponent(&[points.to_vec()])
}

/// One slope shared by several `(n, e)` series, each with its own intercept
/// (a fixed-effects fit). Useful when each series oscillates around a common
/// power law.
pub fn fit_common_decay_exponent(series: &[Vec<(u64, f64)>]) -> Option<f64> {
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for points in series {
        let logs: Vec<(f64, f64)> = points
            .iter()
            .filter(|(n, e)| *n > 0 && *e > 0.0 && e.is_finite())
            .map(|&(n, e)| ((n as f64).ln(), e.ln()))
            .collect();
        if logs.len() < 2 {
            continue;
        }
        let mx = logs.iter().map(|p| p.0).sum::<f64>() / logs.len() as f64;
        let my = logs.iter().map(|p| p.1).sum::<f64>() / logs.len() as f64;
        for (x, y) in logs {
            sxy += (x - mx) * (y - my);
            sxx += (x - mx) * (x - mx);
        }
    }
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Compares the recurrence values with the asymptotic formula at each
/// degree in `n_list` (ascending, all ≥ 1).
pub fn convergence_report(params: &CdhParams, y: f64, n_list: &[u64]) -> Result<ConvergenceReport> {
    check_y(y)?;
    if n_list.is_empty() {
        return Err(Error::domain("degree list is empty"));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("degree list must be strictly ascending"));
    }
    check_degree(n_list[0])?;
    let top = *n_list.last().expect("non-empty");
    let exact = evaluate_recurrence(params, top, y)?;
    let phase = phase_gamma(params, y)?;
    let rows = n_list
        .iter()
        .map(|&n| {
            let amplitude = amplitude(params, y, n)?;
            let asymptotic = amplitude * (y * (n as f64).ln() + phase).cos();
            let exact = exact[n as usize];
            Ok(ConvergenceRow {
                n,
                exact,
                asymptotic,
                amplitude,
                phase,
                env_error: (exact - asymptotic).abs() / amplitude,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(u64, f64)> = rows.iter().map(|r| (r.n, r.env_error)).collect();
    Ok(ConvergenceReport {
        y,
        decay_exponent: fit_decay_exponent(&points),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdh::{generating_function_rhs, weight};
    use crate::complex_math::gamma_arg;

    fn base() -> CdhParams {
        CdhParams::new(1.0, 1.5, 2.0).unwrap()
    }

    #[test]
    fn phase_reference_values() {
        // mpmath loggamma, 50 digits
        assert!((phase_gamma(&base(), 1.0).unwrap() + 1.775_408_526_399_011_6).abs() < 1e-10);
        assert!((phase_gamma(&base(), 10.0).unwrap() + 4.502_731_295_202_579_6).abs() < 1e-9);
    }

    #[test]
    fn phase_is_odd_under_conjugation() {
        let p = base();
        let y = 1.3;
        let g = phase_gamma(&p, y).unwrap();
        let conj = |x: f64| gamma_arg(ComplexValue::new(x, -y)).unwrap();
        let mirrored = gamma_arg(ComplexValue::new(0.0, -2.0 * y)).unwrap() - conj(1.0) - conj(1.5) - conj(2.0);
        assert!((mirrored + g).abs() < 1e-14);
    }

    #[test]
    fn phase_continuous_from_one_to_ten() {
        let p = base();
        let steps = 10_000;
        let mut prev = phase_gamma(&p, 1.0).unwrap();
        for i in 1..=steps {
            let y = 1.0 + 9.0 * i as f64 / steps as f64;
            let g = phase_gamma(&p, y).unwrap();
            assert!((g - prev).abs() < 0.01, "jump at y = {y}");
            prev = g;
        }
        assert!((prev + 4.502_731_295_202_579_6).abs() < 1e-9);
    }

    #[test]
    fn phase_tends_to_minus_half_pi_at_origin() {
        // arg Γ(2iy) → −π/2 while the other three vanish.
        let g = phase_gamma(&base(), 1e-9).unwrap();
        assert!((g + std::f64::consts::FRAC_PI_2).abs() < 1e-7);
        assert!(matches!(phase_gamma(&base(), 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn amplitude_examples() {
        let p = base();
        let a10 = amplitude(&p, 0.8, 10).unwrap();
        let a1000 = amplitude(&p, 0.8, 1000).unwrap();
        assert!((a10 / a1000 - 1.0).abs() < 1e-15);
        let a = amplitude(&p, 1.0, 100).unwrap();
        assert!((a / 2.273_650_052_550_922_45 - 1.0).abs() < 1e-10);
        assert!(matches!(amplitude(&p, 1.0, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn amplitude_weight_reciprocity() {
        for p in [base(), CdhParams::new(0.7, 2.0, 1.3).unwrap()] {
            for n in [1u64, 50] {
                let constant = reciprocity_constant(&p, n).unwrap();
                for y in [0.5, 1.0, 2.0, 5.0] {
                    let a = amplitude(&p, y, n).unwrap();
                    let product = a * a * weight(&p, y).unwrap();
                    assert!((product / constant - 1.0).abs() < 1e-10, "y = {y}");
                }
            }
        }
    }

    #[test]
    fn asymptotic_value_at_degree_one() {
        let p = base();
        let v = asymptotic_value(&p, 1, 1.0).unwrap();
        let want = amplitude(&p, 1.0, 1).unwrap() * phase_gamma(&p, 1.0).unwrap().cos();
        assert!((v - want).abs() < 1e-15);
    }

    #[test]
    fn asymptotic_value_at_degree_thousand() {
        let p = base();
        // Exact value: mpmath, 400 digits. The recurrence reproduces it.
        let exact = 0.931_226_209_497_040_57;
        let recurrence = evaluate_recurrence(&p, 1000, 1.0).unwrap()[1000];
        assert!((recurrence / exact - 1.0).abs() < 1e-11);
        let asym = asymptotic_value(&p, 1000, 1.0).unwrap();
        let envelope = amplitude(&p, 1.0, 1000).unwrap();
        assert!((exact - asym).abs() / envelope <= 0.01);
    }

    #[test]
    fn envelope_error_shrinks_from_500_to_1000() {
        let p = CdhParams::new(0.7, 2.0, 1.3).unwrap();
        let report = convergence_report(&p, 2.0, &[500, 1000]).unwrap();
        assert!(report.rows[1].env_error < report.rows[0].env_error);
    }

    #[test]
    fn comparison_function_at_origin() {
        let p = base();
        let y = 1.0;
        let v = comparison_function(&p, y, 0.0.into()).unwrap();
        let g = (log_gamma(3.5.into()).unwrap() + log_gamma(ComplexValue::new(0.0, 2.0)).unwrap()
            - log_gamma(ComplexValue::new(1.5, 1.0)).unwrap()
            - log_gamma(ComplexValue::new(2.0, 1.0)).unwrap())
        .exp();
        assert!((v.re - 2.0 * g.re).abs() < 1e-14);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn comparison_function_reference_and_reality() {
        let v = comparison_function(&base(), 1.0, 0.9.into()).unwrap();
        assert!((v.re / 11.558_215_688_247_981 - 1.0).abs() < 1e-10);
        assert!(v.im.abs() <= 1e-12 * v.re.abs());
        assert!(comparison_function(&base(), 1.0, 1.0.into()).is_err());
    }

    #[test]
    fn comparison_function_absorbs_the_singularity() {
        let p = base();
        let y = 1.0;
        let remainders: Vec<f64> = (1..=5)
            .map(|k| {
                let t = 1.0 - 10f64.powi(-k);
                let rhs = generating_function_rhs(&p, y, t.into()).unwrap();
                let cmp = comparison_function(&p, y, t.into()).unwrap();
                (rhs - cmp).norm() * (1.0 - t).powf(p.mu())
            })
            .collect();
        assert!(remainders.windows(2).all(|w| w[1] < w[0]), "{remainders:?}");
    }

    #[test]
    fn spectrum_examples() {
        assert!(bound_state_spectrum(&base()).is_empty());

        let p = CdhParams::relaxed(-1.5, 2.0, 3.0).unwrap();
        let s = bound_state_spectrum(&p);
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].channel, s[0].level, s[0].energy), (Channel::Mu, 0, -2.25));
        assert_eq!((s[1].channel, s[1].level, s[1].energy), (Channel::Mu, 1, -0.25));

        let p = CdhParams::relaxed(-2.2, 3.0, 4.0).unwrap();
        let s = bound_state_spectrum(&p);
        let energies: Vec<f64> = s.iter().map(|e| e.energy).collect();
        for (got, want) in energies.iter().zip([-4.84, -1.44, -0.04]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(energies.len(), 3);
    }

    #[test]
    fn spectrum_energies_follow_the_formula_exactly() {
        for p in [
            CdhParams::relaxed(-3.7, 4.0, 5.0).unwrap(),
            CdhParams::relaxed(2.0, -1.2, 1.5).unwrap(),
            CdhParams::relaxed(1.0, 2.0, -0.6).unwrap(),
        ] {
            let s = bound_state_spectrum(&p);
            assert!(!s.is_empty());
            assert!(s.windows(2).all(|w| w[0].energy <= w[1].energy));
            for e in s {
                let offset = e.level as f64 + e.channel.parameter(&p);
                assert!(e.energy < 0.0);
                assert_eq!(e.energy, -(offset * offset));
            }
        }
    }

    #[test]
    fn convergence_report_structure() {
        let p = base();
        let r = convergence_report(&p, 1.0, &[100]).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert!(r.rows[0].env_error.is_finite());
        assert_eq!(r.decay_exponent, None);
        assert!(convergence_report(&p, 1.0, &[]).is_err());
        assert!(convergence_report(&p, 1.0, &[200, 100]).is_err());
        assert!(convergence_report(&p, 1.0, &[0, 10]).is_err());
        assert!(convergence_report(&p, 0.0, &[10]).is_err());
    }

    #[test]
    fn convergence_report_rates() {
        let p = base();
        let ladder = [100, 200, 400, 800, 1600];
        let r = convergence_report(&p, 1.0, &ladder).unwrap();
        for row in &r.rows {
            assert!(row.env_error * row.n as f64 <= 5.0, "n = {}", row.n);
        }
        // Five points cover under one oscillation of the remainder in ln n,
        // so the decay rate is read off a 40-point ladder over three decades.
        let long: Vec<u64> = (0..40).map(|i| (100.0 * 1000f64.powf(i as f64 / 39.0)).round() as u64).collect();
        let r = convergence_report(&p, 1.0, &long).unwrap();
        let slope = r.decay_exponent.unwrap();
        assert!((-1.5..=-0.5).contains(&slope), "slope {slope}");
    }

    #[test]
    fn common_exponent_fit() {
        let a: Vec<(u64, f64)> = [10u64, 100, 1000].iter().map(|&n| (n, 3.0 / n as f64)).collect();
        let b: Vec<(u64, f64)> = [10u64, 100, 1000].iter().map(|&n| (n, 0.1 / n as f64)).collect();
        let s = fit_common_decay_exponent(&[a.clone(), b]).unwrap();
        assert!((s + 1.0).abs() < 1e-12);
        assert!((fit_decay_exponent(&a).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(fit_decay_exponent(&[(10, 0.1)]), None);
    }
}
