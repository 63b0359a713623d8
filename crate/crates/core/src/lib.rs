//! Continuous dual Hahn polynomials and their large-degree limit.
//!
//! The crate evaluates the polynomial
//!
//! ```text
//! S̃ₙ(y²; μ, a, b) = (μ+a)ₙ (μ+b)ₙ / (n! (a+b)ₙ) · ₃F₂(−n, μ+iy, μ−iy; μ+a, μ+b; 1)
//! ```
//!
//! its generating function, its orthogonality weight, and the oscillatory
//! large-`n` limit obtained by Darboux's method,
//!
//! ```text
//! S̃ₙ ≈ A · cos(y ln n + γ),   A = 2Γ(a+b)|Γ(2iy)| n^{μ−1} / |Γ(μ+iy)Γ(a+iy)Γ(b+iy)|,
//! γ = arg Γ(2iy) − arg Γ(μ+iy) − arg Γ(a+iy) − arg Γ(b+iy).
//! ```
//!
//! Every identity used along the way (gamma recurrence, Gauss sum, Euler
//! transformation, contiguous relation) is available as a function so it can
//! be checked numerically.
//!
//! Modules, bottom-up:
//!
//! - [`complex_math`]: complex gamma, continuous-branch log-gamma, Pochhammer.
//! - [`hypergeometric`]: ₂F₁ series, terminating ₃F₂, Gauss sum.
//! - [`cdh`]: the polynomial, its recurrence, weight, norm, generating function.
//! - [`quadrature`]: adaptive Gauss–Legendre on `(0, ∞)` and orthogonality checks.
//! - [`asymptotics`]: phase shift, amplitude, comparison function, spectrum.
//!
//! ```
//! use cdhahn::{asymptotics, cdh::{self, CdhParams}};
//!
//! let p = CdhParams::new(1.0, 1.5, 2.0).unwrap();
//! let exact = cdh::evaluate_recurrence(&p, 1000, 1.0).unwrap()[1000];
//! let approx = asymptotics::asymptotic_value(&p, 1000, 1.0).unwrap();
//! let envelope = asymptotics::amplitude(&p, 1.0, 1000).unwrap();
//! assert!((exact - approx).abs() / envelope < 0.01);
//! ```

pub mod asymptotics;
pub mod cdh;
pub mod complex_math;
mod double_double;
mod error;
pub mod hypergeometric;
pub mod quadrature;

pub use complex_math::ComplexValue;
pub use error::{Error, Result};

// Book chapters are compiled as doc-tests so their snippets cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gamma.md")]
    mod gamma {}
    #[doc = include_str!("../../../book/src/hypergeometric.md")]
    mod hypergeometric {}
    #[doc = include_str!("../../../book/src/polynomial.md")]
    mod polynomial {}
    #[doc = include_str!("../../../book/src/weight.md")]
    mod weight {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
}
