//! Special-function kernels shared by the rest of the crate.
//!
//! Everything here is implemented in-crate on top of `libm`: a Lanczos
//! log-gamma with reflection, an asymptotic digamma, an Euler–Maclaurin
//! Hurwitz zeta, Tricomi's confluent hypergeometric `U` and the
//! physicists' Hermite polynomials.

mod bernoulli;
mod digamma;
mod gamma;
mod hermite;
mod hurwitz;
mod kummer;
mod quad;

pub use bernoulli::{bernoulli_b2k, bernoulli_number, bernoulli_polynomial, BernoulliTable};
pub use digamma::{digamma, digamma_complex, digamma_over_gamma};
pub use gamma::{
    cospi, gamma, gamma_ratio, ln_gamma, log_gamma, recip_gamma, sinpi, GammaRatio,
};
pub use hermite::hermite;
pub use hurwitz::{hurwitz_zeta, riemann_zeta};
pub(crate) use hurwitz::pow_neg;
pub use kummer::{kummer_m, kummer_u, kummer_u_estimate, KummerPath, KummerValue, KUMMER_CROSSOVER};

/// Complex argument type used throughout (`re + i·im`).
pub type ComplexPoint = num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == libm::floor(x)
}
