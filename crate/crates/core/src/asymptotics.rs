//! Large-λ coefficient engine.
//!
//! ```text
//!     log[Γ(1−κ−λ/4)/Γ(κ−λ/4)] ~ (1−2κ) log(−λ/4) + Σ_m a_m(κ) (−λ)^{−2m}
//!     [Γ(1−κ−λ/4)/Γ(κ−λ/4)]^N ~ (−λ/4)^{−N(2κ−1)} Σ_n b_n(κ,N) (−λ)^{−2n}
//! ```
//!
//! and the β-dependent part of the first term of `f′/f`,
//! `Σ_{N>=1,n>=0} C_{N,n}(κ,β) (−λ)^{−N(2κ−1)−2n−1}`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectrum::SecularContext;
use crate::specfun::{bernoulli_b2k, digamma_complex, log_gamma};

/// Largest `m` for which `a_m` can be formed from the Bernoulli table.
pub const A_MAX: usize = 30;
pub const DEFAULT_N_MAX: usize = 6;
pub const DEFAULT_SMALL_N_MAX: usize = 8;

/// `a_m(κ)` from the closed expression
///
/// ```text
/// 2^{4m−1}/(2m+1) { [(1−κ)^{2m} − κ^{2m}] + ((κ−1/2)/m) [(1−κ)^{2m} + κ^{2m}]
///     + (2m+1) Σ_{p=1}^m B_{2p}/(p(2p−1)) C(2m−1, 2p−2) [κ^{2(m−p)+1} − (1−κ)^{2(m−p)+1}] }.
/// ```
///
/// # Panics
/// If `m` is 0 or exceeds [`A_MAX`].
pub fn a_m(m: usize, kappa: f64) -> f64 {
    assert!((1..=A_MAX).contains(&m), "a_m defined for 1 <= m <= {A_MAX}, got {m}");
    let k = kappa;
    let q = 1.0 - kappa;
    let mf = m as f64;
    let two_m = 2 * m as i32;
    let qk = libm::pow(q, two_m as f64);
    let kk = libm::pow(k, two_m as f64);
    let mut brace = (qk - kk) + (k - 0.5) / mf * (qk + kk);

    // C(2m−1, 2p−2) built incrementally in p
    let mut binom = 1.0;
    let mut sum = 0.0;
    for p in 1..=m {
        let pf = p as f64;
        let e = (2 * (m - p) + 1) as f64;
        sum += bernoulli_b2k(p) / (pf * (2.0 * pf - 1.0)) * binom * (libm::pow(k, e) - libm::pow(q, e));
        // C(n, j+2) = C(n, j)(n−j)(n−j−1)/((j+1)(j+2)), n = 2m−1, j = 2p−2
        let n = (2 * m - 1) as f64;
        let j = 2.0 * pf - 2.0;
        binom *= (n - j) * (n - j - 1.0) / ((j + 1.0) * (j + 2.0));
    }
    brace += (2.0 * mf + 1.0) * sum;
    libm::pow(2.0, 4.0 * mf - 1.0) / (2.0 * mf + 1.0) * brace
}

/// Coefficients of `exp(N Σ_{m>=1} a_m w^m) = Σ_n b_n w^n` by power-series
/// exponentiation: `b_0 = 1`, `b_n = (1/n) Σ_{k=1}^n k N a_k b_{n−k}`.
fn exp_series(a: &[f64], big_n: f64, n_max: usize) -> Vec<f64> {
    let mut b = vec![0.0; n_max + 1];
    b[0] = 1.0;
    for n in 1..=n_max {
        let mut s = 0.0;
        for k in 1..=n.min(a.len()) {
            s += k as f64 * big_n * a[k - 1] * b[n - k];
        }
        b[n] = s / n as f64;
    }
    b
}

/// `b_n(κ, N)`: the partition sum over `r_1 + 2r_2 + … + n r_n = n` of
/// `N^{Σr} Π a_k^{r_k}/r_k!`.
pub fn b_n(n: usize, kappa: f64, big_n: usize) -> f64 {
    let a: Vec<f64> = (1..=n.max(1)).map(|m| a_m(m, kappa)).collect();
    exp_series(&a, big_n as f64, n)[n]
}

/// `C_{N,n}(κ,β) = −(4^{2κ−1}β)^N (2κ−1 + 2n/N) b_n(κ,N)`.
pub fn c_nn(big_n: usize, n: usize, kappa: f64, beta: f64) -> f64 {
    c_from_b(big_n, n, kappa, beta, b_n(n, kappa, big_n))
}

fn c_from_b(big_n: usize, n: usize, kappa: f64, beta: f64, b: f64) -> f64 {
    // β^N by repeated multiplication: scaling β by 2 scales this by 2^N exactly
    let delta = 2.0 * kappa - 1.0;
    let nf = big_n as f64;
    let beta_n = (0..big_n).fold(1.0, |acc, _| acc * beta);
    -(libm::pow(4.0, nf * delta) * beta_n) * (delta + 2.0 * n as f64 / nf) * b
}

/// Precomputed `a_m`, `b_n(κ, N)` for one κ.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    pub kappa: f64,
    /// `a[m−1] = a_m(κ)`.
    pub a: Vec<f64>,
    /// `b[N−1][n] = b_n(κ, N)`.
    pub b: Vec<Vec<f64>>,
}

impl CoefficientSet {
    pub fn new(kappa: f64, big_n_max: usize, n_max: usize) -> Self {
        let a: Vec<f64> = (1..=n_max.max(1)).map(|m| a_m(m, kappa)).collect();
        let b = (1..=big_n_max)
            .map(|big_n| exp_series(&a, big_n as f64, n_max))
            .collect();
        CoefficientSet { kappa, a, b }
    }

    pub fn big_n_max(&self) -> usize {
        self.b.len()
    }

    pub fn n_max(&self) -> usize {
        self.b.first().map_or(0, |row| row.len() - 1)
    }

    pub fn b(&self, n: usize, big_n: usize) -> f64 {
        self.b[big_n - 1][n]
    }

    /// `C_{N,n}(κ, β)` from the stored table.
    pub fn c(&self, big_n: usize, n: usize, beta: f64) -> f64 {
        c_from_b(big_n, n, self.kappa, beta, self.b(n, big_n))
    }
}

/// `(1−2κ) log(−λ/4) + Σ_{m<=M} a_m(κ)(−λ)^{−2m}`.
///
/// Fails if the kept terms stop decreasing.
pub fn log_gamma_ratio_asymptotic(lambda: Complex64, kappa: f64, m_max: usize) -> Result<Complex64> {
    let w = -lambda;
    let inv2 = (w * w).inv();
    let mut pow = Complex64::new(1.0, 0.0);
    let mut sum = (1.0 - 2.0 * kappa) * (w / 4.0).ln();
    let mut last = f64::INFINITY;
    for m in 1..=m_max {
        pow *= inv2;
        let term = a_m(m, kappa) * pow;
        let mag = term.norm();
        if mag > last {
            return Err(Error::Divergent {
                what: "log_gamma_ratio_asymptotic",
                ratio: mag / last,
            });
        }
        if mag != 0.0 {
            last = mag;
        }
        sum += term;
    }
    Ok(sum)
}

/// `log Γ(1−κ−λ/4) − log Γ(κ−λ/4)` from the complex log-gamma.
pub fn log_gamma_ratio_exact(lambda: Complex64, kappa: f64) -> Result<Complex64> {
    let z = -lambda / 4.0;
    Ok(log_gamma(z + (1.0 - kappa))? - log_gamma(z + kappa)?)
}

/// Magnitude of `a_{M+1}(κ)(−λ)^{−2(M+1)}`, the first term left out of
/// [`log_gamma_ratio_asymptotic`].
pub fn log_gamma_ratio_first_omitted(lambda: Complex64, kappa: f64, m_max: usize) -> f64 {
    libm::fabs(a_m(m_max + 1, kappa)) * libm::pow(lambda.norm(), -2.0 * (m_max + 1) as f64)
}

/// `Σ_{N=1}^{N_max} Σ_{n=0}^{n_max} C_{N,n}(κ,β)(−λ)^{−N(2κ−1)−2n−1}`.
///
/// Requires `|β (−λ/4)^{1−2κ}| < 1`, the condition under which the geometric
/// series in β behind the expansion converges.
pub fn first_term_asymptotic(
    lambda: Complex64,
    ctx: &SecularContext,
    big_n_max: usize,
    n_max: usize,
) -> Result<Complex64> {
    let beta = ctx.beta("first_term_asymptotic")?;
    let kappa = ctx.kappa();
    let delta = 2.0 * kappa - 1.0;
    let w = -lambda;
    let ratio = libm::fabs(beta) * libm::pow((w / 4.0).norm(), -delta);
    if ratio >= 1.0 {
        return Err(Error::Divergent {
            what: "first_term_asymptotic",
            ratio,
        });
    }
    if beta == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let coeffs = CoefficientSet::new(kappa, big_n_max, n_max);
    let ln_w = w.ln();
    let mut sum = Complex64::new(0.0, 0.0);
    for big_n in 1..=big_n_max {
        for n in 0..=n_max {
            let e = -(big_n as f64) * delta - 2.0 * n as f64 - 1.0;
            sum += coeffs.c(big_n, n, beta) * (e * ln_w).exp();
        }
    }
    Ok(sum)
}

/// The quantity [`first_term_asymptotic`] expands, from ψ and Γ directly:
/// `[ψ(1−κ−λ/4) − ψ(κ−λ/4)]/4 · βR/(1 − βR)`, `R = Γ(1−κ−λ/4)/Γ(κ−λ/4)`.
///
/// This is the first term of `f′/f` minus its β-independent part (which
/// only carries integer powers of `1/λ`).
pub fn first_term_exact(lambda: Complex64, ctx: &SecularContext) -> Result<Complex64> {
    let beta = ctx.beta("first_term_exact")?;
    let kappa = ctx.kappa();
    let z = -lambda / 4.0;
    let psi = digamma_complex(z + (1.0 - kappa))? - digamma_complex(z + kappa)?;
    let br = beta * log_gamma_ratio_exact(lambda, kappa)?.exp();
    Ok(psi / 4.0 * br / (1.0 - br))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bernoulli_polynomial;

    #[test]
    fn a_one_values() {
        assert!((a_m(1, 0.75) + 0.25).abs() < 1e-15);
        for k in [0.5, 0.6, 0.75, 0.8, 0.93] {
            let expect = 8.0 / 3.0 * k * (1.0 - 3.0 * k + 2.0 * k * k);
            assert!((a_m(1, k) - expect).abs() < 1e-13);
        }
    }

    #[test]
    fn a_m_matches_bernoulli_polynomial_route() {
        // the Stirling series of log Γ(z+a) − log Γ(z+b) gives
        // a_m = 2^{4m} B_{2m+1}(κ) / (m(2m+1))
        for k in [0.75, 0.8, 0.9, 0.97] {
            for m in 1..=8 {
                let other = libm::pow(2.0, 4.0 * m as f64) * bernoulli_polynomial(2 * m + 1, k)
                    / (m as f64 * (2 * m + 1) as f64);
                let v = a_m(m, k);
                assert!((v - other).abs() <= 1e-11 * other.abs().max(1.0), "m={m} k={k}: {v} vs {other}");
            }
        }
    }

    #[test]
    fn half_kappa_vanishes() {
        for m in 1..=6 {
            assert_eq!(a_m(m, 0.5), 0.0);
        }
        let set = CoefficientSet::new(0.5, 4, 6);
        for big_n in 1..=4 {
            assert_eq!(set.b(0, big_n), 1.0);
            for n in 1..=6 {
                assert_eq!(set.b(n, big_n), 0.0);
            }
        }
    }

    #[test]
    fn c_values() {
        for beta in [0.5, 1.0, -2.0] {
            assert_eq!(c_nn(1, 0, 0.75, beta), -beta);
            assert!((c_nn(3, 0, 0.75, beta) + 4.0 * beta * beta * beta).abs() < 1e-15 * beta.abs().powi(3));
            assert_eq!(c_nn(2, 3, 0.8, 0.0), 0.0);
        }
    }

    #[test]
    fn log_gamma_ratio_real_axis() {
        let lambda = Complex64::new(-400.0, 0.0);
        let a = log_gamma_ratio_asymptotic(lambda, 0.75, 5).unwrap();
        let e = log_gamma_ratio_exact(lambda, 0.75).unwrap();
        assert!((a - e).norm() < 1e-10);
        let half = log_gamma_ratio_asymptotic(Complex64::new(0.0, 100.0), 0.5, 5).unwrap();
        assert_eq!(half, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn divergence_guard() {
        assert!(log_gamma_ratio_asymptotic(Complex64::new(0.0, 2.0), 0.8, 12).is_err());
    }
}
