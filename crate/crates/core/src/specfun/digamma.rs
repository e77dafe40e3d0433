use core::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::bernoulli_b2k;
use super::gamma::{cospi, recip_gamma, sinpi};
use super::is_nonpositive_integer;
use crate::error::{Error, Result};

const ASYMPTOTIC_FROM: f64 = 10.0;
const ASYMPTOTIC_TERMS: usize = 9;

/// Digamma ψ(x) for real x.
pub fn digamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain {
            function: "digamma",
            value: x,
            expected: "finite real",
        });
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "digamma",
            at: x,
        });
    }
    if x < 0.0 {
        // ψ(1 − x) − ψ(x) = π cot(πx)
        return Ok(digamma(1.0 - x)? - PI * cospi(x) / sinpi(x));
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < ASYMPTOTIC_FROM {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut series = 0.0;
    for k in 1..=ASYMPTOTIC_TERMS {
        series += bernoulli_b2k(k) / (2 * k) as f64 * pow;
        pow *= inv2;
    }
    Ok(shift + libm::log(x) - 0.5 / x - series)
}

/// `π cot(πz)` evaluated without overflow for large |Im z|.
fn pi_cot_pi(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return pi_cot_pi(z.conj()).conj();
    }
    if z.im == 0.0 {
        return Complex64::new(PI * cospi(z.re) / sinpi(z.re), 0.0);
    }
    // cot(πz) = i (w + 1)/(w − 1), w = e^{2πiz}, |w| < 1
    let i = Complex64::i();
    let w = (2.0 * PI * i * z).exp();
    PI * i * (w + 1.0) / (w - 1.0)
}

/// Digamma ψ(z) for complex z.
pub fn digamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return digamma(z.re).map(|v| Complex64::new(v, 0.0));
    }
    if z.re < 0.5 {
        return Ok(digamma_complex(1.0 - z)? - pi_cot_pi(z));
    }
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.norm() < ASYMPTOTIC_FROM {
        shift -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut pow = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for k in 1..=ASYMPTOTIC_TERMS {
        series += bernoulli_b2k(k) / (2 * k) as f64 * pow;
        pow *= inv2;
    }
    Ok(shift + z.ln() - 0.5 / z - series)
}

/// `ψ(x)/Γ(x)`, which is entire: at `x = −k` it equals `(−1)^{k+1} k!`.
pub fn digamma_over_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        let k = -x;
        let mut fact = 1.0;
        let mut i = 2.0;
        while i <= k {
            fact *= i;
            i += 1.0;
        }
        let odd = libm::fmod(k, 2.0) == 1.0;
        return if odd { fact } else { -fact };
    }
    // cannot fail: poles handled above
    digamma(x).map(|p| p * recip_gamma(x)).unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::super::EULER_GAMMA;
    use super::*;

    #[test]
    fn euler_maclaurin_oracle_at_one() {
        // ψ(1) = −γ; oracle: ψ(1) = lim (ln N − Σ_{k<=N} 1/k) with
        // Euler–Maclaurin corrections for the harmonic number.
        let n = 1000.0f64;
        let mut h = 0.0;
        for k in 1..=1000 {
            h += 1.0 / k as f64;
        }
        let gamma_est = h - libm::log(n) - 1.0 / (2.0 * n) + 1.0 / (12.0 * n * n)
            - 1.0 / (120.0 * n * n * n * n);
        assert!((gamma_est - EULER_GAMMA).abs() < 1e-14);
        assert!((digamma(1.0).unwrap() + gamma_est).abs() < 1e-14);
    }

    #[test]
    fn recurrence_value() {
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
    }

    #[test]
    fn stirling_limit() {
        let mut last = f64::INFINITY;
        for x in [1e2, 1e4, 1e6] {
            let d = (digamma(x).unwrap() - libm::log(x)).abs();
            assert!(d < last);
            last = d;
        }
        assert!(last < 1e-6);
    }

    #[test]
    fn reference_values() {
        assert!((digamma(0.3).unwrap() + 3.502_524_222_200_133).abs() < 1e-13);
        assert!((digamma(-4.6).unwrap() - 0.610_066_588_822_542_8).abs() < 1e-13);
        let z = digamma_complex(Complex64::new(-2.3, 1.7)).unwrap();
        assert!((z - Complex64::new(1.188_483_854_521_278_5, 2.599_286_294_698_462)).norm() < 1e-13);
    }

    #[test]
    fn poles() {
        assert!(digamma(0.0).is_err());
        assert!(digamma(-2.0).is_err());
    }

    #[test]
    fn digamma_over_gamma_is_continuous_at_poles() {
        for k in 0..6 {
            let x = -(k as f64);
            let at = digamma_over_gamma(x);
            let near = digamma_over_gamma(x + 1e-7);
            assert!((at - near).abs() < 1e-5 * at.abs().max(1.0), "k = {k}: {at} vs {near}");
        }
        assert_eq!(digamma_over_gamma(0.0), -1.0);
        assert_eq!(digamma_over_gamma(-1.0), 1.0);
        assert_eq!(digamma_over_gamma(-3.0), 6.0);
    }
}
