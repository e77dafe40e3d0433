use num_complex::Complex64;

use super::bernoulli::bernoulli_b2k;
use crate::error::{Error, Result};

/// Smallest end point `q + N` of the direct sum.
const MIN_END: f64 = 3.0;
/// Target size of the first omitted correction relative to the result scale.
const REMAINDER_TARGET: f64 = 1e-17;
/// Bernoulli correction terms in the Euler–Maclaurin tail.
const CORRECTION_TERMS: usize = 12;

/// Hurwitz zeta `ζ(s, q) = Σ_{k>=0} (k + q)^{−s}` (analytically continued).
///
/// Euler–Maclaurin: `N` direct terms, the integral `(q+N)^{1−s}/(s−1)`, the
/// half end-point term and 12 Bernoulli corrections. `N` is the smallest
/// count for which the first omitted correction is below `1e-17` of the
/// integral term: it grows with `|s|`, and stays small for negative `Re s`
/// where the direct terms cancel against the integral.
pub fn hurwitz_zeta(s: Complex64, q: f64) -> Result<Complex64> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::Domain {
            function: "hurwitz_zeta",
            value: q,
            expected: "q > 0",
        });
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
            at: 1.0,
        });
    }
    let n = direct_terms(s, q);

    let mut sum = crate::sum::ComplexSum::default();
    for k in 0..n {
        sum.add(pow_neg(q + k as f64, s));
    }
    let a = q + n as f64;
    let a_pow = pow_neg(a, s);
    sum.add(a * a_pow / (s - 1.0));
    sum.add(0.5 * a_pow);

    // Σ_j B_2j/(2j)! · s(s+1)…(s+2j−2) · a^{−s−2j+1}
    let inv_a = 1.0 / a;
    let mut rising = s; // s(s+1)…(s+2j−2)
    let mut fact = 2.0; // (2j)!
    let mut pow = a_pow * inv_a;
    for j in 1..=CORRECTION_TERMS {
        sum.add(bernoulli_b2k(j) / fact * rising * pow);
        let jf = j as f64;
        rising *= (s + (2.0 * jf - 1.0)) * (s + 2.0 * jf);
        fact *= (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
        pow *= inv_a * inv_a;
    }
    Ok(sum.value())
}

fn direct_terms(s: Complex64, q: f64) -> usize {
    // ln |B_2m/(2m)! · s(s+1)…(s+2m−2)| for the first omitted m
    let m = CORRECTION_TERMS + 1;
    let mut log_c = libm::log(libm::fabs(bernoulli_b2k(m)));
    for i in 1..=2 * m {
        log_c -= libm::log(i as f64);
    }
    for i in 0..2 * m - 1 {
        log_c += libm::log((s + i as f64).norm().max(1e-300));
    }
    let log_s1 = libm::log((s - 1.0).norm());
    let mut n = libm::ceil(MIN_END - q).max(0.0) as usize;
    loop {
        let la = libm::log(q + n as f64);
        let omitted = log_c - (s.re + (2 * m - 1) as f64) * la;
        let scale = ((1.0 - s.re) * la - log_s1).max(0.0);
        if omitted <= libm::log(REMAINDER_TARGET) + scale {
            return n;
        }
        n += 1;
    }
}

/// Riemann zeta `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

/// `x^{−s}` for real `x > 0`.
pub(crate) fn pow_neg(x: f64, s: Complex64) -> Complex64 {
    let mag = libm::pow(x, -s.re);
    if s.im == 0.0 {
        return Complex64::new(mag, 0.0);
    }
    let arg = -s.im * libm::log(x);
    Complex64::new(mag * libm::cos(arg), mag * libm::sin(arg))
}

#[cfg(test)]
mod tests {
    use core::f64::consts::PI;

    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn closed_forms() {
        let z2 = riemann_zeta(c(2.0, 0.0)).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-15);
        let z4 = riemann_zeta(c(4.0, 0.0)).unwrap();
        assert!((z4.re - libm::pow(PI, 4.0) / 90.0).abs() < 1e-15);
        let z0 = riemann_zeta(c(0.0, 0.0)).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-15);
        let h0 = hurwitz_zeta(c(0.0, 0.0), 0.3).unwrap();
        assert!((h0.re - 0.2).abs() < 1e-15);
    }

    #[test]
    fn reference_values() {
        let a = hurwitz_zeta(c(-1.5, 20.0), 0.37).unwrap();
        assert!((a - c(0.873_144_806_912_206_3, 11.366_675_057_898_268)).norm() < 1e-12 * a.norm());
        let b = hurwitz_zeta(c(3.5, -40.0), 2.2).unwrap();
        assert!((b - c(0.047_557_022_371_890_73, 0.021_360_185_820_124_02)).norm() < 1e-13);
        let d = hurwitz_zeta(c(-4.5, 0.0), 0.1).unwrap();
        // the direct terms cancel to ~1e−3 of their size here
        assert!((d.re + 0.000_612_936_207_163_373_4).abs() < 1e-13);
    }

    #[test]
    fn errors() {
        assert!(matches!(hurwitz_zeta(c(1.0, 0.0), 0.5), Err(Error::Pole { .. })));
        assert!(matches!(hurwitz_zeta(c(2.0, 0.0), 0.0), Err(Error::Domain { .. })));
        assert!(hurwitz_zeta(c(2.0, 0.0), -1.0).is_err());
    }

    #[test]
    fn large_offset() {
        // ζ(2, q) ≈ 1/q + 1/(2q²) + 1/(6q³) for large q
        let q = 1e4;
        let z = hurwitz_zeta(c(2.0, 0.0), q).unwrap().re;
        let approx = 1.0 / q + 0.5 / (q * q) + 1.0 / (6.0 * q * q * q);
        assert!((z - approx).abs() < 1e-15 * approx);
    }
}
