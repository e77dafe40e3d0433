use super::gamma::{gamma, recip_gamma};
use super::is_nonpositive_integer;
use super::quad::exp_sinh;
use crate::error::{Error, Result};

/// Arguments `x >= KUMMER_CROSSOVER` use the large-`x` paths (asymptotic
/// series, or quadrature plus recurrence); smaller ones the connection
/// formula.
pub const KUMMER_CROSSOVER: f64 = 30.0;

/// Connection-formula results with a larger cancellation estimate are
/// recomputed from the integral representation.
const CONNECTION_TRUST: f64 = 1e-13;

const MAX_POLY_DEGREE: f64 = 400.0;
const SERIES_TERMS: usize = 5000;

/// Which algorithm produced a [`KummerValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KummerPath {
    Polynomial,
    Connection,
    Asymptotic,
    Quadrature,
}

/// `U(a; b; x)` together with an estimate of its relative error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerValue {
    pub value: f64,
    pub rel_error: f64,
    pub path: KummerPath,
}

/// Kummer's `M(a; b; x) = Σ (a)_k x^k / ((b)_k k!)`.
pub fn kummer_m(a: f64, b: f64, x: f64) -> Result<f64> {
    m_series(a, b, x).map(|(v, _)| v)
}

/// Series for `M` plus the largest term magnitude (for cancellation
/// estimates).
fn m_series(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    if is_nonpositive_integer(b) {
        return Err(Error::Pole {
            function: "kummer_m",
            at: b,
        });
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut largest = 1.0f64;
    for k in 0..SERIES_TERMS {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * x / (kf + 1.0);
        sum += term;
        largest = largest.max(libm::fabs(term));
        if term == 0.0 {
            return Ok((sum, largest));
        }
        let past_peak = kf > libm::fabs(a) && kf > libm::fabs(x);
        if past_peak && libm::fabs(term) < 1e-17 * libm::fabs(sum) {
            return Ok((sum, largest));
        }
    }
    if !sum.is_finite() {
        return Err(Error::Overflow("kummer_m"));
    }
    Err(Error::Divergent {
        what: "kummer_m",
        ratio: 1.0,
    })
}

/// Tricomi's confluent hypergeometric function `U(a; b; x)` for `x > 0`.
pub fn kummer_u(a: f64, b: f64, x: f64) -> Result<f64> {
    kummer_u_estimate(a, b, x).map(|v| v.value)
}

/// [`kummer_u`] with an error estimate and the path taken.
///
/// * `a = −n`: the terminating polynomial, exact up to rounding;
/// * `x < 30`: the connection formula through two `M` series, unless its
///   cancellation estimate is poor (integer or near-integer `b`, larger `x`),
///   in which case the integral representation;
/// * `x >= 30`: the asymptotic series when it reaches full precision,
///   otherwise an integral representation with a downward recurrence in `a`.
pub fn kummer_u_estimate(a: f64, b: f64, x: f64) -> Result<KummerValue> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "kummer_u",
            value: x,
            expected: "x > 0",
        });
    }
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain {
            function: "kummer_u",
            value: if a.is_finite() { b } else { a },
            expected: "finite parameters",
        });
    }
    if is_nonpositive_integer(a) && -a <= MAX_POLY_DEGREE {
        return Ok(polynomial(-a as usize, b, x));
    }
    if x < KUMMER_CROSSOVER {
        let c = connection(a, b, x);
        match c {
            Ok(v) if v.rel_error <= CONNECTION_TRUST => Ok(v),
            _ => match quadrature(a, b, x) {
                Ok(q) => match c {
                    Ok(v) if v.rel_error < q.rel_error => Ok(v),
                    _ => Ok(q),
                },
                Err(e) => c.or(Err(e)),
            },
        }
    } else if let Some(v) = asymptotic(a, b, x) {
        Ok(v)
    } else {
        quadrature(a, b, x)
    }
}

/// `U(−n; b; x) = (−1)^n Σ_k C(n, k) (b + k)_{n−k} (−x)^k`.
pub(crate) fn polynomial(n: usize, b: f64, x: f64) -> KummerValue {
    // Horner in x, coefficients built from the k = n end down
    let mut coeff = 1.0; // C(n, n) (b + n)_0
    let mut acc = 0.0;
    let mut scale = 0.0f64;
    for k in (0..=n).rev() {
        acc = acc * (-x) + coeff;
        scale = scale * x + libm::fabs(coeff);
        if k > 0 {
            // C(n, k−1)(b+k−1)_{n−k+1} = C(n, k)(b+k)_{n−k} · k/(n−k+1) · (b+k−1)
            coeff *= k as f64 / (n - k + 1) as f64 * (b + k as f64 - 1.0);
        }
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let value = sign * acc;
    KummerValue {
        value,
        rel_error: 4.0 * (n as f64 + 1.0) * f64::EPSILON * scale / libm::fabs(value).max(f64::MIN_POSITIVE),
        path: KummerPath::Polynomial,
    }
}

/// `U = Γ(1−b)/Γ(a−b+1) M(a; b; x) + Γ(b−1)/Γ(a) x^{1−b} M(a−b+1; 2−b; x)`.
pub(crate) fn connection(a: f64, b: f64, x: f64) -> Result<KummerValue> {
    let g1 = gamma(1.0 - b)?;
    let g2 = gamma(b - 1.0)?;
    let (m1, big1) = m_series(a, b, x)?;
    let (m2, big2) = m_series(a - b + 1.0, 2.0 - b, x)?;
    let c1 = g1 * recip_gamma(a - b + 1.0);
    let c2 = g2 * recip_gamma(a) * libm::pow(x, 1.0 - b);
    let t1 = c1 * m1;
    let t2 = c2 * m2;
    let value = t1 + t2;
    if !value.is_finite() {
        return Err(Error::Overflow("kummer_u"));
    }
    let scale = libm::fabs(c1) * big1 + libm::fabs(c2) * big2 + libm::fabs(t1) + libm::fabs(t2);
    Ok(KummerValue {
        value,
        rel_error: 16.0 * f64::EPSILON * scale / libm::fabs(value).max(f64::MIN_POSITIVE),
        path: KummerPath::Connection,
    })
}

/// `U ~ x^{−a} Σ_k (a)_k (a−b+1)_k / k! · (−x)^{−k}`; `None` if the smallest
/// term does not reach full precision.
pub(crate) fn asymptotic(a: f64, b: f64, x: f64) -> Option<KummerValue> {
    let mut term = 1.0f64;
    let mut sum = 1.0;
    for k in 0..200 {
        let kf = k as f64;
        let next = term * (a + kf) * (a - b + 1.0 + kf) / ((kf + 1.0) * -x);
        if libm::fabs(next) > libm::fabs(term) && k > 0 {
            return None;
        }
        term = next;
        sum += term;
        if libm::fabs(term) <= 1e-17 * libm::fabs(sum) {
            let value = libm::pow(x, -a) * sum;
            return Some(KummerValue {
                value,
                rel_error: 4.0 * f64::EPSILON * (kf + 2.0),
                path: KummerPath::Asymptotic,
            });
        }
    }
    None
}

/// Integral representation for `a >= 1`,
/// `U = x^{−a}/Γ(a) ∫_0^∞ e^{−u} u^{a−1} (1 + u/x)^{b−a−1} du`, then the
/// recurrence `U(a−1) = (x + 2a − b) U(a) − a(a − b + 1) U(a+1)` down to the
/// requested `a`.
pub(crate) fn quadrature(a: f64, b: f64, x: f64) -> Result<KummerValue> {
    let shift = if a >= 1.0 { 0 } else { libm::ceil(1.0 - a) as usize };
    let a0 = a + shift as f64;
    let integral = |p: f64| {
        exp_sinh(
            |u| libm::exp(-u + (p - 1.0) * libm::log(u) + (b - p - 1.0) * libm::log1p(u / x)),
            1e-15,
        )
    };
    // U(p) up to the common factor x^{−a0}
    let scaled = |p: f64| -> Result<(f64, f64)> {
        let (v, e) = integral(p);
        let rg = recip_gamma(p);
        let f = libm::pow(x, a0 - p) * rg;
        Ok((v * f, libm::fabs(e * f)))
    };
    let (mut u_hi, err_hi) = scaled(a0 + 1.0)?;
    let (mut u_cur, err_cur) = scaled(a0)?;
    let mut rel = (err_hi / libm::fabs(u_hi)).max(err_cur / libm::fabs(u_cur)) + 8.0 * f64::EPSILON;
    let mut p = a0;
    for _ in 0..shift {
        let next = (x + 2.0 * p - b) * u_cur - p * (p - b + 1.0) * u_hi;
        // amplification of the relative error through one step
        let amp = (libm::fabs((x + 2.0 * p - b) * u_cur) + libm::fabs(p * (p - b + 1.0) * u_hi))
            / libm::fabs(next).max(f64::MIN_POSITIVE);
        rel = rel * amp + 2.0 * f64::EPSILON;
        u_hi = u_cur;
        u_cur = next;
        p -= 1.0;
    }
    let value = u_cur * libm::pow(x, -a0);
    if !value.is_finite() {
        return Err(Error::Overflow("kummer_u"));
    }
    Ok(KummerValue {
        value,
        rel_error: rel,
        path: KummerPath::Quadrature,
    })
}
