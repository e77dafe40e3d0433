use core::f64::consts::PI;

use num_complex::Complex64;

use super::is_nonpositive_integer;
use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// `sin(πx)` with exact argument reduction; exactly zero at integers.
pub fn sinpi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // r in [-1, 1], exact for representable x
    let r = x - 2.0 * libm::round(x * 0.5);
    if r == 0.0 || libm::fabs(r) == 1.0 {
        return 0.0;
    }
    let a = libm::fabs(r);
    let s = if a <= 0.25 {
        libm::sin(PI * a)
    } else if a <= 0.75 {
        libm::cos(PI * (0.5 - a))
    } else {
        libm::sin(PI * (1.0 - a))
    };
    if r < 0.0 {
        -s
    } else {
        s
    }
}

/// `cos(πx)` with exact argument reduction; exactly zero at half-integers.
pub fn cospi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let a = libm::fabs(x - 2.0 * libm::round(x * 0.5));
    if a == 0.5 {
        return 0.0;
    }
    if a <= 0.25 {
        libm::cos(PI * a)
    } else if a <= 0.75 {
        libm::sin(PI * (0.5 - a))
    } else {
        -libm::cos(PI * (1.0 - a))
    }
}

fn lanczos_sum(xm1: f64) -> f64 {
    LANCZOS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS[0], |acc, (i, &c)| acc + c / (xm1 + i as f64))
}

fn lanczos_sum_complex(zm1: Complex64) -> Complex64 {
    LANCZOS
        .iter()
        .enumerate()
        .skip(1)
        .fold(Complex64::new(LANCZOS[0], 0.0), |acc, (i, &c)| {
            acc + c / (zm1 + i as f64)
        })
}

/// `ln|Γ(x)|` for `x >= 1/2`.
fn ln_gamma_right(x: f64) -> f64 {
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (xm1 + 0.5) * libm::log(t) - t + libm::log(lanczos_sum(xm1))
}

/// Real log-gamma: returns `(ln|Γ(x)|, sign Γ(x))`.
pub fn ln_gamma(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(Error::Domain {
            function: "ln_gamma",
            value: x,
            expected: "finite real",
        });
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "gamma",
            at: x,
        });
    }
    if x >= 0.5 {
        return Ok((ln_gamma_right(x), 1.0));
    }
    // Γ(x) Γ(1 − x) = π / sin(πx); Γ(1 − x) > 0 here.
    let s = sinpi(x);
    let value = LN_PI - libm::log(libm::fabs(s)) - ln_gamma_right(1.0 - x);
    Ok((value, if s < 0.0 { -1.0 } else { 1.0 }))
}

/// Γ(x) for real x. Overflows to ±∞ above x ≈ 171.6.
pub fn gamma(x: f64) -> Result<f64> {
    let (lg, sign) = ln_gamma(x)?;
    if (1.0..=23.0).contains(&x) && x == libm::floor(x) {
        // (x−1)! is exact in f64 up to 22!
        return Ok((2..x as u32).fold(1.0, |acc, k| acc * k as f64));
    }
    if (0.5..20.0).contains(&x) {
        // direct product keeps a few extra bits for moderate arguments
        let xm1 = x - 1.0;
        let t = xm1 + LANCZOS_G + 0.5;
        let g = 2.506_628_274_631_000_5 * libm::pow(t, xm1 + 0.5) * libm::exp(-t) * lanczos_sum(xm1);
        return Ok(g);
    }
    Ok(sign * libm::exp(lg))
}

/// Reciprocal gamma `1/Γ(x)`: entire, exactly zero at the poles of Γ.
///
/// For large negative non-integer `x` the true value exceeds the range of
/// `f64` and the result saturates to ±∞.
pub fn recip_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x < 20.0 {
            let xm1 = x - 1.0;
            let t = xm1 + LANCZOS_G + 0.5;
            return libm::exp(t) * libm::pow(t, -(xm1 + 0.5))
                / (2.506_628_274_631_000_5 * lanczos_sum(xm1));
        }
        return libm::exp(-ln_gamma_right(x));
    }
    // 1/Γ(x) = sin(πx) Γ(1 − x) / π
    let one_minus = 1.0 - x;
    if one_minus < 20.0 {
        let xm1 = one_minus - 1.0;
        let t = xm1 + LANCZOS_G + 0.5;
        let g = 2.506_628_274_631_000_5 * libm::pow(t, xm1 + 0.5) * libm::exp(-t) * lanczos_sum(xm1);
        return sinpi(x) * g / PI;
    }
    sinpi(x) * libm::exp(ln_gamma_right(one_minus)) / PI
}

fn log_gamma_right(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let t = zm1 + (LANCZOS_G + 0.5);
    (zm1 + 0.5) * t.ln() - t + LN_SQRT_2PI + lanczos_sum_complex(zm1).ln()
}

/// Principal-branch `log Γ(z)`: analytic off the negative real axis, real on
/// the positive real axis. On the negative real axis the value is the limit
/// from the upper half plane.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain {
            function: "log_gamma",
            value: z.re,
            expected: "finite complex",
        });
    }
    if z.im == 0.0 && is_nonpositive_integer(z.re) {
        return Err(Error::Pole {
            function: "log_gamma",
            at: z.re,
        });
    }
    if z.re >= 0.5 {
        return Ok(log_gamma_right(z));
    }
    if z.im < 0.0 {
        return log_gamma(z.conj()).map(|w| w.conj());
    }
    // Upper half plane: sin(πz) = (i/2) e^{−iπz} (1 − e^{2πiz}) with
    // |e^{2πiz}| <= 1, which fixes a branch of log sin(πz) continuous there.
    let i = Complex64::i();
    let w = (2.0 * PI * i * z).exp();
    let log_sin = -i * PI * z - core::f64::consts::LN_2 + i * (PI / 2.0) + (1.0 - w).ln();
    Ok(LN_PI - log_sin - log_gamma_right(1.0 - z))
}

/// Value of `Γ(κ − λ/4) / Γ(1 − κ − λ/4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaRatio {
    Finite(f64),
    /// The numerator argument sits on a pole of Γ.
    NumeratorPole,
}

impl GammaRatio {
    /// Finite value, or a signless infinity for the pole case.
    pub fn value(self) -> f64 {
        match self {
            GammaRatio::Finite(v) => v,
            GammaRatio::NumeratorPole => f64::INFINITY,
        }
    }
}

/// `F(λ) = Γ(κ − λ/4) / Γ(1 − κ − λ/4)` via log-gamma differences.
pub fn gamma_ratio(kappa: f64, lambda: f64) -> Result<GammaRatio> {
    let num = kappa - lambda / 4.0;
    let den = 1.0 - kappa - lambda / 4.0;
    match (is_nonpositive_integer(num), is_nonpositive_integer(den)) {
        (true, true) => Err(Error::Indeterminate { kappa, lambda }),
        (true, false) => Ok(GammaRatio::NumeratorPole),
        (false, true) => Ok(GammaRatio::Finite(0.0)),
        (false, false) => {
            let (ln_num, s_num) = ln_gamma(num)?;
            let (ln_den, s_den) = ln_gamma(den)?;
            Ok(GammaRatio::Finite(s_num * s_den * libm::exp(ln_num - ln_den)))
        }
    }
}
