//! Large-n model of the finite-β eigenvalues and the Hurwitz-zeta tail it
//! induces.
//!
//! With `m = n + 1 − κ`, `δ = 2κ − 1` and `λ_n = 4(m + ε)`, the offset obeys
//! `πε = Im log(1 + y e^{2πiκ})`, `y = β ρ(m + ε)`, `ρ(L) = Γ(L+1−κ)/Γ(L+κ)`.
//! Expanding `ρ(L) = L^{−δ} exp(Σ_j c_j L^{−2j})` and iterating to a fixed
//! point gives `ε` as a generalized power series
//!
//! ```text
//!     ε(m) = Σ_{p>=1, q>=0} e_{p,q} m^{−(pδ + q)}.
//! ```
//!
//! Then `λ_n^{−s} = 4^{−s} Σ_j C(−s, j) m^{−s−j} ε^j` and the sum over
//! `n >= M` is a finite combination of `ζ(s + E, M + 1 − κ)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sae::{ExtensionParam, Regime};
use crate::specfun::{hurwitz_zeta, sinpi};
use crate::spectrum::{RhoSeries, SecularContext};
use crate::sum::ComplexSum;

/// Terms `m^{−E}` with `E` above this are dropped.
pub const DEFAULT_ORDER: f64 = 8.0;
/// The model requires `|β| (M+1−κ)^{−δ}` below this.
pub const VALIDITY_LIMIT: f64 = 0.5;

const SAME_EXPONENT: f64 = 1e-12;

/// Generalized series `Σ c_{p,q} m^{−(pδ+q)}`.
#[derive(Debug, Clone, Default, PartialEq)]
struct GSeries {
    terms: BTreeMap<(u32, u32), f64>,
}

impl GSeries {
    fn one() -> Self {
        let mut s = GSeries::default();
        s.terms.insert((0, 0), 1.0);
        s
    }

    fn add_term(&mut self, key: (u32, u32), c: f64) {
        if c != 0.0 {
            *self.terms.entry(key).or_insert(0.0) += c;
        }
    }

    fn add_scaled(&mut self, other: &GSeries, c: f64) {
        for (&k, &v) in &other.terms {
            self.add_term(k, c * v);
        }
    }

    fn mul(&self, other: &GSeries, delta: f64, order: f64) -> GSeries {
        let mut out = GSeries::default();
        for (&(p1, q1), &a) in &self.terms {
            for (&(p2, q2), &b) in &other.terms {
                let key = (p1 + p2, q1 + q2);
                if exponent(key, delta) <= order + SAME_EXPONENT {
                    out.add_term(key, a * b);
                }
            }
        }
        out
    }

    /// Multiply by `m^{−(dp δ + dq)}`.
    fn shift(&self, dp: u32, dq: u32, delta: f64, order: f64) -> GSeries {
        let mut out = GSeries::default();
        for (&(p, q), &v) in &self.terms {
            let key = (p + dp, q + dq);
            if exponent(key, delta) <= order + SAME_EXPONENT {
                out.add_term(key, v);
            }
        }
        out
    }

    fn max_diff(&self, other: &GSeries) -> f64 {
        let mut d = 0.0f64;
        for (k, &v) in &self.terms {
            d = d.max(libm::fabs(v - other.terms.get(k).copied().unwrap_or(0.0)));
        }
        for (k, &v) in &other.terms {
            if !self.terms.contains_key(k) {
                d = d.max(libm::fabs(v));
            }
        }
        d
    }
}

fn exponent((p, q): (u32, u32), delta: f64) -> f64 {
    p as f64 * delta + q as f64
}

/// `x (x−1) … (x−j+1) / j!`.
fn binom(x: f64, j: usize) -> f64 {
    let mut b = 1.0;
    for i in 0..j {
        b *= (x - i as f64) / (i + 1) as f64;
    }
    b
}

fn binom_complex(x: Complex64, j: usize) -> Complex64 {
    let mut b = Complex64::new(1.0, 0.0);
    for i in 0..j {
        b *= (x - i as f64) / (i + 1) as f64;
    }
    b
}

/// One term `coef · m^{−(j + E)}` of the expansion of `(L/m)^{−s} m^{−s}`:
/// `coef` multiplies `C(−s, j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailTerm {
    /// Power `j` of ε.
    pub j: usize,
    /// Exponent `E` of the ε^j coefficient (`pδ + q`).
    pub exponent: f64,
    pub coef: f64,
}

/// Eigenvalue model for `n >= M` and the corresponding ζ tail.
#[derive(Debug, Clone, PartialEq)]
pub struct TailModel {
    pub kappa: f64,
    /// `λ_n = 4(n + offset + ε)`: `1 − κ` for finite β, `κ` for the closed
    /// `β = −∞` / essentially self-adjoint spectra.
    pub offset: f64,
    pub beta: f64,
    pub order: f64,
    /// `(exponent, coefficient)` of ε, merged by exponent.
    eps: Vec<(f64, f64)>,
    /// Terms of `Σ_{j>=1} C(−s,j) m^{−j} ε^j`.
    terms: Vec<TailTerm>,
}

impl TailModel {
    pub fn new(ctx: &SecularContext, order: f64) -> Self {
        let kappa = ctx.kappa();
        let closed = |offset: f64| TailModel {
            kappa,
            offset,
            beta: 0.0,
            order,
            eps: Vec::new(),
            terms: Vec::new(),
        };
        if ctx.regime() == Regime::EssentiallySelfAdjoint {
            return closed(kappa);
        }
        let beta = match ctx.ext {
            ExtensionParam::MinusInfinity => return closed(kappa),
            ExtensionParam::Finite(b) if b == 0.0 => return closed(1.0 - kappa),
            ExtensionParam::Finite(b) => b,
        };
        let delta = 2.0 * kappa - 1.0;
        let eps = offset_series(kappa, beta, order);

        // powers ε^j, j >= 1, with j + E <= order
        let mut terms = Vec::new();
        let mut pow = GSeries::one();
        let mut j = 0;
        loop {
            j += 1;
            let jf = j as f64;
            if jf * (1.0 + delta) > order + SAME_EXPONENT {
                break;
            }
            pow = pow.mul(&eps, delta, order - jf);
            for (e, c) in merged(&pow, delta) {
                terms.push(TailTerm { j, exponent: e, coef: c });
            }
        }
        TailModel {
            kappa,
            offset: 1.0 - kappa,
            beta,
            order,
            eps: merged(&eps, delta),
            terms,
        }
    }

    /// `|β| (M + 1 − κ)^{−δ}`: the expansion parameter at the first modelled
    /// level.
    pub fn expansion_parameter(&self, big_m: usize) -> f64 {
        let delta = 2.0 * self.kappa - 1.0;
        libm::fabs(self.beta) * libm::pow(big_m as f64 + self.offset, -delta)
    }

    pub fn check_validity(&self, big_m: usize) -> Result<()> {
        let r = self.expansion_parameter(big_m);
        if r < VALIDITY_LIMIT {
            Ok(())
        } else {
            Err(Error::Divergent {
                what: "eigenvalue tail model (increase M)",
                ratio: r,
            })
        }
    }

    /// `ε` at `m = n + offset`.
    pub fn offset_at(&self, m: f64) -> f64 {
        let lm = libm::log(m);
        self.eps
            .iter()
            .rev()
            .map(|&(e, c)| c * libm::exp(-e * lm))
            .sum()
    }

    /// Modelled `λ_n`.
    pub fn lambda(&self, n: usize) -> f64 {
        let m = n as f64 + self.offset;
        4.0 * (m + self.offset_at(m))
    }

    /// Exponents `(E, coefficient)` of `ε(m) = Σ c m^{−E}`.
    pub fn offset_series(&self) -> &[(f64, f64)] {
        &self.eps
    }

    pub fn terms(&self) -> &[TailTerm] {
        &self.terms
    }

    /// Positions `s = 1 − j − E` where the tail has poles (besides `s = 1`).
    pub fn pole_positions(&self) -> Vec<f64> {
        let mut p: Vec<f64> = self.terms.iter().map(|t| 1.0 - t.j as f64 - t.exponent).collect();
        p.sort_by(|a, b| b.total_cmp(a));
        p.dedup_by(|a, b| libm::fabs(*a - *b) < SAME_EXPONENT);
        p
    }

    /// Residue of the tail (hence of ζ_β) at `s0`, summed over all terms
    /// with a pole there.
    pub fn residue_at(&self, s0: f64, tol: f64) -> f64 {
        if libm::fabs(s0 - 1.0) < tol {
            return 0.25;
        }
        let pre = libm::pow(4.0, -s0);
        self.terms
            .iter()
            .filter(|t| libm::fabs(1.0 - t.j as f64 - t.exponent - s0) < tol)
            .map(|t| pre * binom(-s0, t.j) * t.coef)
            .sum()
    }

    /// `Σ_{n>=M} λ_n^{−s}` over the model, with an error estimate.
    pub fn zeta_tail(&self, s: Complex64, big_m: usize) -> Result<(Complex64, f64)> {
        let q = big_m as f64 + self.offset;
        let mut sum = ComplexSum::default();
        let mut last_band = 0.0;
        sum.add(hurwitz_zeta(s, q)?);
        for t in &self.terms {
            let e = t.j as f64 + t.exponent;
            let v = binom_complex(-s, t.j) * t.coef * hurwitz_zeta(s + e, q)?;
            if e > self.order - 1.0 {
                last_band += v.norm();
            }
            sum.add(v);
        }
        let pre = four_pow_neg(s);
        let value = pre * sum.value();
        let rounding = 8.0 * f64::EPSILON * sum.magnitude() * pre.norm();
        // the omitted orders start about one power of m below the last band
        let truncation = last_band * pre.norm() * libm::pow(q, -(2.0 * self.kappa - 1.0));
        Ok((value, truncation + rounding))
    }
}

/// `4^{−s}`.
pub(crate) fn four_pow_neg(s: Complex64) -> Complex64 {
    (-s * core::f64::consts::LN_2 * 2.0).exp()
}

fn merged(series: &GSeries, delta: f64) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::new();
    let mut items: Vec<(f64, f64)> = series.terms.iter().map(|(&k, &v)| (exponent(k, delta), v)).collect();
    items.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (e, c) in items {
        match out.last_mut() {
            Some(last) if libm::fabs(last.0 - e) < SAME_EXPONENT => last.1 += c,
            _ => out.push((e, c)),
        }
    }
    out.retain(|&(_, c)| c != 0.0);
    out
}

/// Fixed-point iteration for the series of ε.
fn offset_series(kappa: f64, beta: f64, order: f64) -> GSeries {
    let delta = 2.0 * kappa - 1.0;
    let rho = RhoSeries::new(kappa);
    let c = rho.coefficients();
    let j_max = libm::floor(order / (1.0 + delta)) as usize;
    let k_max = libm::floor(order / delta) as usize;

    let mut eps = GSeries::default();
    for _ in 0..200 {
        // ε^i, i <= j_max
        let mut eps_pows = Vec::with_capacity(j_max + 1);
        eps_pows.push(GSeries::one());
        for i in 1..=j_max {
            let next = eps_pows[i - 1].mul(&eps, delta, order);
            eps_pows.push(next);
        }
        // L^{−e} = Σ_i C(−e, i) m^{−e−i} ε^i
        let l_pow = |e: f64, dp: u32, dq: u32| {
            let mut out = GSeries::default();
            for (i, p) in eps_pows.iter().enumerate() {
                let shifted = p.shift(dp, dq + i as u32, delta, order);
                out.add_scaled(&shifted, binom(-e, i));
            }
            out
        };
        let l_delta = l_pow(delta, 1, 0);
        let mut exponent_sum = GSeries::default();
        for (i, &cj) in c.iter().enumerate() {
            let two_j = 2 * (i + 1) as u32;
            if two_j as f64 > order {
                break;
            }
            exponent_sum.add_scaled(&l_pow(two_j as f64, 0, two_j), cj);
        }
        // G = exp(S), S = O(m^{−2})
        let mut g = GSeries::one();
        let mut s_pow = GSeries::one();
        let mut fact = 1.0;
        for k in 1..=(order / 2.0) as usize {
            s_pow = s_pow.mul(&exponent_sum, delta, order);
            fact *= k as f64;
            g.add_scaled(&s_pow, 1.0 / fact);
        }
        let mut y = l_delta.mul(&g, delta, order);
        y.terms.values_mut().for_each(|v| *v *= beta);

        // πε = Σ_k (−1)^{k+1} y^k sin(2πkκ)/k
        let mut next = GSeries::default();
        let mut y_pow = GSeries::one();
        for k in 1..=k_max {
            y_pow = y_pow.mul(&y, delta, order);
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            next.add_scaled(&y_pow, sign * sinpi(2.0 * k as f64 * kappa) / (k as f64 * PI));
        }
        let scale = next.terms.values().fold(0.0f64, |a, v| a.max(libm::fabs(*v)));
        let done = next.max_diff(&eps) <= 1e-15 * scale.max(f64::MIN_POSITIVE);
        eps = next;
        if done {
            break;
        }
    }
    eps
}
