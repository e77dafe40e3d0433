//! Secular function, eigenvalues and eigenfunctions of `H_(β)`.
//!
//! Finite-β eigenvalues are zeros of the entire function
//! `f(λ) = 1/Γ(1−κ−λ/4) − β/Γ(κ−λ/4)`. Evaluating `f` directly under- or
//! overflows once `|λ|` is a few hundred, so the solver works with positive
//! multiples of it:
//!
//! * for `λ/4 < 1 − κ`: `F(λ) − β` with `F = Γ(κ−λ/4)/Γ(1−κ−λ/4)`;
//! * otherwise, writing `λ/4 = n + 1 − κ + ε` and
//!   `ρ(L) = Γ(L+1−κ)/Γ(L+κ)`: `(−1)^{n+1} [sin πε − β ρ sin π(2κ−ε)]`.
//!
//! In the second form the level `n >= 1` sits at
//! `ε ∈ (2κ−2, 2κ−1)`, where the bracket end values are `± sin 2πκ`
//! independently of β.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::sae::{CouplingParams, ExtensionParam, Regime};
use crate::specfun::{
    bernoulli_polynomial, cospi, digamma, digamma_over_gamma, gamma_ratio, kummer_u, kummer_u_estimate,
    ln_gamma, recip_gamma, sinpi, GammaRatio,
};

/// Bisection stops once the bracket is this narrow in λ.
pub const BISECTION_WIDTH: f64 = 1e-12;
/// Newton polish steps after bisection.
pub const NEWTON_STEPS: usize = 5;

/// Operator coupling plus the chosen extension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecularContext {
    pub params: CouplingParams,
    pub ext: ExtensionParam,
}

/// How a level was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    ClosedForm,
    RootFound,
    /// Modelled by the large-n expansion; only produced by the tail model.
    AsymptoticTail,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::RootFound => "root-found",
            Provenance::AsymptoticTail => "asymptotic-tail",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub n: usize,
    pub lambda: f64,
    pub provenance: Provenance,
}

impl Level {
    /// Non-positive levels are kept in a [`Spectrum`] but excluded from ζ sums.
    pub fn is_nonpositive(&self) -> bool {
        self.lambda <= 0.0
    }
}

/// Eigenvalues `λ_0 < λ_1 < … < λ_{n_max}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub ctx: SecularContext,
    pub levels: Vec<Level>,
}

impl Spectrum {
    /// Levels `0..=n_max`, computed in index order.
    pub fn compute(ctx: SecularContext, n_max: usize) -> Result<Self> {
        let levels = (0..=n_max)
            .map(|n| level(n, &ctx))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spectrum { ctx, levels })
    }

    /// Assembles a spectrum from levels computed elsewhere (e.g. in
    /// parallel), ordering them by index.
    pub fn from_levels(ctx: SecularContext, mut levels: Vec<Level>) -> Self {
        levels.sort_by_key(|l| l.n);
        Spectrum { ctx, levels }
    }

    pub fn lambdas(&self) -> impl Iterator<Item = f64> + '_ {
        self.levels.iter().map(|l| l.lambda)
    }

    /// The level with `λ <= 0`, if any (at most the ground state).
    pub fn nonpositive(&self) -> Option<&Level> {
        self.levels.first().filter(|l| l.is_nonpositive())
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

impl SecularContext {
    pub fn new(params: CouplingParams, ext: ExtensionParam) -> Self {
        SecularContext { params, ext }
    }

    pub fn kappa(&self) -> f64 {
        self.params.kappa
    }

    pub fn regime(&self) -> Regime {
        self.params.regime()
    }

    /// Finite β, or the contract error for `β = −∞`.
    pub fn beta(&self, what: &'static str) -> Result<f64> {
        self.ext.finite().ok_or(Error::InfiniteBeta(what))
    }

    /// True when every eigenvalue has a closed form.
    pub fn is_closed_form(&self) -> bool {
        self.regime() == Regime::EssentiallySelfAdjoint
            || matches!(self.ext, ExtensionParam::MinusInfinity)
            || self.ext.is_zero()
    }

    /// `Γ(κ)/Γ(1−κ)`: a negative ground state exists iff β exceeds it.
    pub fn threshold(&self) -> f64 {
        negative_state_threshold(self.kappa())
    }

    fn require_sae(&self) -> Result<()> {
        match self.regime() {
            Regime::NontrivialSAE => Ok(()),
            Regime::EssentiallySelfAdjoint => Err(Error::Regime {
                kappa: self.kappa(),
            }),
        }
    }
}

/// `Γ(κ)/Γ(1−κ)`.
pub fn negative_state_threshold(kappa: f64) -> f64 {
    // both arguments are positive for κ ∈ (0, 1)
    let (a, _) = ln_gamma(kappa).unwrap_or((f64::NAN, 1.0));
    let (b, _) = ln_gamma(1.0 - kappa).unwrap_or((f64::NAN, 1.0));
    libm::exp(a - b)
}

/// `ln ρ(z)` and its derivative, `ρ(z) = Γ(z+1−κ)/Γ(z+κ)`, for `z > κ − 1`.
///
/// Shifts `z` up to at least 20 and uses
/// `ln ρ(z) ~ −(2κ−1) ln z + Σ_j 2B_{2j+1}(κ)/(2j(2j+1)) z^{−2j}`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RhoSeries {
    kappa: f64,
    coef: [f64; 8],
}

impl RhoSeries {
    const SHIFT_TO: f64 = 20.0;

    pub(crate) fn new(kappa: f64) -> Self {
        let mut coef = [0.0; 8];
        for (i, c) in coef.iter_mut().enumerate() {
            let j = (i + 1) as f64;
            *c = 2.0 * bernoulli_polynomial(2 * i + 3, kappa) / (2.0 * j * (2.0 * j + 1.0));
        }
        RhoSeries { kappa, coef }
    }

    pub(crate) fn coefficients(&self) -> &[f64; 8] {
        &self.coef
    }

    /// `(ln ρ(z), d ln ρ/dz)`.
    pub(crate) fn eval(&self, z: f64) -> (f64, f64) {
        let k = self.kappa;
        let mut z = z;
        let mut ln = 0.0;
        let mut d = 0.0;
        while z < Self::SHIFT_TO {
            // ρ(z) = ρ(z+1)·(z+κ)/(z+1−κ)
            ln += libm::log((z + k) / (z + 1.0 - k));
            d += 1.0 / (z + k) - 1.0 / (z + 1.0 - k);
            z += 1.0;
        }
        let delta = 2.0 * k - 1.0;
        let inv2 = 1.0 / (z * z);
        let mut series = 0.0;
        let mut dseries = 0.0;
        for (i, c) in self.coef.iter().enumerate().rev() {
            let p = 2.0 * (i + 1) as f64;
            series = series * inv2 + c;
            dseries = dseries * inv2 - p * c;
        }
        series *= inv2;
        dseries *= inv2 / z;
        (ln - delta * libm::log(z) + series, d - delta / z + dseries)
    }

    pub(crate) fn rho(&self, z: f64) -> (f64, f64) {
        let (ln, d) = self.eval(z);
        let r = libm::exp(ln);
        (r, r * d)
    }
}

/// `f(λ) = 1/Γ(1−κ−λ/4) − β/Γ(κ−λ/4)`.
pub fn secular_f(lambda: f64, ctx: &SecularContext) -> Result<f64> {
    ctx.require_sae()?;
    let beta = ctx.beta("secular_f")?;
    let k = ctx.kappa();
    let q = lambda / 4.0;
    let a = recip_gamma(1.0 - k - q);
    let b = if beta == 0.0 { 0.0 } else { beta * recip_gamma(k - q) };
    Ok(a - b)
}

/// `f′(λ) = (1/4)[ψ(1−κ−λ/4)/Γ(1−κ−λ/4) − β ψ(κ−λ/4)/Γ(κ−λ/4)]`.
pub fn secular_f_prime(lambda: f64, ctx: &SecularContext) -> Result<f64> {
    ctx.require_sae()?;
    let beta = ctx.beta("secular_f_prime")?;
    let k = ctx.kappa();
    let q = lambda / 4.0;
    let a = digamma_over_gamma(1.0 - k - q);
    let b = if beta == 0.0 { 0.0 } else { beta * digamma_over_gamma(k - q) };
    Ok(0.25 * (a - b))
}

/// A positive multiple of `f(λ)` that stays in range for all real λ, and its
/// derivative in λ.
pub fn secular_scaled(lambda: f64, ctx: &SecularContext) -> Result<(f64, f64)> {
    ctx.require_sae()?;
    let beta = ctx.beta("secular_scaled")?;
    let series = RhoSeries::new(ctx.kappa());
    Ok(scaled(lambda, ctx.kappa(), beta, &series))
}

fn scaled(lambda: f64, k: f64, beta: f64, series: &RhoSeries) -> (f64, f64) {
    let l = lambda / 4.0;
    if l < 1.0 - k {
        // F(λ) = 1/ρ(−L)
        let (ln, d) = series.eval(-l);
        let f = libm::exp(-ln);
        (f - beta, f * d / 4.0)
    } else {
        // sin π(L+κ) − β ρ(L) sin π(κ−L)
        let (r, dr) = series.rho(l);
        let v = sinpi(l + k) - beta * r * sinpi(k - l);
        let dv = PI * cospi(l + k) - beta * (dr * sinpi(k - l) - PI * r * cospi(k - l));
        (v, dv / 4.0)
    }
}

/// `h(ε) = sin πε − β ρ(n+1−κ+ε) sin π(2κ−ε)` and `dh/dε`.
fn h_eps(eps: f64, base: f64, k: f64, beta: f64, series: &RhoSeries) -> (f64, f64) {
    let (r, dr) = series.rho(base + eps);
    let s2 = sinpi(2.0 * k - eps);
    let v = sinpi(eps) - beta * r * s2;
    let dv = PI * cospi(eps) - beta * (dr * s2 - PI * r * cospi(2.0 * k - eps));
    (v, dv)
}

/// Bisection on `[lo, hi]` (sign change required) down to `width`, then up
/// to [`NEWTON_STEPS`] Newton steps, each rejected if it leaves the bracket.
fn solve<F: Fn(f64) -> (f64, f64)>(g: F, mut lo: f64, mut hi: f64, width: f64) -> Option<f64> {
    let (mut g_lo, _) = g(lo);
    let (g_hi, _) = g(hi);
    if g_lo == 0.0 {
        return Some(lo);
    }
    if g_hi == 0.0 {
        return Some(hi);
    }
    if (g_lo > 0.0) == (g_hi > 0.0) {
        return None;
    }
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (g_mid, _) = g(mid);
        if g_mid == 0.0 {
            return Some(mid);
        }
        if (g_mid > 0.0) == (g_lo > 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..NEWTON_STEPS {
        let (v, d) = g(x);
        if v == 0.0 || d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - v / d;
        if !(next >= lo && next <= hi) {
            break;
        }
        if next == x {
            break;
        }
        x = next;
    }
    Some(x)
}

fn closed_form(n: usize, ctx: &SecularContext) -> Option<f64> {
    let nf = n as f64;
    let k = ctx.kappa();
    if ctx.regime() == Regime::EssentiallySelfAdjoint {
        return Some(4.0 * nf + 2.0 * ctx.params.alpha + 1.0);
    }
    match ctx.ext {
        ExtensionParam::MinusInfinity => Some(4.0 * (nf + k)),
        ExtensionParam::Finite(b) if b == 0.0 => Some(4.0 * (nf + 1.0 - k)),
        ExtensionParam::Finite(_) => None,
    }
}

/// `λ_n` for `H_(β)`.
///
/// Closed forms for the essentially self-adjoint regime, `β = 0` and
/// `β = −∞`; otherwise the unique root in `(4(n−1+κ), 4(n+κ))` for `n >= 1`
/// and [`ground_state`] for `n = 0`.
pub fn eigenvalue(n: usize, ctx: &SecularContext) -> Result<f64> {
    level(n, ctx).map(|l| l.lambda)
}

pub fn level(n: usize, ctx: &SecularContext) -> Result<Level> {
    if let Some(lambda) = closed_form(n, ctx) {
        return Ok(Level {
            n,
            lambda,
            provenance: Provenance::ClosedForm,
        });
    }
    let lambda = if n == 0 {
        ground_state(ctx)?
    } else {
        let series = RhoSeries::new(ctx.kappa());
        excited(n, ctx, &series)?
    };
    Ok(Level {
        n,
        lambda,
        provenance: Provenance::RootFound,
    })
}

/// `ε_n = λ_n/4 − (n + 1 − κ)` for a finite-β level `n >= 1`.
pub(crate) fn excited_offset(n: usize, k: f64, beta: f64, series: &RhoSeries) -> Result<f64> {
    let base = n as f64 + 1.0 - k;
    let (lo, hi) = (2.0 * k - 2.0, 2.0 * k - 1.0);
    solve(|e| h_eps(e, base, k, beta, series), lo, hi, BISECTION_WIDTH / 4.0).ok_or(Error::Bracket {
        n,
        lo: 4.0 * (n as f64 - 1.0 + k),
        hi: 4.0 * (n as f64 + k),
    })
}

fn excited(n: usize, ctx: &SecularContext, series: &RhoSeries) -> Result<f64> {
    ctx.require_sae()?;
    let beta = ctx.beta("eigenvalue")?;
    let k = ctx.kappa();
    let eps = excited_offset(n, k, beta, series)?;
    let lambda = 4.0 * (n as f64 + 1.0 - k + eps);
    // rounding in the last step must not push λ onto a bracket end
    let (lo, hi) = (4.0 * (n as f64 - 1.0 + k), 4.0 * (n as f64 + k));
    Ok(lambda.clamp(next_up(lo), next_down(hi)))
}

fn next_up(x: f64) -> f64 {
    f64::from_bits(if x >= 0.0 { x.to_bits() + 1 } else { x.to_bits() - 1 })
}

fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

/// Least eigenvalue of a finite-β extension; negative iff
/// `β > Γ(κ)/Γ(1−κ)`, always below `4κ`.
pub fn ground_state(ctx: &SecularContext) -> Result<f64> {
    if let Some(l) = closed_form(0, ctx) {
        return Ok(l);
    }
    ctx.require_sae()?;
    let beta = ctx.beta("ground_state")?;
    let k = ctx.kappa();
    let series = RhoSeries::new(k);
    let g = |lambda: f64| scaled(lambda, k, beta, &series);
    let threshold = ctx.threshold();
    let bracket_err = |lo, hi| Error::Bracket { n: 0, lo, hi };

    if beta == threshold {
        return Ok(0.0);
    }
    // the side is read off g(0) rather than the threshold: within rounding
    // of the threshold the two can disagree
    let at_zero = g(0.0).0;
    if at_zero == 0.0 {
        return Ok(0.0);
    }
    let hi = next_down(4.0 * k);
    if at_zero.signum() != g(hi).0.signum() {
        return solve(g, 0.0, hi, BISECTION_WIDTH).ok_or(bracket_err(0.0, hi));
    }
    let mut lo = -2.0;
    while g(lo).0.signum() == at_zero.signum() {
        lo *= 2.0;
        if !lo.is_finite() {
            return Err(Error::Overflow("ground_state bracket"));
        }
    }
    let width = BISECTION_WIDTH * libm::fabs(lo).max(1.0);
    solve(g, lo, 0.0, width).ok_or(bracket_err(lo, 0.0))
}

/// `4[n + 1 − κ + d₁ n^{1−2κ} + d₂ n^{−2κ} + d₃ n^{2−4κ}]` with
/// `d₁ = (β/π) sin 2πκ`, `d₂ = d₁(1 − 3κ + 2κ²)`, `d₃ = −(β²/2π) sin 4πκ`.
pub fn eigenvalue_asymptotic(n: usize, ctx: &SecularContext) -> Result<f64> {
    let beta = ctx.beta("eigenvalue_asymptotic")?;
    if n == 0 {
        return Err(Error::Domain {
            function: "eigenvalue_asymptotic",
            value: 0.0,
            expected: "n >= 1",
        });
    }
    let k = ctx.kappa();
    let nf = n as f64;
    let d1 = beta / PI * sinpi(2.0 * k);
    let d2 = d1 * (1.0 - 3.0 * k + 2.0 * k * k);
    let d3 = -beta * beta / (2.0 * PI) * sinpi(4.0 * k);
    let corr = d1 * libm::pow(nf, 1.0 - 2.0 * k) + d2 * libm::pow(nf, -2.0 * k) + d3 * libm::pow(nf, 2.0 - 4.0 * k);
    Ok(4.0 * (nf + 1.0 - k + corr))
}

/// Unnormalized `φ_λ(x) = x^α e^{−x²/2} U((2α+1−λ)/4; α+1/2; x²)`.
pub fn eigenfunction(lambda: f64, x: f64, params: &CouplingParams) -> Result<f64> {
    check_x(x)?;
    let a = params.alpha;
    let u = kummer_u((2.0 * a + 1.0 - lambda) / 4.0, a + 0.5, x * x)?;
    Ok(libm::pow(x, a) * libm::exp(-0.5 * x * x) * u)
}

/// `φ′_λ(x)` from `d/dz U(a; b; z) = −a U(a+1; b+1; z)`.
pub fn eigenfunction_derivative(lambda: f64, x: f64, params: &CouplingParams) -> Result<f64> {
    check_x(x)?;
    let al = params.alpha;
    let a = (2.0 * al + 1.0 - lambda) / 4.0;
    let b = al + 0.5;
    let z = x * x;
    let u = kummer_u_estimate(a, b, z)?.value;
    let du = if a == 0.0 { 0.0 } else { -a * kummer_u(a + 1.0, b + 1.0, z)? };
    let pre = libm::pow(x, al) * libm::exp(-0.5 * z);
    Ok(pre * (u * (al / x - x) + 2.0 * x * du))
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function: "eigenfunction",
            value: x,
            expected: "x > 0",
        })
    }
}

/// Coefficient of `x^{2α−2}` in `φ′_λ/φ_λ − (1−α)/x` as `x → 0`:
/// `(2α−1) Γ(1/2−α)/Γ(α−1/2) · Γ((2α+1−λ)/4)/Γ((3−2α−λ)/4)`.
///
/// Returns ±∞ (as `f64::INFINITY`) when the numerator Γ sits on a pole.
pub fn boundary_coefficient(lambda: f64, params: &CouplingParams) -> Result<f64> {
    let a = params.alpha;
    let (ln1, s1) = ln_gamma(0.5 - a)?;
    let (ln2, s2) = ln_gamma(a - 0.5)?;
    let pre = (2.0 * a - 1.0) * s1 * s2 * libm::exp(ln1 - ln2);
    Ok(match gamma_ratio(params.kappa, lambda)? {
        GammaRatio::Finite(r) => pre * r,
        GammaRatio::NumeratorPole => f64::INFINITY,
    })
}

/// Boundary coefficient implied by the extension itself: the Γ-ratio of
/// [`boundary_coefficient`] replaced by β.
pub fn boundary_coefficient_from_beta(beta: f64, params: &CouplingParams) -> Result<f64> {
    let a = params.alpha;
    let (ln1, s1) = ln_gamma(0.5 - a)?;
    let (ln2, s2) = ln_gamma(a - 0.5)?;
    Ok((2.0 * a - 1.0) * s1 * s2 * libm::exp(ln1 - ln2) * beta)
}

/// Per-level data of [`simplicity_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplicityEntry {
    pub n: usize,
    pub lambda: f64,
    /// `f′(λ_n)`; may overflow to ±∞ for large `n`, which still counts as
    /// nonzero.
    pub f_prime: f64,
    /// `ψ(1−κ−λ_n/4) − ψ(κ−λ_n/4)`; `None` when an argument is a pole of ψ.
    pub psi_gap: Option<f64>,
    /// Derivative of the scaled secular function, normalised by its scale.
    pub margin: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplicityReport {
    pub entries: Vec<SimplicityEntry>,
}

impl SimplicityReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn min_margin(&self) -> f64 {
        self.entries.iter().map(|e| e.margin).fold(f64::INFINITY, f64::min)
    }
}

/// Checks `f′(λ_n) ≠ 0` (equivalently distinct ψ values) for `n <= n_max`.
pub fn simplicity_check(ctx: &SecularContext, n_max: usize) -> Result<SimplicityReport> {
    ctx.require_sae()?;
    let beta = ctx.beta("simplicity_check")?;
    let k = ctx.kappa();
    let series = RhoSeries::new(k);
    let mut entries = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let lambda = eigenvalue(n, ctx)?;
        let q = lambda / 4.0;
        let f_prime = secular_f_prime(lambda, ctx)?;
        let psi_gap = match (digamma(1.0 - k - q), digamma(k - q)) {
            (Ok(a), Ok(b)) => Some(a - b),
            _ => None,
        };
        let (_, ds) = scaled(lambda, k, beta, &series);
        // |S′| relative to the O(1) scale of the scaled function's pieces
        let scale = if q < 1.0 - k {
            libm::fabs(beta).max(1.0)
        } else {
            1.0 + libm::fabs(beta) * series.rho(q).0
        };
        let margin = libm::fabs(ds) / scale;
        let passed = f_prime != 0.0 && psi_gap.is_none_or(|g| g != 0.0) && margin > 0.0;
        entries.push(SimplicityEntry {
            n,
            lambda,
            f_prime,
            psi_gap,
            margin,
            passed,
        });
    }
    Ok(SimplicityReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sae::params_from_g;

    fn ctx(kappa: f64, beta: f64) -> SecularContext {
        SecularContext::new(CouplingParams::from_kappa(kappa).unwrap(), ExtensionParam::Finite(beta))
    }

    #[test]
    fn rho_series_matches_log_gamma() {
        let s = RhoSeries::new(0.8);
        for z in [-0.15, 0.3, 2.7, 19.5, 25.0, 300.0] {
            let (ln, d) = s.eval(z);
            let (a, _) = ln_gamma(z + 0.2).unwrap();
            let (b, _) = ln_gamma(z + 0.8).unwrap();
            assert!((ln - (a - b)).abs() < 1e-13 * a.abs().max(1.0), "z = {z}");
            let dd = digamma(z + 0.2).unwrap() - digamma(z + 0.8).unwrap();
            assert!((d - dd).abs() < 1e-12 * dd.abs().max(1.0), "z = {z}");
        }
    }

    #[test]
    fn secular_examples() {
        let c = ctx(0.75, 1.0);
        let v = secular_f(1.0, &c).unwrap();
        assert!((v + 1.0 / libm::sqrt(PI)).abs() < 1e-15);
        // β arbitrary, λ = 4(n+κ): second term vanishes
        let c = ctx(0.8, 2.5);
        for n in 0..4 {
            let lambda = 4.0 * (n as f64 + 0.8);
            let v = secular_f(lambda, &c).unwrap();
            assert!((v - recip_gamma(1.0 - 1.6 - n as f64)).abs() < 1e-12 * v.abs());
        }
        let zero = ctx(0.75, 0.0);
        for n in 0..5 {
            assert_eq!(secular_f(4.0 * (n as f64 + 0.25), &zero).unwrap(), 0.0);
        }
        let dir = SecularContext::new(params_from_g(0.0).unwrap(), ExtensionParam::MinusInfinity);
        assert!(matches!(secular_f(1.0, &dir), Err(Error::InfiniteBeta(_))));
    }

    #[test]
    fn scaled_function_has_the_sign_of_f() {
        for (k, b) in [(0.75, 1.0), (0.8, -3.0), (0.9, 20.0)] {
            let c = ctx(k, b);
            let mut lambda = -30.0;
            while lambda < 60.0 {
                let f = secular_f(lambda, &c).unwrap();
                let (s, _) = secular_scaled(lambda, &c).unwrap();
                if f.abs() > 1e-12 {
                    assert_eq!(f > 0.0, s > 0.0, "k={k} b={b} λ={lambda}");
                }
                lambda += 0.173;
            }
        }
    }

    #[test]
    fn closed_form_spectra() {
        let p = params_from_g(0.0).unwrap();
        let dir = SecularContext::new(p, ExtensionParam::MinusInfinity);
        let neu = SecularContext::new(p, ExtensionParam::Finite(0.0));
        for n in 0..20 {
            assert_eq!(eigenvalue(n, &dir).unwrap(), 4.0 * n as f64 + 3.0);
            assert_eq!(eigenvalue(n, &neu).unwrap(), 4.0 * n as f64 + 1.0);
        }
        let esa = SecularContext::new(params_from_g(2.0).unwrap(), ExtensionParam::Finite(1.0));
        assert_eq!(eigenvalue(3, &esa).unwrap(), 12.0 + 5.0);
    }

    #[test]
    fn root_found_levels() {
        // independent oracle: plain bisection on f to 1e−14
        let c = ctx(0.8, 1.0);
        for n in 1..=5 {
            let (mut lo, mut hi) = (4.0 * (n as f64 - 0.2), 4.0 * (n as f64 + 0.8));
            let f_lo = secular_f(lo, &c).unwrap();
            assert!(f_lo * secular_f(hi, &c).unwrap() < 0.0);
            while hi - lo > 1e-14 {
                let mid = 0.5 * (lo + hi);
                if (secular_f(mid, &c).unwrap() > 0.0) == (f_lo > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let l = eigenvalue(n, &c).unwrap();
            assert!((l - 0.5 * (lo + hi)).abs() < 1e-12, "n = {n}");
            assert!(secular_f(l, &c).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn ground_state_at_threshold() {
        for kappa in [0.75, 0.8] {
            let t = negative_state_threshold(kappa);
            let mut b = t;
            for _ in 0..20 {
                b = f64::from_bits(b.to_bits() - 1);
            }
            let mut beta = b;
            for _ in 0..40 {
                let l = ground_state(&ctx(kappa, beta)).unwrap();
                assert!(l.abs() < 1e-6, "κ={kappa} β={beta}: {l}");
                beta = f64::from_bits(beta.to_bits() + 1);
            }
        }
    }

    #[test]
    fn ground_state_cases() {
        let t = negative_state_threshold(0.75);
        assert!((t - 0.337_989_120_033_642_34).abs() < 1e-15);
        assert_eq!(ground_state(&ctx(0.75, t)).unwrap(), 0.0);
        assert_eq!(ground_state(&ctx(0.75, 0.0)).unwrap(), 1.0);
        let c = ctx(0.75, 10.0);
        let l0 = ground_state(&c).unwrap();
        assert!(l0 < 0.0);
        let f = secular_f(l0, &c).unwrap();
        let fp = secular_f_prime(l0, &c).unwrap();
        assert!(f.abs() < 1e-12 * fp.abs().max(1.0));
        // slightly below the threshold: small positive ground state
        let l0 = ground_state(&ctx(0.75, t - 1e-6)).unwrap();
        assert!(l0 > 0.0 && l0 < 1e-3);
        // κ = 0.9: threshold ≈ 0.1123; below it λ₀ ∈ (0, 4κ), ordered by β
        let mut last = 3.6;
        for b in [-100.0, -1.0, 0.0, 0.05] {
            let l0 = ground_state(&ctx(0.9, b)).unwrap();
            assert!(l0 > 0.0 && l0 < last, "beta = {b}");
            last = l0;
        }
        assert!(ground_state(&ctx(0.9, 0.2)).unwrap() < 0.0);
    }

    #[test]
    fn asymptotic_formula() {
        let c = ctx(0.75, 0.0);
        assert_eq!(eigenvalue_asymptotic(7, &c).unwrap(), 4.0 * (8.0 - 0.75));
        let c = ctx(0.75, 1.0);
        let n = 10_000;
        let d = (eigenvalue(n, &c).unwrap() - eigenvalue_asymptotic(n, &c).unwrap()).abs();
        assert!(d < 1e-6, "{d}");
    }

    #[test]
    fn hermite_eigenfunctions() {
        use crate::specfun::hermite;
        let p = params_from_g(0.0).unwrap();
        for n in 0..=5 {
            for i in 0..30 {
                let x = 0.1 + 0.1 * i as f64;
                let e = libm::exp(-0.5 * x * x);
                let odd = eigenfunction(4.0 * n as f64 + 3.0, x, &p).unwrap();
                let odd_ref = libm::pow(2.0, -2.0 * n as f64 - 1.0) * e * hermite(2 * n + 1, x);
                assert!((odd - odd_ref).abs() <= 1e-9 * odd_ref.abs().max(1e-300), "odd n={n} x={x}");
                let even = eigenfunction(4.0 * n as f64 + 1.0, x, &p).unwrap();
                let even_ref = libm::pow(2.0, -2.0 * n as f64) * e * hermite(2 * n, x);
                assert!((even - even_ref).abs() <= 1e-9 * even_ref.abs().max(1e-300), "even n={n} x={x}");
            }
        }
    }

    #[test]
    fn eigenfunction_at_a_zero() {
        let p = CouplingParams::from_kappa(0.8).unwrap();
        let lambda = 2.0 * p.alpha + 1.0;
        let x: f64 = 0.7;
        let v = eigenfunction(lambda, x, &p).unwrap();
        assert!((v - libm::pow(x, p.alpha) * libm::exp(-0.245)).abs() < 1e-15);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let p = CouplingParams::from_kappa(0.8).unwrap();
        for (lambda, x) in [(5.3, 0.4), (11.0, 1.7), (-2.0, 2.5)] {
            let h = 1e-5;
            let fd = (eigenfunction(lambda, x + h, &p).unwrap() - eigenfunction(lambda, x - h, &p).unwrap()) / (2.0 * h);
            let d = eigenfunction_derivative(lambda, x, &p).unwrap();
            assert!((d - fd).abs() < 1e-7 * d.abs().max(1.0), "{lambda} {x}: {d} vs {fd}");
        }
    }

    #[test]
    fn boundary_coefficient_at_eigenvalues() {
        let c = ctx(0.8, 1.0);
        let lambda = eigenvalue(2, &c).unwrap();
        let from_lambda = boundary_coefficient(lambda, &c.params).unwrap();
        let from_beta = boundary_coefficient_from_beta(1.0, &c.params).unwrap();
        assert!((from_lambda - from_beta).abs() < 1e-9 * from_beta.abs());

        // finite-difference oracle on x^{α−1} φ(x) = A + B x^{2α−1} + …
        let a = c.params.alpha;
        let x = 1e-6;
        let h = 1e-8;
        let psi = |x: f64| libm::pow(x, a - 1.0) * eigenfunction(lambda, x, &c.params).unwrap();
        let dpsi = (psi(x + h) - psi(x - h)) / (2.0 * h);
        let measured = dpsi / psi(x) * libm::pow(x, 2.0 - 2.0 * a);
        assert!((measured - from_lambda).abs() < 1e-3 * from_lambda.abs(), "{measured} vs {from_lambda}");

        // the analytic derivative gives the same limit
        let d = eigenfunction_derivative(lambda, x, &c.params).unwrap();
        let v = eigenfunction(lambda, x, &c.params).unwrap();
        let measured = (d / v - (1.0 - a) / x) * libm::pow(x, 2.0 - 2.0 * a);
        assert!((measured - from_lambda).abs() < 1e-3 * from_lambda.abs(), "{measured} vs {from_lambda}");
    }

    #[test]
    fn robin_log_derivative_at_g_zero() {
        let beta = 0.6;
        let c = SecularContext::new(params_from_g(0.0).unwrap(), ExtensionParam::Finite(beta));
        let lambda = eigenvalue(1, &c).unwrap();
        let x = 1e-5;
        let r = eigenfunction_derivative(lambda, x, &c.params).unwrap() / eigenfunction(lambda, x, &c.params).unwrap();
        assert!((r + 2.0 * beta).abs() < 1e-3);
    }

    #[test]
    fn simplicity() {
        for (k, b) in [(0.75, 1.0), (0.8, -5.0)] {
            let r = simplicity_check(&ctx(k, b), 50).unwrap();
            assert!(r.passed());
            assert!(r.min_margin() > 0.0);
        }
        let r = simplicity_check(&ctx(0.75, 0.0), 10).unwrap();
        assert!(r.passed());
        assert!(r.entries.iter().all(|e| e.psi_gap.is_none()));
    }
}
