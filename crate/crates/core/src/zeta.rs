//! Spectral zeta function `ζ_β(s) = Σ λ_n^{−s}`, its pole catalog and the
//! heat-trace coefficients.
//!
//! Non-positive eigenvalues (at most the ground state) are excluded from
//! every sum and reported separately.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::asymptotics::{CoefficientSet, DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX};
use crate::error::{Error, Result};
use crate::sae::{CouplingParams, ExtensionParam, Regime};
use crate::specfun::{gamma, hurwitz_zeta, is_nonpositive_integer, pow_neg, sinpi};
use crate::spectrum::{level, Level, Provenance, SecularContext, Spectrum};
use crate::sum::{ComplexSum, KahanSum};
use crate::tail::{four_pow_neg, TailModel, DEFAULT_ORDER};

pub const DEFAULT_M: usize = 2000;
pub const DEFAULT_MERGE_TOL: f64 = 1e-9;
pub const DEFAULT_POLE_GUARD: f64 = 1e-3;
/// `zeta_continued` needs `Re s > CONTINUATION_FLOOR + margin`.
pub const CONTINUATION_FLOOR: f64 = -2.0;
pub const DEFAULT_MARGIN: f64 = 0.05;
/// Catalog residues below this are flagged as vanishing.
pub const VANISHING: f64 = 1e-14;

/// Richardson steps of [`residue_numeric`].
pub const RESIDUE_STEPS: [f64; 3] = [0.1, 0.05, 0.025];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaRegion {
    /// `Re s > 1`, where the eigenvalue series converges.
    DirectSum,
    Continued,
}

impl ZetaRegion {
    pub fn as_str(self) -> &'static str {
        match self {
            ZetaRegion::DirectSum => "direct",
            ZetaRegion::Continued => "continued",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaValue {
    pub s: Complex64,
    pub value: Complex64,
    pub err_estimate: f64,
    pub region: ZetaRegion,
    /// The excluded non-positive ground state, if any.
    pub excluded: Option<f64>,
}

/// `4^{−s} ζ(s, 1−κ)` for `β = 0`; `4^{−s} ζ(s, κ)` for `β = −∞` and in the
/// essentially self-adjoint regime.
pub fn zeta_closed_form(s: Complex64, params: &CouplingParams, ext: ExtensionParam) -> Result<Complex64> {
    let k = params.kappa;
    let q = if params.regime() == Regime::EssentiallySelfAdjoint {
        k
    } else {
        match ext {
            ExtensionParam::MinusInfinity => k,
            ExtensionParam::Finite(b) if b == 0.0 => 1.0 - k,
            ExtensionParam::Finite(b) => {
                return Err(Error::Domain {
                    function: "zeta_closed_form",
                    value: b,
                    expected: "beta = 0 or beta = -inf",
                })
            }
        }
    };
    Ok(four_pow_neg(s) * hurwitz_zeta(s, q)?)
}

/// The first `M` levels plus the tail model beyond them.
#[derive(Debug, Clone)]
pub struct ZetaEngine {
    pub ctx: SecularContext,
    pub spectrum: Spectrum,
    pub tail: TailModel,
    /// Poles to keep away from in the continued region.
    poles: Vec<f64>,
}

impl ZetaEngine {
    /// Computes `λ_0 … λ_{M−1}` and the tail model.
    pub fn new(ctx: SecularContext, big_m: usize) -> Result<Self> {
        let spectrum = Spectrum::compute(ctx, big_m.max(1) - 1)?;
        Self::with_spectrum(spectrum)
    }

    /// Uses an existing spectrum (e.g. computed in parallel); `M` is its length.
    pub fn with_spectrum(spectrum: Spectrum) -> Result<Self> {
        let ctx = spectrum.ctx;
        let tail = TailModel::new(&ctx, DEFAULT_ORDER);
        tail.check_validity(spectrum.len())?;
        let mut poles = tail.pole_positions();
        if let Some(b) = ctx.ext.finite() {
            if ctx.regime() == Regime::NontrivialSAE && b != 0.0 {
                let cat = pole_catalog(&ctx, DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX, DEFAULT_MERGE_TOL);
                poles.extend(cat.entries.iter().map(|e| e.position));
            }
        }
        poles.push(1.0);
        poles.sort_by(|a, b| b.total_cmp(a));
        poles.dedup_by(|a, b| libm::fabs(*a - *b) < 1e-12);
        Ok(ZetaEngine {
            ctx,
            spectrum,
            tail,
            poles,
        })
    }

    pub fn big_m(&self) -> usize {
        self.spectrum.len()
    }

    pub fn pole_positions(&self) -> &[f64] {
        &self.poles
    }

    /// `ζ_β(s)` for `Re s > 1`.
    pub fn direct(&self, s: Complex64) -> Result<ZetaValue> {
        if !(s.re > 1.0) {
            return Err(Error::Region {
                re: s.re,
                im: s.im,
                region: "Re s > 1",
            });
        }
        self.evaluate(s, ZetaRegion::DirectSum)
    }

    /// `ζ_β(s)` for `Re s > −2 + margin`, at least `pole_guard` away from
    /// every pole of the continuation.
    pub fn continued(&self, s: Complex64, pole_guard: f64, margin: f64) -> Result<ZetaValue> {
        if !(s.re > CONTINUATION_FLOOR + margin) {
            return Err(Error::Region {
                re: s.re,
                im: s.im,
                region: "Re s > -2 + margin",
            });
        }
        for &p in &self.poles {
            if (s - p).norm() < pole_guard {
                return Err(Error::PoleProximity {
                    re: s.re,
                    im: s.im,
                    pole: p,
                    guard: pole_guard,
                });
            }
        }
        let region = if s.re > 1.0 { ZetaRegion::DirectSum } else { ZetaRegion::Continued };
        self.evaluate(s, region)
    }

    /// Finite sum plus tail, with no region checks.
    pub fn evaluate(&self, s: Complex64, region: ZetaRegion) -> Result<ZetaValue> {
        let mut sum = ComplexSum::default();
        let mut excluded = None;
        for l in &self.spectrum.levels {
            if l.lambda <= 0.0 {
                excluded = Some(l.lambda);
                continue;
            }
            sum.add(pow_neg(l.lambda, s));
        }
        let (tail, tail_err) = self.tail.zeta_tail(s, self.big_m())?;
        sum.add(tail);
        let rounding = 8.0 * f64::EPSILON * sum.magnitude();
        Ok(ZetaValue {
            s,
            value: sum.value(),
            err_estimate: tail_err + rounding,
            region,
            excluded,
        })
    }
}

/// Σ over positive eigenvalues plus the model tail, for `Re s > 1`.
pub fn zeta_direct(s: Complex64, ctx: &SecularContext, big_m: usize) -> Result<ZetaValue> {
    if !(s.re > 1.0) {
        return Err(Error::Region {
            re: s.re,
            im: s.im,
            region: "Re s > 1",
        });
    }
    ZetaEngine::new(*ctx, big_m)?.direct(s)
}

/// Continued `ζ_β(s)` with the default pole guard and margin.
pub fn zeta_continued(s: Complex64, ctx: &SecularContext, big_m: usize) -> Result<ZetaValue> {
    ZetaEngine::new(*ctx, big_m)?.continued(s, DEFAULT_POLE_GUARD, DEFAULT_MARGIN)
}

/// One `(N, n)` contribution to the pole structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleTerm {
    pub big_n: usize,
    pub n: usize,
    /// `s = −N(2κ−1) − 2n`.
    pub position: f64,
    /// `((−1)^N/π) C_{N,n}(κ,β) sin(2πNκ)`.
    pub residue: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoleEntry {
    pub position: f64,
    pub residue: f64,
    /// `(N, n)` pairs merged into this entry; empty for the universal pole.
    pub contributors: Vec<(usize, usize)>,
    pub vanishing: bool,
    /// The β-independent pole at `s = 1`.
    pub universal: bool,
}

/// Poles of ζ_β in decreasing position, merged where positions coincide.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleCatalog {
    pub kappa: f64,
    pub entries: Vec<PoleEntry>,
}

impl PoleCatalog {
    pub fn entry_at(&self, position: f64, tol: f64) -> Option<&PoleEntry> {
        self.entries.iter().find(|e| libm::fabs(e.position - position) <= tol)
    }
}

pub fn pole_term(big_n: usize, n: usize, kappa: f64, beta: f64, coeffs: &CoefficientSet) -> PoleTerm {
    let nf = big_n as f64;
    let sign = if big_n.is_multiple_of(2) { 1.0 } else { -1.0 };
    PoleTerm {
        big_n,
        n,
        position: -nf * (2.0 * kappa - 1.0) - 2.0 * n as f64,
        residue: sign / PI * coeffs.c(big_n, n, beta) * sinpi(2.0 * nf * kappa),
    }
}

/// All `(N, n)` poles with `N <= N_max`, `n <= n_max` plus the universal
/// pole at `s = 1` with residue 1/4.
///
/// For `β = 0`, `β = −∞` and the essentially self-adjoint regime only the
/// universal pole remains.
pub fn pole_catalog(ctx: &SecularContext, big_n_max: usize, n_max: usize, merge_tol: f64) -> PoleCatalog {
    let kappa = ctx.kappa();
    let mut entries = Vec::new();
    entries.push(PoleEntry {
        position: 1.0,
        residue: 0.25,
        contributors: Vec::new(),
        vanishing: false,
        universal: true,
    });
    let beta = match ctx.ext {
        ExtensionParam::Finite(b) if b != 0.0 && ctx.regime() == Regime::NontrivialSAE => b,
        _ => return PoleCatalog { kappa, entries },
    };
    let coeffs = CoefficientSet::new(kappa, big_n_max, n_max);
    let mut terms: Vec<PoleTerm> = Vec::new();
    for big_n in 1..=big_n_max {
        for n in 0..=n_max {
            terms.push(pole_term(big_n, n, kappa, beta, &coeffs));
        }
    }
    terms.sort_by(|a, b| {
        b.position
            .total_cmp(&a.position)
            .then(a.big_n.cmp(&b.big_n))
            .then(a.n.cmp(&b.n))
    });
    let mut group: Vec<PoleTerm> = Vec::new();
    let flush = |group: &mut Vec<PoleTerm>, entries: &mut Vec<PoleEntry>| {
        if group.is_empty() {
            return;
        }
        let mut total = KahanSum::default();
        let mut contributors = Vec::with_capacity(group.len());
        for t in group.iter() {
            total.add(t.residue);
            contributors.push((t.big_n, t.n));
        }
        contributors.sort();
        let residue = total.value();
        entries.push(PoleEntry {
            position: group[0].position,
            residue,
            contributors,
            vanishing: libm::fabs(residue) < VANISHING,
            universal: false,
        });
        group.clear();
    };
    for t in terms {
        if let Some(first) = group.first() {
            if libm::fabs(first.position - t.position) > merge_tol {
                flush(&mut group, &mut entries);
            }
        }
        group.push(t);
    }
    flush(&mut group, &mut entries);
    PoleCatalog { kappa, entries }
}

/// Richardson estimate of a residue with its uncertainty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidueEstimate {
    pub position: f64,
    pub value: f64,
    pub uncertainty: f64,
}

/// `lim (s − s0) ζ_β(s)` from `s = s0 + ε`, `ε ∈ {0.1, 0.05, 0.025}`,
/// eliminating the `O(ε)` and `O(ε²)` terms.
///
/// The uncertainty is the gap to the two-point extrapolation.
pub fn residue_numeric(s0: f64, engine: &ZetaEngine) -> Result<ResidueEstimate> {
    if !(s0 > CONTINUATION_FLOOR + DEFAULT_MARGIN) {
        return Err(Error::Region {
            re: s0,
            im: 0.0,
            region: "s0 > -2 + margin",
        });
    }
    let mut g = [0.0; 3];
    for (gi, &e) in g.iter_mut().zip(RESIDUE_STEPS.iter()) {
        let v = engine.evaluate(Complex64::new(s0 + e, 0.0), ZetaRegion::Continued)?;
        *gi = e * v.value.re;
    }
    let three = g[0] / 3.0 - 2.0 * g[1] + 8.0 / 3.0 * g[2];
    let two = 2.0 * g[2] - g[1];
    Ok(ResidueEstimate {
        position: s0,
        value: three,
        uncertainty: libm::fabs(three - two),
    })
}

/// Coefficient of `t^{power}` in the small-t expansion of `Tr e^{−tH}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatCoefficient {
    /// `−position` of the catalog entry.
    pub power: f64,
    /// `Γ(position)·residue`, or 0 when `defined` is false.
    pub coefficient: f64,
    /// False when the position is a pole of Γ.
    pub defined: bool,
    /// The residue at that position (kept for entries with undefined Γ).
    pub residue: f64,
}

/// `Γ(s)·Res_{s} ζ_β` for each catalog pole `s`; the pole at `s = 1` gives the
/// leading `t^{−1}/4`.
pub fn heat_coefficients(catalog: &PoleCatalog) -> Vec<HeatCoefficient> {
    catalog
        .entries
        .iter()
        .map(|e| {
            let defined = !is_nonpositive_integer(e.position);
            let coefficient = if defined {
                gamma(e.position).map(|g| g * e.residue).unwrap_or(0.0)
            } else {
                0.0
            };
            HeatCoefficient {
                power: -e.position,
                coefficient,
                defined,
                residue: e.residue,
            }
        })
        .collect()
}

/// Numerical heat trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatTrace {
    pub t: f64,
    pub value: f64,
    pub err_estimate: f64,
    /// Number of modelled levels summed beyond the computed spectrum.
    pub tail_levels: usize,
}

/// `Σ e^{−tλ_n}` over all levels (negative ground state included): the
/// engine's spectrum, then modelled levels until the terms are negligible,
/// plus a geometric bound on the remainder.
pub fn heat_trace_numeric(t: f64, engine: &ZetaEngine) -> Result<HeatTrace> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            function: "heat_trace_numeric",
            value: t,
            expected: "t > 0",
        });
    }
    let mut sum = KahanSum::default();
    for l in &engine.spectrum.levels {
        sum.add(libm::exp(-t * l.lambda));
    }
    let ratio = libm::exp(-4.0 * t);
    let mut n = engine.big_m();
    let mut count = 0;
    let last = loop {
        let term = libm::exp(-t * engine.tail.lambda(n));
        sum.add(term);
        count += 1;
        n += 1;
        if term <= 1e-18 * sum.value() || term == 0.0 {
            break term;
        }
        if count > 100_000_000 {
            return Err(Error::Overflow("heat_trace_numeric"));
        }
    };
    let remainder = last * ratio / (1.0 - ratio);
    Ok(HeatTrace {
        t,
        value: sum.value(),
        err_estimate: remainder + 4.0 * f64::EPSILON * sum.magnitude(),
        tail_levels: count,
    })
}

/// A modelled level `n >= M` (provenance `AsymptoticTail`).
pub fn tail_level(engine: &ZetaEngine, n: usize) -> Level {
    Level {
        n,
        lambda: engine.tail.lambda(n),
        provenance: Provenance::AsymptoticTail,
    }
}

/// The level computed either way (used by tests and the CLI).
pub fn computed_level(ctx: &SecularContext, n: usize) -> Result<Level> {
    level(n, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(kappa: f64, ext: ExtensionParam) -> SecularContext {
        SecularContext::new(CouplingParams::from_kappa(kappa).unwrap(), ext)
    }

    fn finite(kappa: f64, beta: f64) -> SecularContext {
        ctx(kappa, ExtensionParam::Finite(beta))
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn closed_form_examples() {
        let p = CouplingParams::from_kappa(0.75).unwrap();
        let v = zeta_closed_form(re(2.0), &p, ExtensionParam::MinusInfinity).unwrap();
        // Σ (4n+3)^{−2} with the tail ∫ replaced by its Euler–Maclaurin head
        let mut direct = 0.0;
        let n = 200_000;
        for k in (0..n).rev() {
            direct += 1.0 / ((4.0 * k as f64 + 3.0) * (4.0 * k as f64 + 3.0));
        }
        let a = 4.0 * n as f64 + 3.0;
        direct += 1.0 / (4.0 * a) + 0.5 / (a * a) + 4.0 / (6.0 * a * a * a) * 0.5;
        assert!((v.re - direct).abs() < 1e-10, "{} vs {direct}", v.re);

        // ζ_0 + ζ_{−∞} = (1 − 2^{−s}) ζ(s) at κ = 3/4
        for s in [re(2.0), re(-0.3), Complex64::new(0.4, 2.0)] {
            let z0 = zeta_closed_form(s, &p, ExtensionParam::Finite(0.0)).unwrap();
            let zi = zeta_closed_form(s, &p, ExtensionParam::MinusInfinity).unwrap();
            let rz = crate::specfun::riemann_zeta(s).unwrap();
            let two = Complex64::new(2.0, 0.0).powc(-s);
            assert!((z0 + zi - (1.0 - two) * rz).norm() < 1e-12);
        }

        // (s − 1) ζ_0(s) → 1/4
        let g = |e: f64| e * zeta_closed_form(re(1.0 + e), &p, ExtensionParam::Finite(0.0)).unwrap().re;
        let r = 2.0 * g(1e-4) - g(2e-4);
        assert!((r - 0.25).abs() < 1e-8, "{r}");
        assert!(zeta_closed_form(re(1.0), &p, ExtensionParam::Finite(0.0)).is_err());
        assert!(zeta_closed_form(re(2.0), &p, ExtensionParam::Finite(1.0)).is_err());
    }

    #[test]
    fn direct_sum_matches_closed_forms() {
        for ext in [ExtensionParam::Finite(0.0), ExtensionParam::MinusInfinity] {
            let c = ctx(0.8, ext);
            let e = ZetaEngine::new(c, 2000).unwrap();
            for s in [re(2.0), re(3.5), Complex64::new(2.0, 3.0)] {
                let v = e.direct(s).unwrap();
                let cf = zeta_closed_form(s, &c.params, ext).unwrap();
                assert!((v.value - cf).norm() < 1e-8);
                assert_eq!(v.region, ZetaRegion::DirectSum);
            }
            assert!(matches!(e.direct(re(1.0)), Err(Error::Region { .. })));
        }
    }

    #[test]
    fn tail_model_is_stable_in_m() {
        let c = finite(0.8, 1.0);
        let a = zeta_direct(re(3.0), &c, 1000).unwrap();
        let b = zeta_direct(re(3.0), &c, 10_000).unwrap();
        assert!((a.value - b.value).norm() < 1e-9);
    }

    #[test]
    fn negative_ground_state_is_excluded() {
        let c = finite(0.75, 10.0);
        let e = ZetaEngine::new(c, 500).unwrap();
        let v = e.direct(re(2.0)).unwrap();
        let l0 = e.spectrum.levels[0].lambda;
        assert!(l0 < 0.0);
        assert_eq!(v.excluded, Some(l0));
        assert!(v.value.re.is_finite());
    }

    #[test]
    fn continued_matches_closed_forms() {
        for ext in [ExtensionParam::Finite(0.0), ExtensionParam::MinusInfinity] {
            let c = ctx(0.75, ext);
            for s in [-0.3, -1.5] {
                let v = zeta_continued(re(s), &c, DEFAULT_M).unwrap();
                let cf = zeta_closed_form(re(s), &c.params, ext).unwrap();
                assert!((v.value - cf).norm() < 1e-6);
                assert!(v.err_estimate >= 0.0);
            }
        }
    }

    #[test]
    fn continued_agrees_with_direct() {
        let e = ZetaEngine::new(finite(0.8, 1.0), DEFAULT_M).unwrap();
        let d = e.direct(re(2.5)).unwrap();
        let c = e.continued(re(2.5), DEFAULT_POLE_GUARD, DEFAULT_MARGIN).unwrap();
        assert!((d.value - c.value).norm() <= d.err_estimate + c.err_estimate);
    }

    #[test]
    fn continued_guards() {
        let e = ZetaEngine::new(finite(0.8, 1.0), 500).unwrap();
        assert!(matches!(e.continued(re(-1.96), 1e-3, 0.05), Err(Error::Region { .. })));
        assert!(matches!(e.continued(re(-0.6 + 1e-4), 1e-3, 0.05), Err(Error::PoleProximity { .. })));
        assert!(matches!(e.continued(re(1.0), 1e-3, 0.05), Err(Error::PoleProximity { .. })));
    }

    #[test]
    fn universal_residue() {
        for (k, b) in [(0.75, 1.0), (0.8, -2.0), (0.8, 1.0)] {
            let e = ZetaEngine::new(finite(k, b), DEFAULT_M).unwrap();
            let r = residue_numeric(1.0, &e).unwrap();
            assert!((r.value - 0.25).abs() < 1e-3, "{k} {b}: {}", r.value);
        }
    }

    #[test]
    fn three_quarter_catalog() {
        let beta = 0.7;
        let cat = pole_catalog(&finite(0.75, beta), DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX, DEFAULT_MERGE_TOL);
        assert!(cat.entries[0].universal);
        for w in cat.entries.windows(2) {
            assert!(w[0].position > w[1].position);
        }
        let e = cat.entry_at(-0.5, 1e-12).unwrap();
        assert_eq!(e.contributors, [(1, 0)]);
        assert!((e.residue + beta / PI).abs() < 1e-15);
        let e = cat.entry_at(-1.5, 1e-12).unwrap();
        assert_eq!(e.contributors, [(3, 0)]);
        assert!((e.residue - 4.0 * beta * beta * beta / PI).abs() < 1e-14);
        // even N sits on integers with zero weight
        for e in cat.entries.iter().filter(|e| !e.universal) {
            if e.contributors.iter().all(|&(n, _)| n % 2 == 0) {
                assert!(e.vanishing);
            }
        }
    }

    #[test]
    fn irrational_kappa_does_not_merge() {
        let k = (1.0 + libm::sqrt(5.0)) / 4.0;
        let cat = pole_catalog(&finite(k, 1.0), DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX, DEFAULT_MERGE_TOL);
        assert!(cat.entries.iter().all(|e| e.contributors.len() <= 1));
        for w in cat.entries.windows(2) {
            assert!(w[0].position - w[1].position > 1e-12);
        }
    }

    #[test]
    fn closed_contexts_have_one_pole() {
        for c in [finite(0.8, 0.0), ctx(0.8, ExtensionParam::MinusInfinity), finite(1.2, 1.0)] {
            let cat = pole_catalog(&c, DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX, DEFAULT_MERGE_TOL);
            assert_eq!(cat.entries.len(), 1);
            let h = heat_coefficients(&cat);
            assert_eq!((h[0].power, h[0].coefficient), (-1.0, 0.25));
        }
    }

    #[test]
    fn heat_coefficient_values() {
        let beta = 1.0;
        let cat = pole_catalog(&finite(0.75, beta), DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX, DEFAULT_MERGE_TOL);
        let h = heat_coefficients(&cat);
        let half = h.iter().find(|c| c.power == 0.5).unwrap();
        // Γ(−1/2)·(−β/π) = 2β/√π
        assert!((half.coefficient - 2.0 * beta / libm::sqrt(PI)).abs() < 1e-14);
        assert!(half.defined);
        for c in h.iter().filter(|c| !c.defined) {
            assert_eq!(c.coefficient, 0.0);
            assert!(c.residue.abs() < VANISHING);
        }
    }

    #[test]
    fn heat_trace_geometric() {
        let e = ZetaEngine::new(ctx(0.75, ExtensionParam::MinusInfinity), DEFAULT_M).unwrap();
        let t = 1e-3;
        let h = heat_trace_numeric(t, &e).unwrap();
        let expect = libm::exp(-3.0 * t) / (1.0 - libm::exp(-4.0 * t));
        assert!((h.value - expect).abs() < 1e-10);
        assert!(heat_trace_numeric(0.0, &e).is_err());
    }
}
