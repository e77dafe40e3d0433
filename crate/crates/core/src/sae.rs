//! Coupling parameters and the extension parameter β.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::log_gamma;

/// Denominators `|cos(γ − γ₂)|` below this map to [`ExtensionParam::MinusInfinity`].
pub const BETA_INFINITY_TOL: f64 = 1e-12;

/// Self-adjointness regime of `H` for a given coupling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `0 <= g < 3/4`: deficiency indices (1, 1), a one-parameter family of
    /// extensions.
    NontrivialSAE,
    /// `g >= 3/4`: a single self-adjoint closure.
    EssentiallySelfAdjoint,
}

/// The triple `(g, α, κ)` with `α = 1/2 + √(g + 1/4)` and `κ = (2α + 1)/4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingParams {
    pub g: f64,
    pub alpha: f64,
    pub kappa: f64,
}

impl CouplingParams {
    pub fn from_g(g: f64) -> Result<Self> {
        params_from_g(g)
    }

    pub fn from_kappa(kappa: f64) -> Result<Self> {
        let g = g_from_kappa(kappa)?;
        // keep κ exactly as given; α follows from it
        Ok(CouplingParams {
            g,
            alpha: 2.0 * kappa - 0.5,
            kappa,
        })
    }

    pub fn regime(&self) -> Regime {
        regime(self)
    }

    /// `δ = 2κ − 1`, the exponent gap in the eigenvalue asymptotics.
    pub fn delta(&self) -> f64 {
        2.0 * self.kappa - 1.0
    }
}

/// The extension parameter `β ∈ ℝ ∪ {−∞}`.
///
/// `+∞` is not a separate state: a positively diverging cosine ratio is the
/// same (Dirichlet-type) extension and maps to `MinusInfinity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtensionParam {
    Finite(f64),
    MinusInfinity,
}

impl ExtensionParam {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtensionParam::Finite(b) => Some(b),
            ExtensionParam::MinusInfinity => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == ExtensionParam::Finite(0.0)
    }
}

impl core::fmt::Display for ExtensionParam {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExtensionParam::Finite(b) => write!(f, "{b}"),
            ExtensionParam::MinusInfinity => f.write_str("-inf"),
        }
    }
}

pub fn params_from_g(g: f64) -> Result<CouplingParams> {
    if !(g >= 0.0) || !g.is_finite() {
        return Err(Error::Domain {
            function: "params_from_g",
            value: g,
            expected: "g >= 0",
        });
    }
    let root = libm::sqrt(1.0 + 4.0 * g);
    Ok(CouplingParams {
        g,
        alpha: 0.5 + 0.5 * root,
        kappa: (2.0 + root) / 4.0,
    })
}

/// Inverse of the `κ(g)` map: `g = ((4κ − 2)² − 1)/4`.
pub fn g_from_kappa(kappa: f64) -> Result<f64> {
    if !(kappa >= 0.75) || !kappa.is_finite() {
        return Err(Error::Domain {
            function: "g_from_kappa",
            value: kappa,
            expected: "kappa >= 3/4",
        });
    }
    let r = 4.0 * kappa - 2.0;
    Ok((r * r - 1.0) / 4.0)
}

/// `g = 3/4` (α = 3/2) counts as essentially self-adjoint.
pub fn regime(params: &CouplingParams) -> Regime {
    if params.alpha < 1.5 {
        Regime::NontrivialSAE
    } else {
        Regime::EssentiallySelfAdjoint
    }
}

/// The phases `(γ₁, γ₂) = (arg Γ((3 − 2α − i)/4), arg Γ((2α + 1 − i)/4))`.
pub fn boundary_phases(params: &CouplingParams) -> Result<(f64, f64)> {
    let a = params.alpha;
    let g1 = log_gamma(Complex64::new((3.0 - 2.0 * a) / 4.0, -0.25))?.im;
    let g2 = log_gamma(Complex64::new((2.0 * a + 1.0) / 4.0, -0.25))?.im;
    Ok((g1, g2))
}

/// `β(γ) = cos(γ − γ₁)/cos(γ − γ₂)` for `γ ∈ [0, π)`.
pub fn beta_from_gamma(gamma: f64, params: &CouplingParams) -> Result<ExtensionParam> {
    if regime(params) == Regime::EssentiallySelfAdjoint {
        return Err(Error::Regime {
            kappa: params.kappa,
        });
    }
    if !(0.0..PI).contains(&gamma) {
        return Err(Error::Domain {
            function: "beta_from_gamma",
            value: gamma,
            expected: "0 <= gamma < pi",
        });
    }
    let (g1, g2) = boundary_phases(params)?;
    let den = libm::cos(gamma - g2);
    if libm::fabs(den) < BETA_INFINITY_TOL {
        return Ok(ExtensionParam::MinusInfinity);
    }
    Ok(ExtensionParam::Finite(libm::cos(gamma - g1) / den))
}
