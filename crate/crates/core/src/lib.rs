//! Spectra and spectral zeta functions for the self-adjoint extensions of
//!
//! ```text
//!     H = -d²/dx² + g/x² + x²      on the half line x > 0.
//! ```
//!
//! For `0 <= g < 3/4` the operator has deficiency indices (1, 1) and a
//! one-parameter family of self-adjoint extensions `H_(β)`, labelled by
//! `β ∈ ℝ ∪ {−∞}`. Its eigenvalues are the zeros of the entire function
//!
//! ```text
//!     f(λ) = 1/Γ(1 − κ − λ/4) − β/Γ(κ − λ/4),     κ = (2 + √(1 + 4g))/4,
//! ```
//!
//! and the zeta function `ζ_β(s) = Σ λ_n^{−s}` has, besides the universal
//! pole at `s = 1` with residue `1/4`, β-dependent poles at
//! `s = −N(2κ − 1) − 2n`.
//!
//! The crate is `no_std` (it needs `alloc`) and splits into:
//!
//! * [`specfun`]: Γ, ψ, Hurwitz ζ, Kummer U and Hermite kernels,
//! * [`sae`]: the `(g, α, κ)` parameter algebra and the extension parameter,
//! * [`spectrum`]: the secular function, eigenvalue solver and eigenfunctions,
//! * [`asymptotics`]: large-λ coefficient engine (`a_m`, `b_n`, `C_{N,n}`),
//! * [`tail`]: generalized power-series model of the high eigenvalues,
//! * [`zeta`]: closed forms, continued evaluation, pole catalog and
//!   heat-kernel coefficients.
#![no_std]
// `!(x > 0.0)` rejects NaN along with the out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// reference constants keep every digit they were quoted with
#![allow(clippy::excessive_precision)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod error;
pub mod sae;
pub mod specfun;
pub mod spectrum;
pub mod tail;
pub mod zeta;

mod sum;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use sae::{CouplingParams, ExtensionParam, Regime};
pub use spectrum::{Level, Provenance, SecularContext, Spectrum};
