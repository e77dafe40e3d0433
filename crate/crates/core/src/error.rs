use thiserror::Error;

/// Failures raised by the numerical kernels.
///
/// Every operation is total over its documented domain; anything outside of
/// it surfaces here instead of as a silent NaN.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("{function}: argument {value} outside the domain ({expected})")]
    Domain {
        function: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("operation requires the non-trivial extension regime (0 <= g < 3/4), got kappa = {kappa}")]
    Regime { kappa: f64 },

    #[error("{0} requires a finite extension parameter beta")]
    InfiniteBeta(&'static str),

    #[error("both gamma arguments sit on poles (kappa = {kappa}, lambda = {lambda})")]
    Indeterminate { kappa: f64, lambda: f64 },

    #[error("root bracket [{lo}, {hi}] has no sign change for level {n}")]
    Bracket { n: usize, lo: f64, hi: f64 },

    #[error("overflow evaluating {0}")]
    Overflow(&'static str),

    #[error("s = {re}{im:+}i is outside the region {region}")]
    Region {
        re: f64,
        im: f64,
        region: &'static str,
    },

    #[error("s = {re}{im:+}i lies within {guard} of the pole at {pole}")]
    PoleProximity {
        re: f64,
        im: f64,
        pole: f64,
        guard: f64,
    },

    #[error("asymptotic series for {what} does not converge (ratio {ratio})")]
    Divergent { what: &'static str, ratio: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;
