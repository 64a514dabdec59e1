use thiserror::Error;

/// Errors reported by the numerical layers of the crate.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// A quantity left its mathematical domain (negative acceleration,
    /// gamma below one, zero frequency, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// No conversion rule between the requested unit pair.
    #[error("unsupported unit conversion: {from} -> {to}")]
    UnsupportedConversion { from: &'static str, to: &'static str },

    /// A quadrature grid is too coarse to resolve the fastest phase.
    #[error(
        "under-resolved grid: fastest phase advances {phase_per_step:.3} rad per step, \
         need < {limit} rad; at least {required} samples over the span"
    )]
    GridResolution {
        phase_per_step: f64,
        limit: f64,
        required: usize,
    },

    /// Trajectory span does not cover the envelope support.
    #[error("trajectory does not cover the pulse: envelope at span ends is {at_ends:.3e} of peak (need < {limit:.0e})")]
    EnvelopeSupport { at_ends: f64, limit: f64 },

    /// Step refinement did not reach the requested tolerance.
    #[error("integrator did not converge after {halvings} step halvings; achieved residual {achieved:.3e}, requested {requested:.3e}")]
    NonConvergence {
        halvings: usize,
        achieved: f64,
        requested: f64,
    },

    /// Two maps that must share axes do not.
    #[error("mismatched map grids: {0}")]
    GridMismatch(String),

    /// Invalid argument that is not a physics domain issue.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
