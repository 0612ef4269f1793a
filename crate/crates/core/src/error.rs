//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("sequence horizon exhausted at argument t = {t:.6e} (largest usable quotient {max_quotient:.6e})")]
    HorizonExhausted { t: f64, max_quotient: f64 },

    #[error("negative argument t = {0}")]
    NegativeArgument(f64),

    #[error("horizon too small: need at least {needed} terms, have {have}")]
    HorizonTooSmall { needed: usize, have: usize },

    #[error("anchor slope violation at segment {segment}: slope {slope:.6} < previous {previous:.6}")]
    AnchorSlopeViolation {
        segment: usize,
        slope: f64,
        previous: f64,
    },

    #[error("objective unbounded above on the search bracket")]
    UnboundedObjective,

    #[error("function does not decay to a finite limit at infinity")]
    NoDecay,

    #[error("tail of the integrand does not decay: growth is at least linear on the sampled tail")]
    DivergentTail,

    #[error("opening parameter gamma = {gamma} is not below the index estimate {index}")]
    GammaOutOfRange { gamma: f64, index: f64 },

    #[error("point with argument {theta:.6} lies outside the sector |arg| < {bound:.6}")]
    OutsideSector { theta: f64, bound: f64 },

    #[error("half-plane evaluation too close to the imaginary axis: Re(w)/|w| = {ratio:.3e}")]
    NearAxisInstability { ratio: f64 },

    #[error("truncation bound never crossed the tolerance threshold while scanning up to T = {t_max:.3e}")]
    TruncationFailure { t_max: f64 },

    #[error("target sequence violates its class bound at p = {p}: |lambda_p| = {actual:.6e} > {bound:.6e}")]
    ClassViolation { p: usize, actual: f64, bound: f64 },

    #[error("series tail bound {tail:.3e} exceeds tolerance at u = {u:.6e}; raise p_max")]
    TailTooLarge { u: f64, tail: f64 },

    #[error("fitted constants for `{id}` did not stabilize under sample doubling")]
    UnstableFit { id: String },

    #[error("remainder magnitude is below {units:.0} units of rounding; extended precision required")]
    PrecisionExhausted { units: f64 },

    #[error("derivative extrapolation diverges at order {order}")]
    ExtrapolationDiverges { order: usize },

    #[error("no level pairing found on the available grid for level x = {level}")]
    GridExhausted { level: f64 },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("invalid weight spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
