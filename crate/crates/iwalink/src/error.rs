//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("scale guard exceeded: {0}")]
    ScaleExceeded(String),
    #[error("need at least {needed} consecutive samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("no stable growth-polynomial fit within the sample range")]
    NoStableFit,
    #[error("polynomial vanishes at a torsion point of the evaluation region")]
    VanishesOnTorus,
    #[error("structural invariants disagree with the fitted growth polynomial: {0}")]
    MismatchMuLambda(String),
    #[error("meridian images do not span (Z/pZ)^d")]
    SurjectivityFailure,
    #[error("link presentation is missing the Alexander polynomial of sublink {{{0}}}")]
    MissingSublink(String),
    #[error("linking numbers are required but not recorded")]
    MissingLinkingNumbers,
    #[error("p-adic sequence did not stabilize to the requested precision")]
    NotStabilized,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("p-adic entry has precision {have} but level {need} was requested")]
    PrecisionExceeded { have: u32, need: u32 },
    #[error("only integral homology sphere base manifolds are supported: {0}")]
    UnsupportedBase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
